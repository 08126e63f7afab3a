"""
Private automation choice and the government's counter-levers.

The firm's reduced-form residual at automation level a is the private
marginal benefit M(a) net of marginal installation cost and the tax:
M = [psi_Z + (1-alpha) L_a/L] Y + w Lambda_H, with the labor slopes
taken at a fixed distribution (masses frozen), matching a finite
difference of firm profit in a holding (K, w, g) fixed. All general-
equilibrium feedback enters through (Y, w) being re-cleared at every
grid point, not through extra derivative terms.

The decentralized level is the residual's root on the a-grid; the
government target maximizes lambda*C(a) + mu*B_U(a) over the same
sweep. The wedge M - phi - kappa*a at the target implements it, and a
revenue-motivated planner trades average welfare against tau*a.
"""

from dataclasses import dataclass
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from .technology import labor_aggregates, labor_slopes, automation_cost
from .fiscal import PolicyConfig
from .equilibrium import clear_interest_rate, MarketClearingError
from .welfare import consumption_equivalent, average_consumption_equivalent


@dataclass(frozen=True)
class AutomationGrid:
    n_points: int = 61
    a_min: float = 0.0
    a_max: float = 0.90

    def __post_init__(self):
        if self.n_points < 2 or self.a_min < 0.0 or self.a_max <= self.a_min:
            raise ValueError("automation grid needs a_max > a_min >= 0 and 2+ points")

    @property
    def points(self):
        return np.linspace(self.a_min, self.a_max, self.n_points)


@dataclass(frozen=True)
class GovernmentPreferences:
    lambda_w: float = 0.60
    mu_w: float = 1.00
    nu_G: float = 0.0


@dataclass(frozen=True)
class PolicyWedge:
    value: float              # M - phi - kappa*a at the target
    boundary: bool            # True when the target sits at a = 0
    marginal_benefit: float


@dataclass
class DecentralizedAutomation:
    points: np.ndarray
    residuals: np.ndarray
    marginal_benefits: np.ndarray
    a_ks: float
    corner: str               # "interior", "lower", or "upper"
    bracket: tuple
    sign_changes: int
    equilibrium: object


@dataclass
class GovernmentTarget:
    points: np.ndarray
    objective: np.ndarray
    derivative: np.ndarray
    a_g: float
    index: int
    equilibrium: object
    sweep: list


def private_marginal_benefit(cal, eq):
    """Marginal profit of automation at the solved equilibrium, masses frozen."""
    a = eq.aggregates.a
    masses = eq.distribution.sum(axis=1)
    L_a, H_a = labor_slopes(cal, a, masses)
    scale = cal.psi_Z + (1.0 - cal.alpha) * L_a / eq.aggregates.L
    return float(scale * eq.aggregates.Y - eq.prices.w * H_a)


def automation_residual(cal, eq, tau=0.0):
    """Private first-order residual M - phi - kappa*a - tau."""
    _, marginal_cost = automation_cost(cal, eq.aggregates.a)
    return private_marginal_benefit(cal, eq) - float(marginal_cost) - tau


def _solve_point(args):
    cal, grid, num, a, policy = args
    try:
        return clear_interest_rate(cal, grid, num, a, policy)
    except MarketClearingError:
        # heavy profit taxation at high a can push dividends negative enough
        # that no clearing rate exists inside the bracket; mark and move on
        return None


def solve_grid(cal, agrid, grid, num, policy=None, jobs=None, points=None):
    """Clear the market at every grid point; infeasible points come back None."""
    if policy is None:
        policy = PolicyConfig()
    pts = agrid.points if points is None else np.asarray(points, dtype=float)
    tasks = [(cal, grid, num, float(a), policy) for a in pts]
    if jobs is None or jobs <= 1:
        return [_solve_point(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_solve_point, tasks, chunksize=1))


def decentralized_automation(cal, agrid, grid, num, policy=None, jobs=None, sweep=None):
    """Root of the automation residual after full market clearing point-by-point."""
    if policy is None:
        policy = PolicyConfig()
    points = agrid.points
    if sweep is None:
        sweep = solve_grid(cal, agrid, grid, num, policy, jobs=jobs)
    bene = np.array([private_marginal_benefit(cal, eq) if eq is not None
                     else np.nan for eq in sweep])
    resid = bene - (cal.phi + cal.kappa * points) - policy.tau

    # NaN residuals fail both sign tests, so infeasible cells never bracket
    crossings = np.nonzero(np.sign(resid[:-1]) * np.sign(resid[1:]) < 0)[0]
    sign_changes = len(crossings)

    if resid[0] <= 0.0:
        return DecentralizedAutomation(points, resid, bene, float(points[0]),
                                       "lower", None, sign_changes, sweep[0])
    if sign_changes == 0:
        last = int(np.max(np.nonzero(np.isfinite(resid))[0]))
        return DecentralizedAutomation(points, resid, bene, float(points[last]),
                                       "upper", None, sign_changes, sweep[last])

    i = int(crossings[0])
    lo, hi = float(points[i]), float(points[i + 1])
    r_lo = resid[i]
    while hi - lo > num.a_tol:
        mid = 0.5 * (lo + hi)
        eq_mid = clear_interest_rate(cal, grid, num, mid, policy)
        r_mid = automation_residual(cal, eq_mid, policy.tau)
        if r_mid == 0.0:
            lo = hi = mid
            break
        if np.sign(r_mid) == np.sign(r_lo):
            lo, r_lo = mid, r_mid
        else:
            hi = mid
    a_ks = 0.5 * (lo + hi)
    eq = clear_interest_rate(cal, grid, num, a_ks, policy)
    return DecentralizedAutomation(points, resid, bene, float(a_ks), "interior",
                                   (float(points[i]), float(points[i + 1])),
                                   sign_changes, eq)


def government_target(cal, agrid, grid, num, prefs=None, policy=None, jobs=None,
                      sweep=None):
    """Grid argmax of lambda*C(a) + mu*B_U(a), ties toward smaller a."""
    if prefs is None:
        prefs = GovernmentPreferences(lambda_w=cal.lambda_w, mu_w=cal.mu_w)
    if policy is None:
        policy = PolicyConfig()
    points = agrid.points
    if sweep is None:
        sweep = solve_grid(cal, agrid, grid, num, policy, jobs=jobs)
    C = np.array([eq.aggregates.C if eq is not None else np.nan for eq in sweep])
    B_U = np.array([eq.aggregates.B_U if eq is not None else np.nan for eq in sweep])
    G = prefs.lambda_w * C + prefs.mu_w * B_U
    dG = np.gradient(G, points)
    idx = int(np.nanargmax(G))
    return GovernmentTarget(points=points, objective=G, derivative=dG,
                            a_g=float(points[idx]), index=idx,
                            equilibrium=sweep[idx], sweep=sweep)


def implementing_wedge(cal, eq):
    """Wedge that makes the private residual vanish at this equilibrium's a."""
    a = eq.aggregates.a
    M = private_marginal_benefit(cal, eq)
    _, marginal_cost = automation_cost(cal, a)
    return PolicyWedge(value=float(M - marginal_cost), boundary=(a <= 0.0),
                       marginal_benefit=M)


def subsidy_equivalent(wedge_value, lambda_H):
    """Paid-task subsidy rate delivering the same first-order push."""
    if lambda_H <= 0.0:
        raise ValueError("paid-task response must be positive for a subsidy wedge")
    return wedge_value / lambda_H


@dataclass
class RevenueMotive:
    taxes: np.ndarray
    roots: np.ndarray
    consumption_equivalents: np.ndarray
    revenues: np.ndarray
    nu_values: np.ndarray
    objective: np.ndarray      # (n_nu, n_tax)
    chosen: np.ndarray         # tax picked at each nu
    threshold: float


def revenue_motivated_tax(cal, agrid, grid, num, taxes=(0.10, 0.20, 0.589),
                          nu_values=(0.0, 10.0, 20.0, 40.0), jobs=None,
                          baseline=None, tax_results=None):
    """Planner objective avgCE(tau) + nu * tau * a_ks(tau) over tax candidates."""
    if baseline is None:
        baseline = decentralized_automation(cal, agrid, grid, num,
                                            PolicyConfig(), jobs=jobs)
    taxes = np.asarray(taxes, dtype=float)
    if tax_results is None:
        tax_results = [decentralized_automation(cal, agrid, grid, num,
                                                PolicyConfig(tau=float(t)), jobs=jobs)
                       for t in taxes]
    base_eq = baseline.equilibrium
    ces, roots = [], []
    for res in tax_results:
        ce = consumption_equivalent(res.equilibrium.household.V,
                                    base_eq.household.V, cal.gamma)
        ces.append(average_consumption_equivalent(ce, base_eq.distribution))
        roots.append(res.a_ks)
    ces = np.array(ces)
    roots = np.array(roots)
    revenues = taxes * roots
    nus = np.asarray(nu_values, dtype=float)
    objective = ces[None, :] + nus[:, None] * revenues[None, :]
    chosen = taxes[np.argmax(objective, axis=1)]
    i_ce = int(np.argmax(ces))
    i_rev = int(np.argmax(revenues))
    dr = revenues[i_rev] - revenues[i_ce]
    threshold = float((ces[i_ce] - ces[i_rev]) / dr) if dr > 0 else np.inf
    return RevenueMotive(taxes=taxes, roots=roots, consumption_equivalents=ces,
                         revenues=revenues, nu_values=nus, objective=objective,
                         chosen=chosen, threshold=threshold)
