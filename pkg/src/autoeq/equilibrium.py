"""
Firm block and stationary market clearing at a fixed automation level.

Given a, the skill chain pins masses and hence L(a), H(a). A candidate
interest rate r maps to firm capital demand and the wage off the factor
FOCs, automation rents and the household return R, then one household
solve produces asset supply. Bisection drives the capital gap to zero;
the bracket sits strictly inside (-delta(a), rho). The bisection runs
well past the nominal r tolerance (the bracket collapses to ~1e-13)
because the goods-market residual inherits first-order price errors.

Reported aggregates are rebuilt from the household asset stock: factor
prices from K, so zero pure profit and the return decomposition
R - r = theta_E * Pi_A / K hold to machine precision.
"""

from dataclasses import dataclass, replace

import numpy as np

from .technology import (
    productivity, depreciation, automation_cost, skill_masses,
    labor_aggregates, paid_factors,
)
from .household import HouseholdEnvironment, solve_hjb, build_generator, \
    solve_stationary_distribution, SolverError
from .fiscal import PolicyConfig, KernelError, transfer_schedule


class MarketClearingError(RuntimeError):
    """No sign change of the capital gap on the admissible rate bracket."""

    def __init__(self, message, r_low=None, r_high=None, gap_low=None, gap_high=None):
        super().__init__(message)
        self.r_low = r_low
        self.r_high = r_high
        self.gap_low = gap_low
        self.gap_high = gap_high


@dataclass(frozen=True)
class Prices:
    r: float    # rental rate net of depreciation
    w: float    # wage per paid efficiency unit
    R: float    # household asset return including the rent dividend


@dataclass(frozen=True)
class Aggregates:
    a: float
    K: float
    L: float
    H: float
    Y: float
    C: float
    B: float            # paid-labor wage base w*H
    B_U: float          # low-skill wage base w*e_U*h_U*m_U
    Pi_A: float         # automation rents net of installation cost and tax
    revenue: float      # tau*a
    rebate: float       # (1-omega_T)*tau*a
    lost: float         # omega_T*tau*a
    goods_residual: float


@dataclass
class EquilibriumSolution:
    prices: Prices
    aggregates: Aggregates
    household: object           # HouseholdSolution at the cleared prices
    distribution: np.ndarray    # (2, J) stationary masses
    transfers: np.ndarray       # (2, J) flow transfers
    capital_gap: float
    r_evaluations: int
    converged: bool

    def row(self):
        """Pinned column order used by the CSV writers."""
        p, g = self.prices, self.aggregates
        return [g.a, g.K, g.L, g.H, p.r, p.R, p.w, g.Y, g.C, g.B, g.B_U,
                g.Pi_A, g.revenue, g.rebate, g.lost, g.goods_residual]


ROW_COLUMNS = ["a", "K", "L", "H", "r", "R", "w", "Y", "C", "B", "B_U",
               "Pi_A", "revenue", "rebate", "lost", "goods_residual"]


def firm_capital_demand(cal, r, a, L):
    """Capital demanded at rental rate r: L * (alpha Z / (r + delta))^(1/(1-alpha))."""
    user_cost = r + depreciation(cal, a)
    if user_cost <= 0.0:
        raise ValueError(f"rate {r} at or below -delta(a); capital demand undefined")
    Z = productivity(cal, a)
    return L * (cal.alpha * Z / user_cost) ** (1.0 / (1.0 - cal.alpha))


def factor_prices(cal, a, K, L):
    """Competitive (r, w) from the production FOCs at (K, L)."""
    if K <= 0.0 or L <= 0.0:
        raise ValueError("factor prices need positive K and L")
    Z = productivity(cal, a)
    r = cal.alpha * Z * K ** (cal.alpha - 1.0) * L ** (1.0 - cal.alpha) - depreciation(cal, a)
    w = (1.0 - cal.alpha) * Z * K ** cal.alpha * L ** (-cal.alpha)
    return float(r), float(w)


def wage_at_rate(cal, r, a):
    """Wage consistent with rental rate r along the factor-price frontier."""
    user_cost = r + depreciation(cal, a)
    if user_cost <= 0.0:
        raise ValueError(f"rate {r} at or below -delta(a); wage undefined")
    Z = productivity(cal, a)
    al = cal.alpha
    return (1.0 - al) * Z ** (1.0 / (1.0 - al)) * (al / user_cost) ** (al / (1.0 - al))


def automation_rents(cal, a, w, L, H, tau=0.0):
    """Net rents w(L - H) - installation cost - tau*a accruing to the firm."""
    cost, _ = automation_cost(cal, a)
    return float(w * (L - H) - cost - tau * a)


def goods_residual(cal, agg, tau, omega_T=None):
    """Output minus all uses; should vanish at any solved equilibrium."""
    omega = cal.omega_T if omega_T is None else omega_T
    cost, _ = automation_cost(cal, agg.a)
    uses = (agg.C + depreciation(cal, agg.a) * agg.K + cost
            + omega * tau * agg.a + (1.0 - cal.theta_E) * agg.Pi_A)
    return float(agg.Y - uses)


def clear_interest_rate(cal, grid, num, a, policy=None):
    """Stationary equilibrium at automation level a under the given policy.

    Bisects the capital gap K_hh(r) - K_firm(r) on (-delta(a), rho). Each
    candidate does one household pass; rebate kernels are normalized
    against the distribution from the previous pass.
    """
    if policy is None:
        policy = PolicyConfig()
    a = float(a)
    if a < 0.0:
        raise ValueError("automation level must be nonnegative")
    masses = skill_masses(cal, a)
    L, H, _ = labor_aggregates(cal, a, masses)
    running = {"g": None, "n": 0}

    def evaluate(r):
        K_f = firm_capital_demand(cal, r, a, L)
        w = wage_at_rate(cal, r, a)
        Pi = automation_rents(cal, a, w, L, H, policy.tau)
        R = r + cal.theta_E * Pi / K_f
        sched = transfer_schedule(policy, cal, grid, a, w, R, running["g"])
        env = HouseholdEnvironment(cal, grid, a, R, w, sched.transfers)
        sol = solve_hjb(env, num)
        g = solve_stationary_distribution(build_generator(env, sol))
        running["g"] = g
        running["n"] += 1
        K_h = float(np.sum(g * grid.nodes[None, :]))
        return K_h - K_f, (sol, g, sched, K_h)

    lo = -float(depreciation(cal, a)) + 1e-4
    hi = cal.rho - 1e-4
    if hi <= lo:
        raise MarketClearingError("empty interest-rate bracket", r_low=lo, r_high=hi)

    def endpoint(r, step):
        for _ in range(6):
            try:
                return r, evaluate(r)
            except (SolverError, KernelError, np.linalg.LinAlgError):
                r += step
        raise MarketClearingError("household solve failed across the bracket edge",
                                  r_low=lo, r_high=hi)

    width = hi - lo
    lo, (gap_lo, bundle) = endpoint(lo, 0.05 * width)
    hi, (gap_hi, bundle_hi) = endpoint(hi, -0.05 * width)
    gap = gap_lo
    if gap_hi == 0.0:
        gap, bundle = gap_hi, bundle_hi
    elif gap_lo != 0.0:
        if np.sign(gap_lo) == np.sign(gap_hi):
            raise MarketClearingError(
                f"capital gap does not change sign on [{lo:.6f}, {hi:.6f}] "
                f"(gaps {gap_lo:.3e}, {gap_hi:.3e})",
                r_low=lo, r_high=hi, gap_low=gap_lo, gap_high=gap_hi)
        gap, bundle = gap_hi, bundle_hi
        while hi - lo > 1e-13 and running["n"] < 120:
            mid = 0.5 * (lo + hi)
            try:
                gap, bundle = evaluate(mid)
            except KernelError:
                raise MarketClearingError(
                    "rebate kernel degenerates inside the bracket",
                    r_low=lo, r_high=hi)
            if gap == 0.0:
                break
            if np.sign(gap) == np.sign(gap_lo):
                lo, gap_lo = mid, gap
            else:
                hi, gap_hi = mid, gap

    sol, g, sched, K_h = bundle

    # rebuild reported objects from the asset stock households actually hold
    K = K_h
    r, w = factor_prices(cal, a, K, L)
    Pi = automation_rents(cal, a, w, L, H, policy.tau)
    R = r + cal.theta_E * Pi / K
    Y = float(productivity(cal, a) * K ** cal.alpha * L ** (1.0 - cal.alpha))
    C = float(np.sum(sol.c * g))
    m_U = float(g[0].sum())
    B = w * H
    B_U = float(w * cal.e_U * paid_factors(cal, a)[0] * m_U)
    agg = Aggregates(a=a, K=K, L=L, H=H, Y=Y, C=C, B=B, B_U=B_U, Pi_A=Pi,
                     revenue=sched.revenue, rebate=sched.rebate_pool,
                     lost=sched.lost, goods_residual=0.0)
    agg = replace(agg, goods_residual=goods_residual(cal, agg, policy.tau,
                                                     policy.friction(cal)))
    return EquilibriumSolution(
        prices=Prices(r=r, w=w, R=R),
        aggregates=agg,
        household=sol,
        distribution=g,
        transfers=sched.transfers,
        capital_gap=float(gap),
        r_evaluations=running["n"],
        converged=sol.converged,
    )
