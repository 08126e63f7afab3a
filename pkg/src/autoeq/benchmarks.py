"""
Two stripped-down benchmarks that bracket the full model.

The no-wealth diagnostic fixes the asset return at r_bar, so capital,
the wage, and group incomes are closed form in a and the private and
government problems reduce to scalar root-finding: F(a) = M(a) - phi -
kappa*a with total derivatives (masses included, since nothing else
adjusts here), and G'(a) = Gamma_U + Gamma_H for the target. The static
benchmark instead freezes (K, skill masses) at reference values and
drops saving altogether, so C(a) = B(a) = w(a, K) H(a).
"""

from dataclasses import dataclass, field

import numpy as np
from scipy import optimize

from .technology import (
    Calibration, productivity, depreciation, automation_cost, efficiency,
    paid_factors, production_factors, skill_masses, skill_mass_slopes,
)


@dataclass(frozen=True)
class DiagnosticConfig:
    cal: Calibration = field(default_factory=Calibration)
    r_bar: float = 0.138
    eta_U: float = 1.0      # consumption weight on low-skill income
    eta_HC: float = 1.0     # consumption weight on high-skill income
    C0: float = 0.0         # consumption intercept

    def __post_init__(self):
        if self.r_bar + self.cal.delta0 <= 0.0:
            raise ValueError("fixed return must exceed -delta(0)")


def diagnostic_masses(cfg, a):
    """Invariant skill masses and their slopes at automation level a."""
    return skill_masses(cfg.cal, a), skill_mass_slopes(cfg.cal, a)


def _labor(cfg, a):
    cal = cfg.cal
    m, dm = diagnostic_masses(cfg, a)
    e = efficiency(cal)
    h = paid_factors(cal, a)
    l = production_factors(cal, a)
    L = float(np.dot(m * e, l))
    H = float(np.dot(m * e, h))
    dL = float(np.dot(dm * e, l) + np.dot(m * e, np.array([-cal.xi_U, cal.eta_H]) * l))
    dH = float(np.dot(dm * e, h) + np.dot(m * e, np.array([-cal.chi_U, cal.beta_H]) * h))
    return L, H, dL, dH


def diagnostic_prices(cfg, a):
    """(K, w, omega_w): capital, wage, and d log w / da at the fixed return."""
    cal = cfg.cal
    Z = productivity(cal, a)
    user_cost = cfg.r_bar + depreciation(cal, a)
    if np.any(user_cost <= 0.0):
        raise ValueError("user cost nonpositive at this automation level")
    al = cal.alpha
    L = _labor(cfg, a)[0] if np.isscalar(a) or np.ndim(a) == 0 else None
    if L is None:
        raise ValueError("diagnostic prices expect a scalar automation level")
    K = L * (al * Z / user_cost) ** (1.0 / (1.0 - al))
    w = (1.0 - al) * Z ** (1.0 / (1.0 - al)) * (al / user_cost) ** (al / (1.0 - al))
    omega_w = cal.psi_Z / (1.0 - al) - (al / (1.0 - al)) * cal.delta_A / user_cost
    return float(K), float(w), float(omega_w)


def _group_incomes(cfg, a):
    cal = cfg.cal
    _, w, _ = diagnostic_prices(cfg, a)
    y = w * efficiency(cal) * paid_factors(cal, a)
    return float(y[0]), float(y[1])


def diagnostic_gamma_terms(cfg, a, lambda_w=None, mu_w=None):
    """The two terms of the target objective's derivative G'(a)."""
    cal = cfg.cal
    lam = cal.lambda_w if lambda_w is None else lambda_w
    mu = cal.mu_w if mu_w is None else mu_w
    m, dm = diagnostic_masses(cfg, a)
    _, _, omega_w = diagnostic_prices(cfg, a)
    y_U, y_H = _group_incomes(cfg, a)
    gamma_U = (lam * cfg.eta_U + mu) * y_U * (dm[0] + m[0] * (omega_w - cal.chi_U))
    gamma_H = lam * cfg.eta_HC * y_H * (dm[1] + m[1] * (omega_w + cal.beta_H))
    return float(gamma_U), float(gamma_H)


def diagnostic_private_residual(cfg, a):
    """F(a) = M(a) - phi - kappa*a with total derivatives of L and H."""
    cal = cfg.cal
    L, H, dL, dH = _labor(cfg, a)
    K, w, _ = diagnostic_prices(cfg, a)
    Y = float(productivity(cal, a) * K ** cal.alpha * L ** (1.0 - cal.alpha))
    M = (cal.psi_Z + (1.0 - cal.alpha) * dL / L) * Y - w * dH
    _, marginal_cost = automation_cost(cal, a)
    return float(M - marginal_cost)


def diagnostic_objective(cfg, a, lambda_w=None, mu_w=None):
    """G(a) = lambda * C(a) + mu * B_U(a) with closed-form group incomes."""
    cal = cfg.cal
    lam = cal.lambda_w if lambda_w is None else lambda_w
    mu = cal.mu_w if mu_w is None else mu_w
    m, _ = diagnostic_masses(cfg, a)
    y_U, y_H = _group_incomes(cfg, a)
    C = cfg.C0 + cfg.eta_U * m[0] * y_U + cfg.eta_HC * m[1] * y_H
    return float(lam * C + mu * m[0] * y_U)


def diagnostic_roots(cfg, agrid, lambda_w=None, mu_w=None):
    """(a_ks, a_g) of the diagnostic: private root of F, argmax of G.

    The argmax is refined inside its bracketing cells with the exact
    derivative Gamma_U + Gamma_H, since the objective is smooth and the
    peak generically falls between grid points.
    """
    lo, hi = agrid.a_min, agrid.a_max
    # private root: F is monotone decreasing through the crossing
    if diagnostic_private_residual(cfg, lo) <= 0.0:
        a_ks = lo
    elif diagnostic_private_residual(cfg, hi) > 0.0:
        a_ks = hi
    else:
        a_ks = float(optimize.brentq(lambda x: diagnostic_private_residual(cfg, x),
                                     lo, hi, xtol=1e-10))

    points = agrid.points
    G = np.array([diagnostic_objective(cfg, a, lambda_w, mu_w) for a in points])
    idx = int(np.argmax(G))
    if idx in (0, len(points) - 1):
        a_g = float(points[idx])
        dG = sum(diagnostic_gamma_terms(cfg, a_g, lambda_w, mu_w))
        # a boundary argmax with an inward-pointing derivative is refined too
        if idx == 0 and dG > 0.0:
            a_g = float(optimize.brentq(
                lambda x: sum(diagnostic_gamma_terms(cfg, x, lambda_w, mu_w)),
                points[0], points[1], xtol=1e-10))
    else:
        left, right = float(points[idx - 1]), float(points[idx + 1])
        d_left = sum(diagnostic_gamma_terms(cfg, left, lambda_w, mu_w))
        d_right = sum(diagnostic_gamma_terms(cfg, right, lambda_w, mu_w))
        if d_left > 0.0 > d_right:
            a_g = float(optimize.brentq(
                lambda x: sum(diagnostic_gamma_terms(cfg, x, lambda_w, mu_w)),
                left, right, xtol=1e-10))
        else:
            a_g = float(points[idx])
    return a_ks, a_g


@dataclass(frozen=True)
class StaticConfig:
    cal: Calibration = field(default_factory=Calibration)
    K: float = 2.540
    m_U: float = 0.5
    m_H: float = 0.5

    def __post_init__(self):
        if self.K <= 0.0:
            raise ValueError("reference capital must be positive")
        if abs(self.m_U + self.m_H - 1.0) > 1e-12 or min(self.m_U, self.m_H) < 0.0:
            raise ValueError("frozen skill masses must be a distribution")


@dataclass
class StaticResult:
    points: np.ndarray
    wage: np.ndarray          # w(a, K) with frozen masses
    C: np.ndarray             # = B(a) = w(a, K) H(a)
    B_U: np.ndarray
    profit: np.ndarray        # firm objective at fixed (K, w(0, K))
    private_a: float
    government_a: float
    wedge: float              # M(0; K, w) - phi


def static_benchmark(cfg, agrid, lambda_w=None, mu_w=None):
    """Fixed-(K, masses, no saving) comparison point for the full model."""
    cal = cfg.cal
    lam = cal.lambda_w if lambda_w is None else lambda_w
    mu = cal.mu_w if mu_w is None else mu_w
    m = np.array([cfg.m_U, cfg.m_H])
    e = efficiency(cal)
    pts = agrid.points
    Z = productivity(cal, pts)
    h = paid_factors(cal, pts)
    l = production_factors(cal, pts)
    L = (m * e) @ l
    H = (m * e) @ h
    al = cal.alpha
    Ka = cfg.K ** al
    wage = (1.0 - al) * Z * Ka * L ** (-al)
    C = wage * H
    B_U = wage * e[0] * h[0] * m[0]
    w0 = float(wage[0])
    cost, _ = automation_cost(cal, pts)
    profit = Z * Ka * L ** (1.0 - al) - w0 * H - cost

    private_a = float(pts[int(np.argmax(profit))])
    G = lam * C + mu * B_U
    government_a = float(pts[int(np.argmax(G))])

    # wedge at a = 0 with (K, w) both held fixed
    Y0 = float(Z[0] * Ka * L[0] ** (1.0 - al))
    dL0 = float((m * e) @ (np.array([-cal.xi_U, cal.eta_H]) * l[:, 0]))
    dH0 = float((m * e) @ (np.array([-cal.chi_U, cal.beta_H]) * h[:, 0]))
    M0 = (cal.psi_Z + (1.0 - al) * dL0 / L[0]) * Y0 - w0 * dH0
    return StaticResult(points=pts, wage=wage, C=C, B_U=B_U, profit=profit,
                        private_a=private_a, government_a=government_a,
                        wedge=float(M0 - cal.phi))
