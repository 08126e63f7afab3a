"""
Closed-form primitives of the automation technology.

Everything here is an elementary function of the automation index a:
TFP Z(a), depreciation delta(a), per-skill paid and production task
factors, the two-state skill switching rates with their invariant
masses, and the installation cost schedule. None of it depends on the
wealth distribution; skill masses are pinned down by the switching
chain alone, which is what lets the firm block stay closed form.
"""

from dataclasses import dataclass, replace
from enum import IntEnum

import numpy as np


class SkillIndex(IntEnum):
    U = 0
    H = 1


@dataclass(frozen=True)
class Calibration:
    """Structural parameters. Defaults are the baseline calibration."""

    alpha: float = 0.36      # capital share
    Z0: float = 1.0          # TFP level at a = 0
    psi_Z: float = 0.18      # TFP exposure to automation
    delta0: float = 0.06     # depreciation level
    delta_A: float = 0.25    # depreciation exposure to automation
    rho: float = 0.15        # subjective discount rate
    gamma: float = 2.0       # CRRA curvature
    phi: float = 0.01        # linear installation cost
    kappa: float = 0.52      # quadratic installation cost
    e_U: float = 0.75        # efficiency units, low skill
    e_H: float = 1.25        # efficiency units, high skill
    chi_U: float = 3.20      # paid-task erosion, low skill
    beta_H: float = 0.35     # paid-task expansion, high skill
    xi_U: float = 2.50       # production-task erosion, low skill
    eta_H: float = 0.55      # production-task expansion, high skill
    q0: float = 0.50         # symmetric switching scale
    zeta: float = 0.75       # switching exposure to automation
    lambda_w: float = 0.60   # planner weight on consumption
    mu_w: float = 1.00       # planner weight on low-skill wage base
    theta_E: float = 0.45    # household claim on automation rents
    omega_T: float = 0.15    # fiscal friction on rebates

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise ValueError("alpha must lie strictly inside (0, 1)")
        if self.q0 <= 0.0:
            raise ValueError("switching scale q0 must be positive")
        if self.delta0 < 0.0 or self.delta_A < 0.0:
            raise ValueError("depreciation parameters must be nonnegative")
        if self.gamma <= 0.0 or self.gamma == 1.0:
            raise ValueError("gamma must be positive and != 1 (log utility unsupported)")
        if self.Z0 <= 0.0 or self.e_U <= 0.0 or self.e_H <= 0.0:
            raise ValueError("Z0 and efficiency units must be positive")
        if not 0.0 <= self.omega_T <= 1.0:
            raise ValueError("fiscal friction omega_T must lie in [0, 1]")
        if not 0.0 <= self.theta_E <= 1.0:
            raise ValueError("rent claim theta_E must lie in [0, 1]")

    def with_overrides(self, **kw):
        return replace(self, **kw)


# Overrides producing the productivity-led variant of the technology.
PRODUCTIVITY_LED = dict(
    psi_Z=0.40, chi_U=1.50, xi_U=0.70, beta_H=0.70,
    eta_H=1.00, delta_A=0.02, kappa=3.00,
)


def productivity(cal, a):
    """TFP level Z(a) = Z0 * exp(psi_Z * a)."""
    return cal.Z0 * np.exp(cal.psi_Z * np.asarray(a, dtype=float))


def depreciation(cal, a):
    """Depreciation rate delta(a) = delta0 + delta_A * a."""
    return cal.delta0 + cal.delta_A * np.asarray(a, dtype=float)


def automation_cost(cal, a):
    """Installation cost phi*a + kappa*a^2/2 and its marginal phi + kappa*a."""
    a = np.asarray(a, dtype=float)
    return cal.phi * a + 0.5 * cal.kappa * a * a, cal.phi + cal.kappa * a


def efficiency(cal):
    return np.array([cal.e_U, cal.e_H])


def paid_factors(cal, a):
    """Paid-task factors (h_U, h_H) = (exp(-chi_U a), exp(beta_H a))."""
    a = np.asarray(a, dtype=float)
    return np.array([np.exp(-cal.chi_U * a), np.exp(cal.beta_H * a)])


def production_factors(cal, a):
    """Production-task factors (l_U, l_H) = (exp(-xi_U a), exp(eta_H a))."""
    a = np.asarray(a, dtype=float)
    return np.array([np.exp(-cal.xi_U * a), np.exp(cal.eta_H * a)])


def task_factors(cal, a, s):
    """Paid and production factors (h_s, l_s) for one skill."""
    return paid_factors(cal, a)[s], production_factors(cal, a)[s]


def transition_rates(cal, a):
    """Generator of the skill chain: rows (U, H), off-diagonals are exit rates.

    q_UH = q0 exp(-zeta a) rises out of U as automation falls, q_HU = q0 exp(zeta a).
    """
    a = float(a)
    q_uh = cal.q0 * np.exp(-cal.zeta * a)
    q_hu = cal.q0 * np.exp(cal.zeta * a)
    return np.array([[-q_uh, q_uh], [q_hu, -q_hu]])


def skill_masses(cal, a):
    """Invariant masses of the switching chain, (m_U, m_H) with m_H = 1/(1+e^{2 zeta a})."""
    x = np.exp(2.0 * cal.zeta * np.asarray(a, dtype=float))
    m_h = 1.0 / (1.0 + x)
    return np.array([1.0 - m_h, m_h])


def skill_mass_slopes(cal, a):
    """d(m_U, m_H)/da of the invariant masses."""
    x = np.exp(2.0 * cal.zeta * np.asarray(a, dtype=float))
    dm_h = -2.0 * cal.zeta * x / (1.0 + x) ** 2
    return np.array([-dm_h, dm_h])


def _as_skill_masses(masses, where):
    m = np.asarray(masses, dtype=float)
    if m.ndim == 2:
        m = m.sum(axis=1)
    if m.shape != (2,):
        raise ValueError(f"{where}: masses must be per-skill or (2, J) node masses")
    if np.any(m < 0.0) or abs(m.sum() - 1.0) > 1e-8:
        raise ValueError(f"{where}: masses must be nonnegative and sum to one")
    return m


def labor_aggregates(cal, a, masses):
    """Aggregate production labor L, paid labor H, and the paid-task response
    Lambda_H = -dH/da at fixed masses, for a distribution over (k, s) or bare
    skill masses."""
    m = _as_skill_masses(masses, "labor_aggregates")
    e = efficiency(cal)
    h = paid_factors(cal, a)
    l = production_factors(cal, a)
    L = float(np.dot(m * e, l))
    H = float(np.dot(m * e, h))
    lam = float(m[0] * e[0] * cal.chi_U * h[0] - m[1] * e[1] * cal.beta_H * h[1])
    return L, H, lam


def labor_slopes(cal, a, masses):
    """(dL/da, dH/da) at fixed masses; dH/da = -Lambda_H."""
    m = _as_skill_masses(masses, "labor_slopes")
    e = efficiency(cal)
    h = paid_factors(cal, a)
    l = production_factors(cal, a)
    dl = np.array([-cal.xi_U, cal.eta_H]) * l
    dh = np.array([-cal.chi_U, cal.beta_H]) * h
    return float(np.dot(m * e, dl)), float(np.dot(m * e, dh))
