"""
Welfare comparisons across stationary regimes.

Consumption equivalents come straight off the value functions,
CE = (V_alt / V_base)^(1/(1-gamma)) - 1, node by node; population and
group averages weight nodes by the base regime's stationary masses, so
the incidence tables answer "who gains, starting from where people
actually sit today". Wealth bins are fixed k-intervals shared by both
skills; edges are configurable.
"""

from dataclasses import dataclass

import numpy as np

from .technology import paid_factors, efficiency
from .fiscal import transfer_schedule

# bottom: k <= first edge, middle: up to second edge, top: the rest
DEFAULT_BIN_EDGES = (1.2, 3.0)
BIN_LABELS = ("bottom", "middle", "top")
LOW_WEALTH_CUTOFF = 1.2


def consumption_equivalent(V_alt, V_base, gamma):
    """Node-by-node proportional consumption change matching V_alt from V_base."""
    V_alt = np.asarray(V_alt, dtype=float)
    V_base = np.asarray(V_base, dtype=float)
    if V_alt.shape != V_base.shape:
        raise ValueError("value functions must share a shape")
    if np.any(V_base == 0.0):
        raise ValueError("base value function has a zero entry")
    signs = np.sign(np.concatenate([V_alt.ravel(), V_base.ravel()]))
    if signs.min() != signs.max():
        raise ValueError("value functions mix signs; CRRA values must share one sign")
    return (V_alt / V_base) ** (1.0 / (1.0 - gamma)) - 1.0


def average_consumption_equivalent(ce, weights):
    """Population average CE under the supplied stationary masses."""
    w = np.asarray(weights, dtype=float)
    if abs(w.sum() - 1.0) > 1e-8:
        raise ValueError("weights must sum to one")
    return float(np.sum(np.asarray(ce) * w))


def wealth_mpc(c, grid):
    """dc/dk by central differences, one-sided at the wealth bounds."""
    c = np.asarray(c, dtype=float)
    out = np.empty_like(c)
    dk = grid.dk
    out[:, 1:-1] = (c[:, 2:] - c[:, :-2]) / (2.0 * dk)
    out[:, 0] = (c[:, 1] - c[:, 0]) / dk
    out[:, -1] = (c[:, -1] - c[:, -2]) / dk
    return out


def bin_masks(grid, edges=DEFAULT_BIN_EDGES):
    # bottom keeps its right edge, top keeps its left edge
    lo, hi = edges
    if not 0.0 < lo < hi:
        raise ValueError("bin edges must be increasing and positive")
    k = grid.nodes
    return [k <= lo, (k > lo) & (k < hi), k >= hi]


@dataclass(frozen=True)
class IncidenceCell:
    skill: str
    bin: str
    mass: float
    mean_k: float
    y_base: float        # labor income per worker, base regime
    y_alt: float
    c_base: float        # mass-weighted mean consumption, base weights
    c_alt: float
    c_change: float      # c_alt/c_base - 1
    ce: float            # mass-weighted mean consumption equivalent


def incidence_table(cal, grid, base, alt, edges=DEFAULT_BIN_EDGES):
    """Skill-by-wealth-bin incidence of moving from base to alt, base weights."""
    ce = consumption_equivalent(alt.household.V, base.household.V, cal.gamma)
    g = base.distribution
    k = grid.nodes
    y_b = base.prices.w * efficiency(cal) * paid_factors(cal, base.aggregates.a)
    y_a = alt.prices.w * efficiency(cal) * paid_factors(cal, alt.aggregates.a)
    cells = []
    for s, skill in enumerate(("low", "high")):
        for mask, label in zip(bin_masks(grid, edges), BIN_LABELS):
            m = float(g[s, mask].sum())
            if m <= 0.0:
                cells.append(IncidenceCell(skill, label, 0.0, np.nan, y_b[s], y_a[s],
                                           np.nan, np.nan, np.nan, np.nan))
                continue
            wts = g[s, mask] / m
            mean_k = float(np.dot(wts, k[mask]))
            c_b = float(np.dot(wts, base.household.c[s, mask]))
            c_a = float(np.dot(wts, alt.household.c[s, mask]))
            cells.append(IncidenceCell(
                skill, label, m, mean_k, float(y_b[s]), float(y_a[s]),
                c_b, c_a, c_a / c_b - 1.0, float(np.dot(wts, ce[s, mask]))))
    return cells


@dataclass(frozen=True)
class LowWealthCell:
    skill: str
    mass: float
    mean_k: float
    mean_c: float


def conditional_low_wealth(grid, sol, cutoff=LOW_WEALTH_CUTOFF):
    """Per-skill mass and conditional means below the wealth cutoff."""
    k = grid.nodes
    mask = k <= cutoff
    cells = []
    for s, skill in enumerate(("low", "high")):
        m = float(sol.distribution[s, mask].sum())
        if m <= 0.0:
            cells.append(LowWealthCell(skill, 0.0, np.nan, np.nan))
            continue
        wts = sol.distribution[s, mask] / m
        cells.append(LowWealthCell(
            skill, m, float(np.dot(wts, k[mask])),
            float(np.dot(wts, sol.household.c[s, mask]))))
    return cells


def support_ratio(mpc, transfer, mean_c):
    """First-order consumption support MPC * T / c of a rebate cell."""
    if mean_c <= 0.0:
        raise ValueError("mean consumption must be positive")
    return mpc * transfer / mean_c


@dataclass(frozen=True)
class RebateCell:
    skill: str
    bin: str
    mass: float
    transfer: float      # mean transfer received in the cell
    mpc: float           # mean marginal propensity to consume
    mean_c: float
    product: float       # mpc * transfer
    support: float       # mpc * transfer / mean consumption


def rebate_cells(cal, grid, sol, edges=DEFAULT_BIN_EDGES, policy=None):
    """Transfer, MPC, and support statistics by skill and wealth bin.

    policy redesigns the schedule in place: the pool and kernel are rebuilt
    against sol's distribution while consumption and MPCs stay fixed.
    """
    mpc = wealth_mpc(sol.household.c, grid)
    g = sol.distribution
    transfers = sol.transfers
    if policy is not None:
        sched = transfer_schedule(policy, cal, grid, sol.aggregates.a,
                                  sol.prices.w, sol.prices.R, g)
        transfers = sched.transfers
    cells = []
    for s, skill in enumerate(("low", "high")):
        for mask, label in zip(bin_masks(grid, edges), BIN_LABELS):
            m = float(g[s, mask].sum())
            if m <= 0.0:
                cells.append(RebateCell(skill, label, 0.0, np.nan, np.nan,
                                        np.nan, np.nan, np.nan))
                continue
            wts = g[s, mask] / m
            T = float(np.dot(wts, transfers[s, mask]))
            p = float(np.dot(wts, mpc[s, mask]))
            c = float(np.dot(wts, sol.household.c[s, mask]))
            cells.append(RebateCell(skill, label, m, T, p, c, p * T,
                                    support_ratio(p, T, c)))
    return cells
