"""
Automation tax, fiscal friction, and rebate kernels.

Revenue tau*a splits into a lost share omega_T and a rebate pool that is
spread over households by a kernel b_s(k) normalized so sum b*g = 1
against the distribution supplied by the caller. Lump-sum and
labor-proportional kernels only need skill masses; the income and
progressive kernels depend on the wealth distribution itself.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .technology import paid_factors, efficiency, skill_masses


class RebateKernel(Enum):
    LUMP_SUM = "lump_sum"
    LABOR_PROPORTIONAL = "labor_proportional"
    INCOME_PROPORTIONAL = "income_proportional"
    PROGRESSIVE = "progressive"


class KernelError(ValueError):
    """Rebate weights sum to nothing positive against the distribution."""


@dataclass(frozen=True)
class PolicyConfig:
    """Automation tax rate, friction override, and rebate rule."""

    tau: float = 0.0
    omega_T: float = None     # None means: use the calibration value
    kernel: RebateKernel = RebateKernel.LUMP_SUM
    varrho_k: float = 0.55    # progressive kernel wealth exponent
    varrho_y: float = 2.0     # progressive kernel labor-income exponent

    def __post_init__(self):
        if self.tau < 0.0:
            raise ValueError("automation tax tau must be nonnegative")
        if self.omega_T is not None and not 0.0 <= self.omega_T <= 1.0:
            raise ValueError("fiscal friction omega_T must lie in [0, 1]")
        if self.kernel is RebateKernel.PROGRESSIVE and (
                self.varrho_k <= 0.0 or self.varrho_y <= 0.0):
            raise ValueError("progressive kernel exponents must be positive")

    def friction(self, cal):
        return cal.omega_T if self.omega_T is None else self.omega_T


@dataclass(frozen=True)
class TransferSchedule:
    transfers: np.ndarray   # (2, J) flow transfer by (skill, node)
    revenue: float
    rebate_pool: float
    lost: float


def fiscal_accounts(policy, cal, a):
    """(revenue, rebate pool, lost) for tax tau at automation level a."""
    revenue = policy.tau * a
    lost = policy.friction(cal) * revenue
    return revenue, revenue - lost, lost


def build_kernel(policy, cal, grid, a, w, R, g):
    """Rebate weights b_s(k) with sum b*g = 1 against the supplied masses g."""
    g = np.asarray(g, dtype=float)
    k = grid.nodes
    y_lab = w * efficiency(cal) * paid_factors(cal, a)   # per-skill labor income
    kind = policy.kernel
    if kind is RebateKernel.LUMP_SUM:
        raw = np.ones((2, grid.n_nodes))
    elif kind is RebateKernel.LABOR_PROPORTIONAL:
        raw = np.broadcast_to(y_lab[:, None], (2, grid.n_nodes)).copy()
    elif kind is RebateKernel.INCOME_PROPORTIONAL:
        raw = R * k[None, :] + y_lab[:, None]
    elif kind is RebateKernel.PROGRESSIVE:
        raw = np.exp(-policy.varrho_k * k[None, :] - policy.varrho_y * y_lab[:, None])
    else:
        raise ValueError(f"unknown rebate kernel {kind!r}")
    scale = float(np.sum(raw * g))
    if scale <= 0.0:
        # income kernel can aggregate negative when dividends push R below
        # zero; callers treat this as "no equilibrium at this candidate"
        raise KernelError("rebate kernel has zero weight against the distribution")
    return raw / scale


def transfer_schedule(policy, cal, grid, a, w, R, g=None):
    """Transfer flows T_s(k) for the rebate pool spread by the active kernel.

    g defaults to a bootstrap distribution: invariant skill masses spread
    uniformly over wealth nodes.
    """
    if g is None:
        m = skill_masses(cal, a)
        g = np.repeat(m[:, None] / grid.n_nodes, grid.n_nodes, axis=1)
    revenue, pool, lost = fiscal_accounts(policy, cal, a)
    if revenue == 0.0:
        T = np.zeros((2, grid.n_nodes))
    else:
        T = pool * build_kernel(policy, cal, grid, a, w, R, g)
    return TransferSchedule(transfers=T, revenue=revenue, rebate_pool=pool, lost=lost)
