"""
Household block: consumption-saving on a bounded wealth grid with
two-state skill switching.

The value function solves a stationary HJB equation by an implicit
upwind finite-difference scheme with a large pseudo-time step, so each
sweep is close to a policy-iteration step. The wealth drift is
k' = R k + w e_s h_s(a) + T_s(k) - c, switching between skills arrives
at the technology rates q_ss'(a). Boundary derivatives are pinned so
the selected drift never points off the grid, which makes the discrete
generator conservative: its rows sum to zero and the stationary
distribution follows from the transposed system with one row swapped
for the normalization.

States are ordered skill-major, index = s * J + j, low skill first.
"""

from dataclasses import dataclass

import numpy as np

from .technology import paid_factors, efficiency, transition_rates


class SolverError(RuntimeError):
    """Numerical failure inside the household block."""


@dataclass(frozen=True)
class GridSpec:
    """Uniform wealth grid with J nodes on [k_min, k_max]."""

    n_nodes: int = 31
    k_min: float = 0.0
    k_max: float = 18.0

    def __post_init__(self):
        if self.n_nodes < 3:
            raise ValueError("wealth grid needs at least 3 nodes")
        if not self.k_max > self.k_min:
            raise ValueError("wealth grid must have k_max > k_min")

    @property
    def nodes(self):
        return np.linspace(self.k_min, self.k_max, self.n_nodes)

    @property
    def dk(self):
        return (self.k_max - self.k_min) / (self.n_nodes - 1)


@dataclass(frozen=True)
class NumericsConfig:
    hjb_pseudo_step: float = 1000.0
    hjb_max_iters: int = 20
    hjb_tol: float = 1e-5
    consumption_floor: float = 1e-10
    r_tol: float = 3e-5
    a_tol: float = 5e-4


@dataclass(frozen=True)
class HouseholdEnvironment:
    """Prices and transfers a single household takes as given."""

    cal: object
    grid: GridSpec
    a: float
    R: float          # asset return faced by households
    w: float          # wage per efficiency unit of paid labor
    transfers: object = None   # (2, J) array, or None for zero

    def incomes(self):
        """Total flow income by (skill, node)."""
        k = self.grid.nodes
        labor = self.w * efficiency(self.cal) * paid_factors(self.cal, self.a)
        inc = self.R * k[None, :] + labor[:, None]
        if self.transfers is not None:
            T = np.asarray(self.transfers, dtype=float)
            if T.shape != inc.shape:
                raise ValueError("transfers must be a (2, J) array")
            inc = inc + T
        return inc


@dataclass
class HouseholdSolution:
    V: np.ndarray          # (2, J) value function
    c: np.ndarray          # (2, J) consumption policy
    drift: np.ndarray      # (2, J) selected wealth drift
    converged: bool
    iterations: int
    sup_change: float


def _utility(cal, c):
    return c ** (1.0 - cal.gamma) / (1.0 - cal.gamma)


def _marginal_utility(cal, c):
    return c ** (-cal.gamma)


def _upwind(env, num, V):
    """One upwind pass: branch consumptions, drift selection, chosen policy."""
    cal = env.cal
    dk = env.grid.dk
    inc = env.incomes()
    floor = num.consumption_floor
    inc_safe = np.maximum(inc, floor)

    dVf = np.empty_like(V)
    dVb = np.empty_like(V)
    dVf[:, :-1] = (V[:, 1:] - V[:, :-1]) / dk
    dVb[:, 1:] = dVf[:, :-1]
    # boundary derivatives force zero drift on the outward branch
    dVf[:, -1] = _marginal_utility(cal, inc_safe[:, -1])
    dVb[:, 0] = _marginal_utility(cal, inc_safe[:, 0])
    dVf = np.maximum(dVf, 1e-12)
    dVb = np.maximum(dVb, 1e-12)

    cf = dVf ** (-1.0 / cal.gamma)
    cb = dVb ** (-1.0 / cal.gamma)
    # the boundary inversions must round-trip to exactly zero drift
    cf[:, -1] = inc_safe[:, -1]
    cb[:, 0] = inc_safe[:, 0]
    sf = inc - cf
    sb = inc - cb

    take_f = sf > 0.0
    take_b = sb < 0.0
    both = take_f & take_b
    if both.any():
        # non-concave iterate: keep the branch with the larger Hamiltonian
        Hf = _utility(cal, cf) + dVf * sf
        Hb = _utility(cal, cb) + dVb * sb
        take_f = np.where(both, Hf >= Hb, take_f)
        take_b = np.where(both, Hf < Hb, take_b)
    take_b = take_b & ~take_f

    c = np.where(take_f, cf, np.where(take_b, cb, inc_safe))
    c = np.maximum(c, floor)
    s = np.where(take_f, sf, np.where(take_b, sb, 0.0))
    return c, s


# Transition intensities snap to this binary lattice before assembly. All
# entries are then integer multiples of 2^-40, so row sums cancel to an
# exact floating-point zero in any summation order; the snap moves a rate
# by at most 2^-41, far below every solver tolerance.
_RATE_LATTICE = 2.0 ** 40


def _snap(x):
    return np.round(np.asarray(x, dtype=float) * _RATE_LATTICE) / _RATE_LATTICE


def _assemble_generator(cal, a, drift, dk):
    """Dense generator of the (k, s) process for a given selected drift."""
    J = drift.shape[1]
    n = 2 * J
    A = np.zeros((n, n))
    up = _snap(np.maximum(drift, 0.0) / dk)
    down = _snap(-np.minimum(drift, 0.0) / dk)
    rates = _snap(transition_rates(cal, a))
    for s in range(2):
        base = s * J
        other = (1 - s) * J
        for j in range(J):
            i = base + j
            if j + 1 < J:
                A[i, i + 1] = up[s, j]
            elif up[s, j] != 0.0:
                raise SolverError("drift points above the wealth grid at the top node")
            if j - 1 >= 0:
                A[i, i - 1] = down[s, j]
            elif down[s, j] != 0.0:
                raise SolverError("drift points below the wealth grid at the bottom node")
            A[i, other + j] = rates[s, 1 - s]
            A[i, i] = -(up[s, j] + down[s, j] + rates[s, 1 - s])
    return A


def solve_hjb(env, num=NumericsConfig(), strict=False):
    """Implicit upwind iteration for the stationary value function.

    Starts from the value of consuming income forever. Non-convergence
    inside the sweep budget is reported on the solution; pass strict=True
    to make it raise instead.
    """
    cal = env.cal
    J = env.grid.n_nodes
    dk = env.grid.dk
    delta = num.hjb_pseudo_step
    inc = np.maximum(env.incomes(), num.consumption_floor)

    V = _utility(cal, inc) / cal.rho
    eye = np.eye(2 * J)
    converged = False
    sup = np.inf
    it = 0
    for it in range(1, num.hjb_max_iters + 1):
        c, s = _upwind(env, num, V)
        A = _assemble_generator(cal, env.a, s, dk)
        M = (cal.rho + 1.0 / delta) * eye - A
        rhs = (_utility(cal, c) + V / delta).reshape(-1)
        V_new = np.linalg.solve(M, rhs).reshape(2, J)
        if not np.isfinite(V_new).all():
            raise SolverError("non-finite value update in HJB sweep")
        sup = float(np.max(np.abs(V_new - V)))
        V = V_new
        if sup < num.hjb_tol:
            converged = True
            break
    if strict and not converged:
        raise SolverError(f"HJB did not converge: sup change {sup:.3e} after {it} sweeps")
    c, s = _upwind(env, num, V)
    return HouseholdSolution(V=V, c=c, drift=s, converged=converged,
                             iterations=it, sup_change=sup)


def build_generator(env, sol):
    """Generator consistent with the solved drift; rows sum to zero exactly."""
    return _assemble_generator(env.cal, env.a, sol.drift, env.grid.dk)


def solve_stationary_distribution(generator):
    """Invariant mass vector of the generator, returned as a (2, J) array.

    Solves A'g = 0 with the first row replaced by the normalization
    1'g = 1, clips negative round-off, and renormalizes.
    """
    A = np.asarray(generator, dtype=float)
    n = A.shape[0]
    if A.shape != (n, n) or n % 2:
        raise ValueError("generator must be square with an even dimension")
    B = A.T.copy()
    B[0, :] = 1.0
    rhs = np.zeros(n)
    rhs[0] = 1.0
    try:
        g = np.linalg.solve(B, rhs)
    except np.linalg.LinAlgError as err:
        raise SolverError(f"stationary system is singular beyond the replaced row: {err}")
    residual = float(np.max(np.abs(A.T @ g)))
    if residual > 1e-10:
        raise SolverError(f"stationary distribution residual {residual:.3e} exceeds 1e-10")
    if g.min() < -1e-12:
        raise SolverError(f"stationary distribution has mass {g.min():.3e} below -1e-12")
    g = np.maximum(g, 0.0)
    g /= g.sum()
    return g.reshape(2, n // 2)
