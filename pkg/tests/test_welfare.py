import numpy as np
import pytest

from autoeq.technology import Calibration, efficiency, paid_factors
from autoeq.fiscal import PolicyConfig, RebateKernel
from autoeq.welfare import (
    consumption_equivalent, average_consumption_equivalent,
    wealth_mpc, bin_masks, BIN_LABELS,
    incidence_table, conditional_low_wealth, rebate_cells, support_ratio,
)


def test_consumption_equivalent_closed_form():
    # with gamma = 2 the exponent is -1, so CE = V_base/V_alt - 1
    V_base = np.array([[-2.0, -4.0]])
    V_alt = np.array([[-1.0, -4.0]])
    ce = consumption_equivalent(V_alt, V_base, gamma=2.0)
    np.testing.assert_allclose(ce, [[1.0, 0.0]], atol=1e-15)


def test_consumption_equivalent_validation():
    with pytest.raises(ValueError):
        consumption_equivalent(np.ones((2, 3)), np.ones((2, 2)), 2.0)
    with pytest.raises(ValueError):
        consumption_equivalent(np.array([-1.0]), np.array([0.0]), 2.0)
    with pytest.raises(ValueError):
        consumption_equivalent(np.array([1.0]), np.array([-1.0]), 2.0)


def test_average_ce_weighting():
    ce = np.array([0.1, 0.3])
    assert average_consumption_equivalent(ce, [0.25, 0.75]) == pytest.approx(0.25)
    with pytest.raises(ValueError):
        average_consumption_equivalent(ce, [0.25, 0.25])


def test_mpc_exact_on_linear_consumption(grid):
    c = 0.1 + 0.3 * np.vstack([grid.nodes, grid.nodes])
    np.testing.assert_allclose(wealth_mpc(c, grid), 0.3, atol=1e-13)


def test_bin_masks_partition(grid):
    masks = bin_masks(grid)
    counts = sum(m.astype(int) for m in masks)
    assert (counts == 1).all()
    k = grid.nodes
    bottom, middle, top = masks
    assert bottom[np.searchsorted(k, 1.2)]        # edge node stays in bottom
    assert top[np.searchsorted(k, 3.0)]           # edge node stays in top
    assert middle.sum() == ((k > 1.2) & (k < 3.0)).sum()
    with pytest.raises(ValueError):
        bin_masks(grid, edges=(3.0, 1.2))


def test_incidence_cells(cal, grid, baseline_pair):
    base = baseline_pair["dec"].equilibrium
    alt = baseline_pair["gov"].equilibrium
    cells = incidence_table(cal, grid, base, alt)
    assert len(cells) == 6
    assert [c.bin for c in cells] == list(BIN_LABELS) * 2
    # masses add up to the base regime's skill marginals
    g = base.distribution
    assert sum(c.mass for c in cells[:3]) == pytest.approx(g[0].sum(), abs=1e-12)
    assert sum(c.mass for c in cells[3:]) == pytest.approx(g[1].sum(), abs=1e-12)
    # per-worker labor income columns are prices, not averages
    y_b = base.prices.w * efficiency(cal) * paid_factors(cal, base.aggregates.a)
    for s, block in ((0, cells[:3]), (1, cells[3:])):
        for c in block:
            assert c.y_base == pytest.approx(y_b[s], abs=1e-12)
    # the poorest low-skill workers gain the most from halting automation
    lb = cells[0]
    assert lb.skill == "low" and lb.bin == "bottom"
    assert lb.ce == max(c.ce for c in cells)
    assert lb.ce > 1.0
    assert lb.c_change > 0.0
    # recompute one cell by hand
    ce = consumption_equivalent(alt.household.V, base.household.V, cal.gamma)
    mask = bin_masks(grid)[0]
    wts = g[0, mask] / g[0, mask].sum()
    assert lb.ce == pytest.approx(float(np.dot(wts, ce[0, mask])), abs=1e-14)
    assert lb.mean_k == pytest.approx(float(np.dot(wts, grid.nodes[mask])), abs=1e-14)


def test_average_ce_of_tax_reform(cal, baseline_pair, tax_results):
    base = baseline_pair["dec"].equilibrium
    alt = tax_results[0.20].equilibrium
    ce = consumption_equivalent(alt.household.V, base.household.V, cal.gamma)
    avg = average_consumption_equivalent(ce, base.distribution)
    assert avg == pytest.approx(0.7237, abs=5e-4)


def test_conditional_low_wealth(grid, baseline_pair):
    sol = baseline_pair["dec"].equilibrium
    cells = conditional_low_wealth(grid, sol)
    mask = grid.nodes <= 1.2
    for s, cell in enumerate(cells):
        assert cell.mass == pytest.approx(sol.distribution[s, mask].sum(), abs=1e-14)
        assert 0.0 <= cell.mean_k <= 1.2
        assert cell.mean_c > 0.0


def test_rebate_cells_lump_sum(cal, grid, tax_results):
    sol = tax_results[0.20].equilibrium
    pool = sol.aggregates.rebate
    cells = rebate_cells(cal, grid, sol)
    assert len(cells) == 6
    for c in cells:
        # a lump rebate pays the pool to every worker
        assert c.transfer == pytest.approx(pool, abs=1e-12)
        assert c.product == pytest.approx(c.mpc * c.transfer, abs=1e-14)
        assert c.support == pytest.approx(c.product / c.mean_c, abs=1e-14)
    assert sum(c.mass * c.transfer for c in cells) == pytest.approx(pool, abs=1e-12)
    # the poorest low-skill cell has the highest MPC and the largest support
    lb = cells[0]
    assert lb.mpc == max(c.mpc for c in cells)
    assert lb.support == max(c.support for c in cells)
    assert lb.product == pytest.approx(0.0135985, abs=1e-6)


def test_rebate_cells_progressive_redesign(cal, grid, tax_results):
    sol = tax_results[0.20].equilibrium
    pool = sol.aggregates.rebate
    lump = rebate_cells(cal, grid, sol)
    prog = rebate_cells(cal, grid, sol, policy=PolicyConfig(
        tau=0.20, kernel=RebateKernel.PROGRESSIVE))
    # the redesign moves the same pool toward poor low-skill workers while
    # consumption behavior stays fixed
    assert sum(c.mass * c.transfer for c in prog) == pytest.approx(pool, abs=1e-12)
    for a, b in zip(lump, prog):
        assert a.mpc == b.mpc and a.mean_c == b.mean_c and a.mass == b.mass
    by_cell = {(c.skill, c.bin): c for c in prog}
    assert by_cell[("low", "bottom")].transfer == pytest.approx(0.11429870, abs=1e-7)
    assert by_cell[("high", "top")].transfer == pytest.approx(0.00255610, abs=1e-7)
    assert by_cell[("low", "bottom")].transfer > lump[0].transfer
    assert by_cell[("high", "top")].transfer < pool


def test_support_ratio_validation():
    with pytest.raises(ValueError):
        support_ratio(0.2, 0.05, 0.0)
