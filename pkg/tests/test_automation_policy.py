import numpy as np
import pytest

from autoeq.technology import (Calibration, automation_cost, labor_aggregates,
                               productivity)
from autoeq.fiscal import PolicyConfig
from autoeq.automation_policy import (
    AutomationGrid, GovernmentPreferences,
    private_marginal_benefit, automation_residual,
    solve_grid, decentralized_automation, government_target,
    implementing_wedge, subsidy_equivalent, revenue_motivated_tax,
)


def test_automation_grid_points():
    ag = AutomationGrid()
    assert ag.points.size == 61
    assert ag.points[0] == 0.0 and ag.points[-1] == pytest.approx(0.90)
    assert np.allclose(np.diff(ag.points), 0.015)


def frozen_profit(cal, eq, x):
    """Firm operating surplus at automation x, holding (K, w, masses) fixed."""
    m = eq.distribution.sum(axis=1)
    L, H, _ = labor_aggregates(cal, x, m)
    K, w = eq.aggregates.K, eq.prices.w
    return (productivity(cal, x) * K ** cal.alpha * L ** (1.0 - cal.alpha)
            - w * H)


def test_marginal_benefit_matches_frozen_profit_derivative(baseline_pair,
                                                           resource_rows):
    cal = Calibration()
    h = 1e-6
    eqs = [baseline_pair["dec"].equilibrium] + list(resource_rows.values())
    for eq in eqs:
        a = eq.aggregates.a
        fd = (frozen_profit(cal, eq, a + h) - frozen_profit(cal, eq, a - h)) / (2 * h)
        assert private_marginal_benefit(cal, eq) == pytest.approx(fd, abs=1e-6)


def test_residual_subtracts_marginal_cost_and_tax(baseline_pair):
    cal = Calibration()
    eq = baseline_pair["dec"].equilibrium
    _, mc = automation_cost(cal, eq.aggregates.a)
    M = private_marginal_benefit(cal, eq)
    assert automation_residual(cal, eq) == pytest.approx(M - mc, abs=1e-14)
    assert automation_residual(cal, eq, tau=0.1) == pytest.approx(
        M - mc - 0.1, abs=1e-14)


def test_decentralized_root(baseline_pair):
    dec = baseline_pair["dec"]
    assert dec.corner == "interior"
    assert dec.sign_changes == 1
    # bracket reports the grid cell the crossing fell into
    lo, hi = dec.bracket
    assert hi - lo == pytest.approx(0.015, abs=1e-12)
    assert lo <= dec.a_ks <= hi
    # the reported equilibrium is solved exactly at the refined root
    assert dec.equilibrium.aggregates.a == pytest.approx(dec.a_ks, abs=1e-15)
    # bisection stops at a width of a_tol, so the residual is slope-bounded
    cal = Calibration()
    assert abs(automation_residual(cal, dec.equilibrium)) < 1e-3


def test_residual_monotone_on_grid(baseline_pair):
    dec = baseline_pair["dec"]
    slope = np.gradient(dec.residuals, dec.points)
    assert np.nanmax(slope) < 0.0


def test_government_target_is_grid_argmax(baseline_pair):
    gov = baseline_pair["gov"]
    sweep = baseline_pair["sweep"]
    prefs = GovernmentPreferences()
    G = np.array([prefs.lambda_w * eq.aggregates.C
                  + prefs.mu_w * eq.aggregates.B_U for eq in sweep])
    np.testing.assert_allclose(gov.objective, G, atol=1e-12)
    assert gov.index == int(np.argmax(G))
    assert gov.a_g == gov.points[gov.index]
    assert gov.a_g == 0.0                      # baseline target sits at zero
    assert gov.equilibrium is sweep[gov.index]


def test_infeasible_sweep_points_become_nan(tax_results):
    # heavy taxation knocks out the top automation nodes; the root search
    # keeps working on the finite part
    dec = tax_results[0.20]
    assert np.isnan(dec.residuals[-1])
    assert np.isfinite(dec.residuals[0])
    assert dec.sign_changes == 1
    assert 0.0 < dec.a_ks < 0.87


def test_corner_cases_of_the_root_search(cal, grid, num, tax_results):
    # a prohibitive tax pushes the root to the lower corner
    dec = tax_results[0.589]
    assert dec.corner == "lower"
    assert dec.a_ks == 0.0
    assert dec.sign_changes == 0


def test_wedge_at_the_government_target(baseline_pair):
    cal = Calibration()
    gov = baseline_pair["gov"]
    wedge = implementing_wedge(cal, gov.equilibrium)
    assert wedge.boundary
    assert wedge.value == pytest.approx(
        automation_residual(cal, gov.equilibrium), abs=1e-14)
    assert wedge.marginal_benefit == pytest.approx(
        private_marginal_benefit(cal, gov.equilibrium), abs=1e-14)


def test_subsidy_conversion():
    assert subsidy_equivalent(0.5887, 0.98125) == pytest.approx(0.5887 / 0.98125)
    with pytest.raises(ValueError):
        subsidy_equivalent(0.1, 0.0)


def test_revenue_motive_objective(cal, grid, num, agrid, baseline_pair,
                                  tax_results):
    motive = revenue_motivated_tax(
        cal, agrid, grid, num, baseline=baseline_pair["dec"],
        tax_results=[tax_results[t] for t in (0.10, 0.20, 0.589)])
    assert motive.objective.shape == (4, 3)
    np.testing.assert_allclose(motive.revenues, motive.taxes * motive.roots,
                               atol=1e-12)
    # nu = 0 ranks taxes purely by welfare
    assert motive.chosen[0] == motive.taxes[np.argmax(motive.consumption_equivalents)]
    # the planner's pick moves toward the revenue-best tax as nu grows
    i_rev = int(np.argmax(motive.revenues))
    assert motive.chosen[-1] == motive.taxes[i_rev]
    # threshold reproduces the objective crossover between the two best rows
    i_ce = int(np.argmax(motive.consumption_equivalents))
    nu_star = motive.threshold
    obj_ce = motive.consumption_equivalents[i_ce] + nu_star * motive.revenues[i_ce]
    obj_rev = motive.consumption_equivalents[i_rev] + nu_star * motive.revenues[i_rev]
    assert obj_ce == pytest.approx(obj_rev, abs=1e-10)
