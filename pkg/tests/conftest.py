"""Shared solved objects; everything expensive is session-scoped."""

import time

import pytest

from autoeq import Calibration, GridSpec, NumericsConfig, PolicyConfig, RebateKernel
from autoeq.technology import PRODUCTIVITY_LED
from autoeq.equilibrium import clear_interest_rate
from autoeq.automation_policy import (
    AutomationGrid, decentralized_automation, government_target, solve_grid,
)

OWNERSHIP_SHARES = (0.0, 0.15, 0.30, 0.45, 0.60)
TAX_RATES = (0.10, 0.20, 0.589)


@pytest.fixture(scope="session")
def cal():
    return Calibration()


@pytest.fixture(scope="session")
def grid():
    return GridSpec()


@pytest.fixture(scope="session")
def num():
    return NumericsConfig()


@pytest.fixture(scope="session")
def agrid():
    return AutomationGrid()


@pytest.fixture(scope="session")
def baseline_pair(cal, grid, num, agrid):
    """Decentralized root and government target on one shared sweep.

    Runs single-process on purpose: the elapsed time feeds the runtime
    acceptance check.
    """
    start = time.perf_counter()
    sweep = solve_grid(cal, agrid, grid, num)
    dec = decentralized_automation(cal, agrid, grid, num, sweep=sweep)
    gov = government_target(cal, agrid, grid, num, sweep=sweep)
    seconds = time.perf_counter() - start
    return {"sweep": sweep, "dec": dec, "gov": gov, "seconds": seconds}


@pytest.fixture(scope="session")
def prodled_cal():
    return Calibration().with_overrides(**PRODUCTIVITY_LED)


@pytest.fixture(scope="session")
def prodled_pair(prodled_cal, grid, num, agrid):
    sweep = solve_grid(prodled_cal, agrid, grid, num, jobs=4)
    dec = decentralized_automation(prodled_cal, agrid, grid, num, sweep=sweep)
    gov = government_target(prodled_cal, agrid, grid, num, sweep=sweep)
    return {"sweep": sweep, "dec": dec, "gov": gov}


@pytest.fixture(scope="session")
def tax_results(cal, grid, num, agrid):
    """Decentralized equilibria under the lump-sum rebated tax ladder."""
    out = {}
    for tau in TAX_RATES:
        out[tau] = decentralized_automation(cal, agrid, grid, num,
                                            PolicyConfig(tau=tau), jobs=4)
    return out


@pytest.fixture(scope="session")
def kernel_results(cal, grid, num, agrid):
    """Re-solved roots for the non-lump rebate kernels."""
    menu = [(RebateKernel.LABOR_PROPORTIONAL, 0.10),
            (RebateKernel.INCOME_PROPORTIONAL, 0.10),
            (RebateKernel.PROGRESSIVE, 0.20)]
    out = {}
    for kernel, tau in menu:
        out[kernel] = decentralized_automation(
            cal, agrid, grid, num, PolicyConfig(tau=tau, kernel=kernel), jobs=4)
    return out


@pytest.fixture(scope="session")
def ownership_results(cal, grid, num, agrid):
    out = {}
    for theta in OWNERSHIP_SHARES:
        c = cal.with_overrides(theta_E=theta)
        out[theta] = decentralized_automation(c, agrid, grid, num, jobs=4)
    return out


@pytest.fixture(scope="session")
def resource_rows(cal, grid, num):
    """Market-clearing rows at the five fixed automation levels."""
    return {a: clear_interest_rate(cal, grid, num, a)
            for a in (0.0, 0.25, 0.50, 0.75, 0.90)}
