"""Stationary heterogeneous-agent equilibrium with endogenous firm automation."""

from .technology import (
    Calibration,
    SkillIndex,
    PRODUCTIVITY_LED,
    productivity,
    depreciation,
    automation_cost,
    task_factors,
    transition_rates,
    skill_masses,
    labor_aggregates,
)
from .household import (
    GridSpec,
    NumericsConfig,
    HouseholdEnvironment,
    HouseholdSolution,
    SolverError,
    solve_hjb,
    build_generator,
    solve_stationary_distribution,
)
from .equilibrium import (
    Prices,
    Aggregates,
    EquilibriumSolution,
    MarketClearingError,
    firm_capital_demand,
    factor_prices,
    automation_rents,
    goods_residual,
    clear_interest_rate,
)
from .fiscal import (
    PolicyConfig,
    RebateKernel,
    KernelError,
    TransferSchedule,
    fiscal_accounts,
    build_kernel,
    transfer_schedule,
)
from .automation_policy import (
    AutomationGrid,
    GovernmentPreferences,
    PolicyWedge,
    private_marginal_benefit,
    automation_residual,
    decentralized_automation,
    government_target,
    implementing_wedge,
    subsidy_equivalent,
    revenue_motivated_tax,
)
from .welfare import (
    consumption_equivalent,
    average_consumption_equivalent,
    wealth_mpc,
    incidence_table,
    conditional_low_wealth,
    support_ratio,
)
from .benchmarks import (
    DiagnosticConfig,
    StaticConfig,
    diagnostic_masses,
    diagnostic_prices,
    diagnostic_gamma_terms,
    diagnostic_roots,
    static_benchmark,
)

__version__ = "0.1.0"
