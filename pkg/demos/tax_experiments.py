# Automation taxes with lump-sum rebates: how the private root, welfare, and
# revenue move with the rate, and where a revenue motive flips the planner's
# pick from the welfare-best rate to the revenue-best one.
import numpy as np

from autoeq import (
    Calibration, GridSpec, NumericsConfig, AutomationGrid, PolicyConfig,
    decentralized_automation, revenue_motivated_tax,
    consumption_equivalent, average_consumption_equivalent,
)

cal = Calibration()
grid = GridSpec()
num = NumericsConfig()
agrid = AutomationGrid()

baseline = decentralized_automation(cal, agrid, grid, num, jobs=4)
base_eq = baseline.equilibrium
print(f"untaxed root a_ks = {baseline.a_ks:.4f}, C = {base_eq.aggregates.C:.4f}")

taxes = [0.10, 0.20, 0.589]
results = [decentralized_automation(cal, agrid, grid, num,
                                    PolicyConfig(tau=t), jobs=4)
           for t in taxes]

print(f"\n{'tau':>6} {'a_ks':>7} {'K':>7} {'C':>7} {'revenue':>8} "
      f"{'rebate':>7} {'avg CE%':>8}")
for t, res in zip(taxes, results):
    g = res.equilibrium.aggregates
    ce = consumption_equivalent(res.equilibrium.household.V,
                                base_eq.household.V, cal.gamma)
    avg = average_consumption_equivalent(ce, base_eq.distribution)
    print(f"{t:6.3f} {res.a_ks:7.4f} {g.K:7.3f} {g.C:7.3f} "
          f"{g.revenue:8.4f} {g.rebate:7.4f} {100 * avg:8.3f}")

# a planner that values revenue at nu per unit starts preferring the
# confiscatory rate once nu crosses the welfare-per-revenue tradeoff
motive = revenue_motivated_tax(cal, agrid, grid, num, taxes=taxes,
                               jobs=4, baseline=baseline, tax_results=results)
print("\nplanner pick by revenue weight")
for nu, pick in zip(motive.nu_values, motive.chosen):
    print(f"  nu={nu:5.1f}  tau*={pick:.3f}")
print(f"crossover threshold nu = {motive.threshold:.2f}")
