# Decentralized automation choice vs. the government target, side by side.
# Both regimes share one sweep of equilibria over the automation grid, so the
# comparison is cheap once the sweep is in hand.
import numpy as np

from autoeq import (
    Calibration, GridSpec, NumericsConfig, AutomationGrid,
    decentralized_automation, government_target,
    implementing_wedge, subsidy_equivalent,
)
from autoeq.automation_policy import solve_grid

cal = Calibration()
grid = GridSpec()
num = NumericsConfig()
agrid = AutomationGrid()

sweep = solve_grid(cal, agrid, grid, num, jobs=4)
dec = decentralized_automation(cal, agrid, grid, num, sweep=sweep)
gov = government_target(cal, agrid, grid, num, sweep=sweep)


def show(tag, eq):
    g, p = eq.aggregates, eq.prices
    print(f"{tag:<14} a={g.a:6.3f}  K={g.K:6.3f}  L={g.L:6.3f}  H={g.H:6.3f}  "
          f"r={p.r:7.4f}  w={p.w:6.3f}  Y={g.Y:6.3f}  C={g.C:6.3f}")


print("interior root of the private first-order condition vs. planner argmax")
show("decentralized", dec.equilibrium)
show("government", gov.equilibrium)

print(f"\nprivate root a_ks = {dec.a_ks:.4f} ({dec.corner}, "
      f"{dec.sign_changes} sign change)")
print(f"government target a_g = {gov.a_g:.4f} "
      f"(grid argmax of {cal.lambda_w}*C + {cal.mu_w}*B_U)")

# at a_g = 0 the planner needs a tax-like wedge to hold automation down
wedge = implementing_wedge(cal, gov.equilibrium)
print(f"\nimplementing wedge at the target: {wedge.value:.4f} "
      f"(boundary: {wedge.boundary})")
print(f"marginal private benefit there:   {wedge.marginal_benefit:.4f}")

# the same push expressed as a paid-task subsidy
lambda_H = 0.98125
print(f"subsidy equivalent at Lambda_H={lambda_H}: "
      f"{subsidy_equivalent(wedge.value, lambda_H):.4f}")

resid = np.array(dec.residuals)
print(f"\nresidual endpoints on the grid: {resid[0]:+.4f} at a=0, "
      f"{resid[-1]:+.4f} at a=0.9")
