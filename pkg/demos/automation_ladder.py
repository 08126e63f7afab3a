# Resource accounting along the automation ladder: solve the stationary
# equilibrium at a handful of imposed automation levels and tabulate how
# output, prices, and the wage split move with a.
import numpy as np

from autoeq import (
    Calibration, GridSpec, NumericsConfig, clear_interest_rate,
    productivity, depreciation,
)
from autoeq.technology import efficiency, paid_factors

cal = Calibration()
grid = GridSpec()
num = NumericsConfig()

levels = [0.0, 0.25, 0.50, 0.75, 0.90]
rows = [clear_interest_rate(cal, grid, num, a) for a in levels]

print(f"{'a':>5} {'K':>7} {'L':>7} {'H':>7} {'r':>8} {'w':>7} "
      f"{'Y':>7} {'C':>7} {'resid':>9}")
for eq in rows:
    g, p = eq.aggregates, eq.prices
    print(f"{g.a:5.2f} {g.K:7.3f} {g.L:7.3f} {g.H:7.3f} {p.r:8.4f} "
          f"{p.w:7.3f} {g.Y:7.3f} {g.C:7.3f} {g.goods_residual:9.1e}")

# productivity and depreciation have closed forms, so the table above can be
# cross-checked without touching the solver; per-worker labor income is
# w * e_s * h_s(a) and its skill ratio is calibration-only
print("\nclosed-form technology terms")
e = efficiency(cal)
for a, eq in zip(levels, rows):
    Z = productivity(cal, a)
    d = depreciation(cal, a)
    y = eq.prices.w * e * paid_factors(cal, a)
    print(f"  a={a:4.2f}  Z={Z:6.4f}  delta={d:6.4f}  "
          f"y_low={y[0]:6.4f}  y_high={y[1]:6.4f}  ratio={y[1] / y[0]:6.3f}")

print("\ngoods-market residual is the gap between output and consumption")
print("plus replacement, installation, and leaked rents; every solved row")
print("above clears to near machine precision")
