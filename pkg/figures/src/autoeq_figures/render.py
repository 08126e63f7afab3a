"""Drawing code. One draw function per figure id, a shared render() entry.

Rendering is a pure function of the CSV inputs: fixed figure geometry,
the Agg backend, and no metadata beyond the pixels, so re-rendering the
same tables yields byte-identical files.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .spec import build_spec, load_inputs

GOODS_STACK_TOL = 1e-5
RESIDUAL_WINDOW = (0.505, 0.530)

_DPI = 150


def _single(figsize=(6.4, 4.2)):
    return plt.subplots(figsize=figsize, dpi=_DPI)


def _panels(n, figsize):
    return plt.subplots(1, n, figsize=figsize, dpi=_DPI)


def _draw_technology(tables):
    t = tables["baseline_technology.csv"]
    a = t.col("a")
    fig, (ax1, ax2) = _panels(2, (9.6, 4.0))
    ax1.plot(a, t.col("productivity"), label="productivity Z")
    ax1.plot(a, t.col("depreciation"), label="depreciation")
    ax1.plot(a, t.col("marginal_cost"), label="marginal install cost")
    ax1.legend()
    ax2.plot(a, t.col("paid_low"), label="paid low")
    ax2.plot(a, t.col("paid_high"), label="paid high")
    ax2.plot(a, t.col("production_low"), "--", label="production low")
    ax2.plot(a, t.col("production_high"), "--", label="production high")
    ax2.legend()
    ax2.set_ylabel("task factor")
    return fig, ax1


def skill_incomes(sweep, tech):
    """Per-worker labor income by skill from exported columns only."""
    y_low = sweep.col("B_U") / tech.col("mass_low")
    y_high = (sweep.col("B") - sweep.col("B_U")) / tech.col("mass_high")
    return y_low, y_high


def _draw_skill_income(tables):
    sweep = tables["baseline_sweep.csv"]
    tech = tables["baseline_technology.csv"]
    if not np.array_equal(sweep.col("a"), tech.col("a")):
        raise ValueError("sweep and technology tables disagree on the a grid")
    y_low, y_high = skill_incomes(sweep, tech)
    fig, ax = _single()
    ax.plot(sweep.col("a"), y_low, label="low skill")
    ax.plot(sweep.col("a"), y_high, label="high skill")
    ax.legend()
    return fig, ax


def _draw_tradeoff(tables):
    sweep = tables["baseline_sweep.csv"]
    tech = tables["baseline_technology.csv"]
    a = sweep.col("a")
    fig, ax = _single()
    for series, label in [(tech.col("productivity"), "productivity Z"),
                          (sweep.col("C"), "consumption C"),
                          (sweep.col("B"), "wage bill B")]:
        ax.plot(a, series / series[0], label=label)
    ax.axhline(1.0, color="0.6", lw=0.8)
    ax.legend()
    return fig, ax


def _draw_prices(tables):
    sweep = tables["baseline_sweep.csv"]
    a = sweep.col("a")
    fig, (ax1, ax2) = _panels(2, (9.6, 4.0))
    ax1.plot(a, sweep.col("K"), label="capital K")
    ax1.legend()
    ax2.plot(a, sweep.col("r"), label="return r")
    ax2.plot(a, sweep.col("R"), "--", label="household return R")
    ax2.plot(a, sweep.col("w"), label="wage w")
    ax2.legend()
    return fig, ax1


GOODS_PARTS = [("C", "consumption"), ("replacement", "replacement invest."),
               ("adjustment", "install cost"), ("lost", "lost revenue"),
               ("foreign_rents", "outside rents")]


def _draw_goods(tables):
    t = tables["resource_grid_accounting.csv"]
    a, Y = t.col("a"), t.col("Y")
    parts = [t.col(name) for name, _ in GOODS_PARTS]
    gap = np.abs(np.sum(parts, axis=0) - Y)
    if np.any(gap > GOODS_STACK_TOL):
        raise ValueError(
            f"goods-accounting bars do not sum to output: max gap "
            f"{gap.max():.3e} exceeds {GOODS_STACK_TOL:.0e}")
    fig, ax = _single()
    bottom = np.zeros_like(Y)
    for values, (_, label) in zip(parts, GOODS_PARTS):
        ax.bar(a, values, width=0.12, bottom=bottom, label=label)
        bottom += values
    ax.plot(a, Y, "k_", markersize=18, label="output Y")
    ax.legend(fontsize=8)
    return fig, ax


def _draw_growth_aggregates(tables):
    sweep = tables["productivity_led_sweep.csv"]
    a = sweep.col("a")
    fig, (ax1, ax2) = _panels(2, (9.6, 4.0))
    for c in ("K", "Y", "C"):
        ax1.plot(a, sweep.col(c), label=c)
    ax1.legend()
    ax2.plot(a, sweep.col("r"), label="return r")
    ax2.plot(a, sweep.col("R"), "--", label="household return R")
    ax2.legend()
    ax2.set_ylabel("return")
    return fig, ax1


def _draw_growth_incomes(tables):
    sweep = tables["productivity_led_sweep.csv"]
    a = sweep.col("a")
    fig, ax = _single()
    ax.plot(a, sweep.col("B_U"), label="low-skill wage base")
    ax.plot(a, sweep.col("B") - sweep.col("B_U"), label="high-skill wage base")
    ax.legend()
    return fig, ax


def _draw_low_wealth(tables):
    t = tables["low_wealth_cells.csv"]
    regimes = list(dict.fromkeys(t.col("regime")))
    skills = list(dict.fromkeys(t.col("skill")))
    fig, ax = _single()
    x = np.arange(len(skills), dtype=float)
    width = 0.8 / len(regimes)
    for i, regime in enumerate(regimes):
        vals, masses = [], []
        for skill in skills:
            rows = [j for j in range(len(t))
                    if t.col("regime")[j] == regime
                    and t.col("skill")[j] == skill]
            vals.append(float(t.col("mean_c")[rows[0]]))
            masses.append(float(t.col("mass")[rows[0]]))
        pos = x + (i - (len(regimes) - 1) / 2) * width
        bars = ax.bar(pos, vals, width=width, label=regime)
        for rect, m in zip(bars, masses):
            ax.annotate(f"m={m:.2f}", (rect.get_x() + rect.get_width() / 2,
                                       rect.get_height()),
                        ha="center", va="bottom", fontsize=7)
    ax.set_xticks(x, skills)
    ax.legend()
    return fig, ax


def _density_like(table, value_columns):
    k = table.col("k")
    fig, ax = _single()
    styles = ["-", "-", "--", "--"]
    for column, style in zip(value_columns, styles):
        label = column.split("_", 1)[1].replace("_", " ")
        ax.plot(k, table.col(column), style, label=label)
    ax.legend(fontsize=8)
    return fig, ax


def _draw_growth_density(tables):
    return _density_like(tables["productivity_led_density.csv"],
                         ["g_low_decentralized", "g_high_decentralized",
                          "g_low_government", "g_high_government"])


def _draw_growth_consumption(tables):
    return _density_like(tables["productivity_led_policy.csv"],
                         ["c_low_decentralized", "c_high_decentralized",
                          "c_low_government", "c_high_government"])


def _draw_density(tables):
    return _density_like(tables["baseline_density.csv"],
                         ["g_low_decentralized", "g_high_decentralized",
                          "g_low_government", "g_high_government"])


def _draw_consumption(tables):
    return _density_like(tables["baseline_policy.csv"],
                         ["c_low_decentralized", "c_high_decentralized",
                          "c_low_government", "c_high_government"])


def _draw_consumption_gain(tables):
    t = tables["baseline_policy.csv"]
    k = t.col("k")
    fig, ax = _single()
    for skill in ("low", "high"):
        gain = (t.col(f"c_{skill}_government")
                - t.col(f"c_{skill}_decentralized"))
        ax.plot(k, gain, label=f"{skill} skill")
    ax.axhline(0.0, color="0.6", lw=0.8)
    ax.legend()
    return fig, ax


RATIO_COLUMNS = [("K_ratio", "K"), ("C_ratio", "C"), ("Y_ratio", "Y"),
                 ("y_high_ratio", "high-skill income")]


def _draw_regime_ratios(tables):
    t = tables["regime_ratios.csv"]
    regimes = t.col("regime")
    fig, ax = _single()
    x = np.arange(len(RATIO_COLUMNS), dtype=float)
    width = 0.8 / len(regimes)
    for i, regime in enumerate(regimes):
        vals = [float(t.col(col)[i]) for col, _ in RATIO_COLUMNS]
        ax.bar(x + (i - (len(regimes) - 1) / 2) * width, vals,
               width=width, label=regime)
    ax.axhline(1.0, color="0.6", lw=0.8)
    ax.set_xticks(x, [label for _, label in RATIO_COLUMNS])
    ax.legend()
    return fig, ax


def _draw_tax_response(tables):
    t = tables["tax_sweep_rows.csv"]
    tau = t.col("tau")
    fig, axes = _panels(3, (12.8, 3.8))
    axes[0].plot(tau, t.col("a"), "o-")
    axes[0].set_ylabel("automation choice")
    axes[1].plot(tau, t.col("avg_ce"), "o-")
    axes[1].set_ylabel("avg consumption equivalent")
    axes[2].plot(tau, t.col("revenue"), "o-", label="revenue")
    axes[2].plot(tau, t.col("lost"), "s--", label="dissipated")
    axes[2].set_ylabel("fiscal flow")
    axes[2].legend()
    return fig, axes[0]


def _draw_rebate_cells(tables):
    t = tables["progressive_rebate_cells.csv"]
    kernels = list(dict.fromkeys(t.col("kernel")))
    cells = list(dict.fromkeys(
        (s, b) for s, b in zip(t.col("skill"), t.col("bin"))))
    labels = [f"{s}\n{b}" for s, b in cells]
    fig, (ax1, ax2) = _panels(2, (10.4, 4.0))
    x = np.arange(len(cells), dtype=float)
    width = 0.8 / len(kernels)
    for i, kernel in enumerate(kernels):
        rows = {(s, b): j for j, (kk, s, b) in enumerate(
            zip(t.col("kernel"), t.col("skill"), t.col("bin"))) if kk == kernel}
        pos = x + (i - (len(kernels) - 1) / 2) * width
        ax1.bar(pos, [float(t.col("transfer")[rows[c]]) for c in cells],
                width=width, label=kernel)
        ax2.bar(pos, [float(t.col("support")[rows[c]]) for c in cells],
                width=width, label=kernel)
    ax1.set_ylabel("transfer")
    ax2.set_ylabel("consumption support MPC*T/c")
    for ax in (ax1, ax2):
        ax.set_xticks(x, labels, fontsize=7)
    ax1.legend(fontsize=8)
    return fig, ax1


def _draw_ownership_wedge(tables):
    t = tables["ownership_sweep_rows.csv"]
    theta = t.col("theta_E")
    fig, ax = _single()
    ax.plot(theta, t.col("dividend_yield"), "o-", label="dividend yield")
    ax.plot(theta, t.col("return_premium"), "s--", label="R - r")
    ax.legend()
    return fig, ax


def residual_crossing(a, residual):
    """Linearly interpolated zero of the residual curve, NaN-tolerant."""
    ok = ~np.isnan(residual)
    a, residual = a[ok], residual[ok]
    sign = np.sign(residual)
    flips = np.nonzero(sign[:-1] * sign[1:] < 0)[0]
    if len(flips) != 1:
        raise ValueError(f"expected one residual sign change, found {len(flips)}")
    i = flips[0]
    frac = residual[i] / (residual[i] - residual[i + 1])
    return float(a[i] + frac * (a[i + 1] - a[i]))


def _draw_residual(tables):
    sweep = tables["baseline_sweep.csv"]
    a, resid = sweep.col("a"), sweep.col("residual")
    root = residual_crossing(a, resid)
    lo, hi = RESIDUAL_WINDOW
    if not lo <= root <= hi:
        raise ValueError(
            f"residual zero crossing {root:.4f} outside [{lo}, {hi}]")
    fig, ax = _single()
    ax.plot(a, resid)
    ax.axhline(0.0, color="0.6", lw=0.8)
    ax.axvline(root, color="0.6", lw=0.8, ls="--")
    ax.annotate(f"a = {root:.3f}", (root, 0.0), textcoords="offset points",
                xytext=(6, 8), fontsize=9)
    return fig, ax


_DRAWERS = {
    "fig01_technology": _draw_technology,
    "fig02_skill_income": _draw_skill_income,
    "fig03_tradeoff": _draw_tradeoff,
    "fig04_prices": _draw_prices,
    "fig05_goods_accounting": _draw_goods,
    "fig06_growth_aggregates": _draw_growth_aggregates,
    "fig07_growth_incomes": _draw_growth_incomes,
    "fig08_low_wealth": _draw_low_wealth,
    "fig09_growth_density": _draw_growth_density,
    "fig10_growth_consumption": _draw_growth_consumption,
    "fig11_density": _draw_density,
    "fig12_consumption": _draw_consumption,
    "fig13_consumption_gain": _draw_consumption_gain,
    "fig14_regime_ratios": _draw_regime_ratios,
    "fig15_tax_response": _draw_tax_response,
    "fig16_rebate_cells": _draw_rebate_cells,
    "fig17_ownership_wedge": _draw_ownership_wedge,
    "fig18_residual": _draw_residual,
}


def render(spec, in_dir, out_dir):
    """Validate, draw, and write one figure; returns the written path."""
    if isinstance(spec, str):
        spec = build_spec(spec)
    if not spec.series:
        raise ValueError(f"{spec.figure_id} has an empty series mapping")
    tables = load_inputs(spec, in_dir)
    fig, ax = _DRAWERS[spec.figure_id](tables)
    ax.set_xlabel(spec.xlabel)
    ax.set_ylabel(ax.get_ylabel() or spec.ylabel)
    fig.tight_layout()
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    out_path = out_dir / spec.output
    fig.savefig(out_path, format="png", metadata={"Software": None})
    plt.close(fig)
    return out_path
