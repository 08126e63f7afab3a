"""Figure registry: which CSV columns each figure id draws.

One figure per CSV family. The series mapping lists every (file, column)
pair a figure reads, so a spec can be validated against the input
directory before any drawing starts.
"""

from dataclasses import dataclass
from pathlib import Path

from .csvio import read_table


@dataclass(frozen=True)
class FigureSpec:
    figure_id: str
    inputs: tuple        # CSV filenames under the input directory
    series: tuple        # (filename, column) pairs the figure draws
    xlabel: str
    ylabel: str
    output: str          # image filename under the output directory


def _spec(fid, inputs, series, xlabel, ylabel):
    return FigureSpec(figure_id=fid, inputs=tuple(inputs),
                      series=tuple(series), xlabel=xlabel, ylabel=ylabel,
                      output=f"{fid}.png")


_SWEEP = "baseline_sweep.csv"
_TECH = "baseline_technology.csv"
_PL_SWEEP = "productivity_led_sweep.csv"

_REGISTRY = [
    _spec("fig01_technology", [_TECH],
          [(_TECH, c) for c in ("a", "productivity", "depreciation",
                                "marginal_cost", "paid_low", "paid_high",
                                "production_low", "production_high")],
          "automation level a", "technology term"),
    _spec("fig02_skill_income", [_SWEEP, _TECH],
          [(_SWEEP, "a"), (_SWEEP, "B"), (_SWEEP, "B_U"),
           (_TECH, "a"), (_TECH, "mass_low"), (_TECH, "mass_high")],
          "automation level a", "labor income per worker"),
    _spec("fig03_tradeoff", [_SWEEP, _TECH],
          [(_SWEEP, "a"), (_SWEEP, "C"), (_SWEEP, "B"),
           (_TECH, "productivity")],
          "automation level a", "relative to a = 0"),
    _spec("fig04_prices", [_SWEEP],
          [(_SWEEP, c) for c in ("a", "K", "r", "R", "w")],
          "automation level a", "price / stock"),
    _spec("fig05_goods_accounting", ["resource_grid_accounting.csv"],
          [("resource_grid_accounting.csv", c)
           for c in ("a", "Y", "C", "replacement", "adjustment", "lost",
                     "foreign_rents")],
          "automation level a", "goods flow"),
    _spec("fig06_growth_aggregates", [_PL_SWEEP],
          [(_PL_SWEEP, c) for c in ("a", "K", "Y", "C", "r", "R")],
          "automation level a", "aggregate"),
    _spec("fig07_growth_incomes", [_PL_SWEEP],
          [(_PL_SWEEP, c) for c in ("a", "B", "B_U")],
          "automation level a", "group wage base"),
    _spec("fig08_low_wealth", ["low_wealth_cells.csv"],
          [("low_wealth_cells.csv", c)
           for c in ("regime", "skill", "mass", "mean_c")],
          "skill group", "mean consumption below cutoff"),
    _spec("fig09_growth_density", ["productivity_led_density.csv"],
          [("productivity_led_density.csv", c)
           for c in ("k", "g_low_decentralized", "g_high_decentralized",
                     "g_low_government", "g_high_government")],
          "wealth k", "stationary density"),
    _spec("fig10_growth_consumption", ["productivity_led_policy.csv"],
          [("productivity_led_policy.csv", c)
           for c in ("k", "c_low_decentralized", "c_high_decentralized",
                     "c_low_government", "c_high_government")],
          "wealth k", "consumption"),
    _spec("fig11_density", ["baseline_density.csv"],
          [("baseline_density.csv", c)
           for c in ("k", "g_low_decentralized", "g_high_decentralized",
                     "g_low_government", "g_high_government")],
          "wealth k", "stationary density"),
    _spec("fig12_consumption", ["baseline_policy.csv"],
          [("baseline_policy.csv", c)
           for c in ("k", "c_low_decentralized", "c_high_decentralized",
                     "c_low_government", "c_high_government")],
          "wealth k", "consumption"),
    _spec("fig13_consumption_gain", ["baseline_policy.csv"],
          [("baseline_policy.csv", c)
           for c in ("k", "c_low_decentralized", "c_high_decentralized",
                     "c_low_government", "c_high_government")],
          "wealth k", "consumption change"),
    _spec("fig14_regime_ratios", ["regime_ratios.csv"],
          [("regime_ratios.csv", c)
           for c in ("regime", "K_ratio", "C_ratio", "Y_ratio",
                     "y_high_ratio")],
          "aggregate", "decentralized / target ratio"),
    _spec("fig15_tax_response", ["tax_sweep_rows.csv"],
          [("tax_sweep_rows.csv", c)
           for c in ("tau", "a", "avg_ce", "revenue", "lost")],
          "tax rate tau", "response"),
    _spec("fig16_rebate_cells", ["progressive_rebate_cells.csv"],
          [("progressive_rebate_cells.csv", c)
           for c in ("kernel", "skill", "bin", "transfer", "support")],
          "skill x wealth bin", "rebate cell"),
    _spec("fig17_ownership_wedge", ["ownership_sweep_rows.csv"],
          [("ownership_sweep_rows.csv", c)
           for c in ("theta_E", "dividend_yield", "return_premium")],
          "ownership share theta_E", "asset return wedge"),
    _spec("fig18_residual", [_SWEEP],
          [(_SWEEP, "a"), (_SWEEP, "residual")],
          "automation level a", "first-order residual"),
]

_BY_ID = {s.figure_id: s for s in _REGISTRY}
FIGURE_IDS = tuple(s.figure_id for s in _REGISTRY)


def build_spec(figure_id):
    if figure_id not in _BY_ID:
        raise KeyError(f"unknown figure id {figure_id!r}; "
                       f"known ids: {', '.join(FIGURE_IDS)}")
    return _BY_ID[figure_id]


def build_specs():
    return list(_REGISTRY)


def load_inputs(spec, in_dir):
    """Read and validate every table a spec draws from.

    Raises FileNotFoundError for an absent CSV and MissingColumnError when
    a mapped column is gone, both naming the offender.
    """
    in_dir = Path(in_dir)
    tables = {}
    for name in spec.inputs:
        path = in_dir / name
        if not path.exists():
            raise FileNotFoundError(
                f"{spec.figure_id} needs {name} in {in_dir}")
        tables[name] = read_table(path)
    for name, column in spec.series:
        tables[name].col(column)
    return tables
