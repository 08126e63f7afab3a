"""Reader for the solver CLI's CSV tables.

Each file starts with a `# parameter_hash=<hex>` comment, then one header
row, then data rows. Numeric columns come back as float arrays; label
columns (regime, skill, kernel, ...) stay as string lists.
"""

import csv
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np


class MissingColumnError(KeyError):
    """A figure asked for a column the CSV does not carry."""

    def __str__(self):
        return self.args[0]


@dataclass
class Table:
    path: Path
    parameter_hash: str
    names: list
    columns: dict = field(repr=False)

    def col(self, name):
        if name not in self.columns:
            raise MissingColumnError(
                f"column {name!r} not found in {self.path.name} "
                f"(has: {', '.join(self.names)})")
        return self.columns[name]

    def __len__(self):
        first = next(iter(self.columns.values()), [])
        return len(first)


def read_table(path):
    path = Path(path)
    param_hash = ""
    rows = []
    with open(path, newline="") as fh:
        for record in csv.reader(fh):
            if record and record[0].startswith("#"):
                text = record[0].lstrip("# ")
                if text.startswith("parameter_hash="):
                    param_hash = text.split("=", 1)[1]
                continue
            rows.append(record)
    if not rows:
        raise ValueError(f"{path.name} has no header row")
    names, data = rows[0], rows[1:]
    columns = {}
    for j, name in enumerate(names):
        raw = [r[j] for r in data]
        try:
            columns[name] = np.array([float(v) for v in raw])
        except ValueError:
            columns[name] = raw
    return Table(path=path, parameter_hash=param_hash, names=names,
                 columns=columns)
