"""Sample tables for plotting: evaluation grids rendered as CSV.

Output is deterministic byte for byte: floats print in shortest
round-trip form and rows end with a bare linefeed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .alpha_calc import as_alpha
from .laguerre import assoc_closed

__all__ = ["SampleTable", "build_table"]


@dataclass(frozen=True)
class SampleTable:
    """Header plus rows of (x, one value per requested alpha)."""

    columns: tuple[str, ...]
    rows: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        xs = [row[0] for row in self.rows]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise ValueError("x values must be strictly increasing")
        for row in self.rows:
            if len(row) != len(self.columns):
                raise ValueError("row width must match the header")
            if not all(math.isfinite(v) for v in row):
                raise ValueError("table values must be finite")

    def to_csv(self) -> str:
        lines = [",".join(self.columns)]
        for row in self.rows:
            lines.append(",".join(repr(v) for v in row))
        return "\n".join(lines) + "\n"


def build_table(
    n: int,
    m: int,
    alphas: tuple[float, ...],
    x_min: float = 0.0,
    x_max: float = 8.0,
    samples: int = 200,
) -> SampleTable:
    """Evaluate the (n, m) polynomial on an even x grid, one column per alpha."""
    if x_min < 0:
        raise ValueError("x_min must be nonnegative")
    if samples < 2:
        raise ValueError("at least two samples are required")
    if x_max <= x_min:
        raise ValueError("x_max must exceed x_min")
    alphas = tuple(as_alpha(a) for a in alphas)
    if not alphas:
        raise ValueError("at least one alpha is required")
    poly = assoc_closed(n, m)
    columns = ("x",) + tuple(f"L_{n}^{m}(alpha={a!r})" for a in alphas)
    step = (x_max - x_min) / (samples - 1)
    rows = []
    for i in range(samples):
        x = x_min + i * step
        rows.append((x,) + tuple(poly.eval(x, a) for a in alphas))
    return SampleTable(columns, tuple(rows))
