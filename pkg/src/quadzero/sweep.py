"""Parameter sweeps over a (b, c) grid with fixed degrees.

Cells are solved independently (optionally across a thread pool) but
always reported in row-major (b index, c index) order, so the CSV is
byte-identical regardless of worker count.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .bounds import count_bound
from .errors import BoundUnavailable, HypothesisViolation
from .model import HarmonicQuadrinomial
from .solver import SolveConfig, ZeroSetReport, find_zeros


@dataclass(frozen=True)
class Axis:
    lo: float
    hi: float
    steps: int

    def __post_init__(self):
        if self.steps < 1:
            raise ValueError("steps must be >= 1")

    def values(self) -> list[float]:
        if self.steps == 1:
            return [self.lo]
        d = (self.hi - self.lo) / (self.steps - 1)
        return [self.lo + i * d for i in range(self.steps)]


@dataclass(frozen=True)
class SweepCell:
    b: float
    c: float
    count: Optional[int]
    n_plus: Optional[int]
    n_minus: Optional[int]
    n_singular: Optional[int]
    bound_upper: Optional[int]
    bound_proven: Optional[bool]
    radius: Optional[float]
    winding_check: str
    violation: Optional[bool]
    report: Optional[ZeroSetReport] = None


@dataclass(frozen=True)
class SweepGrid:
    b_axis: Axis
    c_axis: Axis
    k: int
    n: int
    m: int
    cells: tuple[SweepCell, ...]


def _solve_cell(b, c, k, n, m, cfg) -> SweepCell:
    p = HarmonicQuadrinomial(b=b, c=c, k=k, n=n, m=m)
    try:
        upper, proven = None, None
        try:
            cb = count_bound(p)
            upper, proven = cb.upper, cb.upper_is_proven
        except HypothesisViolation:
            pass
        report = find_zeros(p, cfg)
        violation = upper is not None and report.count > upper
        return SweepCell(
            b=b,
            c=c,
            count=report.count,
            n_plus=report.n_plus,
            n_minus=report.n_minus,
            n_singular=report.n_singular,
            bound_upper=upper,
            bound_proven=proven,
            radius=report.disk.radius,
            winding_check=report.winding_check,
            violation=violation,
            report=report,
        )
    except BoundUnavailable:
        return SweepCell(
            b=b,
            c=c,
            count=None,
            n_plus=None,
            n_minus=None,
            n_singular=None,
            bound_upper=None,
            bound_proven=None,
            radius=None,
            winding_check="unavailable",
            violation=None,
        )


def run_sweep(
    b_axis: Axis,
    c_axis: Axis,
    k: int,
    n: int,
    m: int,
    cfg: SolveConfig = SolveConfig(),
    threads: int = 1,
) -> SweepGrid:
    tasks = [(b, c) for b in b_axis.values() for c in c_axis.values()]
    if threads <= 1:
        cells = [_solve_cell(b, c, k, n, m, cfg) for b, c in tasks]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            cells = list(
                pool.map(lambda t: _solve_cell(t[0], t[1], k, n, m, cfg), tasks)
            )
    return SweepGrid(b_axis, c_axis, k, n, m, tuple(cells))


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        if math.isinf(x):
            return "inf"
        return f"{x:.17g}"
    return str(x)


SWEEP_HEADER = (
    "b,c,count,n_plus,n_minus,n_singular,bound_upper,bound_proven,"
    "radius,winding_check,violation"
)


def sweep_csv_lines(grid: SweepGrid) -> list[str]:
    lines = [SWEEP_HEADER]
    for cell in grid.cells:
        lines.append(
            ",".join(
                _fmt(v)
                for v in (
                    cell.b,
                    cell.c,
                    cell.count,
                    cell.n_plus,
                    cell.n_minus,
                    cell.n_singular,
                    cell.bound_upper,
                    cell.bound_proven,
                    cell.radius,
                    cell.winding_check,
                    cell.violation,
                )
            )
        )
    return lines
