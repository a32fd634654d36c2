"""Growth records, density samples, digit histograms, and monomial fits.

The fit is Siegel's repeated median line in log-log space: robust to
gross outliers and parameter-free, so experiment output needs no
hand-tuning to summarize as c * n^e.
"""

from dataclasses import dataclass

import numpy as np

from .bitkernel import BitVec
from .solvers import NimTable

__all__ = [
    "RecordSeries",
    "MonomialFit",
    "DigitHistogram",
    "max_records",
    "density_samples",
    "digit_histogram",
    "siegel_fit",
]


@dataclass(frozen=True)
class RecordSeries:
    """Positions where a new maximum value is attained, with the maxima."""

    points: tuple

    def __post_init__(self):
        last_n, last_m = -1, 0
        for n, m in self.points:
            if n <= last_n or m <= last_m:
                raise ValueError("records must increase in both coordinates")
            last_n, last_m = n, m


@dataclass(frozen=True)
class MonomialFit:
    """Fitted y = coefficient * x^exponent."""

    coefficient: float
    exponent: float
    point_count: int


@dataclass(frozen=True)
class DigitHistogram:
    """Tally of one base-b digit position over a set of integers."""

    base: int
    position: int
    counts: np.ndarray
    total: int


def max_records(table: NimTable) -> RecordSeries:
    """Running-maximum records of a nim-value table.

    A position is a record when its value exceeds every earlier value;
    the initial maximum is 0, so value-0 positions never qualify.
    """
    values = table.values
    running = np.maximum.accumulate(values)
    prior = np.concatenate(([0], running[:-1]))
    where = np.flatnonzero(values > prior)
    return RecordSeries(tuple((int(p), int(values[p])) for p in where))


def density_samples(cold: BitVec, limit: int) -> list:
    """Cold-position counts below each perfect cube up to ``limit``.

    Cube spacing puts more samples at the low end, which is where a
    log-log fit needs them.
    """
    if cold.offset != 0:
        raise ValueError("cold indicator must start at position 0")
    if limit > len(cold):
        raise ValueError("limit exceeds the cold indicator's range")
    below = np.cumsum(cold.bits)
    out = []
    k = 1
    while k * k * k <= limit:
        n = k * k * k
        out.append((n, int(below[n - 1])))
        k += 1
    return out


def digit_histogram(members: BitVec, base: int, position: int) -> DigitHistogram:
    """Distribution of the base-``base`` digit at ``position`` over a set."""
    if base < 2:
        raise ValueError("base must be at least 2")
    if position < 0:
        raise ValueError("digit position must be non-negative")
    elems = members.indices()
    digits = (elems // base**position) % base
    counts = np.bincount(digits, minlength=base).astype(np.int64)
    counts.setflags(write=False)
    return DigitHistogram(base, position, counts, int(elems.shape[0]))


def siegel_fit(points) -> MonomialFit:
    """Repeated-median monomial fit through positive (x, y) points.

    In log-log space: each point's slope is the median of its pairwise
    slopes to the others; the fitted slope is the median of those, and
    the intercept is the median residual, so the line passes above and
    below an equal number of points.  Pairs sharing an x contribute no
    slope; a point sharing x with every other point is skipped.
    """
    pts = [(float(x), float(y)) for x, y in points]
    if len(pts) < 3:
        raise ValueError("need at least 3 points to fit")
    x = np.array([p[0] for p in pts])
    y = np.array([p[1] for p in pts])
    if x.min() <= 0 or y.min() <= 0:
        raise ValueError("coordinates must be positive")
    lx = np.log(x)
    ly = np.log(y)
    if np.unique(lx).size < 2:
        raise ValueError("need at least 2 distinct x values")
    dx = lx[None, :] - lx[:, None]
    dy = ly[None, :] - ly[:, None]
    with np.errstate(divide="ignore", invalid="ignore"):
        slopes = dy / dx
    slopes[dx == 0] = np.nan
    usable = ~np.all(np.isnan(slopes), axis=1)
    inner = np.nanmedian(slopes[usable], axis=1)
    slope = float(np.median(inner))
    intercept = float(np.median(ly - slope * lx))
    return MonomialFit(float(np.exp(intercept)), slope, len(pts))
