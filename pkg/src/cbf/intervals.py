"""Closed-interval algebra used for focal elements.

An interval is a closed subset [lower, upper] of the real line; ``EMPTY`` is
the distinguished empty interval produced by ``bracket`` when the requested
endpoints are out of order.

The degree functions compare two non-empty intervals (xi, yi) and (xj, yj)
given as separate endpoint arguments, so they vectorise over numpy arrays:

* ``jaccard_delta``         intersection length over the length of the
                            smallest interval covering both endpoints.
* ``delta_inc_strict``      1.0 iff the first interval is contained in the
                            second, else 0.0.
* ``delta_inc_partial``     overlap length normalised by the first length.
* ``delta_inc_partial_rev`` overlap length normalised by the second length.

All four return values in [0, 1].  Scalar inputs give a plain float, array
inputs broadcast and give an array.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Interval",
    "EMPTY",
    "bracket",
    "length",
    "jaccard_delta",
    "delta_inc_strict",
    "delta_inc_partial",
    "delta_inc_partial_rev",
]


@dataclass(frozen=True)
class Interval:
    """Closed interval [lower, upper]; the empty interval has no endpoints."""

    lower: float = math.nan
    upper: float = math.nan
    is_empty: bool = False

    def __post_init__(self):
        if not self.is_empty and not self.lower <= self.upper:
            raise ValueError(
                f"interval endpoints out of order: [{self.lower}, {self.upper}]"
            )

    def contains(self, x: float) -> bool:
        if self.is_empty:
            return False
        return self.lower <= x <= self.upper


EMPTY = Interval(is_empty=True)


def bracket(a: float, b: float) -> Interval:
    """Interval [a, b] when a <= b, otherwise ``EMPTY``.  Endpoints must be finite."""
    if not (math.isfinite(a) and math.isfinite(b)):
        raise ValueError(f"bracket endpoints must be finite, got ({a}, {b})")
    if a > b:
        return EMPTY
    return Interval(float(a), float(b))


def length(i: Interval) -> float:
    """Lebesgue length; 0.0 for the empty interval and for points."""
    if i.is_empty:
        return 0.0
    return i.upper - i.lower


def _check_pairs(xi, yi, xj, yj):
    xi, yi, xj, yj = (np.asarray(v, dtype=float) for v in (xi, yi, xj, yj))
    for lo, hi, name in ((xi, yi, "first"), (xj, yj, "second")):
        if not (np.all(np.isfinite(lo)) and np.all(np.isfinite(hi))):
            raise ValueError(f"{name} interval has non-finite endpoints")
        if np.any(lo > hi):
            raise ValueError(f"{name} interval has lower > upper")
    return np.broadcast_arrays(xi, yi, xj, yj)


def _as_scalar_or_array(out):
    if out.ndim == 0:
        return float(out)
    return out


def jaccard_delta(xi, yi, xj, yj):
    """Jaccard-style overlap degree |I1 & I2| / |hull(I1, I2)|.

    The hull runs from the smallest to the largest of the four endpoints.
    When both intervals degenerate to the same point the hull has length
    zero and the degree is 1 by convention (two identical points coincide).
    """
    xi, yi, xj, yj = _check_pairs(xi, yi, xj, yj)
    inter = np.maximum(0.0, np.minimum(yi, yj) - np.maximum(xi, xj))
    hull = np.maximum(yi, yj) - np.minimum(xi, xj)
    out = np.ones_like(inter)
    np.divide(inter, hull, out=out, where=hull > 0.0)
    return _as_scalar_or_array(out)


def delta_inc_strict(xi, yi, xj, yj):
    """Indicator of I1 being a subset of I2 (endpoints inclusive)."""
    xi, yi, xj, yj = _check_pairs(xi, yi, xj, yj)
    out = ((xj <= xi) & (yi <= yj)).astype(float)
    return _as_scalar_or_array(out)


def delta_inc_partial(xi, yi, xj, yj):
    """Fraction of the first interval covered by the second.

    max(0, min(yi, yj) - max(xi, xj)) / (yi - xi).  When the first interval
    is a point the fraction is 1 if the point lies in I2 and 0 otherwise.
    """
    xi, yi, xj, yj = _check_pairs(xi, yi, xj, yj)
    num = np.maximum(0.0, np.minimum(yi, yj) - np.maximum(xi, xj))
    den = yi - xi
    # asarray: comparisons on 0-d operands collapse to scalars, which
    # np.divide rejects as an out= target
    out = np.asarray((xj <= xi) & (xi <= yj), dtype=float)
    np.divide(num, den, out=out, where=den > 0.0)
    return _as_scalar_or_array(out)


def delta_inc_partial_rev(xi, yi, xj, yj):
    """Fraction of the second interval covered by the first.

    Same overlap as ``delta_inc_partial`` but normalised by (yj - xj), so
    delta_inc_partial_rev(I1, I2) == delta_inc_partial(I2, I1) exactly.
    """
    xi, yi, xj, yj = _check_pairs(xi, yi, xj, yj)
    num = np.maximum(0.0, np.minimum(yi, yj) - np.maximum(xi, xj))
    den = yj - xj
    out = np.asarray((xi <= xj) & (xj <= yi), dtype=float)
    np.divide(num, den, out=out, where=den > 0.0)
    return _as_scalar_or_array(out)
