"""Discrete mass functions on small frames, with inclusion-based conflict.

Subsets of the frame are held as bitmasks over the ordered label tuple, so
set operations are integer bit operations.  Frames are capped at 16
elements; everything here is exact arithmetic over the focal sets, no
quadrature involved.

The conflict measure combines the Jousselme distance d with the symmetric
inclusion degree sigma_inc as (1 - sigma_inc) * d: two mass functions are
conflict-free when one is fully included in the other or when they coincide
(d = 0).  The literal complement reading 1 - sigma_inc * d is available as
``variant="complement"`` for comparison; note it assigns conflict 1 to a
pair of identical mass functions, which is why it is not the default.
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping

import numpy as np

__all__ = [
    "MAX_FRAME",
    "DiscreteMassFunction",
    "jousselme_distance",
    "d_inc",
    "sigma_inc",
    "conflict",
    "parse_bba",
    "load_bba",
]

MAX_FRAME = 16
_MASS_TOL = 1e-12


class DiscreteMassFunction:
    """Immutable mass assignment over subsets of a finite frame.

    ``frame`` is an ordered tuple of labels.  ``masses`` maps subsets to
    non-negative masses summing to 1; a subset is any iterable of frame
    labels, or a single label string as shorthand for a singleton.
    """

    __slots__ = ("frame", "_index", "_masses")

    def __init__(self, frame: Iterable[str], masses: Mapping):
        frame = tuple(frame)
        if not 1 <= len(frame) <= MAX_FRAME:
            raise ValueError(f"frame must have 1..{MAX_FRAME} elements, got {len(frame)}")
        if len(set(frame)) != len(frame):
            raise ValueError(f"frame labels must be unique: {frame}")
        self.frame = frame
        self._index = {label: k for k, label in enumerate(frame)}
        acc: dict[int, float] = {}
        for subset, mass in masses.items():
            mass = float(mass)
            if not (math.isfinite(mass) and mass >= 0.0):
                raise ValueError(f"mass for {subset!r} must be finite and >= 0, got {mass}")
            acc[self._to_mask(subset)] = acc.get(self._to_mask(subset), 0.0) + mass
        total = sum(acc.values())
        if abs(total - 1.0) > _MASS_TOL:
            raise ValueError(f"masses must sum to 1 within {_MASS_TOL}, got {total!r}")
        self._masses = {mask: m for mask, m in sorted(acc.items()) if m > 0.0}

    def _to_mask(self, subset) -> int:
        if isinstance(subset, str):
            subset = (subset,)
        mask = 0
        for label in subset:
            k = self._index.get(label)
            if k is None:
                raise ValueError(f"label {label!r} is not in the frame {self.frame}")
            mask |= 1 << k
        return mask

    def _to_labels(self, mask: int) -> tuple[str, ...]:
        return tuple(label for k, label in enumerate(self.frame) if mask >> k & 1)

    def mass(self, subset) -> float:
        return self._masses.get(self._to_mask(subset), 0.0)

    def focal_masks(self) -> tuple[int, ...]:
        """Bitmasks of the focal sets (positive mass), ascending."""
        return tuple(self._masses)

    def focal_sets(self) -> tuple[tuple[str, ...], ...]:
        return tuple(self._to_labels(mask) for mask in self._masses)

    def items(self):
        """(labels, mass) pairs over the focal sets."""
        return [(self._to_labels(mask), m) for mask, m in self._masses.items()]

    def bel(self, subset) -> float:
        """Belief: total mass of non-empty focal sets contained in ``subset``."""
        x = self._to_mask(subset)
        return sum(m for mask, m in self._masses.items() if mask and mask & ~x == 0)

    def pl(self, subset) -> float:
        """Plausibility: total mass of focal sets intersecting ``subset``."""
        x = self._to_mask(subset)
        return sum(m for mask, m in self._masses.items() if mask & x)

    def q(self, subset) -> float:
        """Commonality: total mass of focal sets containing ``subset``."""
        x = self._to_mask(subset)
        return sum(m for mask, m in self._masses.items() if x & ~mask == 0)

    def __eq__(self, other):
        if not isinstance(other, DiscreteMassFunction):
            return NotImplemented
        return self.frame == other.frame and self._masses == other._masses

    def __repr__(self):
        body = ", ".join(f"{set(labels) or '{}'}: {m:g}" for labels, m in self.items())
        return f"DiscreteMassFunction({body})"


def _check_same_frame(m1: DiscreteMassFunction, m2: DiscreteMassFunction):
    if m1.frame != m2.frame:
        raise ValueError(f"frames differ: {m1.frame} vs {m2.frame}")


def _mask_jaccard(a: int, b: int) -> float:
    # Convention: the empty set is at Jaccard similarity 1 with itself.
    if a == 0 and b == 0:
        return 1.0
    return (a & b).bit_count() / (a | b).bit_count()


def jousselme_distance(m1: DiscreteMassFunction, m2: DiscreteMassFunction) -> float:
    """sqrt(0.5 (m1 - m2)^T D (m1 - m2)) with D the Jaccard similarity matrix.

    The quadratic form runs over the union of the two focal families only;
    all other coordinates of m1 - m2 are zero.
    """
    _check_same_frame(m1, m2)
    masks = sorted(set(m1.focal_masks()) | set(m2.focal_masks()))
    if not masks:
        return 0.0
    diff = np.array([m1._masses.get(k, 0.0) - m2._masses.get(k, 0.0) for k in masks])
    dmat = np.array([[_mask_jaccard(a, b) for b in masks] for a in masks])
    rad = 0.5 * diff @ dmat @ diff
    return math.sqrt(max(0.0, float(rad)))


def d_inc(m1: DiscreteMassFunction, m2: DiscreteMassFunction) -> float:
    """Average over focal pairs of the subset indicator 1{X1 subset X2}.

    Empty focal sets are ignored; both operands must have at least one
    non-empty focal set.
    """
    _check_same_frame(m1, m2)
    f1 = [k for k in m1.focal_masks() if k]
    f2 = [k for k in m2.focal_masks() if k]
    if not f1 or not f2:
        raise ValueError("inclusion degree needs at least one non-empty focal set per operand")
    hits = sum(1 for a in f1 for b in f2 if a & ~b == 0)
    return hits / (len(f1) * len(f2))


def sigma_inc(m1: DiscreteMassFunction, m2: DiscreteMassFunction) -> float:
    """max(d_inc(m1, m2), d_inc(m2, m1)); symmetric by construction."""
    return max(d_inc(m1, m2), d_inc(m2, m1))


def conflict(m1: DiscreteMassFunction, m2: DiscreteMassFunction, variant: str = "discounted") -> float:
    """Inclusion-discounted conflict between two mass functions.

    variant="discounted": (1 - sigma_inc) * d (default).
    variant="complement": 1 - sigma_inc * d (kept for comparison only).
    """
    if variant not in ("discounted", "complement"):
        raise ValueError(f"unknown conflict variant {variant!r}")
    s = sigma_inc(m1, m2)
    d = jousselme_distance(m1, m2)
    if variant == "discounted":
        return (1.0 - s) * d
    return 1.0 - s * d


def parse_bba(text: str, frame: Iterable[str] | None = None) -> DiscreteMassFunction:
    """Parse a mass assignment from text, one focal set per line.

    Line format: ``a|b|c:0.7`` (labels joined by '|', then ':', then the
    mass). Blank lines and lines starting with '#' are skipped.  If
    ``frame`` is None the frame is the sorted union of the labels seen.
    """
    entries: list[tuple[tuple[str, ...], float]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, sep, tail = line.rpartition(":")
        if not sep:
            raise ValueError(f"line {lineno}: expected LABELS:MASS, got {line!r}")
        labels = tuple(tok.strip() for tok in head.split("|"))
        if any(not tok for tok in labels):
            raise ValueError(f"line {lineno}: empty label in {line!r}")
        try:
            mass = float(tail)
        except ValueError:
            raise ValueError(f"line {lineno}: non-numeric mass {tail!r}") from None
        entries.append((labels, mass))
    if not entries:
        raise ValueError("no mass assignments found")
    if frame is None:
        frame = tuple(sorted({lab for labels, _ in entries for lab in labels}))
    masses: dict[tuple[str, ...], float] = {}
    for labels, mass in entries:
        key = tuple(sorted(set(labels)))
        masses[key] = masses.get(key, 0.0) + mass
    return DiscreteMassFunction(frame, masses)


def load_bba(path, frame: Iterable[str] | None = None) -> DiscreteMassFunction:
    """Read a mass assignment file (see ``parse_bba`` for the format)."""
    with open(path, "r", encoding="utf-8") as fh:
        return parse_bba(fh.read(), frame)
