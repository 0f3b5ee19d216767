"""Scenario runners: pairwise-measure tables and two-parameter sweeps.

``run_tables`` evaluates a set of measures over every ordered pair of the
scenario's distributions and reports the off-diagonal row averages next to
each matrix.  ``run_sweep`` fixes one operand and sweeps a normal second
operand over a (mu2, sigma2) grid, producing one CSV row per grid cell.

Outputs are deterministic: rows are ordered lexicographically, values are
formatted with 6 significant digits and files are written with LF line
endings, so reruns are byte-identical.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

import numpy as np

from .consonant import consonant_from_normal, parse_distribution
from .measures import distance, inc_partial, inc_strict, scalar_product
from .quadrature import QuadratureConfig

__all__ = [
    "MEASURES",
    "SWEEP_MEASURES",
    "SweepSpec",
    "Scenario",
    "TableSet",
    "run_tables",
    "run_sweep",
    "render_tables",
    "sweep_csv",
    "grid_values",
]

MEASURES = ("incstr", "incpar", "scalar", "distance")
SWEEP_MEASURES = ("incstr", "incpar")
DIRECTIONS = ("1in2", "2in1")
FORMATS = ("markdown", "csv")


@dataclass(frozen=True)
class SweepSpec:
    """Grid sweep of a normal second operand against a fixed first operand.

    ``mu2`` and ``sigma2`` are inclusive (start, stop, step) ranges.
    ``direction`` picks the operand order: "1in2" measures the fixed
    density's inclusion in the swept one, "2in1" the reverse.
    """

    fixed: str
    mu2: tuple[float, float, float]
    sigma2: tuple[float, float, float]
    measure: str = "incpar"
    direction: str = "1in2"

    def __post_init__(self):
        parse_distribution(self.fixed)
        for name, rng in (("mu2", self.mu2), ("sigma2", self.sigma2)):
            start, stop, step = rng
            if not step > 0:
                raise ValueError(f"{name} step must be positive, got {step}")
            if stop < start:
                raise ValueError(f"{name} range is empty: {rng}")
        if self.sigma2[0] <= 0:
            raise ValueError(f"sigma2 must start above 0, got {self.sigma2[0]}")
        if self.measure not in SWEEP_MEASURES:
            raise ValueError(f"unknown sweep measure {self.measure!r}, expected one of {SWEEP_MEASURES}")
        if self.direction not in DIRECTIONS:
            raise ValueError(f"unknown direction {self.direction!r}, expected one of {DIRECTIONS}")


@dataclass(frozen=True)
class Scenario:
    """One reproducible experiment: either a table set or a sweep."""

    distributions: tuple[str, ...] = ()
    measures: tuple[str, ...] = ("incstr", "incpar")
    sweep: SweepSpec | None = None
    quadrature: QuadratureConfig = field(default_factory=QuadratureConfig)
    output_format: str = "markdown"
    output_path: str | None = None

    def __post_init__(self):
        for spec in self.distributions:
            parse_distribution(spec)
        if not self.measures:
            raise ValueError("need at least one measure")
        for meas in self.measures:
            if meas not in MEASURES:
                raise ValueError(f"unknown measure {meas!r}, expected one of {MEASURES}")
        if self.output_format not in FORMATS:
            raise ValueError(f"unknown output format {self.output_format!r}")


@dataclass(frozen=True)
class TableSet:
    """Pairwise measure matrices plus off-diagonal row averages.

    ``matrices[meas][i, j]`` is the measure of the pair (f_i, f_j); for the
    inclusion measures that is the degree to which f_i is included in f_j.
    """

    labels: tuple[str, ...]
    matrices: dict[str, np.ndarray]
    averages: dict[str, np.ndarray]


def grid_values(rng: tuple[float, float, float]) -> np.ndarray:
    """Inclusive arithmetic grid start, start+step, ..., up to stop.

    The endpoint test has a half-step-relative slack so stops that are a
    whole number of steps away are always included despite float noise.
    """
    start, stop, step = rng
    count = int(np.floor((stop - start) / step + 1e-9)) + 1
    return start + step * np.arange(max(count, 1))


def _pair_value(measure: str, f1, f2, cfg: QuadratureConfig) -> float:
    if measure == "incstr":
        return inc_strict(f1, f2, cfg).value
    if measure == "incpar":
        return inc_partial(f1, f2, cfg).value
    raise ValueError(f"unknown pairwise measure {measure!r}")


def run_tables(s: Scenario) -> TableSet:
    """Evaluate the scenario's measures over all ordered distribution pairs."""
    if len(s.distributions) < 2:
        raise ValueError(f"need at least two distributions, got {len(s.distributions)}")
    cfg = s.quadrature
    bbds = [parse_distribution(spec, cfg.truncation_k) for spec in s.distributions]
    labels = tuple(b.label for b in bbds)
    n = len(bbds)

    matrices: dict[str, np.ndarray] = {}
    gram: np.ndarray | None = None
    for meas in s.measures:
        if meas in ("incstr", "incpar"):
            mat = np.array(
                [[_pair_value(meas, bbds[i], bbds[j], cfg) for j in range(n)] for i in range(n)]
            )
        else:
            if gram is None:
                gram = np.zeros((n, n))
                for i in range(n):
                    for j in range(i, n):
                        gram[i, j] = gram[j, i] = scalar_product(bbds[i], bbds[j], cfg)
            if meas == "scalar":
                mat = gram.copy()
            else:
                diag = np.diag(gram)
                rad = 0.5 * (diag[:, None] + diag[None, :] - 2.0 * gram)
                mat = np.sqrt(np.maximum(0.0, rad))
        matrices[meas] = mat

    averages = {}
    off_diag = ~np.eye(n, dtype=bool)
    for meas, mat in matrices.items():
        averages[meas] = np.array([mat[i, off_diag[i]].mean() for i in range(n)])

    tset = TableSet(labels, matrices, averages)
    if s.output_path:
        _write_text(s.output_path, render_tables(tset, s.output_format))
    return tset


def run_sweep(s: Scenario) -> list[tuple[float, float, float]]:
    """Evaluate the scenario's sweep; returns (mu2, sigma2, value) rows.

    Rows are ordered lexicographically by (mu2, sigma2).
    """
    if s.sweep is None:
        raise ValueError("scenario has no sweep spec")
    spec = s.sweep
    cfg = s.quadrature
    fixed = parse_distribution(spec.fixed, cfg.truncation_k)
    rows: list[tuple[float, float, float]] = []
    for mu2 in grid_values(spec.mu2):
        for sigma2 in grid_values(spec.sigma2):
            swept = consonant_from_normal(mu2, sigma2, cfg.truncation_k)
            if spec.direction == "1in2":
                value = _pair_value(spec.measure, fixed, swept, cfg)
            else:
                value = _pair_value(spec.measure, swept, fixed, cfg)
            rows.append((float(mu2), float(sigma2), value))
    if s.output_path:
        _write_text(s.output_path, sweep_csv(rows))
    return rows


def sweep_csv(rows) -> str:
    """Render sweep rows as CSV with header mu2,sigma2,value."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["mu2", "sigma2", "value"])
    for mu2, sigma2, value in rows:
        writer.writerow([f"{mu2:.6g}", f"{sigma2:.6g}", f"{value:.6g}"])
    return buf.getvalue()


def render_tables(t: TableSet, fmt: str = "markdown") -> str:
    if fmt == "markdown":
        return _tables_markdown(t)
    if fmt == "csv":
        return _tables_csv(t)
    raise ValueError(f"unknown output format {fmt!r}")


def _tables_markdown(t: TableSet) -> str:
    parts = []
    for meas, mat in t.matrices.items():
        lines = [f"### {meas}", ""]
        header = ["f_i \\ f_j", *t.labels, "avg"]
        lines.append("| " + " | ".join(header) + " |")
        lines.append("|" + "|".join([" --- "] * len(header)) + "|")
        for i, label in enumerate(t.labels):
            cells = [f"{v:.6g}" for v in mat[i]] + [f"{t.averages[meas][i]:.6g}"]
            lines.append("| " + " | ".join([label, *cells]) + " |")
        parts.append("\n".join(lines))
    return "\n\n".join(parts) + "\n"


def _tables_csv(t: TableSet) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["measure", "f_i", "f_j", "value"])
    for meas, mat in t.matrices.items():
        for i, row_label in enumerate(t.labels):
            for j, col_label in enumerate(t.labels):
                writer.writerow([meas, row_label, col_label, f"{mat[i, j]:.6g}"])
            writer.writerow([meas, row_label, "avg", f"{t.averages[meas][i]:.6g}"])
    return buf.getvalue()


def _write_text(path: str, text: str):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
