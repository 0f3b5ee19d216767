"""Inclusion, distance and conflict measures for belief functions.

The package covers two settings with one vocabulary:

* discrete mass functions on finite frames (``cbf.discrete``), where all
  measures are exact sums over focal sets;
* continuous consonant belief densities induced by normal or exponential
  pignistic densities (``cbf.consonant`` / ``cbf.measures``), where the
  measures are expectations of interval overlap degrees evaluated by
  deterministic quadrature.

``cbf.experiments`` reproduces the reference tables and parameter sweeps;
the ``cbf`` console script exposes them from the shell.
"""

from .consonant import (
    ConsonantBBD,
    GenericBBD,
    IntervalCurve,
    consonant_from_exponential,
    consonant_from_normal,
    parse_distribution,
    pignistic_density,
    to_generic,
)
from .discrete import (
    DiscreteMassFunction,
    conflict,
    d_inc,
    jousselme_distance,
    load_bba,
    parse_bba,
    sigma_inc,
)
from .experiments import Scenario, SweepSpec, TableSet, run_sweep, run_tables
from .intervals import (
    EMPTY,
    Interval,
    bracket,
    delta_inc_partial,
    delta_inc_partial_rev,
    delta_inc_strict,
    jaccard_delta,
    length,
)
from .measures import (
    InclusionResult,
    distance,
    inc_avg_partial,
    inc_avg_strict,
    inc_partial,
    inc_partial_reversed,
    inc_strict,
    scalar_product,
)
from .quadrature import QuadratureConfig, integrate2d, integrate4d, mc_estimate

__version__ = "0.1.0"

__all__ = [
    "ConsonantBBD",
    "DiscreteMassFunction",
    "EMPTY",
    "GenericBBD",
    "InclusionResult",
    "Interval",
    "IntervalCurve",
    "QuadratureConfig",
    "Scenario",
    "SweepSpec",
    "TableSet",
    "bracket",
    "conflict",
    "consonant_from_exponential",
    "consonant_from_normal",
    "d_inc",
    "delta_inc_partial",
    "delta_inc_partial_rev",
    "delta_inc_strict",
    "distance",
    "inc_avg_partial",
    "inc_avg_strict",
    "inc_partial",
    "inc_partial_reversed",
    "inc_strict",
    "integrate2d",
    "integrate4d",
    "jaccard_delta",
    "jousselme_distance",
    "length",
    "load_bba",
    "mc_estimate",
    "parse_bba",
    "parse_distribution",
    "pignistic_density",
    "run_sweep",
    "run_tables",
    "scalar_product",
    "sigma_inc",
    "to_generic",
]
