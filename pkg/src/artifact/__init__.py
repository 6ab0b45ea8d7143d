"""Uncertainty computation with neutrosophic values.

Value families (core), distance/similarity measures, aggregation operators
and weight derivation, decision pipelines (mcdm), labelled graphs, and a
JSON command-line front end.
"""

from .errors import DegenerateError, InputError
from .core import (
    BNN,
    IVNN,
    SVNN,
    SVNHFE,
    RoughSVNN,
)
from .problem import DecisionProblem, Ranking, Trail, rank_by

__version__ = "0.1.0"

__all__ = [
    "BNN",
    "DecisionProblem",
    "DegenerateError",
    "IVNN",
    "InputError",
    "Ranking",
    "RoughSVNN",
    "SVNN",
    "SVNHFE",
    "Trail",
    "rank_by",
    "__version__",
]
