"""Weight enumerators, minimum distances and related code checks."""
from .checks import BachocReport, bachoc_bound, bachoc_extremality, formally_self_dual
from .distance import (
    DistanceReport,
    information_sets,
    infoset_distance,
    min_distance,
)
from .enumeration import DEFAULT_BUDGET, WeightEnumerator, enumerate_weights

__all__ = [
    "BachocReport",
    "DEFAULT_BUDGET",
    "DistanceReport",
    "WeightEnumerator",
    "bachoc_bound",
    "bachoc_extremality",
    "enumerate_weights",
    "formally_self_dual",
    "information_sets",
    "infoset_distance",
    "min_distance",
]
