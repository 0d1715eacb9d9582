"""Exact counting of multi-dimensional partitions and the Euler-number
partition functions built from them."""
from .partitions import count_partitions, count_punctual, enumerate_partitions, partition_series
from .series import TruncatedSeries, pexp, plog
from .staircase import enumerate_ideals, oracle_count

__all__ = [
    "TruncatedSeries",
    "count_partitions",
    "count_punctual",
    "enumerate_ideals",
    "enumerate_partitions",
    "oracle_count",
    "partition_series",
    "pexp",
    "plog",
]
