"""
Finite-dimensional norms: l_q, weighted l_q, tables of functionals.
"""

from .base import NormSpec, dual, is_hilbert, norm, pairing, parallelogram_defect
from .lq import EuclideanNorm, LqNorm, WeightedLqNorm, conjugate_exponent
from .parse import build_norm, norm_from_dict
from .table import TableNorm

__all__ = [
    "EuclideanNorm",
    "LqNorm",
    "NormSpec",
    "TableNorm",
    "WeightedLqNorm",
    "build_norm",
    "conjugate_exponent",
    "dual",
    "is_hilbert",
    "norm",
    "norm_from_dict",
    "pairing",
    "parallelogram_defect",
]
