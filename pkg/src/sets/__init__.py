"""
Set Algebra Module

Finite scalar sets and exact elementwise set operations.
"""

from .scalar_set import (
    ScalarSet,
    SetOp,
    PairwiseResult,
    LowerBoundCertificate,
    KFoldResult,
    RatioProfile,
    DEFAULT_SIZE_CAP,
    pairwise,
    kfold_sum,
    kfold_product,
    ratio_profile,
    representations,
)
from .set_file import SetFileResult, parse_set_text, load_set_file

__all__ = [
    'ScalarSet',
    'SetOp',
    'PairwiseResult',
    'LowerBoundCertificate',
    'KFoldResult',
    'RatioProfile',
    'DEFAULT_SIZE_CAP',
    'pairwise',
    'kfold_sum',
    'kfold_product',
    'ratio_profile',
    'representations',
    'SetFileResult',
    'parse_set_text',
    'load_set_file',
]
