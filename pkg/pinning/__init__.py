"""
Pinnings of GL, Sp, SO(odd) and SO(even) as explicit generator matrices
"""
from pinning.groups import GroupDescriptor, MembershipError, PinningError, group_membership
from pinning.generators import (
    GeneratorSpec,
    chi_word,
    generator,
    word_product,
    x_word,
    y_word,
)
from pinning.compatibility import (
    CoordinateMap,
    FoldIdentity,
    fold_identity,
    verify_compatibility,
    verify_ddagger2,
)

__all__ = [
    "GroupDescriptor",
    "GeneratorSpec",
    "CoordinateMap",
    "FoldIdentity",
    "MembershipError",
    "PinningError",
    "chi_word",
    "fold_identity",
    "generator",
    "group_membership",
    "verify_compatibility",
    "verify_ddagger2",
    "word_product",
    "x_word",
    "y_word",
]
