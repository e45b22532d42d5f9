"""Hopf actions, crossed products and their radicals, computed exactly."""

from ._backend import BACKEND
from .action import ActionBundle, CrossedProduct, Correspondence, action_make, crossed_product, dual_action, inner_action, trivial_action
from .algebra import AlgebraDef, AlgebraError, IdealSubspace, TooLarge, algebra_make
from .field import GF2, GF3, QQ, FieldSpec
from .hopf import HopfDef, dual_hopf, group_algebra, cyclic_group_algebra, hopf_make, restricted_env
from .linalg import Subspace
from .radical import baer_radical, jacobson_radical, radical

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ActionBundle",
    "AlgebraDef",
    "AlgebraError",
    "Correspondence",
    "CrossedProduct",
    "FieldSpec",
    "GF2",
    "GF3",
    "HopfDef",
    "IdealSubspace",
    "QQ",
    "Subspace",
    "TooLarge",
    "action_make",
    "algebra_make",
    "baer_radical",
    "crossed_product",
    "cyclic_group_algebra",
    "dual_action",
    "dual_hopf",
    "group_algebra",
    "hopf_make",
    "inner_action",
    "jacobson_radical",
    "radical",
    "restricted_env",
    "trivial_action",
]
