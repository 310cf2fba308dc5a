"""Concrete groups: free groups, SL(2,Z), PSL(2,Z) and symmetric groups."""
from .free import FreeWord, parse_word
from .matrix import (
    S_MATRIX,
    T_MATRIX,
    U_MATRIX,
    IntMatrix2,
    ProjMatrix2,
    parse_matrix,
    project,
)
from .normal_form import SyllableWord, parse_syllables, psl_normal_form
from .ops import (
    GroupElement,
    commutator,
    conjugate,
    identity_like,
    inverse,
    is_torsion,
    multiply,
    order,
    power,
    product,
)
from .perm import Permutation, parse_permutation
from .catalog import (
    FreeGroup,
    Group,
    PSL2Z,
    SL2Z,
    SymmetricGroup,
    format_element,
    group_of,
    parse_group,
)

__all__ = [
    "FreeWord", "parse_word", "S_MATRIX", "T_MATRIX", "U_MATRIX", "IntMatrix2",
    "ProjMatrix2", "parse_matrix", "project", "SyllableWord", "parse_syllables",
    "psl_normal_form", "GroupElement", "commutator", "conjugate", "identity_like",
    "inverse", "is_torsion", "multiply", "order", "power", "product", "Permutation",
    "parse_permutation", "FreeGroup", "Group", "PSL2Z", "SL2Z", "SymmetricGroup",
    "format_element", "group_of", "parse_group",
]
