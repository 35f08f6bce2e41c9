"""Crossed modules of finite-dimensional Lie algebras over Q and F_p."""

from .algebra import LieAlgebra, LieCrossedModule, make_lie, make_lie_xmod
from .centre import LieCentre, lie_centre, lie_homotopy
from .cohomology import lie_cohomology
from .fields import GF, QQ, Field
from .sequence import lie_exact_sequence_check

__all__ = [
    "GF",
    "QQ",
    "Field",
    "LieAlgebra",
    "LieCentre",
    "LieCrossedModule",
    "lie_centre",
    "lie_cohomology",
    "lie_exact_sequence_check",
    "lie_homotopy",
    "make_lie",
    "make_lie_xmod",
]
