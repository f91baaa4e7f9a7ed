"""Exact computations with the Hecke algebra H_n(q) acting on polynomials and
on ordered set partitions, the ideals I_{n,k}^{(q)}, their Gröbner bases and
graded Frobenius images."""

from .combinat import TPoly
from .groebner import GroebnerBasis, Ideal, buchberger
from .osp import OrderedSetPartition, OSPVector
from .polyring import DEG_NEGLEX, NEGLEX, MPoly, TermOrder
from .qfield import QRat

__all__ = [
    "QRat",
    "MPoly",
    "TermOrder",
    "NEGLEX",
    "DEG_NEGLEX",
    "TPoly",
    "Ideal",
    "GroebnerBasis",
    "buchberger",
    "OrderedSetPartition",
    "OSPVector",
]

__version__ = "0.1.0"
