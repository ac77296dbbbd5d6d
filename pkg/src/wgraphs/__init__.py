"""Exact canonical bases, cells and duality for model W-graphs of classical Weyl groups."""

from .laurent import LaurentPolynomial
from .weyl import GroupType, WeylElement
from .gelfand import DescentClass, GelfandVertex, enumerate_gelfand, iota_bc, iota_d, underline
from .hecke import CanonicalBasisTable, ClassifiedBasis, HeckeModule
from .parabolic import KElement, ModelTriple, model_triples, phi
from .wgraph import WGraph, build, build_tilde, build_upsilon, verify_duality

__version__ = "0.1.0"

__all__ = [
    "LaurentPolynomial",
    "GroupType",
    "WeylElement",
    "DescentClass",
    "GelfandVertex",
    "enumerate_gelfand",
    "underline",
    "iota_bc",
    "iota_d",
    "CanonicalBasisTable",
    "ClassifiedBasis",
    "HeckeModule",
    "ModelTriple",
    "KElement",
    "model_triples",
    "phi",
    "WGraph",
    "build",
    "build_tilde",
    "build_upsilon",
    "verify_duality",
    "__version__",
]
