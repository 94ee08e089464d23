"""Exact computation with generalized Weyl algebras K[h](sigma, P)."""

from .classify import KKClass, certificate, classify, named_example
from .gwa import (GWA, AffineAuto, GWAElement, canonicalize, conjugate_presentation,
                  ideal_generator_C, ideal_generator_lambda, is_graded_for_weights, nf_add,
                  nf_mul, phi_k, psi_k, star)
from .poly import Poly, distinct_root_count, divides, gcd, has_root_other_than
from .rep import TruncatedMatrix, represent, verify_representation
from .scalar import GENERIC, RATIONAL, RatFunc

__version__ = "0.1.0"

__all__ = [
    "AffineAuto", "GWA", "GWAElement", "GENERIC", "KKClass", "Poly", "RATIONAL", "RatFunc",
    "TruncatedMatrix", "canonicalize", "certificate", "classify", "conjugate_presentation",
    "distinct_root_count", "divides", "gcd", "has_root_other_than", "ideal_generator_C",
    "ideal_generator_lambda", "is_graded_for_weights", "named_example", "nf_add", "nf_mul",
    "phi_k", "psi_k", "represent", "star", "verify_representation",
]
