"""Exact divisor-class invariants on rank-2 quartic K3 surfaces and smooth
cubic surfaces, and classification of the corresponding Hilbert-scheme
families of space curves."""
from .lattice import DivClass2, Gram2, Rational, euler_char_k3, pair, self_int
from .k3 import Q1, Q2, CohDims, K3Model, cohomology, h1_ideal_quartic
from .quartic import Kind, Verdict, classify_quartic, max_genus
from .cubic import CubicVerdict, Septuple, classify_mainC, cubic_degree_genus

__all__ = [
    "DivClass2", "Gram2", "Rational", "euler_char_k3", "pair", "self_int",
    "Q1", "Q2", "CohDims", "K3Model", "cohomology", "h1_ideal_quartic",
    "Kind", "Verdict", "classify_quartic", "max_genus",
    "CubicVerdict", "Septuple", "classify_mainC", "cubic_degree_genus",
]
