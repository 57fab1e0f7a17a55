"""Pure-Python scan kernels (reference implementation and fallback)."""
from .combinatorics import enumerate_triangular_sequences
from .determinant import build_matrix_closed_form, determinant


def determinant_terms(lam, mu):
    """det M(s) for every s in S(lam), in enumeration order."""
    return [determinant(build_matrix_closed_form(lam, mu, s)) for s in enumerate_triangular_sequences(lam)]


def coefficient_total(lam, mu):
    return sum(determinant_terms(lam, mu))
