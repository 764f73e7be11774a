"""Exact section-operator computations, real-rootedness and interlacing
certificates, and colored permutation descent statistics.

Polynomials are coefficient lists, constant term first. Entries may be ints,
`fractions.Fraction` values, or exact rational strings like ``"3/4"``; results
come back as rational strings in lowest terms.
"""

from fractions import Fraction

from ._core import (  # noqa: F401
    InternalInconsistencyError,
    ParseError,
    ResourceLimitError,
    __version__,
    descent_stats,
    geometric_kernel,
    parse_polynomial,
    suite_names,
    verify,
)
from . import _core


def _coeffs(coeffs):
    return [c if isinstance(c, str) else str(Fraction(c)) for c in coeffs]


def sections(coeffs, r):
    return _core.sections(_coeffs(coeffs), r)


def recompose(parts, r):
    return _core.recompose([_coeffs(p) for p in parts], r)


def veronese(coeffs, n, r, k, check_oracle=False):
    return _core.veronese(_coeffs(coeffs), n, r, k, check_oracle)


def is_real_rooted(coeffs):
    return _core.is_real_rooted(_coeffs(coeffs))


def has_only_nonpositive_roots(coeffs):
    return _core.has_only_nonpositive_roots(_coeffs(coeffs))


def isolate_roots(coeffs):
    return _core.isolate_roots(_coeffs(coeffs))


def interlaces(g, f):
    return _core.interlaces(_coeffs(g), _coeffs(f))


def is_interlacing_sequence(seq):
    return _core.is_interlacing_sequence([_coeffs(p) for p in seq])


def eulerian(n):
    return _core.eulerian(n)


def eulerian_refined(n, ell):
    return _core.eulerian_refined(n, ell)


def colored_eulerian(n, r, ell=None, color=None):
    return _core.colored_eulerian(n, r, ell, color)


def colored_eulerian_q(n, r, ell=None, color=None):
    return _core.colored_eulerian_q(n, r, ell, color)
