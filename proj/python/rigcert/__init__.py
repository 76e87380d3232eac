"""Rigorous certificates for constant inequalities, real-root counts,
Gaussian integral bounds and colored Yang-Baxter checks.

Ledger-producing calls return the same JSON documents as the ``rigcert``
command line tool, decoded into dicts. Interval endpoints are decimal strings.
"""

import json
from fractions import Fraction

from . import _rigcert
from ._rigcert import DomainError, ParseError, UsageError, claim_ids, make_j, r_of_x

__version__ = _rigcert.__version__
DEFAULT_PRECISION = _rigcert.DEFAULT_PRECISION

__all__ = [
    "DomainError",
    "ParseError",
    "UsageError",
    "certify",
    "claim_ids",
    "eval_const",
    "gauss",
    "integrate_gaussian",
    "make_j",
    "r_of_x",
    "roots",
    "solve_factorable_quadratic",
    "sturm_count",
    "ybe",
]


def eval_const(expr, bits=DEFAULT_PRECISION):
    """Enclosure of a constant expression as {"lo": str, "hi": str}."""
    return json.loads(_rigcert.eval_const(expr, bits))


def sturm_count(coeffs, region="all", bits=DEFAULT_PRECISION):
    """Root-count certificate for comma-separated coefficients (leading first)."""
    if not isinstance(coeffs, str):
        coeffs = ",".join(str(c) for c in coeffs)
    return json.loads(_rigcert.sturm_count(coeffs, region, bits))


def solve_factorable_quadratic(a, c):
    """Exact roots of a x^2 + (a + c) x + c."""
    (n1, d1), (n2, d2) = _rigcert.solve_factorable_quadratic(a, c)
    return Fraction(n1, d1), Fraction(n2, d2)


def certify(claims=None, bits=DEFAULT_PRECISION, jobs=1):
    return json.loads(_rigcert.certify(list(claims or []), bits, jobs=jobs))


def roots(coeffs, region="all", bits=DEFAULT_PRECISION):
    return json.loads(_rigcert.roots(coeffs, region, bits))


def gauss(a, b, bits=DEFAULT_PRECISION):
    return json.loads(_rigcert.gauss(str(a), str(b), bits))


def ybe(alphas=(1, 2, 1 + 1j), samples=100, seed=42, rigorous=False, bits=DEFAULT_PRECISION):
    if isinstance(alphas, (int, float, complex)):
        alphas = [alphas]
    return json.loads(_rigcert.ybe([complex(a) for a in alphas], samples, seed, rigorous, bits))


def integrate_gaussian(a, b, bits=DEFAULT_PRECISION):
    """Enclosure of the integral of exp(-x^2) over [a, b]."""
    return json.loads(_rigcert.integrate_gaussian(str(a), str(b), bits))
