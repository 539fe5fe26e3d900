"""Construction of the polynomial families.

Four families live here: Euler polynomials of any positive order, the
classical two-variable Boole family, and the q-deformed Boole families of
the first and second kind (again of any positive order).  Each q-deformed
value can be produced by two routes:

* ``by_series``: expand the family's generating function with the
  truncated-series engine and read off n! times the t^n coefficient.
* ``by_stirling_sum``: expand the q-falling factorial through the signed
  first-kind Stirling triangle and integrate term by term, which turns the
  value into a weighted sum of homogenized Euler polynomials.

The two routes are genuinely different computations; their exact agreement
for every n and order is one of the principal facts the identity audit
verifies, so nothing in this module assumes it.

Arguments of the shape x/lambda + s never appear as rational functions.
``euler_homog(l, a, s)`` returns the homogenized polynomial

    sum_k c_k (x + s*lambda)^k lambda^(l-k)      where E_l^(a)(u) = sum_k c_k u^k,

which equals lambda^l * E_l^(a)(x/lambda + s) after clearing denominators
and is an honest polynomial in x and lambda, valid at lambda = 0 too.

All constructors are pure and memoized; the caches are only keyed by
hashable scalars, so concurrent readers are safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .combinatorics import stirling1
from .exact_core import LAM, MultiPoly, Q, X
from .series_engine import (
    DEFAULT_ORDER,
    TruncSeries,
    binomial_series_classical,
    exp_linear,
    q_binomial_series,
    series_inv,
    series_pow,
)

__all__ = [
    "FAMILIES",
    "CONSTRUCTIONS",
    "FamilyId",
    "PolyFamilyValue",
    "euler_poly",
    "euler_homog",
    "euler_lambda_form",
    "boole_classical",
    "qboole_first",
    "qboole_second",
    "qboole_number",
    "family_polynomial",
    "build_family_value",
]

FAMILIES = ("euler", "boole_classical", "qboole_first", "qboole_second")
CONSTRUCTIONS = ("by_series", "by_stirling_sum")

# Families whose definition supports order > 1.
_HIGHER_ORDER = frozenset({"euler", "qboole_first", "qboole_second"})


@dataclass(frozen=True)
class FamilyId:
    """Identifies one polynomial family together with its order."""

    family: str
    order: int = 1

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.order < 1:
            raise ValueError(f"family order must be >= 1, got {self.order}")
        if self.order > 1 and self.family not in _HIGHER_ORDER:
            raise ValueError(f"family {self.family!r} does not support order {self.order}")


@dataclass(frozen=True)
class PolyFamilyValue:
    """One family member: degree index, polynomial, and how it was built."""

    id: FamilyId
    n: int
    value: MultiPoly
    construction: str


def _check_degree_order(n: int, alpha: int) -> None:
    if n < 0:
        raise ValueError(f"degree index must be non-negative, got {n}")
    if alpha < 1:
        raise ValueError(f"order must be >= 1, got {alpha}")


def _check_construction(construction: str) -> None:
    if construction not in CONSTRUCTIONS:
        raise ValueError(
            f"unknown construction {construction!r}; expected one of {CONSTRUCTIONS}"
        )


def _order_for(n: int) -> int:
    # Reuse one cached series for every n up to the default truncation.
    return n if n > DEFAULT_ORDER else DEFAULT_ORDER


# -- Euler polynomials -----------------------------------------------------


@lru_cache(maxsize=None)
def _euler_series(alpha: int, order: int) -> TruncSeries:
    # The order-alpha kernel is the alpha-th power of the inverse of
    # (e^t + 1)/2, whose constant term is 1, so inversion is licit.
    kernel = series_inv((exp_linear(1, order) + 1) * Fraction(1, 2))
    return series_pow(kernel, alpha) * exp_linear(X, order)


@lru_cache(maxsize=None)
def euler_poly(n: int, alpha: int = 1) -> MultiPoly:
    """Euler polynomial of degree n and order alpha, a polynomial in x only."""
    _check_degree_order(n, alpha)
    series = _euler_series(alpha, _order_for(n))
    return series.coefficient(n) * math.factorial(n)


@lru_cache(maxsize=None)
def euler_lambda_form(ell: int, alpha: int, numerator: MultiPoly) -> MultiPoly:
    """Homogenized Euler value: sum_k c_k * numerator^k * lambda^(l-k).

    With E_l^(alpha)(u) = sum_k c_k u^k this equals
    lambda^l * E_l^(alpha)(numerator / lambda) once denominators clear.
    """
    _check_degree_order(ell, alpha)
    e = euler_poly(ell, alpha)
    result = MultiPoly.zero()
    power = MultiPoly.const(1)
    for k in range(ell + 1):
        c = e.coefficient("x", k).constant_value()
        if c:
            result = result + c * power * LAM ** (ell - k)
        if k < ell:
            power = power * numerator
    return result


@lru_cache(maxsize=None)
def euler_homog(ell: int, alpha: int = 1, shift: int | Fraction = 0) -> MultiPoly:
    """Homogenized Euler polynomial at the shifted argument x/lambda + shift."""
    return euler_lambda_form(ell, alpha, X + Fraction(shift) * LAM)


# -- classical Boole family ------------------------------------------------


@lru_cache(maxsize=None)
def _classical_series(order: int) -> TruncSeries:
    kernel = series_inv(binomial_series_classical(LAM, order) + 1)
    return kernel * binomial_series_classical(X, order)


@lru_cache(maxsize=None)
def boole_classical(n: int) -> MultiPoly:
    """Classical two-variable Boole polynomial of degree index n.

    Generating function: (1 + t)^x / (1 + (1 + t)^lambda).  Note the
    value at n = 0 is 1/2, not 1; the q-deformed first-kind family at
    q = 1 equals exactly twice this one.
    """
    if n < 0:
        raise ValueError(f"degree index must be non-negative, got {n}")
    return _classical_series(_order_for(n)).coefficient(n) * math.factorial(n)


# -- q-deformed Boole families ---------------------------------------------


@lru_cache(maxsize=None)
def _q_kernel_pow(alpha: int, order: int) -> TruncSeries:
    base = series_inv((q_binomial_series(LAM, order) + 1) * Fraction(1, 2))
    return series_pow(base, alpha)


@lru_cache(maxsize=None)
def _first_kind_series(alpha: int, order: int) -> TruncSeries:
    return q_binomial_series(X, order) * _q_kernel_pow(alpha, order)


@lru_cache(maxsize=None)
def _second_kind_series(alpha: int, order: int) -> TruncSeries:
    return q_binomial_series(X + alpha * LAM, order) * _q_kernel_pow(alpha, order)


@lru_cache(maxsize=None)
def qboole_first(n: int, alpha: int = 1, construction: str = "by_stirling_sum") -> MultiPoly:
    """First-kind q-deformed Boole polynomial of degree n and order alpha."""
    _check_degree_order(n, alpha)
    _check_construction(construction)
    if construction == "by_series":
        series = _first_kind_series(alpha, _order_for(n))
        return series.coefficient(n) * math.factorial(n)
    result = MultiPoly.zero()
    for ell in range(n + 1):
        s1 = stirling1(n, ell)
        if s1:
            result = result + s1 * Q ** (n - ell) * euler_homog(ell, alpha, 0)
    return result


@lru_cache(maxsize=None)
def qboole_second(n: int, alpha: int = 1, construction: str = "by_stirling_sum") -> MultiPoly:
    """Second-kind q-deformed Boole polynomial of degree n and order alpha.

    The Stirling route uses the signed first-kind triangle and the Euler
    argument x/lambda + alpha; the series route uses the binomial exponent
    x + alpha*lambda.  Both follow from the integral definition, and the
    audit keeps the variants that replace them (absolute-value weights,
    constant shift x + alpha) as separately reported discrepancies.
    """
    _check_degree_order(n, alpha)
    _check_construction(construction)
    if construction == "by_series":
        series = _second_kind_series(alpha, _order_for(n))
        return series.coefficient(n) * math.factorial(n)
    result = MultiPoly.zero()
    for ell in range(n + 1):
        s1 = stirling1(n, ell)
        if s1:
            result = result + s1 * Q ** (n - ell) * euler_homog(ell, alpha, alpha)
    return result


@lru_cache(maxsize=None)
def qboole_number(n: int, kind: str) -> MultiPoly:
    """q-deformed Boole number of the given kind: the x = 0 member value."""
    if kind == "first":
        value = qboole_first(n, 1)
    elif kind == "second":
        value = qboole_second(n, 1)
    else:
        raise ValueError(f"unknown kind {kind!r}; expected 'first' or 'second'")
    return value.substitute("x", MultiPoly.zero())


# -- uniform access --------------------------------------------------------


def family_polynomial(fid: FamilyId, n: int, construction: str = "by_stirling_sum") -> MultiPoly:
    """The degree-n member of the identified family.

    The construction argument selects the route for the q-deformed
    families; the Euler and classical families have a single route and
    ignore it.
    """
    if fid.family == "euler":
        return euler_poly(n, fid.order)
    if fid.family == "boole_classical":
        return boole_classical(n)
    if fid.family == "qboole_first":
        return qboole_first(n, fid.order, construction)
    return qboole_second(n, fid.order, construction)


def build_family_value(fid: FamilyId, n: int, construction: str = "by_stirling_sum") -> PolyFamilyValue:
    """Bundle a family member with its provenance for rendering layers."""
    _check_construction(construction)
    return PolyFamilyValue(
        id=fid, n=n, value=family_polynomial(fid, n, construction), construction=construction
    )
