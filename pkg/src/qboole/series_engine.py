"""Truncated formal power series in t with polynomial coefficients.

A series of order K stores exactly K+1 coefficients; index n holds the
coefficient of t^n as a :class:`~qboole.exact_core.MultiPoly`.  Arithmetic
between two series truncates at the smaller of the two orders.  There is
no general composition or logarithm: the only constructors are the ones
the polynomial families need.

``q_binomial_series(w)`` deserves a note.  It realizes the two-parameter
binomial power (1 + q t)^(w/q), which looks like it needs a fractional
exponent, but its coefficient of t^n is the q-deformed falling factorial
(w)_{n,q} / n! and every apparent division by q cancels identically.  The
series is therefore *defined* by that coefficient sequence, and the
exponent law

    q_binomial_series(u) * q_binomial_series(v) == q_binomial_series(u + v)

is a provable consequence the test suite checks rather than an assumption.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .combinatorics import falling_factorial, q_falling_factorial
from .exact_core import MultiPoly

__all__ = [
    "DEFAULT_ORDER",
    "TruncSeries",
    "series_mul",
    "series_inv",
    "series_pow",
    "exp_linear",
    "q_binomial_series",
    "binomial_series_classical",
]

# High enough to cover every degree the acceptance checks request (n <= 12)
# with margin; callers needing more pass an explicit order.
DEFAULT_ORDER = 16


def _as_poly(value: int | Fraction | MultiPoly) -> MultiPoly:
    if isinstance(value, MultiPoly):
        return value
    return MultiPoly.const(value)


class TruncSeries:
    """Degree-K truncated power series with MultiPoly coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence[int | Fraction | MultiPoly]):
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        self.coeffs: tuple[MultiPoly, ...] = tuple(_as_poly(c) for c in coeffs)
        self.order: int = len(self.coeffs) - 1

    @classmethod
    def constant(cls, value: int | Fraction | MultiPoly, order: int = DEFAULT_ORDER) -> TruncSeries:
        head = [_as_poly(value)]
        head.extend(MultiPoly.zero() for _ in range(order))
        return cls(head)

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER) -> TruncSeries:
        return cls.constant(1, order)

    def coefficient(self, n: int) -> MultiPoly:
        if n < 0 or n > self.order:
            raise ValueError(f"coefficient index {n} outside order {self.order}")
        return self.coeffs[n]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: object) -> TruncSeries:
        if isinstance(other, TruncSeries):
            k = min(self.order, other.order)
            return TruncSeries([self.coeffs[n] + other.coeffs[n] for n in range(k + 1)])
        if isinstance(other, (int, Fraction, MultiPoly)):
            head = list(self.coeffs)
            head[0] = head[0] + _as_poly(other)
            return TruncSeries(head)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> TruncSeries:
        return TruncSeries([-c for c in self.coeffs])

    def __sub__(self, other: object) -> TruncSeries:
        if isinstance(other, TruncSeries):
            return self + (-other)
        if isinstance(other, (int, Fraction, MultiPoly)):
            return self + (-_as_poly(other))
        return NotImplemented

    def __mul__(self, other: object) -> TruncSeries:
        if isinstance(other, TruncSeries):
            k = min(self.order, other.order)
            out = []
            for n in range(k + 1):
                acc = MultiPoly.zero()
                for i in range(n + 1):
                    a = self.coeffs[i]
                    b = other.coeffs[n - i]
                    if a.is_zero() or b.is_zero():
                        continue
                    acc = acc + a * b
                out.append(acc)
            return TruncSeries(out)
        if isinstance(other, (int, Fraction, MultiPoly)):
            scale = _as_poly(other)
            return TruncSeries([c * scale for c in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> TruncSeries:
        return series_pow(self, exponent)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        shown = ", ".join(f"[t^{n}] {c}" for n, c in enumerate(self.coeffs[:4]))
        tail = " ..." if self.order > 3 else ""
        return f"TruncSeries(order={self.order}: {shown}{tail})"


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Cauchy product truncated at the smaller order."""
    return a * b


def series_inv(a: TruncSeries) -> TruncSeries:
    """Multiplicative inverse up to the order of ``a``.

    Requires the constant coefficient to be a nonzero rational constant
    (no x, lambda, q dependence); every kernel this package inverts has
    constant term 1 or 2, so inverting polynomial units is never needed.
    """
    head = a.coeffs[0]
    if not head.is_constant():
        raise ValueError(f"series_inv needs a constant leading coefficient, got {head}")
    lead = head.constant_value()
    if not lead:
        raise ValueError("series_inv: constant coefficient is zero, series is not invertible")
    inv_lead = Fraction(1) / lead
    out: list[MultiPoly] = [MultiPoly.const(inv_lead)]
    for n in range(1, a.order + 1):
        acc = MultiPoly.zero()
        for k in range(1, n + 1):
            if a.coeffs[k].is_zero():
                continue
            acc = acc + a.coeffs[k] * out[n - k]
        out.append(acc * (-inv_lead))
    return TruncSeries(out)


def series_pow(a: TruncSeries, exponent: int) -> TruncSeries:
    """Repeated product; the order of ``a`` is preserved."""
    if not isinstance(exponent, int) or exponent < 1:
        raise ValueError(f"series power must be a positive integer, got {exponent!r}")
    result = a
    for _ in range(exponent - 1):
        result = result * a
    return result


def exp_linear(c: int | Fraction | MultiPoly, order: int = DEFAULT_ORDER) -> TruncSeries:
    """The exponential series of c*t: coefficient of t^n is c^n / n!."""
    base = _as_poly(c)
    coeffs: list[MultiPoly] = [MultiPoly.const(1)]
    power = MultiPoly.const(1)
    for n in range(1, order + 1):
        power = power * base
        coeffs.append(power * Fraction(1, math.factorial(n)))
    return TruncSeries(coeffs)


def q_binomial_series(w: int | Fraction | MultiPoly, order: int = DEFAULT_ORDER) -> TruncSeries:
    """The series with coefficient of t^n equal to (w)_{n,q} / n!.

    This is the q-deformed binomial power for exponent w; see the module
    docstring for why no division by q ever appears.
    """
    base = _as_poly(w)
    coeffs = [
        q_falling_factorial(base, n) * Fraction(1, math.factorial(n)) for n in range(order + 1)
    ]
    return TruncSeries(coeffs)


def binomial_series_classical(w: int | Fraction | MultiPoly, order: int = DEFAULT_ORDER) -> TruncSeries:
    """The ordinary binomial power (1 + t)^w: coefficient of t^n is (w)_n / n!."""
    base = _as_poly(w)
    coeffs = [
        falling_factorial(base, n) * Fraction(1, math.factorial(n)) for n in range(order + 1)
    ]
    return TruncSeries(coeffs)
