"""Exact sparse polynomial arithmetic in the indeterminates x, lambda, q.

Coefficients are arbitrary-precision rationals (``fractions.Fraction``), so
everything in this package is exact; no floating point is used anywhere.
A polynomial is a map from exponent triples to nonzero coefficients:

    x^2 - x*q  ->  {(2, 0, 0): Fraction(1), (1, 0, 1): Fraction(-1)}

The zero polynomial is the empty map.  Zero coefficients are never stored,
so two polynomials are equal iff their term maps are equal, and equality
testing is a plain dict comparison.

Terms are ordered by descending graded lexicographic order on the exponent
triple (total degree first, then the triple itself).  All text renderings
walk terms in that order, which makes serialized output byte-stable.

The variable universe is fixed at exactly {x, lambda, q}: every family
built on top of this module lives in that ring, and shifted or rescaled
arguments are handled upstream by homogenization rather than by extending
the ring or introducing rational functions.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping

__all__ = [
    "Rational",
    "MultiPoly",
    "VARIABLES",
    "X",
    "LAM",
    "Q",
    "ZERO",
    "ONE",
    "poly_add",
    "poly_mul",
    "poly_eval",
    "poly_substitute",
]

# The exact rational scalar type used as the coefficient field everywhere.
# Fraction already maintains the canonical form this package relies on:
# gcd(|numerator|, denominator) = 1 and denominator > 0.
Rational = Fraction

VARIABLES = ("x", "lambda", "q")
_VAR_INDEX = {name: i for i, name in enumerate(VARIABLES)}

Exponents = tuple[int, int, int]

_LATEX_NAMES = {"x": "x", "lambda": "\\lambda", "q": "q"}


def _as_rational(value: int | Fraction) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an integer or Fraction, got {type(value).__name__}")


def _term_order_key(exps: Exponents) -> tuple[int, Exponents]:
    return (exps[0] + exps[1] + exps[2], exps)


class MultiPoly:
    """Immutable sparse polynomial over the rationals in x, lambda, q."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponents, int | Fraction] | None = None):
        canonical: dict[Exponents, Fraction] = {}
        if terms:
            for exps, coeff in terms.items():
                if len(exps) != 3 or any(e < 0 or not isinstance(e, int) for e in exps):
                    raise ValueError(f"bad exponent triple {exps!r}")
                value = _as_rational(coeff)
                if value:
                    canonical[tuple(exps)] = value
        self._terms = canonical
        self._hash: int | None = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> MultiPoly:
        return cls()

    @classmethod
    def const(cls, value: int | Fraction) -> MultiPoly:
        return cls({(0, 0, 0): _as_rational(value)})

    @classmethod
    def variable(cls, name: str) -> MultiPoly:
        if name not in _VAR_INDEX:
            raise ValueError(f"unknown variable {name!r}; expected one of {VARIABLES}")
        exps = [0, 0, 0]
        exps[_VAR_INDEX[name]] = 1
        return cls({tuple(exps): Fraction(1)})

    # -- inspection --------------------------------------------------------

    def terms(self) -> dict[Exponents, Fraction]:
        """A copy of the term map (exponent triple -> nonzero coefficient)."""
        return dict(self._terms)

    def sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        """Terms in the canonical (descending graded lexicographic) order."""
        return sorted(self._terms.items(), key=lambda kv: _term_order_key(kv[0]), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(exps == (0, 0, 0) for exps in self._terms)

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial (error if any variable occurs)."""
        if not self.is_constant():
            raise ValueError(f"polynomial is not constant: {self}")
        return self._terms.get((0, 0, 0), Fraction(0))

    def variables(self) -> set[str]:
        """Names of the variables that actually occur."""
        used: set[str] = set()
        for exps in self._terms:
            for name, idx in _VAR_INDEX.items():
                if exps[idx] > 0:
                    used.add(name)
        return used

    def degree(self, var: str) -> int:
        """Largest exponent of ``var``; -1 for the zero polynomial."""
        idx = _VAR_INDEX[var]
        if not self._terms:
            return -1
        return max(exps[idx] for exps in self._terms)

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(exps) for exps in self._terms)

    def coefficient(self, var: str, power: int) -> MultiPoly:
        """The coefficient of ``var**power`` as a polynomial in the other variables."""
        idx = _VAR_INDEX[var]
        picked: dict[Exponents, Fraction] = {}
        for exps, coeff in self._terms.items():
            if exps[idx] == power:
                reduced = list(exps)
                reduced[idx] = 0
                picked[tuple(reduced)] = coeff
        return MultiPoly(picked)

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other: object) -> MultiPoly | None:
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(other)
        return None

    def __add__(self, other: object) -> MultiPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out = dict(self._terms)
        for exps, coeff in rhs._terms.items():
            total = out.get(exps, Fraction(0)) + coeff
            if total:
                out[exps] = total
            else:
                out.pop(exps, None)
        result = MultiPoly.__new__(MultiPoly)
        result._terms = out
        result._hash = None
        return result

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        result = MultiPoly.__new__(MultiPoly)
        result._terms = {exps: -coeff for exps, coeff in self._terms.items()}
        result._hash = None
        return result

    def __sub__(self, other: object) -> MultiPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> MultiPoly:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs + (-self)

    def __mul__(self, other: object) -> MultiPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out: dict[Exponents, Fraction] = {}
        for ea, ca in self._terms.items():
            for eb, cb in rhs._terms.items():
                exps = (ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2])
                total = out.get(exps, Fraction(0)) + ca * cb
                if total:
                    out[exps] = total
                else:
                    out.pop(exps, None)
        result = MultiPoly.__new__(MultiPoly)
        result._terms = out
        result._hash = None
        return result

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> MultiPoly:
        # Division by a nonzero scalar only; the ring has no polynomial division.
        if isinstance(other, (int, Fraction)):
            scalar = _as_rational(other)
            if not scalar:
                raise ZeroDivisionError("division of a polynomial by zero")
            return self * (Fraction(1) / scalar)
        return NotImplemented

    def __pow__(self, exponent: int) -> MultiPoly:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"polynomial power must be a non-negative integer, got {exponent!r}")
        result = MultiPoly.const(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- evaluation and substitution --------------------------------------

    def evaluate(self, assignment: Mapping[str, int | Fraction]) -> Fraction:
        """Exact value at a point assigning a rational to every occurring variable.

        Assignments for variables that do not occur are accepted and ignored;
        a missing assignment for an occurring variable is an error naming it.
        """
        values: list[Fraction | None] = [None, None, None]
        for name, value in assignment.items():
            if name not in _VAR_INDEX:
                raise ValueError(f"unknown variable {name!r} in assignment")
            values[_VAR_INDEX[name]] = _as_rational(value)
        total = Fraction(0)
        for exps, coeff in self._terms.items():
            term = coeff
            for idx, e in enumerate(exps):
                if e == 0:
                    continue
                value = values[idx]
                if value is None:
                    raise ValueError(f"no value assigned for variable '{VARIABLES[idx]}'")
                term *= value**e
            total += term
        return total

    def substitute(self, var: str, replacement: MultiPoly) -> MultiPoly:
        """Exact composition: every occurrence of ``var`` becomes ``replacement``."""
        idx = _VAR_INDEX[var]
        max_power = 0
        for exps in self._terms:
            if exps[idx] > max_power:
                max_power = exps[idx]
        powers = [MultiPoly.const(1)]
        for _ in range(max_power):
            powers.append(powers[-1] * replacement)
        result = MultiPoly.zero()
        for exps, coeff in self._terms.items():
            rest = list(exps)
            rest[idx] = 0
            result = result + MultiPoly({tuple(rest): coeff}) * powers[exps[idx]]
        return result

    # -- comparison and hashing -------------------------------------------

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._terms == rhs._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[tuple[Exponents, Fraction]]:
        return iter(self.sorted_terms())

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        """Canonical text form: ``x``, ``lambda``, ``q``; ``^`` powers; ``a/b`` rationals."""
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for position, (exps, coeff) in enumerate(self.sorted_terms()):
            factors = []
            for idx, e in enumerate(exps):
                if e == 1:
                    factors.append(VARIABLES[idx])
                elif e > 1:
                    factors.append(f"{VARIABLES[idx]}^{e}")
            magnitude = abs(coeff)
            if factors:
                body = "*".join(factors)
                if magnitude != 1:
                    body = f"{magnitude}*{body}"
            else:
                body = str(magnitude)
            if position == 0:
                chunks.append(body if coeff > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(chunks)

    def to_latex(self) -> str:
        """LaTeX form of the polynomial, terms in canonical order."""
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for position, (exps, coeff) in enumerate(self.sorted_terms()):
            factors = []
            for idx, e in enumerate(exps):
                if e == 1:
                    factors.append(_LATEX_NAMES[VARIABLES[idx]])
                elif e > 1:
                    factors.append(f"{_LATEX_NAMES[VARIABLES[idx]]}^{{{e}}}")
            magnitude = abs(coeff)
            if magnitude.denominator == 1:
                coeff_tex = str(magnitude.numerator)
            else:
                coeff_tex = f"\\frac{{{magnitude.numerator}}}{{{magnitude.denominator}}}"
            if factors:
                body = " ".join(factors)
                if magnitude != 1:
                    body = f"{coeff_tex} {body}"
            else:
                body = coeff_tex
            if position == 0:
                chunks.append(body if coeff > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


X = MultiPoly.variable("x")
LAM = MultiPoly.variable("lambda")
Q = MultiPoly.variable("q")
ZERO = MultiPoly.zero()
ONE = MultiPoly.const(1)


def poly_add(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Pointwise sum in canonical form."""
    return a + b


def poly_mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Distributive product in canonical form."""
    return a * b


def poly_eval(p: MultiPoly, at: Mapping[str, int | Fraction]) -> Fraction:
    """Exact substitution value of ``p`` at the assignment ``at``."""
    return p.evaluate(at)


def poly_substitute(p: MultiPoly, var: str, replacement: MultiPoly) -> MultiPoly:
    """Exact polynomial composition replacing ``var`` by ``replacement``."""
    return p.substitute(var, replacement)
