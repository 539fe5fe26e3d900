"""Numerical p-adic oracle for the alternating-sum integral formulas.

The polynomial families in this package arise as moments of a signed
measure on the p-adic integers: the integral of f is the limit of the
alternating partial sums

    S_N(f) = sum_{a=0}^{p^N - 1} (-1)^a f(a),        p an odd prime.

For an integer-coefficient polynomial f the partial sums stabilize,
S_{N+1} == S_N (mod p^N), so S_N determines the integral to N digits.
This module computes those partial sums two ways (a fast base-p
reduction and a literal summation), then checks the closed-form
predictions: the integral of the shifted power or falling-factorial
integrand must equal the matching family polynomial evaluated at the
chosen integer point, and translation of the argument must obey the
boundary identity with alternating boundary terms.

Everything here works with plain integers modulo p^M; no floating
point is involved, so "numerical" means finite-precision p-adic, not
approximate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .euler_boole import FamilyId, boole_classical, euler_poly, family_polynomial
from .exact_core import MultiPoly, poly_eval

__all__ = [
    "PadicValue",
    "IntegerPoly",
    "fermionic_partial_sum",
    "witt_check",
    "WittResult",
    "translation_check",
    "TranslationResult",
]

# Keep literal enumerations honest: bail out rather than burn minutes.
_MAX_LITERAL_TERMS = 10_000_000


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _check_prime_precision(p: int, N: int, M: int) -> None:
    if not _is_odd_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if N < 1:
        raise ValueError(f"summation level N must be >= 1, got {N}")
    if M < 1:
        raise ValueError(f"precision M must be >= 1, got {M}")
    if M > N:
        raise ValueError(
            f"precision M={M} exceeds summation level N={N}; "
            "partial sums only determine the integral modulo p^N"
        )


@dataclass(frozen=True)
class PadicValue:
    """A residue modulo p^precision, i.e. a p-adic integer known to M digits."""

    p: int
    precision: int
    residue: int

    def __post_init__(self) -> None:
        if not _is_odd_prime(self.p):
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if self.precision < 1:
            raise ValueError(f"precision must be >= 1, got {self.precision}")
        object.__setattr__(self, "residue", self.residue % self.p**self.precision)

    @property
    def modulus(self) -> int:
        return self.p**self.precision

    @classmethod
    def from_rational(cls, value: Fraction, p: int, precision: int) -> "PadicValue":
        """Embed a rational with p-free denominator into Z/p^precision."""
        value = Fraction(value)
        if value.denominator % p == 0:
            raise ValueError(
                f"{value} has no p-adic expansion at p={p}: denominator divisible by p"
            )
        modulus = p**precision
        inv = pow(value.denominator % modulus, -1, modulus)
        return cls(p, precision, value.numerator * inv % modulus)

    def __str__(self) -> str:
        return f"{self.residue} (mod {self.p}^{self.precision})"


class IntegerPoly:
    """Dense integer-coefficient polynomial in one variable.

    Coefficients are stored ascending; the tuple never ends in a zero
    except for the zero polynomial, which is the empty tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: list[int] | tuple[int, ...]) -> None:
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(int(c) for c in cs)

    @classmethod
    def variable(cls) -> "IntegerPoly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial assigned -1."""
        return len(self.coeffs) - 1

    def __call__(self, a: int) -> int:
        result = 0
        for c in reversed(self.coeffs):
            result = result * a + c
        return result

    def eval_mod(self, a: int, modulus: int) -> int:
        result = 0
        a %= modulus
        for c in reversed(self.coeffs):
            result = (result * a + c) % modulus
        return result

    def __add__(self, other: "IntegerPoly") -> "IntegerPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        cs = [0] * n
        for i, c in enumerate(self.coeffs):
            cs[i] += c
        for i, c in enumerate(other.coeffs):
            cs[i] += c
        return IntegerPoly(cs)

    def __mul__(self, other: "IntegerPoly") -> "IntegerPoly":
        if not self.coeffs or not other.coeffs:
            return IntegerPoly([])
        cs = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    cs[i + j] += a * b
        return IntegerPoly(cs)

    def compose_linear(self, shift: int, scale: int) -> "IntegerPoly":
        """The polynomial y -> f(shift + scale * y)."""
        result = [0]
        for c in reversed(self.coeffs):
            nxt = [0] * (len(result) + 1)
            for i, r in enumerate(result):
                nxt[i] += r * shift
                nxt[i + 1] += r * scale
            nxt[0] += c
            result = nxt
        return IntegerPoly(result)

    def reduce_mod(self, modulus: int) -> "IntegerPoly":
        return IntegerPoly([c % modulus for c in self.coeffs])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntegerPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntegerPoly({list(self.coeffs)})"


def fermionic_partial_sum(
    f: IntegerPoly, p: int, N: int, M: int, literal: bool = False
) -> PadicValue:
    """Alternating partial sum S_N(f) = sum_{a < p^N} (-1)^a f(a) mod p^M.

    The default path never enumerates p^N points.  Splitting the index
    base-p and using that p is odd gives S_N(f) = S_{N-1}(g) with

        g(Y) = sum_{a=0}^{p-1} (-1)^a f(a + p*Y),

    so N rounds of this contraction reduce the sum to a constant term.
    Coefficients are reduced modulo p^M after every round, which is
    harmless because the whole construction is Z-linear.  The literal
    path adds the p^N terms directly and exists to cross-check the fast
    one; it refuses unreasonably large enumerations.
    """
    _check_prime_precision(p, N, M)
    modulus = p**M
    if literal:
        total = p**N
        if total > _MAX_LITERAL_TERMS:
            raise ValueError(
                f"literal summation over p^N = {total} terms refused; "
                f"limit is {_MAX_LITERAL_TERMS}"
            )
        acc = 0
        for a in range(total):
            term = f.eval_mod(a, modulus)
            acc = (acc - term if a & 1 else acc + term) % modulus
        return PadicValue(p, M, acc)

    g = f.reduce_mod(modulus)
    for _ in range(N):
        level = IntegerPoly([])
        for a in range(p):
            piece = g.compose_linear(a, p)
            if a & 1:
                piece = IntegerPoly([-c for c in piece.coeffs])
            level = level + piece
        g = level.reduce_mod(modulus)
    constant = g.coeffs[0] if g.coeffs else 0
    return PadicValue(p, M, constant)


def _ones_power_counts(length: int, alpha: int) -> list[int]:
    # Coefficients of (1 + z + ... + z^(length-1))^alpha: the number of
    # alpha-tuples in [0, length)^alpha with a given coordinate sum.
    counts = [1]
    ones = [1] * length
    for _ in range(alpha):
        nxt = [0] * (len(counts) + length - 1)
        for i, c in enumerate(counts):
            if c:
                for j in range(length):
                    nxt[i + j] += c
        counts = nxt
    return counts


def _alternating_sum_over_tuples(
    f: IntegerPoly, alpha: int, p: int, N: int, modulus: int
) -> int:
    """sum over (y_1..y_alpha) in [0,p^N)^alpha of (-1)^(sum y_i) f(sum y_i)."""
    length = p**N
    if length > _MAX_LITERAL_TERMS // max(alpha, 1):
        raise ValueError(
            f"tuple summation with p^N = {length} and order {alpha} refused"
        )
    counts = _ones_power_counts(length, alpha)
    acc = 0
    for s, c in enumerate(counts):
        if c:
            term = c * f.eval_mod(s, modulus)
            acc = (acc - term if s & 1 else acc + term) % modulus
    return acc


def _falling_product(constants: list[int], scale: int) -> IntegerPoly:
    """Product of the linear factors (constant_j + scale * y)."""
    result = IntegerPoly([1])
    for c in constants:
        result = result * IntegerPoly([c, scale])
    return result


def _witt_integrand(fid: FamilyId, n: int, x0: int, lam0: int, q0: int) -> IntegerPoly:
    """The integrand as a polynomial in s = y_1 + ... + y_order."""
    if fid.family == "euler":
        base = IntegerPoly.variable()
        f = IntegerPoly([1])
        for _ in range(n):
            f = f * base
        return f.compose_linear(x0, 1)
    if fid.family == "boole_classical":
        return _falling_product([x0 - j for j in range(n)], lam0)
    if fid.family == "qboole_first":
        return _falling_product([x0 - j * q0 for j in range(n)], lam0)
    # second kind: the summation variables enter with weight -lambda
    return _falling_product([x0 - j * q0 for j in range(n)], -lam0)


@dataclass(frozen=True)
class WittResult:
    """Outcome of one integral-vs-polynomial comparison."""

    id: FamilyId
    n: int
    x0: int
    lam0: int
    q0: int
    p: int
    N: int
    M: int
    integral: PadicValue
    polynomial: PadicValue

    @property
    def agree(self) -> bool:
        return self.integral.residue == self.polynomial.residue


def witt_check(
    family: str,
    n: int,
    x0: int,
    lam0: int,
    q0: int,
    p: int,
    N: int,
    M: int,
    alpha: int = 1,
    literal: bool = False,
) -> WittResult:
    """Compare the level-N alternating sum with the predicted family value.

    The integrand is the shifted power (Euler family) or the shifted
    falling factorial (Boole families), iterated over ``alpha`` summation
    variables for higher orders.  The predicted value is the matching
    family polynomial evaluated at (x0, lam0, q0); the classical family's
    prediction is twice the stored polynomial because its generating
    kernel omits the factor 2 the deformed families carry.

    For the q-deformed families q0 must satisfy q0 == 1 (mod p): the
    measure-theoretic derivation reads the q-power series as a continuous
    function on the p-adic integers, which needs the base congruent to 1.
    """
    _check_prime_precision(p, N, M)
    fid = FamilyId(family, alpha)
    if n < 0:
        raise ValueError(f"degree index must be non-negative, got {n}")
    if fid.family in ("qboole_first", "qboole_second") and q0 % p != 1:
        raise ValueError(
            f"q0 must satisfy q0 == 1 (mod p) for the q-deformed families; "
            f"got q0={q0}, p={p}"
        )

    modulus = p**M
    integrand = _witt_integrand(fid, n, x0, lam0, q0)
    if alpha == 1:
        integral = fermionic_partial_sum(integrand, p, N, M, literal=literal)
    else:
        acc = _alternating_sum_over_tuples(integrand, alpha, p, N, modulus)
        integral = PadicValue(p, M, acc)

    if fid.family == "euler":
        predicted = poly_eval(euler_poly(n, alpha), {"x": Fraction(x0)})
    elif fid.family == "boole_classical":
        predicted = 2 * poly_eval(
            boole_classical(n), {"x": Fraction(x0), "lambda": Fraction(lam0)}
        )
    else:
        value = family_polynomial(fid, n)
        predicted = poly_eval(
            value,
            {"x": Fraction(x0), "lambda": Fraction(lam0), "q": Fraction(q0)},
        )
    polynomial = PadicValue.from_rational(predicted, p, M)
    return WittResult(fid, n, x0, lam0, q0, p, N, M, integral, polynomial)


@dataclass(frozen=True)
class TranslationResult:
    """Outcome of one translation-identity comparison."""

    shift: int
    p: int
    N: int
    M: int
    lhs: PadicValue
    rhs: PadicValue

    @property
    def agree(self) -> bool:
        return self.lhs.residue == self.rhs.residue


def translation_check(f: IntegerPoly, shift: int, p: int, N: int, M: int) -> TranslationResult:
    """Verify the translation identity for the alternating-sum integral.

    Shifting the argument by a positive integer n leaves the integral
    determined by boundary values:

        I(f(. + n)) = 2 * sum_{a=0}^{n-1} (-1)^(n-1-a) f(a) + (-1)^n I(f).

    Both sides are computed at summation level N and compared mod p^M.
    """
    _check_prime_precision(p, N, M)
    if shift < 1:
        raise ValueError(f"translation shift must be >= 1, got {shift}")
    modulus = p**M
    lhs = fermionic_partial_sum(f.compose_linear(shift, 1), p, N, M)
    boundary = 0
    for a in range(shift):
        term = f.eval_mod(a, modulus)
        boundary = (boundary - term if (shift - 1 - a) & 1 else boundary + term) % modulus
    base = fermionic_partial_sum(f, p, N, M).residue
    signed_base = -base if shift & 1 else base
    rhs = PadicValue(p, M, (2 * boundary + signed_base) % modulus)
    return TranslationResult(shift, p, N, M, lhs, rhs)
