"""Stirling numbers, generalized binomial coefficients, falling factorials.

The signed first-kind triangle converts falling factorials into powers,
the second-kind triangle converts powers back into falling factorials,
and the two triangles are mutually inverse.  Both are built from their
additive recurrences:

    S1(n+1, l) = S1(n, l-1) - n * S1(n, l)
    S2(n+1, l) = l * S2(n, l) + S2(n, l-1)

Rows are grown on demand and kept in module-level caches, because every
identity check rereads the full triangle.

``binom`` follows the conventions the polynomial identities need:
binom(m, k) = 0 for k < 0, and the generalized product definition
prod_{j<k}(m - j) / k! for any integer m, so negative upper arguments
are allowed.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass

from .exact_core import MultiPoly, Q

__all__ = [
    "StirlingTable",
    "stirling_table",
    "stirling1",
    "stirling1_unsigned",
    "stirling2",
    "falling_factorial",
    "q_falling_factorial",
    "binom",
]

# Row caches for the two triangles, index n -> row [S(n, 0), ..., S(n, n)].
_S1_ROWS: list[list[int]] = [[1]]
_S2_ROWS: list[list[int]] = [[1]]
_ROWS_LOCK = threading.Lock()


def _extend_rows(max_n: int) -> None:
    with _ROWS_LOCK:
        while len(_S1_ROWS) <= max_n:
            n = len(_S1_ROWS) - 1
            prev1 = _S1_ROWS[n]
            prev2 = _S2_ROWS[n]
            row1 = [0] * (n + 2)
            row2 = [0] * (n + 2)
            for l in range(n + 2):
                above = prev1[l] if l <= n else 0
                left = prev1[l - 1] if l >= 1 else 0
                row1[l] = left - n * above
                above2 = prev2[l] if l <= n else 0
                left2 = prev2[l - 1] if l >= 1 else 0
                row2[l] = l * above2 + left2
            _S1_ROWS.append(row1)
            _S2_ROWS.append(row2)


def _check_indices(n: int, l: int) -> None:
    if n < 0 or l < 0:
        raise ValueError(f"Stirling indices must be non-negative, got ({n}, {l})")
    if l > n:
        raise ValueError(f"Stirling index l={l} exceeds n={n}")


def stirling1(n: int, l: int) -> int:
    """Signed first-kind number: the coefficient of x^l in x(x-1)...(x-n+1)."""
    _check_indices(n, l)
    _extend_rows(n)
    return _S1_ROWS[n][l]


def stirling1_unsigned(n: int, l: int) -> int:
    """Unsigned first-kind number, |S1(n, l)| = (-1)^(n-l) S1(n, l)."""
    return abs(stirling1(n, l))


def stirling2(n: int, l: int) -> int:
    """Second-kind number: the weight of (x)_l in the expansion of x^n."""
    _check_indices(n, l)
    _extend_rows(n)
    return _S2_ROWS[n][l]


@dataclass(frozen=True)
class StirlingTable:
    """A frozen triangular table of one kind, for rendering and bulk access."""

    kind: str  # "first" (signed) or "second"
    max_n: int
    values: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.kind not in ("first", "second"):
            raise ValueError(f"unknown Stirling kind {self.kind!r}")
        if len(self.values) != self.max_n + 1:
            raise ValueError("table must hold rows 0..max_n")


def stirling_table(kind: str, max_n: int) -> StirlingTable:
    """Build the triangle of the given kind up to row ``max_n``."""
    if max_n < 0:
        raise ValueError(f"max_n must be non-negative, got {max_n}")
    if kind not in ("first", "second"):
        raise ValueError(f"unknown Stirling kind {kind!r}")
    _extend_rows(max_n)
    rows = _S1_ROWS if kind == "first" else _S2_ROWS
    values = tuple(tuple(rows[n]) for n in range(max_n + 1))
    return StirlingTable(kind=kind, max_n=max_n, values=values)


def falling_factorial(w: MultiPoly, n: int) -> MultiPoly:
    """The product w (w-1) ... (w-n+1); the empty product (n = 0) is 1."""
    if n < 0:
        raise ValueError(f"falling factorial length must be non-negative, got {n}")
    result = MultiPoly.const(1)
    for j in range(n):
        result = result * (w - j)
    return result


def q_falling_factorial(w: MultiPoly, n: int) -> MultiPoly:
    """The q-deformed product w (w-q) (w-2q) ... (w-(n-1)q)."""
    if n < 0:
        raise ValueError(f"falling factorial length must be non-negative, got {n}")
    result = MultiPoly.const(1)
    for j in range(n):
        result = result * (w - j * Q)
    return result


def binom(m: int, k: int) -> int:
    """Generalized integer binomial coefficient.

    Zero for k < 0.  For k >= 0 this is prod_{j<k}(m - j) / k!, which for
    negative m reduces to (-1)^k * binom(k - m - 1, k) and is always an
    integer.
    """
    if k < 0:
        return 0
    if m >= 0:
        return math.comb(m, k)
    return (-1) ** k * math.comb(k - m - 1, k)
