"""Mechanical audit of the identity catalogue.

Every identity the package implements is registered here as a pair of
builder functions producing exact multivariate polynomials, plus a
parameter grid.  An identity passes when left and right sides agree as
canonical polynomials at every grid point; the first disagreement is
reported with the parameters and the nonzero difference polynomial as a
witness.

Two kinds of entries coexist:

* ``status_expected == "holds"``: identities the package asserts.  Any
  failure here is a bug and makes the suite fail.
* ``status_expected == "printed_variant_under_test"``: variant forms
  (absolute-value Stirling weights, a constant shift entering the
  numerator instead of the argument) that circulate in print but are
  inconsistent with the integral definitions.  The audit documents the
  exact counterexamples; their failure is recorded, not asserted
  against.

Symbolic equality is the verdict; as an internal consistency check of
the polynomial kernel, every symbolically equal pair is additionally
evaluated at a few random rational points drawn from a seeded generator,
so reports are reproducible byte for byte apart from timing fields.
"""

from __future__ import annotations

import json
import math
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, partial
from typing import Callable, Mapping

from .combinatorics import binom, q_falling_factorial, stirling1, stirling1_unsigned, stirling2
from .euler_boole import (
    boole_classical,
    euler_homog,
    euler_lambda_form,
    qboole_first,
    qboole_number,
    qboole_second,
)
from .exact_core import LAM, MultiPoly, Q, X
from .series_engine import TruncSeries, q_binomial_series, series_pow

__all__ = [
    "DEFAULT_SEED",
    "GridProfile",
    "QUICK",
    "FULL",
    "PROFILES",
    "IdentitySpec",
    "Witness",
    "IdentityResult",
    "AuditReport",
    "AuditBuilderError",
    "REGISTRY",
    "get_spec",
    "check_identity",
    "check_number_recurrence",
    "run_suite",
]

DEFAULT_SEED = 101

Params = Mapping[str, int]
GridBuilder = Callable[["GridProfile"], tuple[dict[str, int], ...]]
SideBuilder = Callable[[Params], MultiPoly]


@dataclass(frozen=True)
class GridProfile:
    """Bounds for the parameter grids: degree indices and family order."""

    name: str
    n_max: int
    m_max: int
    alpha_max: int

    def __post_init__(self) -> None:
        if self.n_max < 0 or self.m_max < 0:
            raise ValueError("grid bounds must be non-negative")
        if self.alpha_max < 1:
            raise ValueError("alpha_max must be >= 1")


QUICK = GridProfile("quick", 6, 6, 2)
FULL = GridProfile("full", 12, 12, 3)
PROFILES = {"quick": QUICK, "full": FULL}


class AuditBuilderError(RuntimeError):
    """A side builder raised; carries the identity id and offending parameters."""


@dataclass(frozen=True)
class IdentitySpec:
    """One registered identity: parameter grid plus both side builders."""

    id: str
    description: str
    status_expected: str  # "holds" | "printed_variant_under_test"
    grid: GridBuilder
    lhs: SideBuilder
    rhs: SideBuilder

    def __post_init__(self) -> None:
        if self.status_expected not in ("holds", "printed_variant_under_test"):
            raise ValueError(f"bad status_expected {self.status_expected!r}")


@dataclass(frozen=True)
class Witness:
    """First grid point where the two sides disagree."""

    params: dict[str, int]
    lhs: str
    rhs: str
    difference: str


@dataclass(frozen=True)
class IdentityResult:
    id: str
    status_expected: str
    verdict: str  # "pass" | "fail"
    points_checked: int
    grid: tuple[dict[str, int], ...]
    witness: Witness | None
    millis: float

    @property
    def as_expected(self) -> bool:
        wanted = "pass" if self.status_expected == "holds" else "fail"
        return self.verdict == wanted


@dataclass(frozen=True)
class AuditReport:
    profile: str
    seed: int
    include_printed: bool
    entries: tuple[IdentityResult, ...]

    @property
    def all_asserted_pass(self) -> bool:
        return all(e.verdict == "pass" for e in self.entries if e.status_expected == "holds")

    def to_json_dict(self) -> dict:
        entries = []
        for e in self.entries:
            item: dict = {
                "id": e.id,
                "status_expected": e.status_expected,
                "verdict": e.verdict,
                "points_checked": e.points_checked,
                "grid": [dict(p) for p in e.grid],
                "millis": e.millis,
            }
            if e.witness is not None:
                item["witness"] = {
                    "params": dict(e.witness.params),
                    "lhs": e.witness.lhs,
                    "rhs": e.witness.rhs,
                    "difference": e.witness.difference,
                }
            entries.append(item)
        return {
            "profile": self.profile,
            "seed": self.seed,
            "include_printed": self.include_printed,
            "all_asserted_pass": self.all_asserted_pass,
            "entries": entries,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_json_dict(), indent=indent)

    def to_text(self) -> str:
        width = max(len(e.id) for e in self.entries) if self.entries else 8
        lines = [
            f"identity audit: profile={self.profile} seed={self.seed} "
            f"printed-variants={'included' if self.include_printed else 'excluded'}"
        ]
        header = f"{'identity':<{width}}  {'expected':<28}  {'verdict':<7}  points  millis"
        lines.append(header)
        lines.append("-" * len(header))
        for e in self.entries:
            lines.append(
                f"{e.id:<{width}}  {e.status_expected:<28}  {e.verdict:<7}  "
                f"{e.points_checked:>6}  {e.millis:>8.1f}"
            )
            if e.witness is not None:
                lines.append(f"{'':<{width}}  first counterexample at {e.witness.params}")
                lines.append(f"{'':<{width}}  difference = {e.witness.difference}")
        asserted = [e for e in self.entries if e.status_expected == "holds"]
        ok = sum(1 for e in asserted if e.verdict == "pass")
        lines.append(f"summary: {ok}/{len(asserted)} asserted identities hold")
        return "\n".join(lines)


# -- randomized evaluation cross-check -------------------------------------


def random_rational_assignment(rng: random.Random) -> dict[str, Fraction]:
    """Random point with small rational coordinates; lambda and q nonzero."""

    def draw(nonzero: bool) -> Fraction:
        while True:
            num = rng.randint(-100, 100)
            if nonzero and num == 0:
                continue
            return Fraction(num, rng.randint(1, 100))

    return {"x": draw(False), "lambda": draw(True), "q": draw(True)}


def _consistency_eval(
    spec_id: str,
    params: Params,
    lhs: MultiPoly,
    rhs: MultiPoly,
    rng: random.Random,
    points: int,
) -> None:
    for _ in range(points):
        at = random_rational_assignment(rng)
        if lhs.evaluate(at) != rhs.evaluate(at):
            raise RuntimeError(
                f"identity {spec_id!r} at {dict(params)!r}: sides are equal as "
                f"canonical polynomials but evaluate differently at {at!r}; "
                "the polynomial kernel is inconsistent"
            )


# -- verification driver ---------------------------------------------------


def check_identity(
    spec: IdentitySpec,
    profile: GridProfile = QUICK,
    seed: int = DEFAULT_SEED,
    eval_points: int = 3,
) -> IdentityResult:
    """Compare both sides of one identity over the profile's grid.

    Stops at the first counterexample.  Equal sides are re-evaluated at
    ``eval_points`` random rational points as a kernel self-check.
    """
    start = time.perf_counter()
    grid = tuple(dict(p) for p in spec.grid(profile))
    if not grid:
        raise ValueError(f"identity {spec.id!r}: empty parameter grid for profile {profile.name!r}")
    rng = random.Random(f"{seed}:{spec.id}")
    witness: Witness | None = None
    checked = 0
    for params in grid:
        try:
            lhs = spec.lhs(params)
            rhs = spec.rhs(params)
        except Exception as exc:
            raise AuditBuilderError(
                f"identity {spec.id!r}: builder failed at {dict(params)!r}: {exc}"
            ) from exc
        checked += 1
        if lhs != rhs:
            witness = Witness(dict(params), str(lhs), str(rhs), str(lhs - rhs))
            break
        _consistency_eval(spec.id, params, lhs, rhs, rng, eval_points)
    millis = round((time.perf_counter() - start) * 1000.0, 3)
    verdict = "pass" if witness is None else "fail"
    return IdentityResult(
        spec.id, spec.status_expected, verdict, checked, grid, witness, millis
    )


def run_suite(
    profile: str | GridProfile = "quick",
    include_printed: bool = True,
    seed: int = DEFAULT_SEED,
    workers: int | None = None,
) -> AuditReport:
    """Check every registered identity and assemble the ordered report.

    ``workers`` > 1 fans grid checks out over threads; results are
    collected in registry order either way, so reports are deterministic.
    The default worker count comes from the QBOOLE_WORKERS environment
    variable, falling back to sequential execution.
    """
    if isinstance(profile, GridProfile):
        prof = profile
    else:
        try:
            prof = PROFILES[profile]
        except KeyError:
            raise ValueError(
                f"unknown grid profile {profile!r}; expected one of {sorted(PROFILES)}"
            ) from None
    specs = [s for s in REGISTRY if include_printed or s.status_expected == "holds"]
    if workers is None:
        workers = int(os.environ.get("QBOOLE_WORKERS", "1") or 1)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            entries = tuple(pool.map(partial(check_identity, profile=prof, seed=seed), specs))
    else:
        entries = tuple(check_identity(s, prof, seed) for s in specs)
    return AuditReport(prof.name, seed, include_printed, entries)


def check_number_recurrence(n_max: int) -> IdentityResult:
    """Verify the number-level recurrence for 1 <= n <= n_max.

    After clearing factorials and powers of q, the alternating-sign
    second-kind number equals a binomially weighted sum of first-kind
    numbers; the n = 0 instance is vacuous and excluded by the grid.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    profile = GridProfile("number-recurrence", n_max, n_max, 1)
    return check_identity(get_spec("second-number-recurrence"), profile)


# -- registry --------------------------------------------------------------


def _grid_n(profile: GridProfile, start: int = 0) -> tuple[dict[str, int], ...]:
    return tuple({"n": n} for n in range(start, profile.n_max + 1))


def _grid_n_alpha(
    profile: GridProfile, alpha_start: int = 1
) -> tuple[dict[str, int], ...]:
    return tuple(
        {"n": n, "alpha": a}
        for n in range(profile.n_max + 1)
        for a in range(alpha_start, profile.alpha_max + 1)
    )


def _grid_square(profile: GridProfile) -> tuple[dict[str, int], ...]:
    return tuple(
        {"n": n, "m": m}
        for n in range(profile.n_max + 1)
        for m in range(profile.n_max + 1)
    )


@lru_cache(maxsize=None)
def _denominator_power(alpha: int, order: int) -> TruncSeries:
    return series_pow(q_binomial_series(LAM, order) + 1, alpha)


@lru_cache(maxsize=None)
def _value_series(kind: str, alpha: int, order: int) -> TruncSeries:
    """Exponential generating series rebuilt from the Stirling-route values."""
    fn = qboole_first if kind == "first" else qboole_second
    return TruncSeries(
        [fn(k, alpha) / Fraction(math.factorial(k)) for k in range(order + 1)]
    )


@lru_cache(maxsize=None)
def _gf_product_coefficient(kind: str, alpha: int, n: int) -> MultiPoly:
    """n! times the t^n coefficient of (value series) * (denominator)^alpha."""
    product = _value_series(kind, alpha, n) * _denominator_power(alpha, n)
    return product.coefficient(n) * math.factorial(n)


def _s2_transform(kind: str, m: int, alpha: int) -> MultiPoly:
    """Weighted sum q^(m-n) S2(m,n) over the degree-n family values."""
    fn = qboole_first if kind == "first" else qboole_second
    acc = MultiPoly.zero()
    for n in range(m + 1):
        s2 = stirling2(m, n)
        if s2:
            acc = acc + s2 * Q ** (m - n) * fn(n, alpha)
    return acc


def _abs_stirling_sum(n: int) -> MultiPoly:
    acc = MultiPoly.zero()
    for ell in range(n + 1):
        s1 = stirling1_unsigned(n, ell)
        if s1:
            acc = acc + s1 * Q ** (n - ell) * euler_homog(ell, 1, 1)
    return acc


def _printed_shift_stirling_sum(n: int, alpha: int) -> MultiPoly:
    # Signed weights, but the order shift placed on x instead of x/lambda.
    acc = MultiPoly.zero()
    for ell in range(n + 1):
        s1 = stirling1(n, ell)
        if s1:
            acc = acc + s1 * Q ** (n - ell) * euler_lambda_form(ell, alpha, X + alpha)
    return acc


def _number_recurrence_rhs(n: int) -> MultiPoly:
    acc = MultiPoly.zero()
    for ell in range(n + 1):
        weight = binom(n - 1, ell - 1) * (math.factorial(n) // math.factorial(ell))
        if weight:
            acc = acc + weight * Q ** (n - ell) * qboole_number(ell, "first")
    return acc


def _orthogonality_sum(n: int, m: int) -> MultiPoly:
    return MultiPoly.const(
        sum(stirling1(n, k) * stirling2(k, m) for k in range(m, n + 1))
    )


REGISTRY: tuple[IdentitySpec, ...] = (
    IdentitySpec(
        id="first-gf-product-form",
        description=(
            "first-kind values convolved against the shifted q-binomial "
            "denominator recover twice the q-falling factorial"
        ),
        status_expected="holds",
        grid=_grid_n,
        lhs=lambda p: (
            sum(
                (
                    math.comb(p["n"], k)
                    * qboole_first(k, 1)
                    * q_falling_factorial(LAM, p["n"] - k)
                    for k in range(p["n"] + 1)
                ),
                start=MultiPoly.zero(),
            )
            + qboole_first(p["n"], 1)
        ),
        rhs=lambda p: q_falling_factorial(X, p["n"]) * 2,
    ),
    IdentitySpec(
        id="first-euler-transform",
        description=(
            "homogenized Euler value as the inverse Stirling transform of "
            "the first-kind family"
        ),
        status_expected="holds",
        grid=_grid_n,
        lhs=lambda p: euler_homog(p["n"], 1, 0),
        rhs=lambda p: _s2_transform("first", p["n"], 1),
    ),
    IdentitySpec(
        id="first-stirling-expansion",
        description=(
            "series construction of the first kind agrees with the signed "
            "Stirling expansion into homogenized Euler values"
        ),
        status_expected="holds",
        grid=_grid_n,
        lhs=lambda p: qboole_first(p["n"], 1, "by_series"),
        rhs=lambda p: qboole_first(p["n"], 1, "by_stirling_sum"),
    ),
    IdentitySpec(
        id="q-limit-doubles-classical",
        description="at q = 1 the first-kind family is twice the classical one",
        status_expected="holds",
        grid=_grid_n,
        lhs=lambda p: qboole_first(p["n"], 1).substitute("q", MultiPoly.const(1)),
        rhs=lambda p: boole_classical(p["n"]) * 2,
    ),
    IdentitySpec(
        id="euler-reflection",
        description="reflection: the Euler value at a negated argument",
        status_expected="holds",
        grid=_grid_n,
        lhs=lambda p: euler_lambda_form(p["n"], 1, -X),
        rhs=lambda p: euler_homog(p["n"], 1, 1) * ((-1) ** p["n"]),
    ),
    IdentitySpec(
        id="second-euler-transform",
        description=(
            "inverse Stirling transform of the second-kind family gives the "
            "homogenized Euler value shifted by one"
        ),
        status_expected="holds",
        grid=_grid_n,
        lhs=lambda p: _s2_transform("second", p["n"], 1),
        rhs=lambda p: euler_homog(p["n"], 1, 1),
    ),
    IdentitySpec(
        id="second-stirling-expansion-signed",
        description=(
            "series construction of the second kind agrees with the signed "
            "Stirling expansion at the shifted argument"
        ),
        status_expected="holds",
        grid=_grid_n,
        lhs=lambda p: qboole_second(p["n"], 1, "by_series"),
        rhs=lambda p: qboole_second(p["n"], 1, "by_stirling_sum"),
    ),
    IdentitySpec(
        id="second-stirling-expansion-abs",
        description=(
            "variant with absolute-value Stirling weights; inconsistent with "
            "the integral definition from degree 2 on"
        ),
        status_expected="printed_variant_under_test",
        grid=_grid_n,
        lhs=lambda p: qboole_second(p["n"], 1, "by_series"),
        rhs=lambda p: _abs_stirling_sum(p["n"]),
    ),
    IdentitySpec(
        id="order-first-gf-product-form",
        description=(
            "higher-order first-kind values times the alpha-th power of the "
            "denominator recover 2^alpha times the q-falling factorial"
        ),
        status_expected="holds",
        grid=_grid_n_alpha,
        lhs=lambda p: _gf_product_coefficient("first", p["alpha"], p["n"]),
        rhs=lambda p: q_falling_factorial(X, p["n"]) * 2 ** p["alpha"],
    ),
    IdentitySpec(
        id="order-first-euler-transform",
        description=(
            "inverse Stirling transform of the higher-order first-kind family"
        ),
        status_expected="holds",
        grid=_grid_n_alpha,
        lhs=lambda p: euler_homog(p["n"], p["alpha"], 0),
        rhs=lambda p: _s2_transform("first", p["n"], p["alpha"]),
    ),
    IdentitySpec(
        id="order-first-stirling-expansion",
        description=(
            "construction agreement for the higher-order first kind: series "
            "route versus signed Stirling route"
        ),
        status_expected="holds",
        grid=_grid_n_alpha,
        lhs=lambda p: qboole_first(p["n"], p["alpha"], "by_series"),
        rhs=lambda p: qboole_first(p["n"], p["alpha"], "by_stirling_sum"),
    ),
    IdentitySpec(
        id="euler-reflection-higher-order",
        description=(
            "reflection for higher-order Euler values: negated argument versus "
            "argument shifted by the order"
        ),
        status_expected="holds",
        grid=_grid_n_alpha,
        lhs=lambda p: euler_lambda_form(p["n"], p["alpha"], -X),
        rhs=lambda p: euler_homog(p["n"], p["alpha"], p["alpha"]) * ((-1) ** p["n"]),
    ),
    IdentitySpec(
        id="order-second-gf-lambda-exponent",
        description=(
            "higher-order second-kind values times the denominator power "
            "recover 2^alpha times the q-falling factorial at x + alpha*lambda"
        ),
        status_expected="holds",
        grid=_grid_n_alpha,
        lhs=lambda p: _gf_product_coefficient("second", p["alpha"], p["n"]),
        rhs=lambda p: q_falling_factorial(X + p["alpha"] * LAM, p["n"]) * 2 ** p["alpha"],
    ),
    IdentitySpec(
        id="order-second-stirling-expansion-signed",
        description=(
            "construction agreement for the higher-order second kind: series "
            "route versus signed Stirling route with the order shift on the "
            "argument"
        ),
        status_expected="holds",
        grid=_grid_n_alpha,
        lhs=lambda p: qboole_second(p["n"], p["alpha"], "by_series"),
        rhs=lambda p: qboole_second(p["n"], p["alpha"], "by_stirling_sum"),
    ),
    IdentitySpec(
        id="order-second-euler-transform-shifted",
        description=(
            "inverse Stirling transform of the higher-order second kind gives "
            "the homogenized Euler value shifted by the order"
        ),
        status_expected="holds",
        grid=_grid_n_alpha,
        lhs=lambda p: _s2_transform("second", p["n"], p["alpha"]),
        rhs=lambda p: euler_homog(p["n"], p["alpha"], p["alpha"]),
    ),
    IdentitySpec(
        id="order-second-euler-transform-printed",
        description=(
            "variant placing the order shift on x rather than on the Euler "
            "argument; fails for every order above one once degree reaches one"
        ),
        status_expected="printed_variant_under_test",
        grid=partial(_grid_n_alpha, alpha_start=2),
        lhs=lambda p: _s2_transform("second", p["n"], p["alpha"]),
        rhs=lambda p: euler_lambda_form(p["n"], p["alpha"], X + p["alpha"]),
    ),
    IdentitySpec(
        id="order-second-stirling-expansion-printed",
        description=(
            "signed Stirling expansion of the higher-order second kind with "
            "the order shift on x; same misplacement, same counterexamples"
        ),
        status_expected="printed_variant_under_test",
        grid=partial(_grid_n_alpha, alpha_start=2),
        lhs=lambda p: qboole_second(p["n"], p["alpha"], "by_series"),
        rhs=lambda p: _printed_shift_stirling_sum(p["n"], p["alpha"]),
    ),
    IdentitySpec(
        id="order-second-gf-printed-exponent",
        description=(
            "variant generating function with exponent x + alpha instead of "
            "x + alpha*lambda"
        ),
        status_expected="printed_variant_under_test",
        grid=partial(_grid_n_alpha, alpha_start=2),
        lhs=lambda p: _gf_product_coefficient("second", p["alpha"], p["n"]),
        rhs=lambda p: q_falling_factorial(X + p["alpha"], p["n"]) * 2 ** p["alpha"],
    ),
    IdentitySpec(
        id="second-number-recurrence",
        description=(
            "alternating-sign second-kind numbers as binomially weighted sums "
            "of first-kind numbers, after clearing factorials and q powers"
        ),
        status_expected="holds",
        grid=partial(_grid_n, start=1),
        lhs=lambda p: qboole_number(p["n"], "second") * ((-1) ** p["n"]),
        rhs=lambda p: _number_recurrence_rhs(p["n"]),
    ),
    IdentitySpec(
        id="stirling-orthogonality",
        description="the two Stirling triangles are mutually inverse",
        status_expected="holds",
        grid=_grid_square,
        lhs=lambda p: _orthogonality_sum(p["n"], p["m"]),
        rhs=lambda p: MultiPoly.const(1 if p["n"] == p["m"] else 0),
    ),
)

_BY_ID = {spec.id: spec for spec in REGISTRY}


def get_spec(spec_id: str) -> IdentitySpec:
    try:
        return _BY_ID[spec_id]
    except KeyError:
        raise ValueError(f"no registered identity with id {spec_id!r}") from None
