"""Exact q-deformed Boole polynomial families with a mechanical identity audit.

The package builds Euler, classical Boole, and q-deformed Boole
polynomials (both kinds, any positive order) over exact rationals, each
by two independent routes, verifies the identity catalogue symbolically,
and cross-checks the integral representations with a p-adic oracle.
"""

from __future__ import annotations

from .combinatorics import (
    StirlingTable,
    binom,
    falling_factorial,
    q_falling_factorial,
    stirling1,
    stirling1_unsigned,
    stirling2,
    stirling_table,
)
from .euler_boole import (
    CONSTRUCTIONS,
    FAMILIES,
    FamilyId,
    PolyFamilyValue,
    boole_classical,
    build_family_value,
    euler_homog,
    euler_lambda_form,
    euler_poly,
    family_polynomial,
    qboole_first,
    qboole_number,
    qboole_second,
)
from .exact_core import (
    LAM,
    ONE,
    Q,
    VARIABLES,
    X,
    ZERO,
    MultiPoly,
    Rational,
    poly_add,
    poly_eval,
    poly_mul,
    poly_substitute,
)
from .identity_audit import (
    DEFAULT_SEED,
    FULL,
    PROFILES,
    QUICK,
    REGISTRY,
    AuditBuilderError,
    AuditReport,
    GridProfile,
    IdentityResult,
    IdentitySpec,
    Witness,
    check_identity,
    check_number_recurrence,
    get_spec,
    random_rational_assignment,
    run_suite,
)
from .padic_oracle import (
    IntegerPoly,
    PadicValue,
    TranslationResult,
    WittResult,
    fermionic_partial_sum,
    translation_check,
    witt_check,
)
from .series_engine import (
    DEFAULT_ORDER,
    TruncSeries,
    binomial_series_classical,
    exp_linear,
    q_binomial_series,
    series_inv,
    series_mul,
    series_pow,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # exact_core
    "MultiPoly",
    "Rational",
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
    # series_engine
    "TruncSeries",
    "DEFAULT_ORDER",
    "series_mul",
    "series_inv",
    "series_pow",
    "exp_linear",
    "q_binomial_series",
    "binomial_series_classical",
    # combinatorics
    "StirlingTable",
    "stirling_table",
    "stirling1",
    "stirling1_unsigned",
    "stirling2",
    "falling_factorial",
    "q_falling_factorial",
    "binom",
    # euler_boole
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
    # identity_audit
    "GridProfile",
    "QUICK",
    "FULL",
    "PROFILES",
    "DEFAULT_SEED",
    "IdentitySpec",
    "Witness",
    "IdentityResult",
    "AuditReport",
    "AuditBuilderError",
    "REGISTRY",
    "get_spec",
    "check_identity",
    "check_number_recurrence",
    "random_rational_assignment",
    "run_suite",
    # padic_oracle
    "PadicValue",
    "IntegerPoly",
    "fermionic_partial_sum",
    "witt_check",
    "WittResult",
    "translation_check",
    "TranslationResult",
]
