"""Exact computational commutative algebra: Groebner bases, monomial
primary decomposition, and mechanical checks of compatibility,
independence/openness, Artin-Rees numbers and linear growth."""

from .polyring import (
    GREVLEX,
    LEX,
    Monomial,
    Polynomial,
    RingContext,
    mono_lcm,
)
from .groebner import (
    BudgetExceededError,
    Ideal,
    groebner_basis,
    ideal,
    ideal_equal,
    is_member,
    normal_form,
)
from .idealops import (
    eliminate,
    ideal_power,
    ideal_product,
    ideal_sum,
    intersect,
    quotient,
    saturate,
)
from .monomial import (
    MonomialIdeal,
    MonomialPrime,
    PrimaryDecomposition,
    associated_primes,
    irreducible_decomposition,
    is_primary,
    lambda_candidates,
    primary_decomposition,
)
from .theoremlab import (
    ARReport,
    GrowthReport,
    ar_number,
    canonical_qx,
    check_compatibility,
    check_independence,
    is_open_subset,
    linear_growth_experiment,
    min_power_for_primary,
    thm33_identity_check,
)
from .parser import ParseError, format_ideal, parse_ideal

__version__ = "0.1.0"
