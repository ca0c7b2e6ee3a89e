"""Associated primes of powers of monomial ideals and of their sums."""

__version__ = "0.1.0"

from .core import (  # noqa: E402
    Monomial,
    MonomialIdeal,
    PrimeSupport,
    Ring,
    colon,
    colon_ideal,
    contains,
    hilbert_count,
    intersect,
    join_rings,
    lift,
    minimalize,
    multiply,
    power,
    sum_disjoint,
)
from .ass import (  # noqa: E402
    ass_module,
    ass_profile,
    ass_ring_quotient,
    irreducible_decomposition,
    union_ass_check,
)
from .errors import AssPrimeError  # noqa: E402

__all__ = [
    "AssPrimeError", "Monomial", "MonomialIdeal", "PrimeSupport", "Ring",
    "ass_module", "ass_profile", "ass_ring_quotient", "colon", "colon_ideal",
    "contains", "hilbert_count", "intersect", "irreducible_decomposition",
    "join_rings", "lift", "minimalize", "multiply", "power", "sum_disjoint",
    "union_ass_check",
]
