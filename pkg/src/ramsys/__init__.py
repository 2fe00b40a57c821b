"""Exact counting and enumeration of isomorphism classes of ramification
systems with characters over symmetric groups S_n (n ≠ 6), with a
brute-force verification engine for small n."""

from .centralizer import (
    AbelianInvariants,
    WreathElement,
    abelianization_invariants,
    gamma,
    wreath_compose,
    wreath_decompose,
    wreath_identity,
    wreath_inverse,
    wreath_multiply,
)
from .combinat import (
    StirlingTable,
    binomial,
    multiset_coefficient,
    stirling_first,
    weak_compositions,
)
from .counting import (
    Ramification,
    RamificationParseError,
    RSCTypeVector,
    UnsupportedGroupError,
    count_report,
    count_rsc,
    count_rsc_stirling,
    enumerate_types,
    parse_ramification,
)
from .perm import (
    Cycle,
    CycleType,
    Permutation,
    canonical_representative,
    centralizer_membership,
    centralizer_order,
    class_size,
    compose,
    conjugate,
    cycle_count,
    cycle_decomposition,
    cycle_string,
    cycle_type,
    enumerate_cycle_types,
    inverse,
    support_blocks,
)

__all__ = [
    "AbelianInvariants",
    "Cycle",
    "CycleType",
    "Permutation",
    "Ramification",
    "RamificationParseError",
    "RSCTypeVector",
    "StirlingTable",
    "UnsupportedGroupError",
    "WreathElement",
    "abelianization_invariants",
    "binomial",
    "canonical_representative",
    "centralizer_membership",
    "centralizer_order",
    "class_size",
    "compose",
    "conjugate",
    "count_report",
    "count_rsc",
    "count_rsc_stirling",
    "cycle_count",
    "cycle_decomposition",
    "cycle_string",
    "cycle_type",
    "enumerate_cycle_types",
    "enumerate_types",
    "gamma",
    "inverse",
    "multiset_coefficient",
    "parse_ramification",
    "stirling_first",
    "support_blocks",
    "weak_compositions",
    "wreath_compose",
    "wreath_decompose",
    "wreath_identity",
    "wreath_inverse",
    "wreath_multiply",
]
