"""Binary de Bruijn sequences from successor rules on the pure run-length
register: generators, cycle-structure tools, and independent validators."""

from .canonical import is_conecklace, is_necklace
from .core import (
    RunLengthEncoding,
    State,
    ZeroStateError,
    companion,
    complement,
    conjugate,
    lambda_rotate,
    left_shift,
    run_length_encode,
    theta_rotate,
    weight,
)
from .jointree import (
    CycleTree,
    NotPairedError,
    NotSpanningError,
    TreeEdge,
    ValidationReport,
    extract_tree,
    verify_critical_set,
)
from .oracle import (
    FamilyEntry,
    FamilyReport,
    LengthMismatchError,
    NotDeBruijnError,
    all_specs,
    canonical_form,
    enumerate_family,
    family_size,
    family_union,
    find_repeated_window,
    is_de_bruijn,
    lcm_range,
)
from .registers import (
    Cycle,
    CycleCounts,
    CycleKind,
    CycleStructure,
    OrderOutOfRangeError,
    ccr_next_bit,
    classify_state,
    count_cycles,
    decompose,
    pcr_next_bit,
    prr_next_bit,
)
from .rules import (
    InvalidSpecError,
    RuleKind,
    RuleSpec,
    SequenceRecord,
    SpecSyntaxError,
    exponent_period,
    generate,
    generate_sequence,
    in_critical_set,
    in_critical_set_psi1,
    in_critical_set_psi2,
    in_critical_set_sala,
    in_critical_set_upsilon1,
    in_critical_set_upsilon2,
    next_bit,
    next_state,
    psi_critical_predicate,
    upsilon_critical_predicate,
)

__version__ = "0.1.0"

__all__ = [
    "Cycle",
    "CycleCounts",
    "CycleKind",
    "CycleStructure",
    "CycleTree",
    "FamilyEntry",
    "FamilyReport",
    "InvalidSpecError",
    "LengthMismatchError",
    "NotDeBruijnError",
    "NotPairedError",
    "NotSpanningError",
    "OrderOutOfRangeError",
    "RuleKind",
    "RuleSpec",
    "RunLengthEncoding",
    "SequenceRecord",
    "SpecSyntaxError",
    "State",
    "TreeEdge",
    "ValidationReport",
    "ZeroStateError",
    "all_specs",
    "canonical_form",
    "ccr_next_bit",
    "classify_state",
    "companion",
    "complement",
    "conjugate",
    "count_cycles",
    "decompose",
    "enumerate_family",
    "exponent_period",
    "extract_tree",
    "family_size",
    "family_union",
    "find_repeated_window",
    "generate",
    "generate_sequence",
    "in_critical_set",
    "in_critical_set_psi1",
    "in_critical_set_psi2",
    "in_critical_set_sala",
    "in_critical_set_upsilon1",
    "in_critical_set_upsilon2",
    "is_conecklace",
    "is_de_bruijn",
    "is_necklace",
    "lambda_rotate",
    "lcm_range",
    "left_shift",
    "next_bit",
    "next_state",
    "pcr_next_bit",
    "prr_next_bit",
    "psi_critical_predicate",
    "run_length_encode",
    "theta_rotate",
    "upsilon_critical_predicate",
    "verify_critical_set",
    "weight",
]
