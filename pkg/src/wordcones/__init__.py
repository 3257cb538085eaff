"""Exact computation in free ordered monoids over finite ordered alphabets.

Core objects: alphabets (finite posets of letters), words under the
Higman ordering, upward/downward-closed sets represented by their finite
extremal antichains, the Galois cone operators realizing the MacNeille
completion, the syntactic closure rules on upper sets, and the
application deciding whether an oriented graph embeds isometrically into
a product of zigzags.
"""

from .automata import (
    Dfa,
    complement_dfa,
    cone_dfa,
    includes,
    intersect_dfa,
    minimal_words,
    minimize,
    rule_violation,
    union_dfa,
    upset_dfa,
)
from .cones import (
    Antichain,
    LowerSet,
    UpperSet,
    closed_union,
    closure_down,
    closure_up,
    intersect_upper,
    is_closed_lower,
    is_closed_upper,
    lower_cone,
    max_antichain,
    min_antichain,
    product,
    set_from_json,
    set_to_json,
    upper_cone,
)
from .errors import (
    AlphabetMismatch,
    CycleError,
    DoubleArcError,
    DuplicateLetterError,
    HypothesisViolated,
    LoopError,
    NotUpwardClosed,
    RuleInapplicable,
    SideConditionViolated,
    UnknownLetter,
    UnknownVertex,
    WordConesError,
)
from .graphs import (
    ZIGZAG_ALPHABET,
    DistanceTable,
    EmbeddabilityReport,
    OrientedGraph,
    build_distance_table,
    code_zigzag,
    distance_antichain,
    distance_dfa,
    distance_lower_cone,
    embeddable_verdict,
    graph_from_json,
    is_distance_closed,
    reverse_code,
    validate_graph,
)
from .kernels import BACKEND as KERNEL_BACKEND
from .poset import (
    Alphabet,
    AlphabetClass,
    alphabet_from_json,
    classify,
    compatible,
    is_conditional_lattice,
    join_letter,
    leq_letter,
    meet_letter,
    upper_bounds,
    validate_alphabet,
)
from .rules import (
    RULES_BASE,
    RULES_DERIVED,
    ClosureReport,
    TraceStep,
    apply_rule_instance,
    closedness_decision,
    compound_violation,
    conjecture_search,
    decision_rules,
    is_stable,
    stable_closure,
)
from .words import Word, concat, enumerate_words, higman_leq, sort_words, strictly_less

__version__ = "0.1.0"
