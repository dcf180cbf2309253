"""Computation in finitely generated free adequate semigroups and monoids.

Elements are represented as birooted edge-labelled trees.  The package
provides the formula language, tree evaluation, morphism testing, pruning to
minimal retracts, canonical normal forms, and top-level word-problem and
identity-checking procedures, plus brute-force oracles for all of it.
"""

from .canonical import canonical_formula, canonical_word, evaluate_roundtrip_check
from .errors import (
    AlphabetMismatch,
    BadVertexId,
    BareGroup,
    DanglingUnary,
    EmptyNotAllowed,
    Error,
    FormulaError,
    NoTrunk,
    NotATree,
    OpNotInSignature,
    TreeError,
    UnbalancedParenthesis,
    UnknownSymbol,
)
from .formula import (
    Alphabet,
    Formula,
    Letter,
    Unary,
    UnaryOp,
    concat,
    occurrence_count,
    occurring_letters,
    parse,
    render,
)
from .generate import enumerate_trees, random_formula, random_relabelling, random_tree
from .homomorphism import (
    CandidateSets,
    VertexMorphism,
    candidate_sets,
    exists_morphism,
    exists_morphism_bruteforce,
    extract_morphism,
    is_morphism,
)
from .pruning import (
    PrunedWitness,
    is_pruned,
    minimal_retract_bruteforce,
    prune,
    pruned_plus,
    pruned_product,
    pruned_star,
    pruned_vertex_set,
)
from .solver import (
    DEFAULT_MODE,
    KNOWN_IDENTITIES,
    KNOWN_NON_IDENTITIES,
    Mode,
    Sidedness,
    check_identity,
    ensure_admissible,
    equal,
    is_idempotent,
    normal_form,
)
from .tree import (
    Edge,
    SignedLabel,
    SigmaTree,
    TraversalOrder,
    Trunk,
    base_tree,
    descendants,
    evaluate,
    from_json,
    to_dot,
    to_json,
    traversal,
    trivial_tree,
    trunk,
    unpruned_plus,
    unpruned_product,
    unpruned_star,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "AlphabetMismatch",
    "BadVertexId",
    "BareGroup",
    "CandidateSets",
    "DEFAULT_MODE",
    "DanglingUnary",
    "Edge",
    "EmptyNotAllowed",
    "Error",
    "Formula",
    "FormulaError",
    "KNOWN_IDENTITIES",
    "KNOWN_NON_IDENTITIES",
    "Letter",
    "Mode",
    "NoTrunk",
    "NotATree",
    "OpNotInSignature",
    "PrunedWitness",
    "Sidedness",
    "SignedLabel",
    "SigmaTree",
    "TraversalOrder",
    "TreeError",
    "Trunk",
    "Unary",
    "UnaryOp",
    "UnbalancedParenthesis",
    "UnknownSymbol",
    "VertexMorphism",
    "base_tree",
    "candidate_sets",
    "canonical_formula",
    "canonical_word",
    "check_identity",
    "concat",
    "descendants",
    "ensure_admissible",
    "enumerate_trees",
    "equal",
    "evaluate",
    "evaluate_roundtrip_check",
    "exists_morphism",
    "exists_morphism_bruteforce",
    "extract_morphism",
    "from_json",
    "is_idempotent",
    "is_morphism",
    "is_pruned",
    "minimal_retract_bruteforce",
    "normal_form",
    "occurrence_count",
    "occurring_letters",
    "parse",
    "prune",
    "pruned_plus",
    "pruned_product",
    "pruned_star",
    "pruned_vertex_set",
    "random_formula",
    "random_relabelling",
    "random_tree",
    "render",
    "to_dot",
    "to_json",
    "traversal",
    "trivial_tree",
    "trunk",
    "unpruned_plus",
    "unpruned_product",
    "unpruned_star",
    "validate",
]
