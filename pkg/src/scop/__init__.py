"""State-context-property (SCOP) systems and their orthocomplemented lattices."""

from .completion import Completion, Cut, dedekind_macneille
from .core import (
    EPS,
    Context,
    OutcomeDistribution,
    Property,
    Scop,
    State,
    actual_property_set,
    apply_context,
    cartan_map,
    closure,
    context_join,
    context_leq,
    context_meet,
    is_eigenstate,
    is_superposition_state,
    lambda_map,
    property_closure,
    property_leq,
    property_weight,
    transition_probability,
)
from .errors import (
    DegenerateColumnError,
    DomainError,
    InputError,
    NoUniqueBound,
    RatingParseError,
    ScopError,
    StructureError,
    UnknownIdentifierError,
)
from .ingest import (
    RatingTable,
    build_scop,
    parse_rating_table,
    pet_scop,
    rank_exemplars,
    ratings_to_frequencies,
    ratings_to_weights,
)
from .lattice import (
    OrthoPoset,
    VerificationReport,
    atoms,
    export_poset,
    generate_context_lattice,
    is_lattice,
    join,
    meet,
    orthocomplement,
    poset_leq,
    verify_axioms,
)
from .stats import TTestResult, paired_t_test
from .terms import OrthoTerm, canonical, parse_term

__version__ = "0.1.0"
