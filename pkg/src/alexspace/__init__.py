"""Decision procedures and exhaustive verification for finite topological spaces."""

from .enumeration import (
    CanonicalForm,
    EnumerationStream,
    canonical_form,
    count_topologies,
    enumerate_topologies,
    is_homeomorphic,
    random_space,
)
from .errors import *  # noqa: F401,F403
from .harness import (
    CheckReport,
    RunConfig,
    Witness,
    check_observation2_product,
    check_observation2_subspace,
    check_proposition1,
    check_scattered_ideal,
    check_theorem1,
    run_lemma_suite,
    run_suite,
    search,
    theorem1_witness,
)
from .operators import (
    OperatorResult,
    apply_operator,
    closure,
    consolidation,
    derived_set,
    interior,
    isolated_points,
    open_screen,
)
from .predicates import (
    SetPredicateKind,
    SpacePredicateKind,
    beta_open_direct,
    fenestration,
    is_alpha_scattered,
    is_scattered,
    set_predicate,
    space_predicate,
)
from .expr import parse_pred_expr, pretty
from .space import (
    OpenFamily,
    PointSet,
    Space,
    generate_topology,
    khalimsky_window,
    new_space,
    open_sets,
    parse_space,
    product,
    serialize_space,
    subspace,
)

__version__ = "0.1.0"
