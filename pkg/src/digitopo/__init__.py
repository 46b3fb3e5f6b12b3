"""Digital topology on finite graphs: contractibility, simple-pair transformations,
digital sphere and manifold recognition, separation, and simple connectedness."""

__version__ = "0.1.0"

from .errors import (
    BudgetExceededError,
    CapExceededError,
    DigitalTopologyError,
    InconsistencyError,
    KeyMismatchError,
    NotAnEdgeError,
    PreconditionError,
    ReplayError,
    UnknownVertexError,
)
from .space import (
    DigitalSpace,
    ball,
    canonical_key,
    components,
    induced,
    is_connected,
    join,
    rim,
)
from .certificate import Certificate, TransformStep
from .verdict import Verdict
from .homotopy import (
    apply_step,
    is_contractible,
    is_simple_edge,
    is_simple_point,
    reduce_onto,
    replay,
    simple_points,
)
from .pairs import (
    PairContraction,
    SplitSpec,
    contract_pair,
    is_simple_pair,
    random_split,
    simple_pairs,
    split_point,
)
from .recognizers import (
    DiskDecomposition,
    SphereCertificate,
    disk_decomposition,
    is_minimal_n_sphere,
    is_n_disk,
    is_n_manifold,
    is_n_sphere,
    manifold_with_boundary,
    verify_sphere_certificate,
)
from .separation import (
    MultiSplit,
    Separation,
    equator_separation,
    manifold_separation_check,
    separate,
    verify_sphere_separation,
)
from .simply_connected import (
    SearchLimits,
    enumerate_simple_closed_curves,
    find_spanning_disk,
    is_locally_simply_connected,
    is_simply_connected,
)
from .invariants import HomologyProfile, betti_gf2, clique_vector, euler_characteristic, profile
from .generators import (
    GeneratorRecipe,
    cycle,
    enumerate_connected_graphs,
    minimal_sphere,
    random_sphere,
    torus_grid,
)
from .io import GraphDocument, GraphParseError, emit_graph, parse_graph
