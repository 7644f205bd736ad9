"""gchom: exact cohomology of decorated graph complexes.

Three families of differential graded Lie algebras built from connected
decorated graphs (with tadpoles, without, and extended by the nilpotent
pairing-preserving endomorphisms), their Chevalley-Eilenberg complexes, the
large-genus stable invariant complexes with two edge colors, and the exact
linear algebra, representation theory and Lie-model machinery needed to
verify the low-weight cohomology tables, vanishing and concentration
statements, kappa-class computations, and Koszul duality dimension
identities.
"""

from .cgamma import CoreGraph, build_cgamma, cgamma_homology_dims
from .enumeration import (
    ChainBasis,
    ComplexSpec,
    Limits,
    ResourceLimitError,
    StableSpec,
    enumerate_basis,
    enumerate_ce,
    enumerate_connected,
    enumerate_stable,
)
from .differential import assemble, differential, stable_differential
from .graphs import (
    CROSS,
    OMEGA,
    CanonicalClass,
    DecoratedGraph,
    canonical_form,
    decode,
    encode,
    grading_of,
    is_admissible,
    orientation_sign,
)
from .homology import (
    ce_dims_from_connected,
    cohomology_dims,
    stable_cohomology_dims,
    tadpole_ideal_report,
)
from .liemodels import (
    QuadraticPresentation,
    free_lie_dims,
    free_lie_quotient_dims,
    koszul_identity_check,
    pbw_hilbert_series,
    w_model_dims,
    wgfr_dims,
)
from .linalg import DimReport, RankResult, SparseIntMatrix, rank_exact, rank_modp
from .reptheory import (
    O,
    SP,
    decompose,
    chain_character,
    equivariant_euler,
    invariant_dim,
    matching_count,
    weyl_dim,
)
from .stable import TwoColoredGraph, canonical_form_stable
from .verify import SCENARIOS, run

__version__ = "0.1.0"
