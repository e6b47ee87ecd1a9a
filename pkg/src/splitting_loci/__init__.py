"""k-cores, splitting types of line bundles on k-gonal chains of loops,
and the tableau combinatorics that counts and connects their tori."""

from .core_partition import (
    EMPTY,
    Partition,
    c_vector,
    corners,
    diagonal,
    downward_displacement,
    is_k_core,
    rho_k,
    satisfies_k_descent,
    transpose,
    upward_displacement,
)
from .errors import (
    ComparisonUndefined,
    DomainError,
    EmptyStaircase,
    GuardExceeded,
    NoInsideCorner,
    UnsupportedShape,
    WrongRegime,
)
from .poset import build_hasse, count_maximal_chains, cvec_downward, enumerate_maximal_chains
from .splitting import SplittingType, c_vector_of_mu, degree, lambda_of_mu, magnitude
from .tableaux import Tableau, enumerate_k_uniform, is_k_saturated, is_k_uniform, phi, saturate
from .tropical import (
    ChainOfLoops,
    Torus,
    connectivity_check,
    locus_cardinality,
    locus_dimension,
    splitting_locus,
    torus_contains,
    torus_from_tableau,
)

__version__ = "0.1.0"
