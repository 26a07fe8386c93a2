"""Verification, classification, and enumeration of extremal vertex sets in
Doob graphs D(m,n): maximum independent sets (distance-2 MDS codes), maximum
edge-boundary sets (2xMDS codes), latin colorings, and the related equitable
partitions."""

from doobcodes.graphs import (
    CapExceededError,
    DoobError,
    DoobParams,
    FormatError,
    ParamsMismatchError,
    Vertex,
    VertexSet,
    adjacent,
    eigenvalue_list,
    k4_adjacent,
    k4_fibers,
    neighbor_masks,
    sh_adjacent,
    sh_fibers,
    verify_spectrum,
)
from doobcodes.codes import (
    InvalidCodeError,
    LatinColoring,
    MdsCode,
    NotBipartiteError,
    TwoMdsCode,
    complement_code,
    components,
    coloring_from_mds,
    edge_boundary_size,
    graph_of_coloring,
    is_bipartite_two_mds,
    is_halving_set,
    is_mds,
    is_two_mds,
    mds_codes_within,
)
from doobcodes.structure import (
    Classification,
    Decomposition,
    DecompositionError,
    ReducibleWitness,
    TheoremFalsificationError,
    canonical_decomposition,
    classify,
    enumerate_linear,
    interaction_graph,
    is_linear,
    is_reducible,
    is_semilinear,
)
from doobcodes.partitions import (
    DistancePartition,
    ExtremalTag,
    PartitionError,
    QuotientMatrix2,
    check_extremal_partition,
    distance_partition,
    find_intermediate_base,
    intermediate_partition,
    is_completely_regular,
    matrix_eigenvalues,
    quotient_matrix,
)
from doobcodes.symmetry import (
    AutGenerators,
    EquivalenceClasses,
    aut_generators,
    reduce_to_classes,
)
from doobcodes.enumeration import (
    SearchSpec,
    enumerate_codes,
    enumerate_latin,
    enumerate_mds,
    enumerate_two_mds,
    verify_key_proposition_on,
    verify_theorem_on,
)
from doobcodes.kernels import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"
