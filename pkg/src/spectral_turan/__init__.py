"""Desk-scale verification toolkit for spectral extremal graph theory.

Constructs Turan-type extremal graphs and their closed-form invariants,
computes spectral functionals (radii, Perron vectors, coronals, join
radii), and certifies the extremality statements connecting them by
exhaustive enumeration and randomized campaigns.
"""

__version__ = "0.1.0"

from .families import (
    ConvexityResult,
    FamilyWitness,
    TuranParams,
    convexity_oracle,
    enumerate_family,
    enumerate_regular,
    family_membership,
    secular_radius,
    turan_graph,
    turan_params,
)
from .graph6 import Graph6Error, graph6_decode, graph6_encode
from .graphs import (
    Graph,
    GraphError,
    build_graph,
    clique_number,
    complement,
    complete_graph,
    connected_components,
    cycle_graph,
    edge_mask,
    empty_graph,
    from_edge_mask,
    induced_neighborhood,
    induced_subgraph,
    is_isomorphic,
    join,
    k_fold_join,
    path_graph,
)
from .harness import (
    Report,
    SplitMix64,
    SuiteConfig,
    SuiteConfigError,
    THEOREM_IDS,
    TheoremResult,
    enumerate_labeled_graphs,
    extremal_search,
    random_graph,
    run_suite,
)
from .spectra import (
    PerronVector,
    QuotientMatrix,
    SpectraError,
    Spectrum,
    coronal,
    jacobi_eigh,
    join_radius_cap,
    join_radius_root,
    least_eigenvalue,
    perron_vector,
    power_iteration_radius,
    quotient_matrix,
    spectral_radius,
    spectrum,
    symmetrization_gap,
)
from .verifiers import (
    ComplementProfile,
    JoinContext,
    Verdict,
    complement_profile,
    verify_clique_bound,
    verify_coronal_bound,
    verify_edge_to_spectral,
    verify_family_join_equality,
    verify_family_local,
    verify_guiduli,
    verify_join_preservation,
    verify_kfold_join,
    verify_rayleigh_identity,
    verify_regular_join_monotonicity,
    verify_spectral_turan,
    verify_turan_quotient,
)
