"""Signed graph spectra, exact eigenvalue multiplicities and girth bound checks."""

from .core import (
    AcyclicGraph,
    BalanceClass,
    BalanceKind,
    CycleWitness,
    DisconnectedGraph,
    GraphError,
    SignedGraph,
    SwitchingFunction,
    ValidationError,
    balance_class,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    cycle_sign,
    girth,
    induced_subgraph,
    is_complete,
    is_complete_bipartite,
    path_graph,
    switch,
    switching_equivalent,
    validate,
)
from .linalg import (
    MultiplicityCluster,
    Spectrum,
    adjacency,
    cluster,
    eigen_symmetric,
    graph_spectrum,
    interlace_check,
    multiplicity_exact,
    rank_exact,
)
from .theorems import (
    BoundReport,
    Case,
    CounterexampleCertificate,
    ExtremalVerdict,
    bound_report,
    check_cycle_theorems,
    check_rank2_lemma,
    check_theorem1,
    classify_extremal,
)
from .sweep import EnumConfig, EnumReport, enumerate_signatures, enumerate_underlying, run_sweep

__version__ = "0.1.0"
