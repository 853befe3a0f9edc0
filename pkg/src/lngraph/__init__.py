"""Constructive cycles and Hamiltonian paths in the line graph L(n) of B(n)."""

from lngraph._accel import backend_name
from lngraph.certificates import CycleCertificate, PathCertificate
from lngraph.chain import CliqueChainPath, ExpansionPlan, allocate_insertions, expand_in_clique, lemma22_path
from lngraph.cycles import cycle_through, pancyclicity_survey
from lngraph.errors import (
    CapacityError,
    ExpansionError,
    InvalidOrderError,
    InvalidVertexError,
    LengthError,
    LnGraphError,
    ParameterError,
    SameCliqueError,
    SameVertexError,
    SearchBudgetExceeded,
    UnsupportedOrderError,
)
from lngraph.graph import (
    DEFAULT_N_CAP,
    BnGraph,
    BnVertex,
    GraphMetrics,
    LnGraph,
    Vertex,
    bridge,
    build_bn,
    build_ln,
    clique_of,
    companion_clique,
    line_graph,
    metrics,
    to_dot,
    to_edgelist,
)
from lngraph.hamilton import hamilton_path, hamilton_survey
from lngraph.oracle import (
    SurveyReport,
    VerificationResult,
    annihilating_product,
    check_spectrum,
    cross_validate_line_graph,
    edge_cycle_membership,
    exists_cycle_of_length_through,
    exists_path_of_length,
    negatives_survey,
    spectrum_survey,
    verify_cycle,
    verify_path,
)

__version__ = "0.1.0"
