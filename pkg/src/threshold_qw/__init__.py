"""Continuous-time quantum walks on threshold graphs: exact spectra, perfect
state transfer, and missing link/node detection."""

from .oracle import ConvergenceError, EigenDecomposition, eigh, expm_hermitian, max_abs_diff
from .threshold import (
    BlockForm,
    CreationSequence,
    DisconnectedError,
    Graph,
    ParseError,
    block_form_to_graph,
    conjugate_spectrum,
    creation_to_block_form,
    degree_sequence,
    delete_vertex_block_form,
    laplacian,
    parse_creation_sequence,
    recognize_threshold,
)
from .spectral import (
    Propagator,
    ThresholdSpectralSystem,
    build_spectral_system,
    fidelity,
    offdiag_entry,
    propagator,
)
from .pst import PstCertificate, offdiag_upper_bound, pst_certificate, scan_unit_modulus
from .links import detect_missing_edge, detect_missing_matching, evolve_and_measure, step_budgets
from .nodes import last_block_deletion_modulus, lemma_cos_maxmin, node_deletion_bound

__version__ = "0.1.0"
