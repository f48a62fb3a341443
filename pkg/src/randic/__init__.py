"""Randic matrices, exact characteristic polynomials, spectra and energies
of named graph families, with a three-way cross-check harness."""

__version__ = "0.1.0"

from .errors import (
    ConvergenceError,
    DomainError,
    EdgeNotFoundError,
    UnsupportedFamilyError,
)
from .graphs import (
    FAMILIES,
    FamilySpec,
    Graph,
    delete_edge,
    disjoint_union,
    format_edge_list,
    generate,
    is_bipartite,
    is_connected,
    parse_edge_list,
    permute_vertices,
)
from .ratpoly import RatPoly, format_poly
from .spectral import (
    Spectrum,
    SymMatrix,
    adjacency_matrix,
    charpoly_exact,
    eigenvalues,
    graph_energy,
    randic_energy,
    randic_index,
    randic_matrix,
)
from .closed_forms import (
    ClosedForm,
    cheb_u,
    closed_charpoly,
    closed_energy,
    closed_form,
    lambda_poly,
    path_graph_energy,
    small_case_charpoly,
)
from .verify import (
    Report,
    VerdictRecord,
    check_edge_deletion_lemmas,
    check_union_additivity,
    integer_energy_witnesses,
    sweep_specs,
    verify_all,
    verify_instance,
)

__all__ = [
    "__version__",
    "ConvergenceError",
    "DomainError",
    "EdgeNotFoundError",
    "UnsupportedFamilyError",
    "FAMILIES",
    "FamilySpec",
    "Graph",
    "delete_edge",
    "disjoint_union",
    "format_edge_list",
    "generate",
    "is_bipartite",
    "is_connected",
    "parse_edge_list",
    "permute_vertices",
    "RatPoly",
    "format_poly",
    "Spectrum",
    "SymMatrix",
    "adjacency_matrix",
    "charpoly_exact",
    "eigenvalues",
    "graph_energy",
    "randic_energy",
    "randic_index",
    "randic_matrix",
    "ClosedForm",
    "cheb_u",
    "closed_charpoly",
    "closed_energy",
    "closed_form",
    "lambda_poly",
    "path_graph_energy",
    "small_case_charpoly",
    "Report",
    "VerdictRecord",
    "check_edge_deletion_lemmas",
    "check_union_additivity",
    "integer_energy_witnesses",
    "sweep_specs",
    "verify_all",
    "verify_instance",
]
