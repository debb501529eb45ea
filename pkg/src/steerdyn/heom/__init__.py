"""Hierarchical equations of motion for the TLS-oscillator system."""

from .config import AdoIndex, ExponentOrder, HeomConfig, ado_position, enumerate_ados
from .evolve import (
    ConvergenceReport,
    HeomResult,
    converge_hierarchy,
    convergence_check,
    embed_state,
    heom_evolve,
    initial_state,
    reduced_state,
    weak_coupling_alpha,
)
from .hamiltonian import (
    SIGMA_X,
    SIGMA_Z,
    annihilation,
    build_hsa,
    correlation_function,
    tls_operator,
)
from .hierarchy import Hierarchy, HierarchyState, heom_rhs

__all__ = [
    "AdoIndex",
    "ExponentOrder",
    "HeomConfig",
    "ado_position",
    "enumerate_ados",
    "ConvergenceReport",
    "HeomResult",
    "converge_hierarchy",
    "convergence_check",
    "embed_state",
    "heom_evolve",
    "initial_state",
    "reduced_state",
    "weak_coupling_alpha",
    "SIGMA_X",
    "SIGMA_Z",
    "annihilation",
    "build_hsa",
    "correlation_function",
    "tls_operator",
    "Hierarchy",
    "HierarchyState",
    "heom_rhs",
]
