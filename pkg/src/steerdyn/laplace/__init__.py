"""Laplace-domain kernels and Zakian inversion."""

from .kernel import (
    LaplaceKernel,
    Transform,
    kernel_bare,
    kernel_for,
    kernel_multimode,
    kernel_single_mode,
    resolvent,
)
from .trace import population_trace_laplace
from .zakian import ZAKIAN_NODES, ZAKIAN_WEIGHTS, zakian_invert

__all__ = [
    "LaplaceKernel",
    "Transform",
    "kernel_bare",
    "kernel_for",
    "kernel_multimode",
    "kernel_single_mode",
    "resolvent",
    "population_trace_laplace",
    "ZAKIAN_NODES",
    "ZAKIAN_WEIGHTS",
    "zakian_invert",
]
