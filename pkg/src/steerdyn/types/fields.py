"""Enumerated field values."""

from enum import StrEnum


class SolverTag(StrEnum):
    """Provenance of a population trace."""

    laplace = "laplace"
    volterra = "volterra"
    closed_form = "closed_form"
    heom = "heom"
    exp_approx = "exp_approx"


class SolverChoice(StrEnum):
    """Solvers a scenario may request."""

    laplace = "laplace"
    volterra = "volterra"
    closed_form = "closed_form"
    heom = "heom"
    all = "all"


class KernelFamily(StrEnum):
    """Memory-kernel families."""

    single_mode = "single_mode"
    multimode = "multimode"
    bare = "bare"


class Knob(StrEnum):
    """Sweepable scenario parameters."""

    ho_lambda = "lambda"
    reservoir_lambda = "Lambda"
    alpha = "alpha"
