"""Polaron master equation: exponential-sum solver, closed form and rates."""

from .closed_form import closed_form_P_lambda0, closed_form_trace
from .kernel import (
    ExpSumKernel,
    expsum_bare,
    expsum_for,
    expsum_multimode,
    expsum_single_mode,
)
from .rates import (
    cross_check,
    dephasing_rate,
    dephasing_time,
    exp_approx_trace,
    rate_curve,
    relaxation_rate,
    relaxation_time,
)
from .volterra import default_step, generator, rk4_step_matrix, volterra_solve

__all__ = [
    "closed_form_P_lambda0",
    "closed_form_trace",
    "ExpSumKernel",
    "expsum_bare",
    "expsum_for",
    "expsum_multimode",
    "expsum_single_mode",
    "cross_check",
    "dephasing_rate",
    "dephasing_time",
    "exp_approx_trace",
    "rate_curve",
    "relaxation_rate",
    "relaxation_time",
    "default_step",
    "generator",
    "rk4_step_matrix",
    "volterra_solve",
]
