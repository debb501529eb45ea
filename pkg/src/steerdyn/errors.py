"""Exceptions raised by steerdyn."""


class SteerdynError(Exception):
    """Base class for steerdyn errors."""


class SeriesCapExceededError(SteerdynError, ValueError):
    """A truncated series would need more terms than its hard cap allows."""


class InversionDomainError(SteerdynError, ValueError):
    """Numerical Laplace inversion was requested at a non-positive time."""


class StepTooCoarseError(SteerdynError, RuntimeError):
    """Halving the integrator step moved the solution beyond tolerance."""


class DriftError(SteerdynError, RuntimeError):
    """A conserved quantity of the hierarchy drifted beyond tolerance."""


class ScenarioError(SteerdynError, ValueError):
    """A scenario asks for something its modulator cannot provide."""


class KnobError(ScenarioError):
    """A sweep knob does not apply to the configured modulator."""


class UnknownPresetError(SteerdynError, KeyError):
    """Requested figure preset does not exist."""
