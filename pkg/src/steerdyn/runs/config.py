"""Scenario configuration."""

from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..core import (
    DEFAULT_CAP,
    DEFAULT_TOL,
    HOMod,
    LorentzBath,
    Modulator,
    NoMod,
    ReservoirMod,
    TimeGrid,
    require_positive,
)
from ..heom import ExponentOrder
from ..types import Knob, SolverChoice

DEFAULT_GRID = TimeGrid(t_start=0.0, t_end=2.0, n_points=401)

ConvergenceMode = Literal["off", "check", "ladder"]


class HeomSettings(BaseModel):
    """
    Hierarchy settings of a scenario.

    Attributes
    ----------
    fock_dim
        Oscillator Fock-space truncation.
    ell_c
        Hierarchy depth.
    dt
        Integrator step; None selects the configuration default.
    omega0
        Oscillator frequency used when the scenario has no oscillator.
    exponent_order
        Pairing of bath exponents with the hierarchy couplings.
    convergence
        "off" skips truncation checks, "check" reports them, "ladder" raises
        the depth until converged.
    ell_c_ceiling
        Deepest hierarchy tried by the ladder.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    fock_dim: int = Field(default=10, ge=1)
    ell_c: int = Field(default=8, ge=0)
    dt: float | None = Field(default=None, gt=0)
    omega0: float = Field(default=1.0, gt=0)
    exponent_order: ExponentOrder = "correlation"
    convergence: ConvergenceMode = "check"
    ell_c_ceiling: int = Field(default=30, ge=0)


class ScenarioConfig(BaseModel):
    """
    A complete, validated scenario.

    Attributes
    ----------
    alpha
        Bath coupling constant.
    omega_c
        Bath cutoff frequency.
    epsilon
        TLS transition frequency.
    modulator
        Ancillary modulator; the string "none" is accepted.
    solver
        Solver to run; "all" runs every master-equation solver that applies.
    grid
        Sampling grid.
    rho_ee0
        Initial excited-state population.
    tol
        Poisson tail-mass tolerance.
    cap
        Poisson series cap.
    heom
        Hierarchy settings.
    out_dir
        Output directory; None falls back to the configured output root.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    alpha: float
    omega_c: float
    epsilon: float
    modulator: Modulator = Field(default_factory=NoMod)
    solver: SolverChoice = SolverChoice.all
    grid: TimeGrid = DEFAULT_GRID
    rho_ee0: float = Field(default=1.0, ge=0, le=1)
    tol: float = Field(default=DEFAULT_TOL, gt=0, lt=1)
    cap: int = Field(default=DEFAULT_CAP, ge=1)
    heom: HeomSettings = Field(default_factory=HeomSettings)
    out_dir: Path | None = None

    check_positive = field_validator("alpha", "omega_c", "epsilon")(require_positive)

    @field_validator("modulator", mode="before")
    @classmethod
    def _expand_shorthand(cls, value: Any) -> Any:  # noqa: ANN401
        if isinstance(value, str):
            return {"kind": value}
        return value

    @property
    def bath(self) -> LorentzBath:
        """Lorentz bath of the scenario."""
        return LorentzBath(alpha=self.alpha, omega_c=self.omega_c, epsilon=self.epsilon)

    def natural_knob(self) -> tuple[Knob, float]:
        """Steering knob of the modulator and its current value."""
        match self.modulator:
            case HOMod():
                return Knob.ho_lambda, self.modulator.lam
            case ReservoirMod():
                return Knob.reservoir_lambda, self.modulator.Lam
        return Knob.alpha, self.alpha


def parse_config(path: str | Path) -> ScenarioConfig:
    """
    Read and validate a JSON scenario file.

    Parameters
    ----------
    path
        Path to the scenario file.

    Returns
    -------
        Validated scenario with every default filled in.

    Raises
    ------
    FileNotFoundError
        If the file does not exist.
    pydantic.ValidationError
        If the file is not valid JSON or violates a constraint.
    """
    path = Path(path)
    if not path.is_file():
        msg = f"Config file not found: {path}"
        raise FileNotFoundError(msg)
    return ScenarioConfig.model_validate_json(path.read_text(encoding="utf-8"))
