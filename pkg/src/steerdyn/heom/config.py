"""Hierarchy configuration and ADO indexing."""

import math
from typing import Literal, NamedTuple, Self

from pydantic import BaseModel, ConfigDict, Field

ExponentOrder = Literal["correlation", "swapped"]


class HeomConfig(BaseModel):
    """
    Parameters of a hierarchy run.

    Attributes
    ----------
    epsilon
        TLS transition frequency.
    omega0
        Oscillator frequency.
    g0
        TLS-oscillator coupling.
    alpha
        Bath coupling constant; zero switches the bath off.
    omega_c
        Bath cutoff frequency.
    fock_dim
        Oscillator Fock-space truncation.
    ell_c
        Hierarchy depth; ADOs with l1 + l2 > ell_c are dropped.
    dt
        Integrator step; None selects `default_dt`.
    exponent_order
        Pairing of the bath exponents with the left- and right-acting
        hierarchy couplings. "correlation" pairs the exponent of
        C(t) = alpha*exp(-(omega_c + i*epsilon)*t) with left multiplication;
        "swapped" pairs its conjugate.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    epsilon: float = Field(gt=0)
    omega0: float = Field(default=1.0, gt=0)
    g0: float = Field(default=0.0, ge=0)
    alpha: float = Field(ge=0)
    omega_c: float = Field(gt=0)
    fock_dim: int = Field(default=10, ge=1)
    ell_c: int = Field(default=8, ge=0)
    dt: float | None = Field(default=None, gt=0)
    exponent_order: ExponentOrder = "correlation"

    @classmethod
    def from_lambda(  # noqa: PLR0913
        cls,
        *,
        lam: float,
        epsilon: float,
        alpha: float,
        omega_c: float,
        omega0: float = 1.0,
        fock_dim: int = 10,
        ell_c: int = 8,
        dt: float | None = None,
        exponent_order: ExponentOrder = "correlation",
    ) -> Self:
        """Build a config with g0 = omega0 * sqrt(lam)."""
        if not lam >= 0:
            msg = "lam must be non-negative"
            raise ValueError(msg)
        return cls(
            epsilon=epsilon,
            omega0=omega0,
            g0=omega0 * math.sqrt(lam),
            alpha=alpha,
            omega_c=omega_c,
            fock_dim=fock_dim,
            ell_c=ell_c,
            dt=dt,
            exponent_order=exponent_order,
        )

    @property
    def lam(self) -> float:
        """Steering parameter (g0/omega0)**2."""
        return (self.g0 / self.omega0) ** 2

    @property
    def dim(self) -> int:
        """System dimension, TLS times oscillator."""
        return 2 * self.fock_dim

    @property
    def n_ados(self) -> int:
        """Number of ADOs, including the physical density matrix."""
        return (self.ell_c + 1) * (self.ell_c + 2) // 2

    @property
    def default_dt(self) -> float:
        """Step resolving the fastest phase of the system Hamiltonian."""
        fastest = max(self.epsilon, self.omega_c, self.omega0 * self.fock_dim, 1.0)
        return 0.005 / fastest

    @property
    def resolved_dt(self) -> float:
        """Integrator step in use."""
        return self.default_dt if self.dt is None else self.dt

    @property
    def exponents(self) -> tuple[complex, complex]:
        """Decay rates of the two hierarchy directions."""
        rate = complex(self.omega_c, self.epsilon)
        if self.exponent_order == "correlation":
            return rate, rate.conjugate()
        return rate.conjugate(), rate


class AdoIndex(NamedTuple):
    """Hierarchy index (l1, l2)."""

    l1: int
    l2: int


def enumerate_ados(ell_c: int) -> list[AdoIndex]:
    """
    All ADO indices up to depth `ell_c`, tier by tier.

    Examples
    --------
    >>> enumerate_ados(1)
    [AdoIndex(l1=0, l2=0), AdoIndex(l1=1, l2=0), AdoIndex(l1=0, l2=1)]
    """
    return [
        AdoIndex(tier - l2, l2) for tier in range(ell_c + 1) for l2 in range(tier + 1)
    ]


def ado_position(index: AdoIndex | tuple[int, int], ell_c: int) -> int:
    """Position of an ADO in the `enumerate_ados` order."""
    l1, l2 = index
    tier = l1 + l2
    if l1 < 0 or l2 < 0 or tier > ell_c:
        msg = f"ADO index {tuple(index)} outside depth {ell_c}"
        raise IndexError(msg)
    return tier * (tier + 1) // 2 + l2
