"""Hierarchy state and right-hand side."""

import numpy as np
import scipy.sparse as sp
from pydantic import BaseModel, ConfigDict, field_validator

from ..types import ComplexArray
from .config import AdoIndex, HeomConfig, ado_position, enumerate_ados
from .hamiltonian import SIGMA_X, build_hsa, tls_operator


class HierarchyState(BaseModel):
    """
    ADO family at one instant.

    Attributes
    ----------
    ados
        Array of shape (n_ados, d, d); slot 0 is the physical density matrix
        and the rest follow `enumerate_ados` order.
    time
        Time stamp.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    ados: np.ndarray
    time: float = 0.0

    @field_validator("ados", mode="before")
    @classmethod
    def _check_shape(cls, value: object) -> ComplexArray:
        value = np.asarray(value, dtype=complex)
        if value.ndim != 3 or value.shape[1] != value.shape[2]:  # noqa: PLR2004
            msg = "ados must have shape (n_ados, d, d)"
            raise ValueError(msg)
        return value

    def ado(self, index: AdoIndex | tuple[int, int], ell_c: int) -> ComplexArray:
        """Single ADO by hierarchy index."""
        return self.ados[ado_position(index, ell_c)]

    def trace(self) -> complex:
        """Trace of the physical density matrix."""
        return complex(np.trace(self.ados[0]))


class Hierarchy:
    """
    Truncated hierarchy for one configuration.

    The generator acts on the row-major flattening of the ADO stack and is
    assembled once as a sparse matrix. Neighbour tables hold `n_ados` for
    indices past the truncation.
    """

    def __init__(self, config: HeomConfig) -> None:
        """Assemble neighbour tables and the sparse generator for `config`."""
        self.config = config
        self.hsa = build_hsa(config)
        self.sx = tls_operator(SIGMA_X, config.fock_dim)

        indices = enumerate_ados(config.ell_c)
        n_ados = len(indices)

        def position(l1: int, l2: int) -> int:
            if l1 < 0 or l2 < 0 or l1 + l2 > config.ell_c:
                return n_ados
            return ado_position((l1, l2), config.ell_c)

        self.l1 = np.array([i.l1 for i in indices], dtype=float)
        self.l2 = np.array([i.l2 for i in indices], dtype=float)
        self.up1 = np.array([position(i.l1 + 1, i.l2) for i in indices])
        self.up2 = np.array([position(i.l1, i.l2 + 1) for i in indices])
        self.down1 = np.array([position(i.l1 - 1, i.l2) for i in indices])
        self.down2 = np.array([position(i.l1, i.l2 - 1) for i in indices])
        self.mirror = np.array([position(i.l2, i.l1) for i in indices])

        upsilon1, upsilon2 = config.exponents
        self.damping = self.l1 * upsilon1 + self.l2 * upsilon2
        self.n_ados = n_ados
        self.dim = config.dim
        self.generator = self._assemble()
        self._diagonal = np.arange(self.dim) * (self.dim + 1)

    def _links(self, targets: np.ndarray) -> sp.csr_matrix:
        rows = np.flatnonzero(targets < self.n_ados)
        data = np.ones(len(rows))
        shape = (self.n_ados, self.n_ados)
        return sp.csr_matrix((data, (rows, targets[rows])), shape=shape)

    def _assemble(self) -> sp.csr_matrix:
        """
        Sparse hierarchy generator.

        d rho_l/dt = -i[H, rho_l] - (l1*u1 + l2*u2) rho_l
                     - i[sx, rho_{l+e1} + rho_{l+e2}]
                     + sum_p l_p * Psi_p rho_{l-e_p}

        with Psi_p X = (i/8)*alpha*((-1)**p * {sx, X} - [sx, X]), that is
        Psi_1 X = -(i/4)*alpha*sx X and Psi_2 X = (i/4)*alpha*X sx.
        """
        eye = sp.identity(self.dim, dtype=complex, format="csr")
        hsa = sp.csr_matrix(self.hsa)
        sx = sp.csr_matrix(self.sx)

        def left(op: sp.csr_matrix) -> sp.csr_matrix:
            return sp.kron(op, eye, format="csr")

        def right(op: sp.csr_matrix) -> sp.csr_matrix:
            return sp.kron(eye, op.T, format="csr")

        quarter = 0.25j * self.config.alpha
        liouville = -1j * (left(hsa) - right(hsa))
        phi = -1j * (left(sx) - right(sx))
        psi1 = -quarter * left(sx)
        psi2 = quarter * right(sx)

        ados = sp.identity(self.n_ados, dtype=complex, format="csr")
        upward = self._links(self.up1) + self._links(self.up2)
        down1 = sp.diags(self.l1) @ self._links(self.down1)
        down2 = sp.diags(self.l2) @ self._links(self.down2)
        generator = (
            sp.kron(ados, liouville)
            - sp.kron(sp.diags(self.damping), sp.identity(self.dim**2))
            + sp.kron(upward, phi)
            + sp.kron(down1, psi1)
            + sp.kron(down2, psi2)
        )
        return generator.tocsr()

    def flatten(self, ados: ComplexArray) -> ComplexArray:
        """ADO stack as one vector."""
        return np.array(ados, dtype=complex).reshape(-1)

    def unflatten(self, vector: ComplexArray) -> ComplexArray:
        """Vector back to an ADO stack."""
        return vector.reshape(self.n_ados, self.dim, self.dim)

    def rhs(self, vector: ComplexArray) -> ComplexArray:
        """Time derivative of a flattened ADO stack."""
        return self.generator @ vector

    def trace_drift(self, vector: ComplexArray) -> float:
        """|Tr rho_(0,0) - 1|."""
        return abs(complex(vector[self._diagonal].sum()) - 1.0)

    def hermiticity_residual(self, vector: ComplexArray) -> float:
        """Largest deviation from rho_(l1,l2)^dag == rho_(l2,l1)."""
        rho = self.unflatten(vector)
        mirrored = rho[self.mirror].conj().transpose(0, 2, 1)
        return float(np.max(np.abs(rho - mirrored)))


def heom_rhs(state: HierarchyState, config: HeomConfig) -> HierarchyState:
    """
    Time derivative of a hierarchy state.

    Parameters
    ----------
    state
        ADO family.
    config
        Hierarchy configuration matching the state's shape.

    Returns
    -------
        Derivative, with the same time stamp.
    """
    hierarchy = Hierarchy(config)
    if state.ados.shape != (hierarchy.n_ados, hierarchy.dim, hierarchy.dim):
        msg = f"state shape {state.ados.shape} does not match the configuration"
        raise ValueError(msg)
    derivative = hierarchy.rhs(hierarchy.flatten(state.ados))
    return HierarchyState(ados=hierarchy.unflatten(derivative), time=state.time)
