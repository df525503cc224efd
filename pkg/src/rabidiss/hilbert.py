"""Truncated qubit (x) oscillator Hilbert space and elementary operators.

Basis ordering is qubit-major: index = q*(n_max+1) + n with q in {g=0, e=1}.
Operators are plain dense complex numpy arrays; everything is immutable by
convention (callers must not write into returned matrices).
"""

from dataclasses import dataclass

import numpy as np

__all__ = ["SpaceSpec", "build_operator", "OPERATOR_KINDS"]


@dataclass(frozen=True)
class SpaceSpec:
    """Fock truncation: oscillator states |0> ... |n_max>."""

    n_max: int

    def __post_init__(self):
        if self.n_max < 2:
            raise ValueError(
                "n_max must be >= 2 (need at least |g2> in the dressed ground state)"
            )

    @property
    def nf(self):
        """Number of Fock states kept."""
        return self.n_max + 1

    @property
    def dim(self):
        return 2 * (self.n_max + 1)

    def index(self, qubit, n):
        """Basis index of |qubit, n> with qubit in {'g', 'e'} or {0, 1}."""
        q = {"g": 0, "e": 1}.get(qubit, qubit)
        if not 0 <= n <= self.n_max:
            raise ValueError(f"Fock index {n} outside truncation")
        return q * self.nf + n

    def basis_state(self, qubit, n):
        """Unit vector for |qubit, n>."""
        v = np.zeros(self.dim, dtype=complex)
        v[self.index(qubit, n)] = 1.0
        return v


def _osc_annihilation(nf):
    return np.diag(np.sqrt(np.arange(1, nf)), 1).astype(complex)


def _build(spec, kind):
    nf = spec.nf
    i2 = np.eye(2, dtype=complex)
    inf = np.eye(nf, dtype=complex)
    a1 = _osc_annihilation(nf)
    # qubit-major ordering: qubit matrix goes first in the kron
    sm = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)  # |g><e|
    sz = np.diag([-1.0, 1.0]).astype(complex)  # g=0 first

    if kind == "annihilation":
        return np.kron(i2, a1)
    if kind == "creation":
        return np.kron(i2, a1.conj().T)
    if kind == "sigma_minus":
        return np.kron(sm, inf)
    if kind == "sigma_plus":
        return np.kron(sm.conj().T, inf)
    if kind == "sigma_z":
        return np.kron(sz, inf)
    if kind == "sigma_x":
        return np.kron(sm + sm.conj().T, inf)
    if kind == "position_X":
        return np.kron(i2, a1 + a1.conj().T)
    if kind == "number":
        return np.kron(i2, a1.conj().T @ a1)
    if kind == "parity":
        # (-1)^(a^dag a + sigma_+ sigma_-)
        osc = np.diag((-1.0) ** np.arange(nf)).astype(complex)
        qub = np.diag([1.0, -1.0]).astype(complex)  # (-1)^{0,1}
        return np.kron(qub, osc)
    if kind == "identity":
        return np.eye(spec.dim, dtype=complex)
    raise ValueError(f"unknown operator kind: {kind!r}")


OPERATOR_KINDS = (
    "annihilation",
    "creation",
    "sigma_minus",
    "sigma_plus",
    "sigma_z",
    "sigma_x",
    "position_X",
    "parity",
    "number",
    "identity",
)


def build_operator(spec, kind):
    """Dense matrix of the named operator on the truncated space.

    Truncation policy: the annihilation operator acts exactly on the kept
    states; creation maps |n_max> to the zero vector. No renormalization is
    ever applied; adequacy of n_max is checked by convergence studies.
    """
    if kind not in OPERATOR_KINDS:
        raise ValueError(f"unknown operator kind: {kind!r}")
    return _build(spec, kind)
