"""Hamiltonians of the qubit-resonator system and their eigensystems.

Covers the full Rabi Hamiltonian, the RWA (Jaynes-Cummings) and dispersive
limits, the Bloch-Siegert (BS) unitary/Hamiltonian/perturbative eigensystem,
exact diagonalization with parity labels, and the qubit-frequency-modulated
dispersive Hamiltonian used for sideband and parametric driving.

Conventions
-----------
* The BS mixing angle theta_n follows the principal arctan branch and lies in
  (-pi/2, 0).
* Doublet eigenvectors: with theta_n as above, the energy-ordered doublet
  members are
      |n,+> = cos(theta_n)|e,n-1> - sin(theta_n)|g,n>      (upper)
      |n,-> = sin(theta_n)|e,n-1> + cos(theta_n)|g,n>      (lower)
  These are exact eigenvectors of the BS-frame block Hamiltonian for any
  detuning (verified against dense diagonalization); they reduce to the
  symmetric/antisymmetric combinations at resonance.
* Eigenvector phases are fixed so the largest-magnitude component is real
  and positive.
"""

import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import expm, eigh

from .hilbert import SpaceSpec, build_operator

__all__ = [
    "SystemParams",
    "Eigensystem",
    "rabi_hamiltonian",
    "jc_hamiltonian",
    "dispersive_hamiltonian",
    "bs_unitary",
    "bs_hamiltonian",
    "bs_mixing_angle",
    "bs_eigensystem",
    "diagonalize",
    "adiabatic_labels",
    "modulated_dispersive_hamiltonian",
]

LAMBDA_GUARD = 0.3  # perturbative-regime warning threshold for Lambda = g/Sigma


@dataclass(frozen=True)
class SystemParams:
    """Angular frequencies (rad/ns): qubit splitting, resonator, coupling."""

    omega_a: float
    omega_r: float
    g: float

    def __post_init__(self):
        if self.omega_a <= 0 or self.omega_r <= 0:
            raise ValueError("omega_a and omega_r must be positive")
        if self.g < 0:
            raise ValueError("g must be nonnegative")

    @property
    def Sigma(self):
        return self.omega_a + self.omega_r

    @property
    def Delta(self):
        return self.omega_a - self.omega_r

    @property
    def Lam(self):
        """Lambda = g / Sigma."""
        return self.g / self.Sigma

    @property
    def mu(self):
        """Bloch-Siegert shift g^2 / Sigma."""
        return self.g**2 / self.Sigma

    @property
    def xi(self):
        """xi = g * Lambda / (2 omega_r)."""
        return self.g * self.Lam / (2.0 * self.omega_r)

    @property
    def lambda_disp(self):
        """Dispersive small parameter g / Delta."""
        if self.Delta == 0:
            raise ValueError("lambda_disp undefined at Delta = 0")
        return self.g / self.Delta

    @property
    def chi(self):
        """Dispersive shift g^2 / Delta."""
        if self.Delta == 0:
            raise ValueError("chi singular at Delta = 0")
        return self.g**2 / self.Delta

    @property
    def zeta(self):
        """Dispersive nonlinearity g^4 / Delta^3."""
        if self.Delta == 0:
            raise ValueError("zeta singular at Delta = 0")
        return self.g**4 / self.Delta**3


@dataclass
class Eigensystem:
    """Sorted eigenpairs with parity labels.

    states[:, j] is the j-th eigenvector; parities[j] = <j|Pi|j> = +-1;
    labels[j] is one of 'g0', '1-', '1+', '2-', ... when known.
    """

    energies: np.ndarray
    states: np.ndarray
    parities: np.ndarray
    labels: list = field(default=None)

    def delta(self, k, j):
        """Transition frequency Delta_kj = E_k - E_j."""
        return self.energies[k] - self.energies[j]

    def index_of(self, label):
        if self.labels is None:
            raise ValueError("eigensystem has no labels")
        return self.labels.index(label)

    @property
    def size(self):
        return len(self.energies)


def _check_hermitian(H, name="H"):
    scale = max(np.linalg.norm(H), 1.0)
    if np.linalg.norm(H - H.conj().T) > 1e-12 * scale:
        raise ValueError(f"{name} is not Hermitian")


def rabi_hamiltonian(p, spec):
    """H_R = omega_r a^dag a + (omega_a/2) sigma_z + g X sigma_x."""
    n = build_operator(spec, "number")
    sz = build_operator(spec, "sigma_z")
    X = build_operator(spec, "position_X")
    sx = build_operator(spec, "sigma_x")
    return p.omega_r * n + 0.5 * p.omega_a * sz + p.g * (X @ sx)


def jc_hamiltonian(p, spec):
    """RWA Hamiltonian: counter-rotating terms a sigma_- + a^dag sigma_+ dropped."""
    n = build_operator(spec, "number")
    sz = build_operator(spec, "sigma_z")
    a = build_operator(spec, "annihilation")
    sm = build_operator(spec, "sigma_minus")
    sp = sm.conj().T
    return p.omega_r * n + 0.5 * p.omega_a * sz + p.g * (a @ sp + a.conj().T @ sm)


def dispersive_hamiltonian(p, spec):
    """Dispersive-limit Hamiltonian, diagonal in the bare basis.

    H = omega_r a^dag a + chi sigma_z (a^dag a + 1/2) + (omega_a/2) sigma_z
        + zeta sigma_z (a^dag a)^2
    so that the e/g splitting at photon number n is
    omega_a + chi(2n+1) + 2 zeta n^2.
    """
    if p.Delta == 0:
        raise ValueError("dispersive Hamiltonian undefined at Delta = 0")
    if abs(p.Delta) < 5 * p.g:
        warnings.warn("dispersive regime marginal: |Delta| < 5 g", stacklevel=2)
    n = build_operator(spec, "number")
    sz = build_operator(spec, "sigma_z")
    ident = build_operator(spec, "identity")
    return (
        p.omega_r * n
        + p.chi * sz @ (n + 0.5 * ident)
        + 0.5 * p.omega_a * sz
        + p.zeta * sz @ (n @ n)
    )


def bs_generator(p, spec):
    """Anti-Hermitian generator Lambda(a sigma_- - a^dag sigma_+) + xi(a^2 - a^dag^2) sigma_z."""
    a = build_operator(spec, "annihilation")
    ad = a.conj().T
    sm = build_operator(spec, "sigma_minus")
    sp = sm.conj().T
    sz = build_operator(spec, "sigma_z")
    return p.Lam * (a @ sm - ad @ sp) + p.xi * ((a @ a - ad @ ad) @ sz)


def bs_unitary(p, spec):
    """U = exp{Lambda(a sigma_- - a^dag sigma_+) + xi(a^2 - a^dag^2) sigma_z}."""
    if p.Lam > LAMBDA_GUARD:
        warnings.warn(
            f"Lambda = {p.Lam:.3f} > {LAMBDA_GUARD}: outside perturbative regime",
            stacklevel=2,
        )
    return expm(bs_generator(p, spec))


def bs_hamiltonian(p, spec):
    """H_BS = (omega_r + mu sigma_z) a^dag a + (omega_a + mu)/2 sigma_z + g I_+ - mu/2.

    The trailing constant -mu/2 is what the Campbell-Baker-Hausdorff
    expansion of U^dag H_R U actually produces at second order; it is often
    dropped as an overall energy offset but is kept here so absolute energies
    compare directly with exact diagonalization of H_R.
    """
    n = build_operator(spec, "number")
    sz = build_operator(spec, "sigma_z")
    a = build_operator(spec, "annihilation")
    sm = build_operator(spec, "sigma_minus")
    sp = sm.conj().T
    omega_q = p.omega_a + p.mu
    return (
        p.omega_r * n
        + p.mu * (sz @ n)
        + 0.5 * omega_q * sz
        + p.g * (a @ sp + a.conj().T @ sm)
        - 0.5 * p.mu * build_operator(spec, "identity")
    )


def bs_mixing_angle(p, n):
    """theta_n = arctan[(D - sqrt(D^2 + 4 g^2 n)) / (2 g sqrt(n))], D = Delta + 2 mu n.

    Principal branch, theta_n in (-pi/2, 0).
    """
    if n < 1:
        raise ValueError("doublet index n must be >= 1")
    if p.g == 0:
        raise ValueError("mixing angle undefined at g = 0")
    d = p.Delta + 2.0 * p.mu * n
    root = np.sqrt(d**2 + 4.0 * p.g**2 * n)
    return np.arctan((d - root) / (2.0 * p.g * np.sqrt(n)))


def _bs_frame_levels(p, n_doublets):
    """Energies and in-frame (pre-U) vectors index pairs for g0 + doublets 1..n_doublets."""
    omega_q = p.omega_a + p.mu
    # absolute energies include the -mu/2 constant of U^dag H_R U
    levels = [("g0", -0.5 * omega_q - 0.5 * p.mu, None)]
    for n in range(1, n_doublets + 1):
        d = p.Delta + 2.0 * p.mu * n
        mean = p.omega_r * (n - 0.5) - p.mu
        half = 0.5 * np.sqrt(d**2 + 4.0 * p.g**2 * n)
        levels.append((f"{n}-", mean - half, n))
        levels.append((f"{n}+", mean + half, n))
    return levels


def bs_eigensystem(p, spec, n_levels):
    """Perturbative eigensystem: |g0~>, |n,+->~ = U |n,+->_BS with BS energies.

    n_levels counts states (ground plus doublet members), e.g. 5 gives
    g0, 1-, 1+, 2-, 2+.
    """
    n_doublets = (n_levels - 1 + 1) // 2  # ceil((n_levels-1)/2)
    if n_doublets > spec.n_max - 2:
        raise ValueError("truncation too small for requested n_levels")
    if p.g == 0:
        # bare states; doublet membership from energy order of {e,n-1; g,n}
        H = rabi_hamiltonian(p, spec)
        Pi = build_operator(spec, "parity")
        es = diagonalize(H, Pi)
        return Eigensystem(
            es.energies[:n_levels],
            es.states[:, :n_levels],
            es.parities[:n_levels],
        )
    U = bs_unitary(p, spec)
    levels = _bs_frame_levels(p, n_doublets)
    energies, states, parities, labels = [], [], [], []
    for label, energy, n in levels:
        if n is None:
            vec = spec.basis_state("g", 0)
            par = 1.0
        else:
            th = bs_mixing_angle(p, n)
            c, s = np.cos(th), np.sin(th)
            e_vec = spec.basis_state("e", n - 1)
            g_vec = spec.basis_state("g", n)
            if label.endswith("+"):
                vec = c * e_vec - s * g_vec
            else:
                vec = s * e_vec + c * g_vec
            par = (-1.0) ** n
        energies.append(energy)
        states.append(U @ vec)
        parities.append(par)
        labels.append(label)
    order = np.argsort(energies)[:n_levels]
    energies = np.array(energies)[order]
    states = np.array(states).T[:, order]
    parities = np.array(parities)[order]
    labels = [labels[i] for i in order]
    states = _fix_phases(states)
    return Eigensystem(energies, states, parities, labels)


def _fix_phases(states):
    out = states.copy()
    for j in range(out.shape[1]):
        k = np.argmax(np.abs(out[:, j]))
        phase = out[k, j] / abs(out[k, j])
        out[:, j] = out[:, j] / phase
    return out


def diagonalize(H, parity):
    """Exact eigensystem, split by parity sector so eigenvectors carry definite parity.

    The parity operator must be diagonal with +-1 entries (as built by
    hilbert.build_operator). Degenerate levels within a sector keep the
    eigh ordering; phases are fixed (largest component real positive).
    """
    _check_hermitian(H)
    pdiag = np.real(np.diag(parity))
    if not np.allclose(parity, np.diag(pdiag), atol=1e-14) or not np.allclose(
        np.abs(pdiag), 1.0, atol=1e-12
    ):
        raise ValueError("parity operator must be diagonal with +-1 entries")
    dim = H.shape[0]
    energies = np.empty(dim)
    states = np.zeros((dim, dim), dtype=complex)
    parities = np.empty(dim)
    pos = 0
    for sign in (+1.0, -1.0):
        idx = np.where(pdiag == sign)[0]
        if idx.size == 0:
            continue
        sub = H[np.ix_(idx, idx)]
        vals, vecs = eigh(sub)
        for i in range(idx.size):
            energies[pos] = vals[i]
            states[idx, pos] = vecs[:, i]
            parities[pos] = sign
            pos += 1
    order = np.argsort(energies, kind="stable")
    energies = energies[order]
    states = states[:, order]
    parities = parities[order]
    states = _fix_phases(states)
    # residual checks
    scale = max(np.linalg.norm(H), 1.0)
    res = np.linalg.norm(H @ states - states * energies[None, :])
    if res > 1e-10 * scale:
        raise RuntimeError(f"eigen residual too large: {res:.2e}")
    return Eigensystem(energies, states, parities)


def adiabatic_labels(p, spec, n_levels, steps=16):
    """Label the lowest n_levels exact eigenstates as g0, (n,-), (n,+).

    Each eigenstate is assigned to a doublet n by its weight on the bare
    subspace {|e,n-1>, |g,n>}, followed adiabatically from small g upward
    (at large g energy ordering alone is ambiguous near level crossings).
    The +- within a doublet is assigned by energy order at the final g.
    """
    Pi = build_operator(spec, "parity")
    if p.g == 0:
        steps = 1
    gs = np.linspace(p.g / steps, p.g, steps) if p.g > 0 else [0.0]
    # subspace projom: doublet n holds {e,n-1; g,n}; 'g0' alone
    def doublet_weights(vec):
        w = {0: abs(vec[spec.index("g", 0)]) ** 2}
        for n in range(1, spec.n_max + 1):
            w[n] = (
                abs(vec[spec.index("e", n - 1)]) ** 2
                + abs(vec[spec.index("g", n)]) ** 2
            )
        return w

    track = None
    for g in gs:
        pg = SystemParams(p.omega_a, p.omega_r, g)
        es = diagonalize(rabi_hamiltonian(pg, spec), Pi)
        if track is None:
            idx = list(range(n_levels))
        else:
            idx, used = [], set()
            for j in range(n_levels):
                ov = np.abs(es.states.conj().T @ track[:, j]) ** 2
                for k in used:
                    ov[k] = -1.0
                k = int(np.argmax(ov))
                used.add(k)
                idx.append(k)
        track = es.states[:, idx]
    energies = es.energies
    doublet = []
    for j in range(n_levels):
        w = doublet_weights(track[:, j])
        doublet.append(max(w, key=w.get))
    labels = [None] * n_levels
    for j in range(n_levels):
        dn = doublet[j]
        if dn == 0:
            labels[j] = "g0"
            continue
        members = [i for i in range(n_levels) if doublet[i] == dn]
        if len(members) == 2:
            lo, hi = sorted(members, key=lambda i: energies[idx[i]])
            labels[lo] = f"{dn}-"
            labels[hi] = f"{dn}+"
        else:
            labels[j] = f"{dn}?"
    out = {}
    for j in range(n_levels):
        out[idx[j]] = labels[j]
    return [out.get(i) for i in range(n_levels)]


def modulated_dispersive_hamiltonian(p, spec, eps_z, omega_d, t):
    """Dispersive Hamiltonian with qubit-frequency modulation f(t) = eps_z cos(omega_d t).

    H_D(t) = H_0' + chi'(t) a^dag a sigma_z + f(t) sigma_z
             - 2 f(t) (lambda I_+ + Lambda I_CR)
             - 2 f(t) lambda Lambda sigma_z (a^2 + a^dag^2)
    with chi'(t) = -2(lambda^2 + Lambda^2) f(t) and
    H_0' = [omega_r + (chi+mu) sigma_z] a^dag a + (omega_a + chi + mu)/2 sigma_z.
    No further RWA is applied; driving at omega_d = Delta, Sigma, 2 omega_r
    selects the red-sideband, blue-sideband and parametric terms.
    """
    if p.Delta == 0:
        raise ValueError("modulated dispersive Hamiltonian undefined at Delta = 0")
    lam = p.lambda_disp
    n = build_operator(spec, "number")
    sz = build_operator(spec, "sigma_z")
    a = build_operator(spec, "annihilation")
    ad = a.conj().T
    sm = build_operator(spec, "sigma_minus")
    sp = sm.conj().T
    i_plus = a @ sp + ad @ sm
    i_cr = a @ sm + ad @ sp
    f = eps_z * np.cos(omega_d * t)
    chi_t = -2.0 * (lam**2 + p.Lam**2) * f
    h0 = (
        p.omega_r * n
        + (p.chi + p.mu) * (sz @ n)
        + 0.5 * (p.omega_a + p.chi + p.mu) * sz
    )
    return (
        h0
        + chi_t * (n @ sz)
        + f * sz
        - 2.0 * f * (lam * i_plus + p.Lam * i_cr)
        - 2.0 * f * lam * p.Lam * (sz @ (a @ a + ad @ ad))
    )
