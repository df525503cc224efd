"""Lindbladian superoperators: standard (bare-operator) and dressed-basis forms.

Vectorization is column-stacking: vec(rho) = rho.reshape(-1, order='F'),
so vec(A rho B) = (B^T kron A) vec(rho).

Dressed-rate conventions: the jump |j><k| (taking k -> j) carries the bath
spectrum evaluated at the signed frequency Delta_kj = E_k - E_j (energy
released to the bath positive). Upward transitions therefore only appear if
the spectrum has negative-frequency weight (thermal occupation, or a
classical symmetric spectrum). Lamb shifts are neglected throughout.
"""

import csv
import warnings
from dataclasses import dataclass, field

import numpy as np

from .hilbert import build_operator
from .units import to_ghz, to_mhz

__all__ = [
    "DissipatorTerm",
    "Liouvillian",
    "vec",
    "unvec",
    "transition_elements",
    "assemble",
    "standard_lindbladian",
    "dressed_lindbladian",
    "degeneracy_report",
    "dump_terms_csv",
]


def vec(rho):
    return np.asarray(rho, dtype=complex).reshape(-1, order="F")


def unvec(v):
    d = int(round(np.sqrt(v.size)))
    return v.reshape((d, d), order="F")


@dataclass
class DissipatorTerm:
    """One Lindblad dissipator rate*D[jump], with provenance metadata."""

    jump: np.ndarray
    rate: float
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.rate < 0:
            raise ValueError("dissipator rate must be nonnegative")


@dataclass
class Liouvillian:
    """Dense superoperator with the Hamiltonian and term list it was built from."""

    matrix: np.ndarray
    H: np.ndarray
    terms: list
    dim: int

    def apply(self, rho):
        return unvec(self.matrix @ vec(rho))


def transition_elements(es, O):
    """Matrix O^{jk} = <j|O|k> in the eigensystem basis (phase convention of es)."""
    if es.states.shape[0] != O.shape[0]:
        raise ValueError("dimension mismatch between eigensystem and operator")
    return es.states.conj().T @ O @ es.states


def _dissipator_super(O, rate):
    d = O.shape[0]
    ident = np.eye(d, dtype=complex)
    OdO = O.conj().T @ O
    return rate * (
        np.kron(O.conj(), O)
        - 0.5 * np.kron(ident, OdO)
        - 0.5 * np.kron(OdO.T, ident)
    )


def assemble(H, terms):
    """Superoperator for rho' = -i[H, rho] + sum_i rate_i D[jump_i] rho."""
    d = H.shape[0]
    ident = np.eye(d, dtype=complex)
    L = -1j * (np.kron(ident, H) - np.kron(H.T, ident))
    for t in terms:
        if t.jump.shape != H.shape:
            raise ValueError("dissipator dimension mismatch")
        if t.rate == 0.0:
            continue
        L = L + _dissipator_super(t.jump, t.rate)
    return Liouvillian(L, H, list(terms), d)


def standard_lindbladian(spec, kappa, gamma1, gamma_phi, H):
    """L[rho] = -i[H,rho] + kappa D[a] + gamma1 D[sigma_-] + (gamma_phi/2) D[sigma_z]."""
    if min(kappa, gamma1, gamma_phi) < 0:
        raise ValueError("rates must be nonnegative")
    a = build_operator(spec, "annihilation")
    sm = build_operator(spec, "sigma_minus")
    sz = build_operator(spec, "sigma_z")
    terms = [
        DissipatorTerm(a, kappa, {"bath": "kappa", "op": "a"}),
        DissipatorTerm(sm, gamma1, {"bath": "gamma", "op": "sigma_-"}),
        DissipatorTerm(sz, 0.5 * gamma_phi, {"bath": "gamma_phi", "op": "sigma_z"}),
    ]
    return assemble(H, terms)


def dressed_lindbladian(es, spectra, H, n_levels, n_crit=None,
                        degeneracy_tol=1e-8):
    """Secular master equation in the eigenbasis of H.

    spectra: dict with NoiseSpectrum entries 'kappa' (couples via X),
    'gamma' (via sigma_x) and 'gamma_phi' (via sigma_z). Terms:

    * collective dephasing D[sum_j Phi_j |j><j|], Phi_j = sqrt(gphi(0)/2) sz^{jj}
    * dephasing transitions |j><k| at rate gphi(Delta_kj)/2 |sz^{jk}|^2
    * relaxation |j><k| at rate kappa(Delta_kj)|X^{jk}|^2 + gamma(Delta_kj)|sx^{jk}|^2

    for all ordered pairs j != k among the lowest n_levels states; the
    spectrum's closure decides which upward rates survive. Rates below
    machine-negligible threshold are dropped from the term list.

    Within one bath, transitions whose frequencies coincide (relative
    separation below degeneracy_tol) are merged into a single collective
    jump sum_i O^{j_i k_i} |j_i><k_i|, as the secular construction requires
    for exactly degenerate lines. This is what makes the g -> 0 limit
    reduce termwise to the standard Lindbladian (all oscillator lines sit
    at omega_r there and must recombine into D[a]). For the generic
    anharmonic dressed spectrum every cluster is a single transition and
    the familiar |O^{jk}|^2-weighted rates are recovered.
    """
    if n_levels > es.size:
        raise ValueError("n_levels exceeds eigensystem size")
    if n_crit is not None and n_levels > n_crit:
        warnings.warn(
            f"n_levels={n_levels} exceeds critical excitation number {n_crit:.1f}; "
            "the secular dressed master equation is not reliable this high",
            stacklevel=2,
        )
    d = es.states.shape[0]
    # rebuild coupling operators on the space implied by the eigensystem dim
    spec_like = _SpecLike(d // 2 - 1)
    X = build_operator(spec_like, "position_X")
    sx = build_operator(spec_like, "sigma_x")
    sz = build_operator(spec_like, "sigma_z")

    Xjk = transition_elements(es, X)[:n_levels, :n_levels]
    sxjk = transition_elements(es, sx)[:n_levels, :n_levels]
    szjk = transition_elements(es, sz)[:n_levels, :n_levels]

    kets = [es.states[:, j] for j in range(n_levels)]

    def proj(j, k):
        return np.outer(kets[j], kets[k].conj())

    terms = []
    gphi = spectra.get("gamma_phi")
    if gphi is not None:
        phi_op = np.zeros((d, d), dtype=complex)
        for j in range(n_levels):
            phi_op += np.real(szjk[j, j]) * proj(j, j)
        terms.append(
            DissipatorTerm(
                phi_op,
                0.5 * gphi.eval(0.0),
                {"bath": "gamma_phi", "type": "collective", "delta": 0.0},
            )
        )
    tiny = 1e-16
    couplings = []
    if gphi is not None:
        couplings.append(("gamma_phi", szjk, 0.5, gphi))
    for bath, elems in (("kappa", Xjk), ("gamma", sxjk)):
        s = spectra.get(bath)
        if s is not None:
            couplings.append((bath, elems, 1.0, s))
    freq_scale = max(
        (abs(es.delta(k, j)) for j in range(n_levels) for k in range(n_levels)),
        default=1.0,
    )
    tol = degeneracy_tol * max(freq_scale, 1.0)
    for bath, elems, factor, s in couplings:
        lines = []  # (delta, j, k, amplitude)
        for j in range(n_levels):
            for k in range(n_levels):
                if j == k or abs(elems[j, k]) ** 2 <= tiny:
                    continue
                lines.append((es.delta(k, j), j, k, elems[j, k]))
        lines.sort(key=lambda x: x[0])
        i = 0
        while i < len(lines):
            cluster = [lines[i]]
            while i + 1 < len(lines) and lines[i + 1][0] - cluster[-1][0] < tol:
                cluster.append(lines[i + 1])
                i += 1
            i += 1
            weight = sum(abs(c[3]) ** 2 for c in cluster)
            delta = sum(c[0] * abs(c[3]) ** 2 for c in cluster) / weight
            rate = factor * s.eval(delta) * weight
            if rate <= tiny:
                continue
            jump = np.zeros((d, d), dtype=complex)
            for _, j, k, amp in cluster:
                jump += (amp / np.sqrt(weight)) * proj(j, k)
            meta = {"bath": bath, "delta": delta}
            if len(cluster) == 1:
                _, j, k, _ = cluster[0]
                meta.update(j=j, k=k, pj=es.parities[j], pk=es.parities[k])
            else:
                meta["pairs"] = [(c[1], c[2]) for c in cluster]
            terms.append(DissipatorTerm(jump, rate, meta))
    return assemble(H, terms)


class _SpecLike:
    """Minimal stand-in exposing what build_operator needs."""

    def __init__(self, n_max):
        self.n_max = n_max
        self.nf = n_max + 1
        self.dim = 2 * self.nf


def degeneracy_report(L, tol=None):
    """List same-bath transition pairs whose frequencies are closer than tol.

    The secular approximation treats transitions as independently damped;
    when two frequencies (within one bath) nearly coincide this fails. tol
    defaults to 10x the largest rate in the bath.
    """
    by_bath = {}
    for t in L.terms:
        m = t.meta
        if "j" not in m:
            continue
        by_bath.setdefault(m["bath"], []).append((m["delta"], m["j"], m["k"], t.rate))
    report = []
    for bath, items in by_bath.items():
        t0 = tol if tol is not None else 10.0 * max(r for _, _, _, r in items)
        for i in range(len(items)):
            for j in range(i + 1, len(items)):
                d1, j1, k1, r1 = items[i]
                d2, j2, k2, r2 = items[j]
                if (j1, k1) == (k2, j2):
                    continue  # a transition and its reverse are the same line
                if abs(d1 - d2) < t0:
                    report.append(
                        {
                            "bath": bath,
                            "pair_1": (j1, k1),
                            "pair_2": (j2, k2),
                            "delta_1": d1,
                            "delta_2": d2,
                            "separation": abs(d1 - d2),
                            "tolerance": t0,
                        }
                    )
    return report


def dump_terms_csv(L, path):
    """Diagnostics CSV: (bath, j, k, parity_j, parity_k, Delta_kj/2pi GHz, rate/2pi MHz)."""
    with open(path, "w", newline="") as f:
        w = csv.writer(f)
        f.write("# schema=1\n")
        w.writerow(["bath", "j", "k", "parity_j", "parity_k", "delta_ghz", "rate_mhz"])
        for t in L.terms:
            m = t.meta
            w.writerow(
                [
                    m.get("bath", ""),
                    m.get("j", ""),
                    m.get("k", ""),
                    m.get("pj", ""),
                    m.get("pk", ""),
                    f"{to_ghz(m.get('delta', 0.0)):.9g}",
                    f"{to_mhz(t.rate):.9g}",
                ]
            )
