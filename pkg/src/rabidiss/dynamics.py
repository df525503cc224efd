"""Time integration, steady states, driven-transmission sweeps.

Times in ns, generators in rad/ns. Two propagation routes:

* method='rk': adaptive embedded Runge-Kutta (DOP853) on the vectorized
  master equation. Default for short horizons and time-dependent problems.
* method='expm': spectral decomposition of the (static) Liouvillian, exact
  at the grid times. Used for long horizons (e.g. 10/kappa with kappa in
  MHz) where explicit stepping at the Hamiltonian timescale is hopeless.
"""

from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import solve_ivp
from scipy.optimize import least_squares

from .hilbert import SpaceSpec, build_operator
from .liouville import dressed_lindbladian, transition_elements, unvec, vec
from .models import diagonalize, rabi_hamiltonian

__all__ = [
    "Trajectory",
    "evolve",
    "evolve_time_dependent",
    "steady_state",
    "driven_transmission_sweep",
    "fit_two_lorentzians",
    "photon_rate_numeric",
]


@dataclass
class Trajectory:
    """Time grid plus observables; optionally the full density matrices."""

    t: np.ndarray
    observables: dict
    rhos: list = field(default=None)

    def quality(self):
        """(max trace drift, max Hermiticity drift) over stored states."""
        if not self.rhos:
            raise ValueError("no stored states")
        tr = max(abs(np.trace(r) - 1.0) for r in self.rhos)
        he = max(np.linalg.norm(r - r.conj().T) for r in self.rhos)
        return tr, he


def _check_rho(rho):
    if np.linalg.norm(rho - rho.conj().T) > 1e-10 * max(np.linalg.norm(rho), 1.0):
        raise ValueError("initial state not Hermitian")
    if abs(np.trace(rho) - 1.0) > 1e-10:
        raise ValueError("initial state not normalized")


def _collect(ts, rho_list, observables, store_states):
    obs = {}
    for name, op in (observables or {}).items():
        vals = np.array([np.trace(op @ r) for r in rho_list])
        if np.max(np.abs(vals.imag)) < 1e-8 * max(np.max(np.abs(vals)), 1.0):
            vals = vals.real
        obs[name] = vals
    return Trajectory(np.asarray(ts), obs, rho_list if store_states else None)


def evolve(rho0, L, grid, observables=None, method="rk", rtol=1e-8, atol=1e-10,
           store_states=True):
    """Integrate rho' = L rho over the grid (grid[0] is the initial time)."""
    grid = np.asarray(grid, dtype=float)
    if np.any(np.diff(grid) <= 0):
        raise ValueError("time grid must be strictly increasing")
    _check_rho(rho0)
    v0 = vec(rho0)
    if method == "expm":
        vals, vr = np.linalg.eig(L.matrix)
        c0 = np.linalg.solve(vr, v0)
        rhos = [unvec(vr @ (c0 * np.exp(vals * (t - grid[0])))) for t in grid]
        return _collect(grid, rhos, observables, store_states)
    if method != "rk":
        raise ValueError(f"unknown method: {method!r}")
    sol = solve_ivp(
        lambda t, v: L.matrix @ v,
        (grid[0], grid[-1]),
        v0,
        t_eval=grid,
        method="DOP853",
        rtol=rtol,
        atol=atol,
    )
    if not sol.success:
        raise RuntimeError(f"integration failed: {sol.message}")
    rhos = [unvec(sol.y[:, i]) for i in range(sol.y.shape[1])]
    return _collect(grid, rhos, observables, store_states)


def evolve_time_dependent(rho0, H_of_t, terms, grid, observables=None,
                          rtol=1e-8, atol=1e-10, store_states=True):
    """Same integrator with H evaluated each stage; dissipators static.

    terms is a list of DissipatorTerm (may be empty).
    """
    grid = np.asarray(grid, dtype=float)
    if np.any(np.diff(grid) <= 0):
        raise ValueError("time grid must be strictly increasing")
    _check_rho(rho0)
    d = rho0.shape[0]
    if terms:
        from .liouville import assemble

        D = assemble(np.zeros((d, d)), terms).matrix
    else:
        D = None

    def rhs(t, v):
        rho = unvec(v)
        H = H_of_t(t)
        drho = -1j * (H @ rho - rho @ H)
        dv = vec(drho)
        if D is not None:
            dv = dv + D @ v
        return dv

    sol = solve_ivp(rhs, (grid[0], grid[-1]), vec(rho0), t_eval=grid,
                    method="DOP853", rtol=rtol, atol=atol)
    if not sol.success:
        raise RuntimeError(f"integration failed: {sol.message}")
    rhos = [unvec(sol.y[:, i]) for i in range(sol.y.shape[1])]
    return _collect(grid, rhos, observables, store_states)


def steady_state(L, uniqueness_ratio=1e3):
    """Null vector of the Liouvillian, Hermitized and trace-normalized."""
    vals, vecs = np.linalg.eig(L.matrix)
    order = np.argsort(np.abs(vals))
    scale = np.max(np.abs(vals))
    second = np.abs(vals[order[1]])
    # unique zero mode: the runner-up must sit well away from zero, both
    # relative to the smallest eigenvalue and to the overall spectral scale
    if second < 1e-12 * scale or second < uniqueness_ratio * np.abs(vals[order[0]]):
        zero_modes = [vals[i] for i in order[:4]]
        raise RuntimeError(
            f"steady state not unique; smallest eigenvalues {zero_modes}"
        )
    rho = unvec(vecs[:, order[0]])
    rho = 0.5 * (rho + rho.conj().T)
    rho = rho / np.trace(rho)
    res = np.linalg.norm(L.matrix @ vec(rho))
    if res > 1e-9 * np.linalg.norm(L.matrix):
        raise RuntimeError(f"steady-state residual too large: {res:.2e}")
    return rho


def _three_level_rates(p, spec, spectra, n_levels=3):
    """Exact eigensystem data for the lowest levels plus dressed rates to g0."""
    H = rabi_hamiltonian(p, spec)
    Pi = build_operator(spec, "parity")
    es = diagonalize(H, Pi)
    a = build_operator(spec, "annihilation")
    X = build_operator(spec, "position_X")
    sx = build_operator(spec, "sigma_x")
    sz = build_operator(spec, "sigma_z")
    ajk = transition_elements(es, a)
    Xjk = transition_elements(es, X)
    sxjk = transition_elements(es, sx)
    szjk = transition_elements(es, sz)
    out = {"es": es, "a": ajk, "X": Xjk, "sx": sxjk, "sz": szjk}
    rates = {}
    for j in range(1, n_levels):
        w = es.delta(j, 0)
        r = spectra["kappa"].eval(w) * abs(Xjk[0, j]) ** 2
        r += spectra["gamma"].eval(w) * abs(sxjk[0, j]) ** 2
        rates[j] = r
    out["decay"] = rates
    return out


def driven_transmission_sweep(p, spec, spectra, epsilon, omega_d_grid,
                              n_levels=3):
    """Steady-state Im<a> vs drive frequency in the rotating three-level model.

    For each omega_d: generator with the lowest n_levels exact dressed levels
    in the frame rotating at omega_d (RWA on the drive), drive matrix
    elements <j|a^dag|g0~>, dressed relaxation/dephasing rates; dense steady
    state; record Im Tr[a rho].
    """
    from .liouville import DissipatorTerm, assemble

    data = _three_level_rates(p, spec, spectra, n_levels)
    es = data["es"]
    ajk = data["a"]
    szjk = data["sz"]
    gphi = spectra.get("gamma_phi")
    ims = np.empty(len(omega_d_grid))
    for i, wd in enumerate(np.asarray(omega_d_grid, dtype=float)):
        Hrot = np.zeros((n_levels, n_levels), dtype=complex)
        for j in range(1, n_levels):
            Hrot[j, j] = es.delta(j, 0) - wd
        for j in range(1, n_levels):
            Hrot[j, 0] += np.conj(epsilon) * np.conj(ajk[0, j])
            Hrot[0, j] += epsilon * ajk[0, j]
        terms = []
        for j in range(1, n_levels):
            jump = np.zeros((n_levels, n_levels), dtype=complex)
            jump[0, j] = 1.0
            terms.append(DissipatorTerm(jump, data["decay"][j], {"bath": "relax"}))
        if gphi is not None:
            coll = np.diag([np.real(szjk[j, j]) for j in range(n_levels)]).astype(
                complex
            )
            terms.append(
                DissipatorTerm(coll, 0.5 * gphi.eval(0.0), {"bath": "gamma_phi"})
            )
            for j in range(n_levels):
                for k in range(n_levels):
                    if j == k:
                        continue
                    r = 0.5 * gphi.eval(es.delta(k, j)) * abs(szjk[j, k]) ** 2
                    if r > 0:
                        jump = np.zeros((n_levels, n_levels), dtype=complex)
                        jump[j, k] = 1.0
                        terms.append(DissipatorTerm(jump, r, {"bath": "gamma_phi"}))
        Lrot = assemble(Hrot, terms)
        rho = steady_state(Lrot)
        a3 = np.zeros((n_levels, n_levels), dtype=complex)
        for j in range(1, n_levels):
            a3[0, j] = ajk[0, j]
        ims[i] = np.imag(np.trace(a3 @ rho))
    return ims


def fit_two_lorentzians(omega, y, center_guesses, width_guess):
    """Least-squares fit of y = sum_i A_i w_i / (w_i^2 + (x - c_i)^2).

    Returns dict with centers, widths (HWHM), amplitudes.
    """
    omega = np.asarray(omega, float)
    y = np.asarray(y, float)
    c1, c2 = center_guesses
    a0 = np.max(np.abs(y))
    sgn = np.sign(y[np.argmax(np.abs(y))])

    def model(q):
        a1, a2, w1, w2, x1, x2 = q
        return a1 * w1 / (w1**2 + (omega - x1) ** 2) + a2 * w2 / (
            w2**2 + (omega - x2) ** 2
        )

    q0 = [sgn * a0 * width_guess, sgn * a0 * width_guess, width_guess, width_guess, c1, c2]
    res = least_squares(lambda q: model(q) - y, q0, xtol=1e-14, ftol=1e-14)
    a1, a2, w1, w2, x1, x2 = res.x
    if x1 > x2:
        a1, a2, w1, w2, x1, x2 = a2, a1, w2, w1, x2, x1
    return {
        "amplitudes": (a1, a2),
        "widths": (abs(w1), abs(w2)),
        "centers": (x1, x2),
        "residual": float(np.sqrt(np.mean(res.fun**2))),
    }


def photon_rate_numeric(p, spec, spectra, n_levels=6, slope_check=False):
    """beta = Tr[a^dag a * L_dr |g0~><g0~|] from the full dressed Liouvillian.

    With slope_check=True also returns the finite-difference slope of <n>(t)
    over an early time window (expm propagation), as a cross-check.
    """
    H = rabi_hamiltonian(p, spec)
    Pi = build_operator(spec, "parity")
    es = diagonalize(H, Pi)
    L = dressed_lindbladian(es, spectra, H, n_levels)
    g0 = es.states[:, 0]
    rho0 = np.outer(g0, g0.conj())
    num = build_operator(spec, "number")
    beta = float(np.real(np.trace(num @ L.apply(rho0))))
    if not slope_check:
        return beta
    tmax = 0.01 / max(abs(beta), 1e-12)
    grid = np.linspace(0.0, tmax, 5)
    traj = evolve(rho0, L, grid, observables={"n": num}, method="expm",
                  store_states=False)
    slope = np.polyfit(traj.t, traj.observables["n"], 1)[0]
    return beta, float(slope)
