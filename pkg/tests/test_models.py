import numpy as np
import pytest

from rabidiss.hilbert import SpaceSpec, build_operator
from rabidiss.models import (
    SystemParams,
    adiabatic_labels,
    bs_eigensystem,
    bs_hamiltonian,
    bs_mixing_angle,
    bs_unitary,
    diagonalize,
    dispersive_hamiltonian,
    jc_hamiltonian,
    modulated_dispersive_hamiltonian,
    rabi_hamiltonian,
)
from rabidiss.units import ghz


@pytest.fixture
def spec():
    return SpaceSpec(10)


def resonant(g_ghz):
    return SystemParams(ghz(6.0), ghz(6.0), ghz(g_ghz))


def test_derived_parameters():
    p = SystemParams(ghz(6.0), ghz(4.0), ghz(0.5))
    assert np.isclose(p.Sigma, ghz(10.0))
    assert np.isclose(p.Delta, ghz(2.0))
    assert np.isclose(p.Lam, 0.05)
    assert np.isclose(p.mu, p.g**2 / p.Sigma)
    assert np.isclose(p.xi, p.g * p.Lam / (2 * p.omega_r))
    assert np.isclose(p.lambda_disp, p.g / p.Delta)
    assert np.isclose(p.chi, p.g**2 / p.Delta)
    assert np.isclose(p.zeta, p.g**4 / p.Delta**3)


def test_rabi_vs_jc(spec):
    p = resonant(0.5)
    Hr = rabi_hamiltonian(p, spec)
    Hjc = jc_hamiltonian(p, spec)
    # JC keeps only the excitation-conserving part of the coupling
    cr = Hr - Hjc
    g0 = spec.basis_state("g", 0)
    e1 = spec.basis_state("e", 1)
    assert abs(e1.conj() @ cr @ g0 - p.g) < 1e-12
    assert abs(e1.conj() @ Hjc @ g0) < 1e-12
    ge = spec.basis_state("g", 1)
    e0 = spec.basis_state("e", 0)
    assert abs(ge.conj() @ Hjc @ e0 - p.g) < 1e-12


def test_diagonalize_properties(spec):
    p = resonant(1.0)
    H = rabi_hamiltonian(p, spec)
    Pi = build_operator(spec, "parity")
    es = diagonalize(H, Pi)
    assert np.all(np.diff(es.energies) >= 0)
    assert np.allclose(es.states.conj().T @ es.states, np.eye(spec.dim))
    assert set(np.round(es.parities).astype(int)) == {-1, 1}
    # residual of the eigenproblem
    res = H @ es.states - es.states * es.energies
    assert np.linalg.norm(res) < 1e-9 * np.linalg.norm(H)


def test_ground_state_parity_and_photons(spec):
    p = resonant(1.0)
    es = diagonalize(rabi_hamiltonian(p, spec), build_operator(spec, "parity"))
    assert es.parities[0] == 1.0
    g0 = es.states[:, 0]
    num = build_operator(spec, "number")
    n = float(np.real(g0.conj() @ num @ g0))
    # dressed ground contains Lambda^2-scale virtual photons
    assert 0 < n < 3 * (p.Lam**2 + 2 * p.xi**2)


def test_bs_eigensystem_matches_exact(spec):
    p = resonant(1.0)
    es = diagonalize(rabi_hamiltonian(p, spec), build_operator(spec, "parity"))
    bs = bs_eigensystem(p, spec, 5)
    for j in range(5):
        ov = abs(np.vdot(bs.states[:, j], es.states[:, j])) ** 2
        assert ov > 1.0 - 1e-3
        assert abs(bs.energies[j] - es.energies[j]) < 5e-3 * p.Sigma


def test_bs_energy_error_third_order(spec):
    # absolute energy error of the closed forms shrinks ~8x when g halves
    errs = []
    for g_ghz in (1.0, 0.5):
        p = resonant(g_ghz)
        es = diagonalize(rabi_hamiltonian(p, spec), build_operator(spec, "parity"))
        bs = bs_eigensystem(p, spec, 6)
        errs.append(max(abs(bs.energies[j] - es.energies[j]) for j in range(6)))
    ratio = errs[0] / errs[1]
    assert 5.0 < ratio < 13.0


def test_bs_unitary_and_hamiltonian(spec):
    p = resonant(0.5)
    U = bs_unitary(p, spec)
    assert np.allclose(U.conj().T @ U, np.eye(spec.dim), atol=1e-12)
    # transformed Rabi Hamiltonian matches the closed form up to O(Lambda^3),
    # away from the truncation edge
    Hr = rabi_hamiltonian(p, spec)
    Hbs = bs_hamiltonian(p, spec)
    diff = U.conj().T @ Hr @ U - Hbs
    keep = [spec.index(q, n) for q in "ge" for n in range(6)]
    block = diff[np.ix_(keep, keep)]
    assert np.linalg.norm(block, ord=2) < 30.0 * p.Lam**3 * p.Sigma


def test_lambda_guard_warning(spec):
    p = SystemParams(ghz(6.0), ghz(6.0), ghz(4.0))
    with pytest.warns(UserWarning):
        bs_unitary(p, spec)


def test_mixing_angle_range():
    for g_ghz in (0.2, 0.5, 1.0):
        for n in (1, 2, 3):
            th = bs_mixing_angle(SystemParams(ghz(6), ghz(5), ghz(g_ghz)), n)
            assert -np.pi / 2 < th < 0.0
    # near resonance the doublet is an equal mixture
    th1 = bs_mixing_angle(resonant(0.1), 1)
    assert abs(th1 + np.pi / 4) < 0.01


def test_adiabatic_labels(spec):
    p = resonant(1.0)
    assert adiabatic_labels(p, spec, 5) == ["g0", "1-", "1+", "2-", "2+"]


def test_dispersive_guards(spec):
    with pytest.raises(ValueError):
        dispersive_hamiltonian(resonant(0.5), spec)
    with pytest.warns(UserWarning):
        dispersive_hamiltonian(SystemParams(ghz(6.0), ghz(5.9), ghz(0.5)), spec)


def test_dispersive_levels(spec):
    p = SystemParams(ghz(6.0), ghz(4.5), ghz(0.15))
    H = dispersive_hamiltonian(p, spec)
    e0 = spec.index("e", 0)
    g0 = spec.index("g", 0)
    # qubit splitting picks up the full dispersive shift 2*chi*(n + 1/2) -> chi
    split = np.real(H[e0, e0] - H[g0, g0])
    assert abs(split - (p.omega_a + p.chi)) < 1e-12


def test_modulated_hamiltonian_static_limit(spec):
    p = SystemParams(ghz(6.0), ghz(4.5), ghz(0.15))
    H0 = modulated_dispersive_hamiltonian(p, spec, 0.0, 1.0, 0.0)
    assert np.allclose(H0, H0.conj().T)
    Ht = modulated_dispersive_hamiltonian(p, spec, ghz(0.05), ghz(1.5), 0.3)
    assert np.allclose(Ht, Ht.conj().T)
