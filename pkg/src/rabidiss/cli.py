"""Config-driven experiment runner.

Usage:
    rabidiss run <config.ini> [--out DIR] [--workers N] [--nmax N]
    rabidiss validate <config.ini>

Configs are INI files; all frequencies are entered as nu = omega/2pi in GHz
and all rates in MHz. Each run writes one or more CSV files (first line
'# schema=1') plus a JSON manifest recording the config hash, truncation
and tolerances, so re-running the same config reproduces the outputs
bit-for-bit.

Exit codes: 0 success, 2 config error, 3 convergence-guard failure.
"""

import argparse
import configparser
import hashlib
import json
import multiprocessing
import sys
from pathlib import Path

import numpy as np

from . import __version__, noise
from .analytic import (
    bs_matrix_elements,
    n_crit,
    photon_rate_beta,
    sideband_coefficients,
    splitting_rates,
)
from .dynamics import (
    driven_transmission_sweep,
    evolve,
    evolve_time_dependent,
    fit_two_lorentzians,
    steady_state,
)
from .hilbert import SpaceSpec, build_operator
from .liouville import dressed_lindbladian, standard_lindbladian, transition_elements
from .models import (
    LAMBDA_GUARD,
    SystemParams,
    diagonalize,
    modulated_dispersive_hamiltonian,
    rabi_hamiltonian,
)
from .units import ghz, mhz, to_ghz, to_mhz

EXPERIMENTS = (
    "ground_state_heating",
    "rabi_splitting",
    "photon_generation",
    "ncrit_report",
    "sidebands",
    "matrix_element_audit",
)

SCHEMA_LINE = "# schema=1\n"


class ConfigError(Exception):
    """Invalid or missing configuration; message names the section/field."""


# ---------------------------------------------------------------- config


def _get(cp, section, key, cast=str, default=None, required=False):
    if not cp.has_option(section, key):
        if required:
            raise ConfigError(f"[{section}] missing required key '{key}'")
        return default
    raw = cp.get(section, key)
    try:
        return cast(raw)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"[{section}] {key} = {raw!r}: {exc}") from exc


def _float_list(raw):
    return [float(x) for x in raw.replace(",", " ").split()]


def load_config(path):
    """Parse and validate an INI config into a plain dict."""
    p = Path(path)
    if not p.is_file():
        raise ConfigError(f"config file not found: {path}")
    cp = configparser.ConfigParser()
    try:
        cp.read(p)
    except configparser.Error as exc:
        raise ConfigError(f"cannot parse {path}: {exc}") from exc

    name = _get(cp, "experiment", "name", required=True)
    if name not in EXPERIMENTS:
        raise ConfigError(
            f"[experiment] name = {name!r}; expected one of {', '.join(EXPERIMENTS)}"
        )

    cfg = {
        "experiment": name,
        "config_path": str(p),
        "config_sha256": hashlib.sha256(p.read_bytes()).hexdigest(),
        "system": {
            "omega_a_ghz": _get(cp, "system", "omega_a_ghz", float, required=True),
            "omega_r_ghz": _get(cp, "system", "omega_r_ghz", float, required=True),
            "g_ghz": _get(cp, "system", "g_ghz", float, required=True),
        },
        "baths": {},
        "numerics": {
            "n_max": _get(cp, "numerics", "n_max", int, 12),
            "n_levels": _get(cp, "numerics", "n_levels", int, 8),
            "rtol": _get(cp, "numerics", "rtol", float, 1e-8),
            "atol": _get(cp, "numerics", "atol", float, 1e-10),
            "t_max_ns": _get(cp, "numerics", "t_max_ns", float, None),
            "n_times": _get(cp, "numerics", "n_times", int, 101),
        },
        "sweep": None,
        "options": {},
        "prefix": _get(cp, "output", "prefix", str, name)
        if cp.has_section("output")
        else name,
    }
    for sec in cp.sections():
        if not sec.startswith("bath."):
            continue
        bath = sec.split(".", 1)[1]
        if bath not in ("kappa", "gamma", "gamma_phi"):
            raise ConfigError(f"[{sec}] unknown bath; use kappa, gamma or gamma_phi")
        cfg["baths"][bath] = _parse_bath(cp, sec)
    if cp.has_section("sweep"):
        cfg["sweep"] = _parse_sweep(cp)
    if cp.has_section("options"):
        cfg["options"] = dict(cp.items("options"))

    for key in ("omega_a_ghz", "omega_r_ghz"):
        if cfg["system"][key] <= 0:
            raise ConfigError(f"[system] {key} must be positive")
    if cfg["system"]["g_ghz"] < 0:
        raise ConfigError("[system] g_ghz must be nonnegative")
    num = cfg["numerics"]
    if num["n_max"] < 2:
        raise ConfigError("[numerics] n_max must be at least 2")
    if num["n_levels"] > 2 * (num["n_max"] + 1):
        raise ConfigError(
            f"[numerics] n_levels = {num['n_levels']} exceeds the "
            f"{2 * (num['n_max'] + 1)} states available at n_max = {num['n_max']}"
        )
    if cfg["sweep"] is not None and len(cfg["sweep"]["values"]) == 0:
        raise ConfigError("[sweep] grid is empty")
    return cfg


def _parse_bath(cp, sec):
    kind = _get(cp, sec, "kind", str, "white")
    if kind not in noise.KINDS:
        raise ConfigError(f"[{sec}] kind = {kind!r}; expected one of {noise.KINDS}")
    spec = {
        "kind": kind,
        "mode": _get(cp, sec, "mode", str, "thermal"),
        "kbt_ghz": _get(cp, sec, "kbt_ghz", float, 0.0),
    }
    if spec["mode"] not in noise.MODES:
        raise ConfigError(f"[{sec}] mode = {spec['mode']!r}")
    if kind == "white":
        spec["rate_mhz"] = _get(cp, sec, "rate_mhz", float, required=True)
    elif kind == "ohmic":
        spec["rate_mhz"] = _get(cp, sec, "rate_mhz", float, required=True)
        spec["omega_ref_ghz"] = _get(cp, sec, "omega_ref_ghz", float, required=True)
    elif kind == "one_over_f":
        spec["amplitude_mhz_ghz"] = _get(
            cp, sec, "amplitude_mhz_ghz", float, required=True
        )
        spec["omega_min_ghz"] = _get(cp, sec, "omega_min_ghz", float, required=True)
        spec["dc_rate_mhz"] = _get(cp, sec, "dc_rate_mhz", float, 0.0)
    elif kind == "band_limited_white":
        spec["rate_mhz"] = _get(cp, sec, "rate_mhz", float, required=True)
        spec["cutoff_ghz"] = _get(cp, sec, "cutoff_ghz", float, required=True)
    elif kind == "tabulated":
        spec["table_csv"] = _get(cp, sec, "table_csv", str, required=True)
        spec["out_of_range"] = _get(cp, sec, "out_of_range", str, "error")
    return spec


def _parse_sweep(cp):
    param = _get(cp, "sweep", "parameter", str, required=True)
    if cp.has_option("sweep", "values"):
        values = _get(cp, "sweep", "values", _float_list, required=True)
    else:
        start = _get(cp, "sweep", "start", float, required=True)
        stop = _get(cp, "sweep", "stop", float, required=True)
        points = _get(cp, "sweep", "points", int, required=True)
        if points < 1:
            raise ConfigError("[sweep] points must be positive")
        values = list(np.linspace(start, stop, points))
    return {"parameter": param, "values": values}


def build_spectrum(spec):
    """NoiseSpectrum from a parsed bath block (GHz/MHz units at input)."""
    kind = spec["kind"]
    mode = spec["mode"]
    kbt = ghz(spec["kbt_ghz"])
    if kind == "white":
        return noise.white(mhz(spec["rate_mhz"]), mode, kbt)
    if kind == "ohmic":
        return noise.ohmic(
            mhz(spec["rate_mhz"]), ghz(spec["omega_ref_ghz"]), mode, kbt
        )
    if kind == "one_over_f":
        return noise.one_over_f(
            mhz(spec["amplitude_mhz_ghz"]) * ghz(1.0),
            ghz(spec["omega_min_ghz"]),
            mhz(spec["dc_rate_mhz"]),
            mode,
            kbt,
        )
    if kind == "band_limited_white":
        return noise.band_limited_white(
            mhz(spec["rate_mhz"]), ghz(spec["cutoff_ghz"]), mode, kbt
        )
    if kind == "tabulated":
        return noise.tabulated_from_csv(
            spec["table_csv"], out_of_range=spec["out_of_range"], mode=mode, kbt=kbt
        )
    raise ConfigError(f"unhandled bath kind {kind!r}")


def _params(cfg, g_ghz=None):
    s = cfg["system"]
    g = s["g_ghz"] if g_ghz is None else g_ghz
    return SystemParams(ghz(s["omega_a_ghz"]), ghz(s["omega_r_ghz"]), ghz(g))


def _spectra(cfg):
    return {name: build_spectrum(spec) for name, spec in cfg["baths"].items()}


def _white_rate(cfg, bath, default=0.0):
    spec = cfg["baths"].get(bath)
    if spec is None:
        return default
    if spec["kind"] != "white":
        raise ConfigError(
            f"[bath.{bath}] experiment requires a white spectrum here"
        )
    return mhz(spec["rate_mhz"])


# ---------------------------------------------------------------- validate


def validate_config(cfg):
    """Dry-run checks; returns a list of warning strings (no computation)."""
    warnings_out = []
    sweep_vals = cfg["sweep"]["values"] if cfg["sweep"] else [None]
    sweep_param = cfg["sweep"]["parameter"] if cfg["sweep"] else None
    g_values = (
        sweep_vals if sweep_param == "g_ghz" else [cfg["system"]["g_ghz"]]
    )
    num = cfg["numerics"]
    for g in g_values:
        p = _params(cfg, g)
        if p.Lam > LAMBDA_GUARD:
            warnings_out.append(
                f"g/2pi = {g} GHz gives Lambda = {p.Lam:.3f} > {LAMBDA_GUARD}; "
                "second-order dressed-state results are unreliable this deep"
            )
        if p.g > 0:
            kappa = _white_rate(cfg, "kappa", mhz(0.1))
            crit = n_crit(p, kappa)
            nc = min(crit["odd_bath"], crit["even_bath"])
            if num["n_levels"] > nc + 1:
                warnings_out.append(
                    f"n_levels = {num['n_levels']} exceeds the critical excitation "
                    f"number {nc:.1f} at g/2pi = {g} GHz; dressed rates are not "
                    "trustworthy that high in the ladder"
                )
        # truncation estimate: the highest requested level should sit well
        # below the Fock ceiling
        if num["n_levels"] > 2 * num["n_max"] - 2:
            warnings_out.append(
                f"n_levels = {num['n_levels']} is close to the truncation edge at "
                f"n_max = {num['n_max']}; raise n_max"
            )
    return warnings_out


# ---------------------------------------------------------------- experiments
#
# Each experiment maps (cfg, sweep_value) -> one CSV row (point experiments)
# or directly produces full tables (trajectory experiments). Worker functions
# are module-level so multiprocessing can pickle them.


def _heating_point(args):
    cfg, g_ghz = args
    p = _params(cfg, g_ghz)
    num = cfg["numerics"]
    spec = SpaceSpec(num["n_max"])
    H = rabi_hamiltonian(p, spec)
    es = diagonalize(H, build_operator(spec, "parity"))
    g0 = es.states[:, 0]
    nop = build_operator(spec, "number")
    n_g0 = float(np.real(g0.conj() @ nop @ g0))
    vac = spec.basis_state("g", 0)
    one_minus_fid = 1.0 - abs(np.vdot(g0, vac)) ** 2

    kappa = _white_rate(cfg, "kappa", mhz(0.1))
    gamma1 = _white_rate(cfg, "gamma", mhz(0.1))
    gphi = _white_rate(cfg, "gamma_phi", 0.0)
    if p.g == 0:
        return [g_ghz, 0.0, 0.0, 0.0]
    L_std = standard_lindbladian(spec, kappa, gamma1, gphi, H)
    rho_ss = steady_state(L_std)
    excess_std = float(np.real(np.trace(nop @ rho_ss))) - n_g0

    L_dr = dressed_lindbladian(es, _spectra(cfg), H, num["n_levels"])
    t_max = cfg["numerics"]["t_max_ns"] or 10.0 / max(kappa, 1e-9)
    rho0 = np.outer(g0, g0.conj())
    traj = evolve(
        rho0, L_dr, np.linspace(0.0, t_max, 5), observables={"n": nop},
        method="expm", store_states=False,
    )
    excess_dr = float(np.real(traj.observables["n"][-1])) - n_g0
    return [g_ghz, excess_std, one_minus_fid, excess_dr]


def run_ground_state_heating(cfg, pool):
    values = cfg["sweep"]["values"] if cfg["sweep"] else [cfg["system"]["g_ghz"]]
    rows = _map(pool, _heating_point, [(cfg, g) for g in values])
    return {
        "sweep": (
            ["g_ghz", "excess_photons_std", "one_minus_fidelity",
             "excess_photons_dressed"],
            rows,
        )
    }


def _transmission_point(args):
    cfg, wd_ghz = args
    p = _params(cfg)
    spec = SpaceSpec(cfg["numerics"]["n_max"])
    eps = mhz(float(cfg["options"].get("epsilon_mhz", 0.01)))
    im = driven_transmission_sweep(p, spec, _spectra(cfg), eps, [ghz(wd_ghz)])
    return [wd_ghz, float(im[0])]


def run_rabi_splitting(cfg, pool):
    p = _params(cfg)
    if cfg["sweep"] is not None:
        if cfg["sweep"]["parameter"] != "omega_d_ghz":
            raise ConfigError(
                "[sweep] rabi_splitting sweeps omega_d_ghz"
            )
        wds = cfg["sweep"]["values"]
    else:
        half = splitting_rates(p, *(_spectra(cfg).get(b) for b in
                                    ("kappa", "gamma", "gamma_phi")))
        width = 4.0 * max(half.Gamma_lower, half.Gamma_upper)
        lo = to_ghz(min(p.omega_r - p.g - width, p.omega_r + p.g - width))
        hi = to_ghz(p.omega_r + p.g + width)
        wds = list(np.linspace(lo, hi, 161))
    rows = _map(pool, _transmission_point, [(cfg, w) for w in wds])

    omega = np.array([r[0] for r in rows])
    im_a = np.array([r[1] for r in rows])
    spectra = _spectra(cfg)
    rates = splitting_rates(
        p, spectra.get("kappa"), spectra.get("gamma"), spectra.get("gamma_phi")
    )
    fit = fit_two_lorentzians(
        ghz(omega), im_a,
        (p.omega_r - p.g, p.omega_r + p.g),
        0.5 * (rates.Gamma_lower + rates.Gamma_upper),
    )
    w_lo, w_hi = fit["widths"]
    summary_rows = [
        ["fitted_center_lower_ghz", to_ghz(fit["centers"][0])],
        ["fitted_center_upper_ghz", to_ghz(fit["centers"][1])],
        ["fitted_hwhm_lower_mhz", to_mhz(w_lo)],
        ["fitted_hwhm_upper_mhz", to_mhz(w_hi)],
        ["fitted_asymmetry_mhz", to_mhz(abs(w_lo - w_hi))],
        ["analytic_Gamma_lower_mhz", to_mhz(rates.Gamma_lower)],
        ["analytic_Gamma_upper_mhz", to_mhz(rates.Gamma_upper)],
        ["eta_us_closed_form_mhz", to_mhz(
            abs(_closed_form_eta(cfg, p)))],
        ["splitting_over_2g", (fit["centers"][1] - fit["centers"][0]) / (2 * p.g)],
        ["fit_residual", fit["residual"]],
    ]
    return {
        "sweep": (["omega_d_ghz", "im_a"], [[w, i] for w, i in zip(omega, im_a)]),
        "summary": (["quantity", "value"], summary_rows),
    }


def _closed_form_eta(cfg, p):
    from .analytic import asymmetry_us

    return asymmetry_us(p, _white_rate(cfg, "kappa"), _white_rate(cfg, "gamma"))


def _photon_point(args):
    cfg, g_ghz = args
    from .dynamics import photon_rate_numeric

    p = _params(cfg, g_ghz)
    spec = SpaceSpec(cfg["numerics"]["n_max"])
    gphi = _spectra(cfg)["gamma_phi"]
    beta_num = photon_rate_numeric(
        p, spec, {"gamma_phi": gphi}, n_levels=cfg["numerics"]["n_levels"]
    )
    beta_pred = photon_rate_beta(p, gphi)
    return [g_ghz, to_mhz(beta_num), to_mhz(beta_pred)]


def run_photon_generation(cfg, pool):
    if "gamma_phi" not in cfg["baths"]:
        raise ConfigError("[bath.gamma_phi] required for photon_generation")
    values = cfg["sweep"]["values"] if cfg["sweep"] else [cfg["system"]["g_ghz"]]
    rows = _map(pool, _photon_point, [(cfg, g) for g in values])
    return {
        "sweep": (["g_ghz", "beta_numeric_mhz", "beta_analytic_mhz"], rows)
    }


def run_ncrit_report(cfg, pool):
    p = _params(cfg)
    kappa = _white_rate(cfg, "kappa", mhz(0.1))
    crit = n_crit(p, kappa)
    rows = [
        ["Lambda", p.Lam],
        ["lambda_dispersive", p.lambda_disp if p.Delta != 0 else float("nan")],
        ["n_crit_odd_bath", crit["odd_bath"]],
        ["n_crit_even_bath", crit["even_bath"]],
        ["n_levels_requested", cfg["numerics"]["n_levels"]],
    ]
    return {"report": (["quantity", "value"], rows)}


def run_sidebands(cfg, pool):
    p = _params(cfg)
    if p.Delta == 0:
        raise ConfigError("[system] sidebands needs a detuned qubit (omega_a != omega_r)")
    mode = cfg["options"].get("mode", "red")
    if mode not in ("red", "parametric"):
        raise ConfigError(f"[options] mode = {mode!r}; expected red or parametric")
    eps_z = ghz(float(cfg["options"].get("eps_z_ghz", 0.05)))
    num = cfg["numerics"]
    spec = SpaceSpec(num["n_max"])
    coeff = sideband_coefficients(p, eps_z)
    H0 = modulated_dispersive_hamiltonian(p, spec, 0.0, 1.0, 0.0)
    ie0, ig0, ig1 = (spec.index("e", 0), spec.index("g", 0), spec.index("g", 1))

    if mode == "red":
        V = coeff["red"]
        omega_d = float(np.real(H0[ie0, ie0] - H0[ig1, ig1]))
        t_max = num["t_max_ns"] or np.pi / (2 * V)
        rho0 = np.zeros((spec.dim, spec.dim), dtype=complex)
        rho0[ie0, ie0] = 1.0
        obs_op = np.zeros_like(rho0)
        obs_op[ig1, ig1] = 1.0
        oracle = lambda t: np.sin(V * t) ** 2
        columns = ["t_ns", "p_g1", "oracle_sin2"]
    else:
        eta = coeff["parametric"]
        omega_d = 2.0 * float(np.real(H0[ig1, ig1] - H0[ig0, ig0]))
        t_max = num["t_max_ns"] or 0.25 / eta
        rho0 = np.zeros((spec.dim, spec.dim), dtype=complex)
        rho0[ig0, ig0] = 1.0
        a = build_operator(spec, "annihilation")
        obs_op = a @ a
        oracle = lambda t: 0.5 * np.sinh(4 * eta * t)
        columns = ["t_ns", "abs_a2", "oracle_sinh"]

    grid = np.linspace(0.0, t_max, num["n_times"])
    traj = evolve_time_dependent(
        rho0,
        lambda t: modulated_dispersive_hamiltonian(p, spec, eps_z, omega_d, t),
        [],
        grid,
        observables={"y": obs_op},
        rtol=num["rtol"],
        atol=num["atol"],
        store_states=False,
    )
    y = np.abs(traj.observables["y"])
    rows = [[t, float(v), float(oracle(t))] for t, v in zip(grid, y)]
    return {"trace": (columns, rows)}


def run_matrix_element_audit(cfg, pool):
    p = _params(cfg)
    spec = SpaceSpec(cfg["numerics"]["n_max"])
    H = rabi_hamiltonian(p, spec)
    es = diagonalize(H, build_operator(spec, "parity"))
    from .models import adiabatic_labels

    labels = adiabatic_labels(p, spec, min(cfg["numerics"]["n_levels"], 7))
    ops = {
        "X": build_operator(spec, "position_X"),
        "sigma_x": build_operator(spec, "sigma_x"),
        "sigma_z": build_operator(spec, "sigma_z"),
    }
    rows = []
    for kind, op in ops.items():
        numeric = transition_elements(es, op)
        closed = bs_matrix_elements(p, kind, 2, n_max=cfg["numerics"]["n_max"])
        for key, val in sorted(closed.items()):
            lj, lk = key.split(";")
            if lj not in labels or lk not in labels:
                continue
            j, k = labels.index(lj), labels.index(lk)
            num_val = numeric[j, k]
            rows.append(
                [kind, lj, lk, float(np.real(val)), float(np.real(num_val)),
                 float(abs(val - num_val))]
            )
    return {
        "audit": (
            ["operator", "from", "to", "closed_form", "numeric", "abs_err"],
            rows,
        )
    }


RUNNERS = {
    "ground_state_heating": run_ground_state_heating,
    "rabi_splitting": run_rabi_splitting,
    "photon_generation": run_photon_generation,
    "ncrit_report": run_ncrit_report,
    "sidebands": run_sidebands,
    "matrix_element_audit": run_matrix_element_audit,
}


# ---------------------------------------------------------------- plumbing


def _map(pool, fn, args):
    """Dispatch points to the pool (if any), preserving input order."""
    if pool is None:
        return [fn(a) for a in args]
    return pool.map(fn, args)


def _format_cell(v):
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def write_csv(path, columns, rows):
    with open(path, "w", newline="") as f:
        f.write(SCHEMA_LINE)
        f.write(",".join(columns) + "\n")
        for row in rows:
            f.write(",".join(_format_cell(v) for v in row) + "\n")


def run(cfg, out_dir, workers):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    runner = RUNNERS[cfg["experiment"]]
    pool = None
    try:
        if workers > 1:
            pool = multiprocessing.Pool(workers)
        tables = runner(cfg, pool)
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    files = {}
    for tag, (columns, rows) in tables.items():
        path = out / f"{cfg['prefix']}_{tag}.csv"
        write_csv(path, columns, rows)
        files[tag] = path.name
    manifest = {
        "experiment": cfg["experiment"],
        "config_sha256": cfg["config_sha256"],
        "version": __version__,
        "n_max": cfg["numerics"]["n_max"],
        "n_levels": cfg["numerics"]["n_levels"],
        "rtol": cfg["numerics"]["rtol"],
        "atol": cfg["numerics"]["atol"],
        "outputs": files,
    }
    mpath = out / f"{cfg['prefix']}_manifest.json"
    with open(mpath, "w") as f:
        json.dump(manifest, f, indent=2, sort_keys=True)
        f.write("\n")
    return [str(out / name) for name in files.values()] + [str(mpath)]


# ---------------------------------------------------------------- entry point


def build_parser():
    ap = argparse.ArgumentParser(
        prog="rabidiss",
        description="Dissipative ultrastrong-coupling qubit-resonator experiments",
    )
    sub = ap.add_subparsers(dest="command", required=True)
    for cmd in ("run", "validate"):
        sp = sub.add_parser(cmd)
        sp.add_argument("config", help="INI experiment config")
        if cmd == "run":
            sp.add_argument("--out", default=".", help="output directory")
            sp.add_argument("--workers", type=int, default=1)
            sp.add_argument("--nmax", type=int, default=None,
                            help="override [numerics] n_max")
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2

    if args.command == "validate":
        warnings_out = validate_config(cfg)
        for w in warnings_out:
            print(f"warning: {w}")
        if not warnings_out:
            print("ok: no warnings")
        return 0

    if args.nmax is not None:
        cfg["numerics"]["n_max"] = args.nmax
    if args.workers < 1:
        print("config error: --workers must be positive", file=sys.stderr)
        return 2
    try:
        outputs = run(cfg, args.out, args.workers)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"convergence guard: {exc}", file=sys.stderr)
        return 3
    for path in outputs:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
