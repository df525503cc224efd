"""Bath noise spectra as rate functions of (signed) angular frequency.

A spectrum is a nonnegative shape S+(omega >= 0) plus a closure that decides
what negative frequencies mean:

* mode='classical'  : eval(-w) = eval(w) (symmetric; classical noise source)
* mode='thermal'    : detailed balance with Bose factors,
                      eval(+w) = S+(w) (1 + nbar(w)), eval(-w) = S+(w) nbar(w)
                      so eval(-w) = exp(-w/kBT) eval(+w); at kBT=0 all
                      negative-frequency weight vanishes and eval(+w)=S+(w).

Frequencies in rad/ns; kBT is the thermal energy expressed as an angular
frequency (kB T / hbar).
"""

import numpy as np

__all__ = [
    "NoiseSpectrum",
    "white",
    "ohmic",
    "one_over_f",
    "band_limited_white",
    "tabulated",
    "nbar",
]

KINDS = ("white", "ohmic", "one_over_f", "band_limited_white", "tabulated")
MODES = ("classical", "thermal")


def nbar(omega, kbt):
    """Bose-Einstein occupation 1/(exp(omega/kBT) - 1); zero at kBT = 0."""
    if omega <= 0:
        raise ValueError("nbar requires omega > 0")
    if kbt <= 0:
        return 0.0
    x = omega / kbt
    if x > 700:
        return 0.0
    return 1.0 / np.expm1(x)


class NoiseSpectrum:
    """Rate function of signed frequency with classical or thermal closure."""

    def __init__(self, kind, shape, mode="thermal", kbt=0.0, params=None):
        if kind not in KINDS:
            raise ValueError(f"unknown spectrum kind: {kind!r}")
        if mode not in MODES:
            raise ValueError(f"unknown closure mode: {mode!r}")
        self.kind = kind
        self._shape = shape  # S+(|omega|), nonnegative
        self.mode = mode
        self.kbt = float(kbt)
        self.params = dict(params or {})

    def eval(self, omega):
        """Rate at signed angular frequency omega."""
        w = float(omega)
        s = float(self._shape(abs(w)))
        if s < 0:
            raise ValueError("spectrum shape returned a negative rate")
        if w == 0.0:
            return s
        if self.mode == "classical":
            return s
        if w > 0:
            return s * (1.0 + nbar(w, self.kbt))
        return s * nbar(-w, self.kbt)

    def __call__(self, omega):
        return self.eval(omega)


def white(rate, mode="thermal", kbt=0.0):
    """Flat spectrum S+(w) = rate."""
    if rate < 0:
        raise ValueError("rate must be nonnegative")
    return NoiseSpectrum("white", lambda w: rate, mode, kbt, {"rate": rate})


def ohmic(rate, omega_ref, mode="thermal", kbt=0.0):
    """Linear-in-frequency spectrum S+(w) = rate * w / omega_ref.

    The scale is anchored so the rate at the reference frequency equals the
    measured value there.
    """
    if rate < 0 or omega_ref <= 0:
        raise ValueError("need rate >= 0 and omega_ref > 0")
    return NoiseSpectrum(
        "ohmic",
        lambda w: rate * w / omega_ref,
        mode,
        kbt,
        {"rate": rate, "omega_ref": omega_ref},
    )


def one_over_f(amplitude, omega_min, dc_rate=0.0, mode="classical", kbt=0.0):
    """S+(w) = amplitude / max(w, omega_min), with S+(0) = dc_rate.

    The infrared divergence is regularized at omega_min; the zero-frequency
    (pure-dephasing) rate is an independent parameter because the 1/f form
    says nothing meaningful about it.
    """
    if amplitude < 0 or omega_min <= 0 or dc_rate < 0:
        raise ValueError("invalid 1/f parameters")

    def shape(w):
        if w == 0.0:
            return dc_rate
        return amplitude / max(w, omega_min)

    return NoiseSpectrum(
        "one_over_f",
        shape,
        mode,
        kbt,
        {"amplitude": amplitude, "omega_min": omega_min, "dc_rate": dc_rate},
    )


def band_limited_white(rate, cutoff, mode="classical", kbt=0.0):
    """S+(w) = rate for w <= cutoff, else 0 (sharp cutoff)."""
    if rate < 0 or cutoff <= 0:
        raise ValueError("need rate >= 0 and cutoff > 0")
    return NoiseSpectrum(
        "band_limited_white",
        lambda w: rate if w <= cutoff else 0.0,
        mode,
        kbt,
        {"rate": rate, "cutoff": cutoff},
    )


def tabulated(omegas, rates, out_of_range="error", mode="classical", kbt=0.0):
    """Spectrum from a table of (omega > 0, rate) pairs.

    Linear interpolation in log-frequency. out_of_range: 'error' or 'clamp'.
    """
    omegas = np.asarray(omegas, dtype=float)
    rates = np.asarray(rates, dtype=float)
    if omegas.ndim != 1 or omegas.shape != rates.shape or omegas.size < 2:
        raise ValueError("need matching 1-d arrays with at least two points")
    if np.any(omegas <= 0) or np.any(np.diff(omegas) <= 0):
        raise ValueError("frequencies must be positive and strictly increasing")
    if np.any(rates < 0):
        raise ValueError("rates must be nonnegative")
    if out_of_range not in ("error", "clamp"):
        raise ValueError("out_of_range must be 'error' or 'clamp'")
    logw = np.log(omegas)

    def shape(w):
        if w < omegas[0] or w > omegas[-1]:
            if out_of_range == "error":
                raise ValueError(f"frequency {w} outside tabulated range")
            w = min(max(w, omegas[0]), omegas[-1])
        return float(np.interp(np.log(w), logw, rates))

    return NoiseSpectrum(
        "tabulated",
        shape,
        mode,
        kbt,
        {"omega_min": omegas[0], "omega_max": omegas[-1], "out_of_range": out_of_range},
    )


def tabulated_from_csv(path, **kwargs):
    """Load a tabulated spectrum from a two-column CSV (frequency GHz, rate MHz).

    Lines starting with '#' are comments.
    """
    from .units import ghz, mhz

    data = np.loadtxt(path, delimiter=",", comments="#")
    if data.ndim != 2 or data.shape[1] != 2:
        raise ValueError("expected two columns: frequency GHz, rate MHz")
    return tabulated(ghz(data[:, 0]), mhz(data[:, 1]), **kwargs)
