"""Unit conventions.

Internally everything is angular frequency in rad/ns and time in ns.
User-facing numbers (CLI, CSV) are plain frequencies nu = omega/2pi,
in GHz for system parameters and MHz for rates, matching the usual
circuit-QED conventions.
"""

import numpy as np

TWO_PI = 2.0 * np.pi


def ghz(nu):
    """Plain frequency in GHz -> angular frequency in rad/ns."""
    return TWO_PI * np.asarray(nu, dtype=float)


def mhz(nu):
    """Plain frequency in MHz -> angular frequency in rad/ns."""
    return TWO_PI * 1e-3 * np.asarray(nu, dtype=float)


def to_ghz(omega):
    """Angular frequency in rad/ns -> plain frequency in GHz."""
    return np.asarray(omega, dtype=float) / TWO_PI


def to_mhz(omega):
    """Angular frequency in rad/ns -> plain frequency in MHz."""
    return 1e3 * np.asarray(omega, dtype=float) / TWO_PI
