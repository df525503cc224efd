"""Dissipative dynamics of a qubit ultrastrongly coupled to a resonator.

Simulates the quantum Rabi model with loss through two master equations —
the standard quantum-optics Lindbladian in terms of bare operators, and a
dressed-basis Lindbladian whose rates sample colored noise spectra at the
true transition frequencies — together with the closed-form perturbative
results (Bloch-Siegert dressed states, transition matrix elements, vacuum
Rabi splitting linewidths, photon generation rates, sideband couplings)
that the numerics are checked against.

Internally all frequencies are angular, in rad/ns; use units.ghz / units.mhz
at the boundaries.
"""

from . import analytic, dynamics, hilbert, liouville, models, noise, units
from .hilbert import SpaceSpec, build_operator
from .liouville import (
    DissipatorTerm,
    Liouvillian,
    assemble,
    dressed_lindbladian,
    standard_lindbladian,
    transition_elements,
)
from .models import (
    Eigensystem,
    SystemParams,
    bs_eigensystem,
    diagonalize,
    dispersive_hamiltonian,
    jc_hamiltonian,
    rabi_hamiltonian,
)
from .noise import NoiseSpectrum
from .dynamics import Trajectory, evolve, steady_state

__version__ = "0.1.0"

__all__ = [
    "analytic",
    "dynamics",
    "hilbert",
    "liouville",
    "models",
    "noise",
    "units",
    "SpaceSpec",
    "build_operator",
    "DissipatorTerm",
    "Liouvillian",
    "assemble",
    "dressed_lindbladian",
    "standard_lindbladian",
    "transition_elements",
    "Eigensystem",
    "SystemParams",
    "bs_eigensystem",
    "diagonalize",
    "dispersive_hamiltonian",
    "jc_hamiltonian",
    "rabi_hamiltonian",
    "NoiseSpectrum",
    "Trajectory",
    "evolve",
    "steady_state",
    "__version__",
]
