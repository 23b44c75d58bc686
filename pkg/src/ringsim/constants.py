"""Fundamental physical constants (CODATA 2018, SI units).

h, e and k_B are exact by the 2019 SI redefinition; the electron mass is
the CODATA 2018 recommended value.  hbar is derived as h/(2*pi) at full
double precision so that h == 2*pi*hbar holds to rounding error; the
10-digit display value 1.054571817e-34 would only satisfy that identity
to ~6e-10.

Source: https://physics.nist.gov/cuu/Constants/
"""

import math
from dataclasses import dataclass

PLANCK = 6.62607015e-34  # J s (exact)
ELEMENTARY_CHARGE = 1.602176634e-19  # C (exact)
ELECTRON_MASS = 9.1093837015e-31  # kg
BOLTZMANN = 1.380649e-23  # J/K (exact)
HBAR = PLANCK / (2.0 * math.pi)  # J s, 1.0545718176461565e-34

MICRO_EV = ELEMENTARY_CHARGE * 1e-6  # J per micro-electronvolt


@dataclass(frozen=True)
class PhysicalConstants:
    """Pinned constants; not user-configurable, for bit-reproducible output."""

    hbar: float = HBAR
    electron_charge: float = ELEMENTARY_CHARGE
    electron_mass: float = ELECTRON_MASS
    boltzmann: float = BOLTZMANN
    planck: float = PLANCK


CONSTANTS = PhysicalConstants()


def flux_quantum() -> float:
    """Normal-metal flux quantum h/e in Wb (4.135667696...e-15)."""
    return PLANCK / ELEMENTARY_CHARGE
