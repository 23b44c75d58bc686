"""Ring configuration and the derived dimensionless quantities.

Everything downstream (spectrum, occupation, observables) consumes a
``RingParams`` plus the ``DerivedQuantities`` computed here: enclosed
flux, reduced flux l' = flux/(h/e), the time scale lam = m*r0^2/hbar,
the rotation shift lam*Omega and the cyclotron frequency e|B|/m.

All fields are SI; unit conversions (nm, mK, GHz, ueV) belong to the
sweep/CLI layer only.
"""

import math
import numbers
from dataclasses import dataclass, replace

from .constants import ELECTRON_MASS, ELEMENTARY_CHARGE, HBAR, flux_quantum
from .errors import ParameterError, ZeroFieldError

__all__ = [
    "RingParams",
    "DerivedQuantities",
    "derive",
    "cancellation_rotation",
    "energy_scale",
    "field_for_reduced_flux",
    "with_reduced_flux",
]


@dataclass(frozen=True)
class RingParams:
    """Physical configuration of one ring run.

    radius      ring radius r0 (m), > 0
    mass        carrier mass (kg); defaults to the bare electron mass
    rotation    frame angular velocity Omega (rad/s), signed
    field       uniform perpendicular magnetic field B (T), signed
    temperature absolute temperature (K), >= 0
    electrons   number of spinless electrons on the ring, integer >= 1
    """

    radius: float
    mass: float = ELECTRON_MASS
    rotation: float = 0.0
    field: float = 0.0
    temperature: float = 0.0
    electrons: int = 1

    def __post_init__(self):
        for name in ("radius", "mass", "rotation", "field", "temperature"):
            value = getattr(self, name)
            if not isinstance(value, numbers.Real) or not math.isfinite(value):
                raise ParameterError(f"{name} must be a finite real number, got {value!r}")
        if self.radius <= 0:
            raise ParameterError(f"radius must be positive, got {self.radius!r}")
        if self.mass <= 0:
            raise ParameterError(f"mass must be positive, got {self.mass!r}")
        if self.temperature < 0:
            raise ParameterError(f"temperature must be >= 0, got {self.temperature!r}")
        if not isinstance(self.electrons, numbers.Integral) or isinstance(self.electrons, bool):
            raise ParameterError(f"electrons must be an integer, got {self.electrons!r}")
        if self.electrons < 1:
            raise ParameterError(f"electrons must be >= 1, got {self.electrons!r}")


@dataclass(frozen=True)
class DerivedQuantities:
    """Quantities derived from a RingParams, all pure functions of it.

    flux            enclosed magnetic flux pi*r0^2*B (Wb)
    reduced_flux    l' = flux/(h/e), dimensionless
    lam             m*r0^2/hbar (s)
    rotation_shift  lam*Omega, dimensionless displacement of every parabola
    cyclotron       e*|B|/m (rad/s), >= 0
    """

    flux: float
    reduced_flux: float
    lam: float
    rotation_shift: float
    cyclotron: float


def derive(params: RingParams) -> DerivedQuantities:
    """Compute the derived quantities for ``params`` (pure, deterministic)."""
    flux = math.pi * params.radius**2 * params.field
    lam = params.mass * params.radius**2 / HBAR
    return DerivedQuantities(
        flux=flux,
        reduced_flux=flux / flux_quantum(),
        lam=lam,
        rotation_shift=lam * params.rotation,
        cyclotron=abs(ELEMENTARY_CHARGE * params.field) / params.mass,
    )


def cancellation_rotation(params: RingParams) -> float:
    """Rotation rate -e*B/(2m) at which rotation cancels the field's kinetic coupling.

    Signed: follows the sign of B.  Undefined at B = 0.
    """
    if params.field == 0.0:
        raise ZeroFieldError("cancellation rotation is undefined at zero field")
    return -(ELEMENTARY_CHARGE * params.field / params.mass) / 2.0


def energy_scale(params: RingParams) -> float:
    """Kinetic prefactor hbar^2/(2 m r0^2) in J, the natural level-energy unit."""
    return HBAR**2 / (2.0 * params.mass * params.radius**2)


def field_for_reduced_flux(radius: float, reduced_flux: float) -> float:
    """Field B (T) that threads ``reduced_flux`` flux quanta through a ring of ``radius``."""
    if radius <= 0:
        raise ParameterError(f"radius must be positive, got {radius!r}")
    return reduced_flux * flux_quantum() / (math.pi * radius**2)


def with_reduced_flux(params: RingParams, reduced_flux: float) -> RingParams:
    """Copy of ``params`` with the field set so that l' = ``reduced_flux``."""
    return replace(params, field=field_for_reduced_flux(params.radius, reduced_flux))
