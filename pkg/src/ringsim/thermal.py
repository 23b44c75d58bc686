"""Fermi-Dirac occupation of ring levels at fixed electron number.

The ring is filled with N spinless electrons (one per orbital quantum
number m, no spin factor).  At T > 0 the chemical potential mu is found
by bisection on the strictly increasing function mu -> sum_m f(E_m); at
T = 0 levels are filled in ascending energy, splitting a partially
needed degenerate shell equally so that observables keep the m -> -m
symmetry an infinitesimal temperature would produce.
"""

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from .constants import BOLTZMANN
from .core import energy_scale
from .errors import ParameterError, SolverError, WindowMismatchError

if TYPE_CHECKING:  # pragma: no cover
    from .spectrum import Spectrum

__all__ = [
    "ThermalState",
    "fermi_occupation",
    "solve_chemical_potential",
    "zero_temperature_occupation",
    "thermal_state",
    "internal_energy",
]

# |sum_m f - N| convergence target for the mu bisection (electrons).
OCCUPATION_TOLERANCE = 1e-10

# Levels closer than this, relative to their size (or to the ring's
# natural energy unit near E = 0), count as one degenerate shell at T=0.
DEGENERACY_RTOL = 1e-12

_MAX_BISECTIONS = 300


@dataclass(frozen=True, eq=False)
class ThermalState:
    """Occupation of a spectrum window at fixed electron number.

    occupations maps each window m to f in [0, 1]; the values sum to
    electron_count within OCCUPATION_TOLERANCE.  Treat as immutable.
    """

    chemical_potential: float
    temperature: float
    occupations: dict[int, float]
    electron_count: float


def fermi_occupation(energy, mu, temperature):
    """Fermi-Dirac occupation of a level, overflow-safe; scalar or ndarray.

    T > 0: 1/(exp((E-mu)/kT)+1), with exponents beyond +-700 clamped to
    occupation 0 and 1.  T = 0: step function, exactly 1/2 at E == mu.
    """
    if temperature < 0:
        raise ParameterError(f"temperature must be >= 0, got {temperature!r}")
    e = np.asarray(energy, dtype=float)
    if temperature == 0.0:
        out = np.where(e < mu, 1.0, np.where(e == mu, 0.5, 0.0))
    else:
        x = (e - mu) / (BOLTZMANN * temperature)
        out = 1.0 / (np.exp(np.clip(x, -700.0, 700.0)) + 1.0)
        out = np.where(x > 700.0, 0.0, np.where(x < -700.0, 1.0, out))
    return float(out) if np.ndim(energy) == 0 else out


def _bisect_mu(energies: np.ndarray, electrons: float, temperature: float) -> float:
    """Chemical potential placing ``electrons`` on ``energies`` at T > 0."""
    margin = 50.0 * BOLTZMANN * temperature
    lo = float(energies.min()) - margin
    hi = float(energies.max()) + margin

    capacity = float(np.sum(fermi_occupation(energies, hi, temperature)))
    if capacity < electrons:
        raise SolverError(
            f"window of {energies.size} levels holds at most {capacity:.12g} electrons "
            f"at T={temperature!r} K; requested {electrons!r} "
            f"(deficit {electrons - capacity:.3g})"
        )

    for _ in range(_MAX_BISECTIONS):
        mid = 0.5 * (lo + hi)
        total = float(np.sum(fermi_occupation(energies, mid, temperature)))
        if abs(total - electrons) < OCCUPATION_TOLERANCE:
            return mid
        if total < electrons:
            lo = mid
        else:
            hi = mid
    raise SolverError(
        f"chemical-potential bisection did not reach |sum f - N| < "
        f"{OCCUPATION_TOLERANCE:g} in {_MAX_BISECTIONS} steps"
    )


def _fill_zero_temperature(
    energies: np.ndarray, ms: np.ndarray, electrons: float, unit: float
) -> tuple[np.ndarray, float]:
    """T=0 fill of ``electrons`` into levels; returns (occupations, mu).

    Levels are taken in ascending energy (ties by ascending m); a
    partially filled degenerate shell is split equally.  ``unit`` sets
    the absolute floor of the degeneracy tolerance near E = 0.
    """
    order = np.lexsort((ms, energies))
    sorted_e = energies[order]
    occ_sorted = np.zeros_like(sorted_e)

    remaining = float(electrons)
    mu = sorted_e[0]
    i = 0
    n = sorted_e.size
    while remaining > 0.0 and i < n:
        j = i + 1
        while j < n and sorted_e[j] - sorted_e[i] <= DEGENERACY_RTOL * max(
            abs(sorted_e[i]), abs(sorted_e[j]), unit
        ):
            j += 1
        shell = j - i
        if remaining >= shell:
            occ_sorted[i:j] = 1.0
            remaining -= shell
        else:
            occ_sorted[i:j] = remaining / shell
            remaining = 0.0
        mu = sorted_e[j - 1]
        i = j
    if remaining > OCCUPATION_TOLERANCE:
        raise SolverError(
            f"window of {n} levels cannot hold {electrons!r} electrons "
            f"(deficit {remaining:.3g})"
        )

    occ = np.empty_like(occ_sorted)
    occ[order] = occ_sorted
    return occ, float(mu)


def _occupation_map(spectrum: "Spectrum", occ: np.ndarray) -> dict[int, float]:
    return {int(m): float(f) for m, f in zip(spectrum.ms, occ)}


def solve_chemical_potential(
    spectrum: "Spectrum", electrons: float | None = None, temperature: float | None = None
) -> ThermalState:
    """Bisection solve of mu so that sum_m f(E_m, mu, T) equals ``electrons``.

    Requires T > 0 (use zero_temperature_occupation at T = 0).
    ``electrons`` and ``temperature`` default to the spectrum's params;
    non-integer electron counts are allowed here for internal use.
    """
    if electrons is None:
        electrons = spectrum.params.electrons
    if temperature is None:
        temperature = spectrum.params.temperature
    if temperature <= 0:
        raise ParameterError(f"solve_chemical_potential needs T > 0, got {temperature!r}")
    if electrons <= 0:
        raise ParameterError(f"electrons must be positive, got {electrons!r}")

    mu = _bisect_mu(spectrum.energies, electrons, temperature)
    occ = fermi_occupation(spectrum.energies, mu, temperature)
    return ThermalState(mu, float(temperature), _occupation_map(spectrum, occ), float(electrons))


def zero_temperature_occupation(spectrum: "Spectrum", electrons: float | None = None) -> ThermalState:
    """Ground-state occupation: ascending fill with equal split of a
    partially needed degenerate shell; mu is the highest touched energy."""
    if electrons is None:
        electrons = spectrum.params.electrons
    if electrons <= 0:
        raise ParameterError(f"electrons must be positive, got {electrons!r}")
    occ, mu = _fill_zero_temperature(
        spectrum.energies, spectrum.ms, electrons, energy_scale(spectrum.params)
    )
    return ThermalState(mu, 0.0, _occupation_map(spectrum, occ), float(electrons))


def thermal_state(
    spectrum: "Spectrum", electrons: float | None = None, temperature: float | None = None
) -> ThermalState:
    """Occupation at the given (or the spectrum's own) N and T; dispatches on T == 0."""
    if temperature is None:
        temperature = spectrum.params.temperature
    if temperature == 0.0:
        return zero_temperature_occupation(spectrum, electrons)
    return solve_chemical_potential(spectrum, electrons, temperature)


def occupation_array(spectrum: "Spectrum", state: ThermalState) -> np.ndarray:
    """Occupations aligned with spectrum.ms; raises if windows disagree."""
    occ = state.occupations
    if len(occ) != spectrum.ms.size or sorted(occ) != spectrum.ms.tolist():
        raise WindowMismatchError(
            f"state covers m={sorted(occ)!r} but spectrum window is "
            f"[{spectrum.window[0]}, {spectrum.window[1]}]"
        )
    return np.array([occ[int(m)] for m in spectrum.ms])


def internal_energy(spectrum: "Spectrum", state: ThermalState) -> float:
    """U = sum_m E_m f(E_m) over the spectrum window (J)."""
    f = occupation_array(spectrum, state)
    return float(spectrum.energies @ f)
