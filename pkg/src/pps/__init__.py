from src.pps.levels import EnergySpectrum, delta_e
from src.pps.schlessinger import RationalFit, schlessinger_fit
from src.pps.spectrum import (
    EigenCurves,
    default_emax,
    eigen_curves,
    level_energy,
    pps_spectrum,
)

__all__ = [
    "EigenCurves",
    "EnergySpectrum",
    "RationalFit",
    "default_emax",
    "delta_e",
    "eigen_curves",
    "level_energy",
    "pps_spectrum",
    "schlessinger_fit",
]
