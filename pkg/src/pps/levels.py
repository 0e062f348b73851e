"""Energy spectra and their deviations from the unperturbed oscillator."""

from dataclasses import dataclass, field

from src.tra.params import PhysicalParams, oscillator_level


def delta_e(E: float, k: int, p: PhysicalParams) -> float:
    """E - omega (2k + l + 3/2)."""
    return E - oscillator_level(k, p)


@dataclass(frozen=True)
class EnergySpectrum:
    """Bound-state energies found by one method.

    ``indices[i]`` is the oscillator quantum number k of ``levels[i]``; levels
    that could not be resolved are listed in ``skipped`` and leave gaps in
    ``indices``.
    """

    params: PhysicalParams
    indices: tuple[int, ...]
    levels: tuple[float, ...]
    method: str
    skipped: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if len(self.indices) != len(self.levels):
            raise ValueError("indices and levels differ in length")
        if any(b <= a for a, b in zip(self.levels, self.levels[1:])):
            raise ValueError("levels must increase strictly")

    @property
    def deltas(self) -> tuple[float, ...]:
        return tuple(delta_e(E, k, self.params) for k, E in zip(self.indices, self.levels))

    def level(self, k: int) -> float:
        """Energy of oscillator level k; KeyError when it was not resolved."""
        try:
            return self.levels[self.indices.index(k)]
        except ValueError:
            raise KeyError(f"level {k} not in spectrum ({self.method})") from None

    def as_rows(self) -> list[tuple[int, float, float]]:
        return list(zip(self.indices, self.levels, self.deltas))

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "omega": self.params.omega,
            "a": self.params.a,
            "ell": self.params.ell,
            "levels": [
                {"k": k, "E": E, "dE": dE} for k, E, dE in self.as_rows()
            ],
            "skipped": list(self.skipped),
        }


def from_mapping(p: PhysicalParams, by_level: dict[int, float], method: str, skipped=()) -> EnergySpectrum:
    """Build a spectrum from {k: E}, ordering by k."""
    ks = sorted(by_level)
    return EnergySpectrum(
        params=p,
        indices=tuple(ks),
        levels=tuple(float(by_level[k]) for k in ks),
        method=method,
        skipped=tuple(sorted(skipped)),
    )
