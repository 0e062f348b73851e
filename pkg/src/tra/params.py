"""Physical and basis parameters of the spiked oscillator

    V(r) = l(l+1)/2r^2 + omega^2 r^2/2 + a^2/2r^4

and the energy-dependent Bessel basis that tridiagonalizes its wave operator.
"""

import math
from dataclasses import dataclass

from src.errors import ConfigError, EnergyTooSmallError, SingularityOffError


@dataclass(frozen=True)
class PhysicalParams:
    omega: float
    a: float
    ell: int

    def __post_init__(self):
        if not self.omega > 0:
            raise ConfigError(f"omega must be positive, got {self.omega}")
        if not self.a >= 0:
            raise ConfigError(f"a must be non-negative, got {self.a}")
        if int(self.ell) != self.ell or self.ell < 0:
            raise ConfigError(f"ell must be a non-negative integer, got {self.ell}")
        object.__setattr__(self, "ell", int(self.ell))

    @property
    def coupling(self) -> float:
        """omega a^2 / 2, the strength of every off-diagonal recursion term."""
        return 0.5 * self.omega * self.a**2

    @property
    def target(self) -> float:
        """(l + 1/2)^2: the eigenvalue a physical energy must produce."""
        return (self.ell + 0.5) ** 2


@dataclass(frozen=True)
class BasisParams:
    mu: float
    alpha: float
    eps: float
    N: int


@dataclass(frozen=True)
class TraPolyParams:
    z: float
    gamma: float


def max_degree(mu: float) -> int:
    """Largest integer strictly below -mu - 1/2."""
    return math.ceil(-mu - 0.5) - 1


def basis_from_energy(E: float, omega: float) -> BasisParams:
    """Basis parameters for trial energy E: mu = -E/2omega, alpha = mu + 1/4."""
    if not omega > 0:
        raise ConfigError(f"omega must be positive, got {omega}")
    if not E > omega:
        raise EnergyTooSmallError(f"energy {E} must exceed omega={omega}")
    eps = E / omega
    mu = -0.5 * eps
    return BasisParams(mu=mu, alpha=mu + 0.25, eps=eps, N=max_degree(mu))


def tra_params(p: PhysicalParams) -> TraPolyParams:
    if p.a == 0:
        raise SingularityOffError("the polynomial map needs a > 0")
    scale = 4.0 / (p.omega * p.a**2)
    return TraPolyParams(z=-scale * p.target, gamma=-4.0 * scale)


def oscillator_level(k: int, p: PhysicalParams) -> float:
    """Unperturbed level omega (2k + l + 3/2)."""
    return p.omega * (2 * k + p.ell + 1.5)
