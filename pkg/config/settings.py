from pydantic import field_validator
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    # PPS grid and fitting
    fit_points: int = 100
    fit_order: int = 8  # Chebyshev nodes per bracketing cell
    energy_floor: float = 1e-6

    # Determinant root search
    det_grid_points: int = 2000
    root_tol: float = 1e-11
    level_window: float = 0.25  # in units of omega

    # Laguerre-basis Hamiltonian
    matrix_size: int = 100
    lambda_ratio: float = 1.0  # lambda^2 / omega
    overlap_rule: str = "basis"  # "basis" or "exact"
    quadrature_points: int = 0  # 0 -> matrix_size (basis) or 2 * matrix_size (exact)

    # Radial grid for wavefunctions (units of 1/sqrt(omega))
    wave_r_min: float = 0.05
    wave_r_max: float = 8.0
    wave_points: int = 4000

    # Result cache
    cache_dir: str = "./cache"
    use_cache: bool = True

    model_config = {"env_prefix": "TRA_", "env_file": ".env", "env_file_encoding": "utf-8"}

    @field_validator("fit_points", "fit_order", "det_grid_points", "matrix_size", "wave_points")
    @classmethod
    def _at_least_two(cls, v: int) -> int:
        if v < 2:
            raise ValueError("must be at least 2")
        return v

    @field_validator("overlap_rule")
    @classmethod
    def _known_rule(cls, v: str) -> str:
        if v not in ("basis", "exact"):
            raise ValueError("must be 'basis' or 'exact'")
        return v

    @field_validator("root_tol", "level_window", "lambda_ratio", "energy_floor")
    @classmethod
    def _positive(cls, v: float) -> float:
        if v <= 0:
            raise ValueError("must be positive")
        return v
