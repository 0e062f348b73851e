from src.wavefn.radial import (
    RadialGrid,
    RadialWavefunction,
    build_wavefunction,
    evaluate_series,
    fig1_data,
    node_count,
    overlap_matrix,
    schrodinger_residual,
    table_header,
)

__all__ = [
    "RadialGrid",
    "RadialWavefunction",
    "build_wavefunction",
    "evaluate_series",
    "fig1_data",
    "node_count",
    "overlap_matrix",
    "schrodinger_residual",
    "table_header",
]
