from src.reproduce.checks import CheckResult, run_checks
from src.reproduce.methods import METHODS, compute_spectrum, default_det_window
from src.reproduce.tables import TABLES, CellResult, TableReport, TableReproducer

__all__ = [
    "METHODS",
    "TABLES",
    "CellResult",
    "CheckResult",
    "TableReport",
    "TableReproducer",
    "compute_spectrum",
    "default_det_window",
    "run_checks",
]
