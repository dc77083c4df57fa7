"""Bound states of the q-deformed Rosen-Morse plus Scarf Dirac problem."""

from pathlib import Path

from ._core import (
    DomainError,
    Error,
    NotBoundError,
    ParseError,
    SolverError,
    config_hash,
    cosh_q,
    deformation_shift,
    hyp2f1_terminating,
    pekeris_coeffs,
    residual_at,
    sech_q,
    sinh_q,
    solve,
    tanh_q,
    wavefunction_csv,
)
from ._core import table_csv as _table_csv

_DATA = Path(__file__).parent / "data" / "tables"


def table_csv(table_id: int, reading: str = "corrected", data_dir: str | None = None) -> str:
    """CSV for a reference table; uses the tables shipped with the package by default."""
    if data_dir is None and _DATA.is_dir():
        data_dir = str(_DATA)
    return _table_csv(table_id, reading, data_dir or "")


__all__ = [
    "DomainError",
    "Error",
    "NotBoundError",
    "ParseError",
    "SolverError",
    "config_hash",
    "cosh_q",
    "deformation_shift",
    "hyp2f1_terminating",
    "pekeris_coeffs",
    "residual_at",
    "sech_q",
    "sinh_q",
    "solve",
    "table_csv",
    "tanh_q",
    "wavefunction_csv",
]
