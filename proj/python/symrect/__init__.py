"""Symmetric rectilinear partitioning of sparse binary matrices."""

import json as _json

from ._core import (
    DimensionError,
    InfeasibleError,
    ParseError,
    SparseMatrix,
    bandwidth,
    brute_force_symmetric,
    btl,
    count_rect,
    dump_matrix,
    load_imbalance,
    load_matrix,
    load_matrix_file,
    nic,
    optimal_1d_partition,
    ordering,
    pbd,
    pbi,
    probe,
    ptc,
    ptl,
    reorder,
    tile_loads,
    uni,
)
from ._core import run as _run

__all__ = [
    "DimensionError",
    "InfeasibleError",
    "ParseError",
    "SparseMatrix",
    "bandwidth",
    "brute_force_symmetric",
    "btl",
    "count_rect",
    "dump_matrix",
    "load_imbalance",
    "load_matrix",
    "load_matrix_file",
    "nic",
    "optimal_1d_partition",
    "ordering",
    "pbd",
    "pbi",
    "probe",
    "ptc",
    "ptl",
    "reorder",
    "run",
    "tile_loads",
    "uni",
]


def run(A, algorithm, parts=1, max_load=0, order="nat", tau=20, epsilon=0.0001):
    """Run one algorithm and return the report as a dict (same schema as the CLI's JSON)."""
    return _json.loads(_run(A, algorithm, parts, max_load, order, tau, epsilon))
