"""Shared solver caches so expensive exact solves run once per session."""
from __future__ import annotations

from functools import lru_cache
from pathlib import Path

from settle.grid import Boundary, Dims
from settle.solvers import Objective, SolveRequest, solve_max, solve_min_maximal

GOLDEN = Path(__file__).resolve().parent.parent / "golden"


@lru_cache(maxsize=None)
def max_result(m: int, n: int, boundary: Boundary = Boundary.FREE):
    return solve_max(SolveRequest(Dims(m, n, boundary), Objective.MAX_PERMISSIBLE))


@lru_cache(maxsize=None)
def min_result(m: int, n: int, boundary: Boundary = Boundary.FREE):
    return solve_min_maximal(SolveRequest(Dims(m, n, boundary), Objective.MIN_MAXIMAL))
