"""Shared exception types."""

from __future__ import annotations


class GraphFormatError(ValueError):
    """Raised when graph input text cannot be decoded."""


class GuardExceeded(RuntimeError):
    """An exact solver was asked for an instance above its size guard.

    Distinct from other failures on purpose: callers fall back or re-run
    with an explicit larger guard instead of waiting on an unbounded search.
    """

    def __init__(self, task: str, size: int, guard: int):
        super().__init__(f"{task}: instance size {size} exceeds guard {guard}")
        self.task = task
        self.size = size
        self.guard = guard


class NotCograph(Exception):
    """Decomposition failed; `witness` is an induced 4-vertex path (a,b,c,d)."""

    def __init__(self, witness: tuple[int, int, int, int]):
        super().__init__(f"not a cograph: induced P4 on vertices {witness}")
        self.witness = witness


class NotDistanceHereditary(Exception):
    """Pruning got stuck; `residual` holds the vertices that remain."""

    def __init__(self, residual: tuple[int, ...]):
        super().__init__(
            "not distance-hereditary: no isolated, pendant or twin vertex "
            f"among residual {residual}"
        )
        self.residual = residual
