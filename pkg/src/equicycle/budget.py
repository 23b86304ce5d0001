"""Wall-clock budgets for the bounded searches (``EQUICYCLE_BUDGET_MS``)."""

from __future__ import annotations

import os
import time

from .core import SearchBudgetExceeded

DEFAULT_BUDGET_MS = 60_000


class Budget:
    """Deadline plus an optional stack of step caps used for restarts."""

    class LocalExhausted(Exception):
        pass

    def __init__(self, ms: float | None = DEFAULT_BUDGET_MS):
        self.deadline = None if ms is None else time.monotonic() + ms / 1000.0
        self._ticks = 0
        self._local: list[int] = []

    @classmethod
    def from_env(cls) -> "Budget":
        raw = os.environ.get("EQUICYCLE_BUDGET_MS")
        return cls(float(raw) if raw else DEFAULT_BUDGET_MS)

    def tick(self) -> None:
        self._ticks += 1
        if self._local:
            self._local[-1] -= 1
            if self._local[-1] < 0:
                raise Budget.LocalExhausted
        if self._ticks & 0x3FF == 1 and self.deadline is not None and time.monotonic() >= self.deadline:
            raise SearchBudgetExceeded("search budget exhausted")

    def push_local(self, steps: int) -> None:
        self._local.append(steps)

    def pop_local(self) -> None:
        self._local.pop()
