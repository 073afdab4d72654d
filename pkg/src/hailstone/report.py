"""Result object for exhaustive property checks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass
class CheckReport:
    """Outcome of scanning a property over a finite domain.

    `counterexample` holds the first failing input (shape depends on the
    check); it is None when the scan passed.
    """

    passed: bool
    checked: int
    counterexample: Any = None
    note: str = ""

    def __bool__(self) -> bool:
        return self.passed

    def describe(self) -> str:
        status = "pass" if self.passed else "FAIL"
        msg = f"{status} ({self.checked} cases)"
        if self.note:
            msg += f": {self.note}"
        if self.counterexample is not None:
            msg += f" counterexample={self.counterexample!r}"
        return msg
