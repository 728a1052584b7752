"""Pass/fail records shared by the verification routines."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Check:
    name: str
    got: Any
    expected: Any

    @property
    def passed(self) -> bool:
        return self.got == self.expected

    def line(self) -> str:
        if self.passed:
            return f"PASS {self.name}: {self.got} = {self.expected}"
        return f"FAIL {self.name}: {self.got} != {self.expected}"

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "got": str(self.got), "expected": str(self.expected)}
