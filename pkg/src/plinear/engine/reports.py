"""Verification reports."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from plinear.config import get_settings


@dataclass(frozen=True)
class Failure:
    """One violated congruence: index k, digit (or state) l, and both sides."""

    k: Any
    l: Any
    lhs: Any
    rhs: Any

    def to_dict(self) -> Dict[str, Any]:
        return {"k": self.k, "l": self.l, "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class VerificationReport:
    """Result of one verification suite; only the first failures are retained."""

    name: str
    checked: int = 0
    failures: List[Failure] = field(default_factory=list)
    failure_count: int = 0
    max_failures: Optional[int] = None

    def __post_init__(self):
        if self.max_failures is None:
            self.max_failures = get_settings().max_report_failures

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def record(self, ok: bool, k, l, lhs, rhs) -> bool:
        """Count one check; keep it as a failure when ``ok`` is false."""
        self.checked += 1
        if not ok:
            self.failure_count += 1
            if len(self.failures) < self.max_failures:
                self.failures.append(Failure(_plain(k), _plain(l), _plain(lhs), _plain(rhs)))
        return ok

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        self.checked += other.checked
        self.failure_count += other.failure_count
        room = self.max_failures - len(self.failures)
        self.failures.extend(other.failures[:max(room, 0)])
        return self

    def to_dict(self) -> Dict[str, Any]:
        return {"checked": self.checked, "failures": [f.to_dict() for f in self.failures]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{self.name}: {status} ({self.checked} checks, {self.failure_count} failures)"]
        for f in self.failures:
            lines.append(f"  k={f.k} l={f.l}: lhs={f.lhs} rhs={f.rhs}")
        if self.failure_count > len(self.failures):
            lines.append(f"  ... {self.failure_count - len(self.failures)} more")
        return "\n".join(lines)


def _plain(value):
    """JSON-friendly form of tuples and numpy scalars."""
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if hasattr(value, "item") and not isinstance(value, int):
        return value.item()
    return value
