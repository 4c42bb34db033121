"""Check results and the report they are collected into."""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field

VERSION = "0.1.0"


@dataclass(frozen=True)
class CheckResult:
    name: str
    residual: float
    tolerance: float
    passed: bool
    detail: str = ""

    @classmethod
    def of(cls, name: str, residual: float, tolerance: float, detail: str = "") -> "CheckResult":
        r = float(residual)
        ok = not math.isnan(r) and r <= tolerance
        return cls(name, r, float(tolerance), ok, detail)

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"{mark} {self.name}: residual={self.residual:.3e} tol={self.tolerance:.1e} {self.detail}".rstrip()


@dataclass
class Report:
    version: str = VERSION
    checks: list[CheckResult] = field(default_factory=list)
    passed: int = 0
    failed: int = 0
    wall_time_ms: int = 0

    @classmethod
    def build(cls, checks, wall_time_ms: int = 0) -> "Report":
        checks = sorted(checks, key=lambda c: c.name)
        ok = sum(c.passed for c in checks)
        return cls(VERSION, checks, ok, len(checks) - ok, int(wall_time_ms))

    @property
    def all_passed(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict:
        d = asdict(self)
        for c in d["checks"]:
            # inf residuals are not valid JSON
            if not math.isfinite(c["residual"]):
                c["residual"] = str(c["residual"])
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)
