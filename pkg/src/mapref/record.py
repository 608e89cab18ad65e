"""Verification records: named checks with expected and observed values.

Builders return one of these alongside their map so callers (CLI, test
suites) can show what was checked without recomputing it.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    got: Any = None
    want: Any = None
    note: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        parts = [f"{status} {self.name}"]
        if self.want is not None:
            parts.append(f"want={self.want!r} got={self.got!r}")
        elif self.got is not None:
            parts.append(f"got={self.got!r}")
        if self.note:
            parts.append(f"({self.note})")
        return "  ".join(parts)


@dataclass
class VerificationRecord:
    title: str
    checks: list[Check] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def expect(self, name: str, got: Any, want: Any, note: str = "") -> Check:
        c = Check(name=name, ok=(got == want), got=got, want=want, note=note)
        self.checks.append(c)
        return c

    def require(self, name: str, ok: bool, got: Any = None,
                note: str = "") -> Check:
        c = Check(name=name, ok=bool(ok), got=got, note=note)
        self.checks.append(c)
        return c

    def warn(self, message: str) -> None:
        self.warnings.append(message)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def raise_on_failure(self, exc_type: type[Exception]) -> None:
        if not self.ok:
            lines = "; ".join(c.line() for c in self.failures())
            raise exc_type(f"{self.title}: {lines}")

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "title": self.title,
            "ok": self.ok,
            "warnings": list(self.warnings),
            "checks": [
                {"name": c.name, "ok": c.ok,
                 "got": _jsonable(c.got), "want": _jsonable(c.want),
                 "note": c.note}
                for c in self.checks
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=1)

    def lines(self) -> list[str]:
        out = [c.line() for c in self.checks]
        out.extend(f"WARN {w}" for w in self.warnings)
        return out


def _jsonable(value: Any) -> Any:
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    if isinstance(value, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return repr(value)
