"""Pass/fail records with counterexample witnesses."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Check:
    """Outcome of one boolean check; truthy iff it passed.

    ``witness`` is the lexicographically first counterexample when the check fails.
    """

    ok: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.ok


PASS = Check(True)


def fail(*witness) -> Check:
    return Check(False, tuple(witness))


@dataclass
class CheckRecord:
    name: str
    passed: bool
    witness: tuple | None = None
    elapsed: float = 0.0
    detail: str = ""


@dataclass
class VerificationReport:
    kind: str
    structure_id: str = ""
    checks: list[CheckRecord] = field(default_factory=list)
    info: dict[str, Any] = field(default_factory=dict)
    partial: bool = False

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self):
        return self.passed

    def add(self, name, outcome, detail="", elapsed=0.0) -> CheckRecord:
        if isinstance(outcome, Check):
            rec = CheckRecord(name, outcome.ok, outcome.witness, elapsed, detail)
        else:
            rec = CheckRecord(name, bool(outcome), None, elapsed, detail)
        self.checks.append(rec)
        return rec

    def run(self, name, fn, *args, detail=""):
        start = time.perf_counter()
        outcome = fn(*args)
        return self.add(name, outcome, detail, time.perf_counter() - start)

    def get(self, name) -> CheckRecord:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failures(self) -> list[CheckRecord]:
        return [c for c in self.checks if not c.passed]

    def extend(self, other: VerificationReport, prefix=""):
        for c in other.checks:
            self.checks.append(
                CheckRecord(prefix + c.name, c.passed, c.witness, c.elapsed, c.detail)
            )
        for k, v in other.info.items():
            self.info.setdefault(prefix + k, v)

    def to_dict(self, with_elapsed=True) -> dict:
        checks = []
        for c in self.checks:
            d = {
                "name": c.name,
                "passed": c.passed,
                "witness": list(c.witness) if c.witness is not None else None,
            }
            if c.detail:
                d["detail"] = c.detail
            if with_elapsed:
                d["elapsed"] = round(c.elapsed, 6)
            checks.append(d)
        return {
            "structure": self.structure_id,
            "kind": self.kind,
            "passed": self.passed,
            "partial": self.partial,
            "checks": checks,
            "info": _jsonable(self.info),
        }

    def format_text(self) -> str:
        head = f"{self.kind} {self.structure_id}".strip()
        lines = [f"{head}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            line = f"  [{mark}] {c.name}"
            if c.witness is not None:
                line += f"  witness={c.witness}"
            if c.detail:
                line += f"  ({c.detail})"
            lines.append(line)
        for k, v in self.info.items():
            lines.append(f"  {k}: {_jsonable(v)}")
        return "\n".join(lines)


def _jsonable(v):
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (set, frozenset)):
        return sorted(_jsonable(x) for x in v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v
