"""Structured pass/fail/inconclusive reports shared by every validator."""

from __future__ import annotations

import dataclasses
import json

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"


def _plain(value):
    """Convert a value into something json.dumps can handle deterministically."""
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in sorted(value.items(), key=lambda kv: str(kv[0]))}
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return _plain(dataclasses.asdict(value))
    return str(value)


@dataclasses.dataclass(frozen=True)
class Finding:
    """One located fact: a violated law, a witness, or a bounded-search note."""

    law: str
    at: tuple = ()
    lhs: object = None
    rhs: object = None
    note: str = ""

    def to_obj(self) -> dict:
        obj = {"law": self.law, "at": _plain(self.at)}
        if self.lhs is not None:
            obj["lhs"] = _plain(self.lhs)
        if self.rhs is not None:
            obj["rhs"] = _plain(self.rhs)
        if self.note:
            obj["note"] = self.note
        return obj

    def __str__(self):
        parts = [self.law, f"at {self.at!r}"]
        if self.lhs is not None or self.rhs is not None:
            parts.append(f"lhs={self.lhs!r} rhs={self.rhs!r}")
        if self.note:
            parts.append(self.note)
        return "; ".join(parts)


@dataclasses.dataclass
class Report:
    """Outcome of a validation or bounded search.

    A ``fail`` report always carries at least one witness finding;
    ``inconclusive`` is only produced by bounded searches that ran out of
    window before deciding.
    """

    subject: str
    status: str
    findings: list = dataclasses.field(default_factory=list)
    stats: dict = dataclasses.field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status == PASS

    def to_obj(self) -> dict:
        return {
            "subject": self.subject,
            "status": self.status,
            "findings": [f.to_obj() for f in self.findings],
            "stats": _plain(self.stats),
        }

    def to_json(self, indent=2) -> str:
        return json.dumps(self.to_obj(), sort_keys=True, indent=indent)

    def __str__(self):
        head = f"[{self.status}] {self.subject}"
        if not self.findings:
            return head
        lines = [head] + [f"  - {f}" for f in self.findings]
        return "\n".join(lines)


def passed(subject: str, **stats) -> Report:
    return Report(subject, PASS, [], dict(stats))


def failed(subject: str, findings, **stats) -> Report:
    findings = list(findings)
    if not findings:
        raise ValueError("a fail report needs at least one witness finding")
    return Report(subject, FAIL, findings, dict(stats))


def inconclusive(subject: str, findings=(), **stats) -> Report:
    return Report(subject, INCONCLUSIVE, list(findings), dict(stats))
