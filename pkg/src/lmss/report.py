"""Structured outcomes of per-graph checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

PASS, FAIL, INFO = "pass", "fail", "info"
NOT_APPLICABLE = "not_applicable"


@dataclass
class Instance:
    """One checked case; ``data`` holds name-rendered sets so the record can
    be re-checked without the engine."""

    outcome: str
    data: dict[str, Any]

    def to_dict(self) -> dict[str, Any]:
        return {"outcome": self.outcome, **self.data}


@dataclass
class VerificationReport:
    graph_id: str
    check: str
    instances: list[Instance] = field(default_factory=list)
    applicable: bool = True

    @property
    def violations(self) -> list[Instance]:
        return [i for i in self.instances if i.outcome == FAIL]

    @property
    def status(self) -> str:
        if self.violations:
            return FAIL
        return PASS if self.applicable else NOT_APPLICABLE

    def to_dict(self) -> dict[str, Any]:
        return {
            "graph": self.graph_id,
            "check": self.check,
            "status": self.status,
            "instances": [i.to_dict() for i in self.instances],
            "violations": [i.to_dict() for i in self.violations],
        }
