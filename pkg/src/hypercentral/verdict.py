"""The uniform result type of every predicate."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum


class Status(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class Verdict:
    status: Status
    witness: tuple[tuple[str, int], ...] = ()
    trace: str = ""
    extra: dict = field(default_factory=dict)

    @classmethod
    def holds(cls, trace: str = "", **extra) -> "Verdict":
        return cls(Status.HOLDS, (), trace, extra)

    @classmethod
    def fails(cls, witness, trace: str = "", **extra) -> "Verdict":
        return cls(Status.FAILS, tuple((role, int(x)) for role, x in witness), trace, extra)

    @classmethod
    def not_applicable(cls, reason: str) -> "Verdict":
        return cls(Status.NOT_APPLICABLE, (), reason)

    @property
    def ok(self) -> bool:
        return self.status is Status.HOLDS

    @property
    def failed(self) -> bool:
        return self.status is Status.FAILS

    def get(self, role: str) -> int:
        for r, x in self.witness:
            if r == role:
                return x
        raise KeyError(role)

    def render(self, labels) -> str:
        """Witness as ``role=label`` pairs, e.g. ``e=E22, r=E12``."""
        return ", ".join(f"{role}={labels[x]}" for role, x in self.witness)
