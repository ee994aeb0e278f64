"""Structured pass/fail records for identity checks."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    """Outcome of one identity check over a parameter range.

    `counterexamples` holds (input, expected, actual) triples; the check
    passes iff it is empty.
    """

    identity: str
    parameter_range: str
    counterexamples: list = field(default_factory=list)

    @property
    def status(self) -> str:
        return "pass" if not self.counterexamples else "fail"

    def passed(self) -> bool:
        return not self.counterexamples

    def record(self, case, expected, actual) -> None:
        if expected != actual:
            self.counterexamples.append((case, expected, actual))

    def to_json_obj(self) -> dict:
        return {
            "identity": self.identity,
            "range": self.parameter_range,
            "status": self.status,
            "counterexamples": [
                {"input": _plain(case), "expected": _plain(exp), "actual": _plain(act)}
                for case, exp, act in self.counterexamples
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


def _plain(value):
    """JSON-safe rendering; big integers become decimal strings."""
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    return str(value)
