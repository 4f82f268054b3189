"""Verification reports and the shared floating-point tolerance."""

from __future__ import annotations

import os
from dataclasses import dataclass, field

DEFAULT_EPSILON = 1e-9
MAX_COUNTEREXAMPLES = 32


def epsilon() -> float:
    """Comparison tolerance; ``ROUGHSET_EPSILON`` overrides the default."""
    raw = os.environ.get("ROUGHSET_EPSILON")
    if raw is None or raw.strip() == "":
        return DEFAULT_EPSILON
    value = float(raw)
    if not value >= 0:
        raise ValueError(f"ROUGHSET_EPSILON must be a nonnegative number, got {raw!r}")
    return value


@dataclass
class AxiomResult:
    id: str
    description: str = ""
    violations: int = 0
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def record(self, entry: dict) -> None:
        self.violations += 1
        if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
            self.counterexamples.append(entry)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "description": self.description,
            "pass": self.passed,
            "violations": self.violations,
            "counterexamples": self.counterexamples,
        }


@dataclass
class AxiomReport:
    """Outcome of an exhaustive axiom check for one measure at one universe size.

    Counterexample lists are capped at ``MAX_COUNTEREXAMPLES`` per axiom but
    ``violations`` counts every failure, so ``passed`` reflects the full space.
    """

    measure: str
    n: int
    kind: str
    axioms: list[AxiomResult] = field(default_factory=list)
    elapsed_ms: float = 0.0

    def axiom(self, id: str, description: str = "") -> AxiomResult:
        result = AxiomResult(id, description)
        self.axioms.append(result)
        return result

    def __getitem__(self, id: str) -> AxiomResult:
        for result in self.axioms:
            if result.id == id:
                return result
        raise KeyError(id)

    @property
    def passed(self) -> bool:
        return all(a.passed for a in self.axioms)

    def to_dict(self) -> dict:
        return {
            "measure": self.measure,
            "kind": self.kind,
            "n": self.n,
            "pass": self.passed,
            "axioms": [a.to_dict() for a in self.axioms],
            "elapsed_ms": round(self.elapsed_ms, 3),
        }
