"""Structured verdicts produced by the law checkers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass(frozen=True)
class CompatibilityReport:
    """Outcome of checking one law over a batch of inputs.

    When `holds` is false the witness carries the falsifying inputs, already
    re-evaluated by the checker before the report is emitted.  The seed makes
    the sampled batch reproducible.
    """

    axiom: str
    holds: bool
    witness: Optional[dict] = None
    seed: Optional[int] = None
    samples: int = 0
    note: str = ""

    def to_json(self) -> dict[str, Any]:
        doc: dict[str, Any] = {"axiom": self.axiom, "holds": self.holds, "witness": self.witness}
        if self.seed is not None:
            doc["seed"] = self.seed
        doc["samples"] = self.samples
        if self.note:
            doc["note"] = self.note
        return doc


def passed(axiom: str, seed: Optional[int], samples: int, note: str = "") -> CompatibilityReport:
    return CompatibilityReport(axiom=axiom, holds=True, witness=None, seed=seed, samples=samples, note=note)


def failed(axiom: str, witness: dict, seed: Optional[int], samples: int, note: str = "") -> CompatibilityReport:
    return CompatibilityReport(axiom=axiom, holds=False, witness=witness, seed=seed, samples=samples, note=note)
