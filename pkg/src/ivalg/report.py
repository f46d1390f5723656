"""Check reports: verdicts, axiom traces, replayable witnesses, run configuration."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple


class Verdict(Enum):
    HOLDS = "holds"
    BOUNDED_PASS = "bounded_pass"
    FAILS = "fails"
    UNKNOWN = "unknown"

    @property
    def passed(self) -> bool:
        return self in (Verdict.HOLDS, Verdict.BOUNDED_PASS)


# axiom check modes
EXHAUSTIVE = "exhaustive"
PROVED = "proved"      # structural argument (linear pattern families), spot-checked
SAMPLED = "sampled"


@dataclass(frozen=True)
class AxiomResult:
    axiom: str
    ok: bool
    mode: str
    detail: str = ""

    def to_json(self):
        return {"axiom": self.axiom, "ok": self.ok, "mode": self.mode, "detail": self.detail}


@dataclass(frozen=True)
class Witness:
    """A replayable counterexample: which axiom broke and on what data.

    `data` holds renderable values (elements/scalars) keyed by role so the
    violation can be re-executed bit-exactly.
    """

    axiom: str
    data: dict
    message: str = ""

    def to_json(self):
        out = {}
        for k, v in self.data.items():
            out[k] = v.render() if hasattr(v, "render") else str(v)
        return {"axiom": self.axiom, "message": self.message, "data": out}


@dataclass(frozen=True)
class CheckReport:
    verdict: Verdict
    axioms: Tuple[AxiomResult, ...] = ()
    witness: Optional[Witness] = None
    budget_used: Optional[int] = None
    partial: bool = False
    error: Optional[str] = None  # e.g. "distinctness" - rejected before axiom checking

    @property
    def passed(self) -> bool:
        return self.verdict.passed

    def to_json(self):
        return {
            "verdict": self.verdict.value,
            "axioms": [a.to_json() for a in self.axioms],
            "witnesses": [self.witness.to_json()] if self.witness else [],
            "budget": self.budget_used,
            "partial": self.partial,
            "error": self.error,
        }

    def summary(self) -> str:
        s = self.verdict.value
        if self.error:
            s += f" ({self.error})"
        if self.witness:
            s += f" [witness: {self.witness.axiom} {self.witness.to_json()['data']}]"
        if self.partial:
            s += " (partial sweep)"
        return s


def holds(axioms=(), budget=None) -> CheckReport:
    return CheckReport(Verdict.HOLDS, tuple(axioms), None, budget)


def bounded(axioms=(), budget=None) -> CheckReport:
    return CheckReport(Verdict.BOUNDED_PASS, tuple(axioms), None, budget)


def fails(witness: Witness, axioms=(), budget=None) -> CheckReport:
    return CheckReport(Verdict.FAILS, tuple(axioms), witness, budget)


def unknown(detail: str = "", axioms=()) -> CheckReport:
    return CheckReport(Verdict.UNKNOWN, tuple(axioms), None, None, error=detail or None)


def merge(reports, budget=None) -> CheckReport:
    """Combine sub-reports: FAILS dominates, then UNKNOWN, then BOUNDED_PASS."""
    axioms = []
    verdict = Verdict.HOLDS
    witness = None
    partial = False
    error = None
    for r in reports:
        axioms.extend(r.axioms)
        partial = partial or r.partial
        if r.verdict == Verdict.FAILS and verdict != Verdict.FAILS:
            verdict, witness, error = Verdict.FAILS, r.witness, r.error
        elif r.verdict == Verdict.UNKNOWN and verdict not in (Verdict.FAILS,):
            verdict = Verdict.UNKNOWN
            error = error or r.error
        elif r.verdict == Verdict.BOUNDED_PASS and verdict == Verdict.HOLDS:
            verdict = Verdict.BOUNDED_PASS
    return CheckReport(verdict, tuple(axioms), witness, budget, partial, error)


@dataclass
class RunConfig:
    """Budgets and determinism knobs shared by every bounded check."""

    seed: int = 0
    budget: int = 10_000          # parametric sampling budget
    enum_cap: int = 5_000         # max explicit materialization of a finite family
    pair_budget: int = 2_000      # sampled (c, u, v) combinations for identity laws
    subset_cap: int = 16          # |F| above which set-kind subset sweeps go partial
    subsemigroup_cap: int = 24    # kept for CLI surface; divisor enumeration is exact
    combo_cap: int = 1_000_000    # scalar tuple enumeration cap for combination mode
    classify_cap: int = 600      # max |V| for exhaustive simplicity sweeps
    rng: random.Random = field(default=None, repr=False)

    def __post_init__(self):
        if self.rng is None:
            self.rng = random.Random(self.seed)

    def fresh_rng(self) -> random.Random:
        return random.Random(self.seed)


DEFAULT = RunConfig()
