"""Fuzzy interval layers: membership maps over verified structures (type I)
and spaces built directly from fuzzy intervals with min/max composition
(type II). All membership values are exact rationals in [0, 1].
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Optional, Sequence, Tuple, Union

from .carriers import QPLUS, Interval
from .domains import (UNKNOWN, Domain, PatternFamily, domain_contains,
                      domain_slices, iter_domain, materialize)
from .elements import POLY, SCALAR, IntervalElement, sort_key
from .report import (DEFAULT, EXHAUSTIVE, PROVED, SAMPLED, AxiomResult,
                     CheckReport, RunConfig, Verdict, Witness, fails)
from .scalars import GROUP, ScalarStructure
from .spaces import SpaceSpec, act


@dataclass(frozen=True, order=True)
class FuzzyInterval:
    """The interval [0, upper] with an exact rational upper in [0, 1]."""

    upper: Fraction

    def __post_init__(self):
        u = Fraction(self.upper)
        object.__setattr__(self, "upper", u)
        if not 0 <= u <= 1:
            raise ValueError(f"fuzzy interval upper endpoint {u} outside [0, 1]")

    def to_interval(self) -> Interval:
        return Interval(0, self.upper, QPLUS)

    def render(self) -> str:
        u = self.upper
        return f"[0,{u.numerator}/{u.denominator}]" if u.denominator != 1 \
            else f"[0,{u.numerator}]"

    def __repr__(self):
        return self.render()


ONE = FuzzyInterval(Fraction(1))
ZERO = FuzzyInterval(Fraction(0))

# builtin membership rules; zero cases are explicit per the conventions the
# worked examples use ([0,1] whenever the defining quantity vanishes)
RECIPROCAL_ENTRY = "reciprocal_entry"
RECIPROCAL_MAX = "reciprocal_max"
RECIPROCAL_DEGREE = "reciprocal_degree"
RECIPROCAL_SUM = "reciprocal_sum"
CONSTANT = "constant"

_BUILTINS = (RECIPROCAL_ENTRY, RECIPROCAL_MAX, RECIPROCAL_DEGREE,
             RECIPROCAL_SUM, CONSTANT)


class MapPartial(ValueError):
    """Element outside the fuzzy map's domain."""


@dataclass(frozen=True)
class FuzzyMap:
    builtin: Optional[str] = None
    constant: Optional[Fraction] = None
    table: Optional[Tuple[Tuple[IntervalElement, FuzzyInterval], ...]] = None

    def __post_init__(self):
        if (self.builtin is None) == (self.table is None):
            raise ValueError("fuzzy map is either a builtin or a table")
        if self.builtin is not None and self.builtin not in _BUILTINS:
            raise ValueError(f"unknown builtin {self.builtin!r}")
        if self.builtin == CONSTANT and self.constant is None:
            raise ValueError("constant builtin needs a value")

    def __call__(self, e: IntervalElement) -> FuzzyInterval:
        return eval_fuzzy(self, e)


def table_map(pairs: Iterable[Tuple[IntervalElement, FuzzyInterval]]) -> FuzzyMap:
    return FuzzyMap(table=tuple(pairs))


def _recip(v) -> FuzzyInterval:
    return ONE if v == 0 else FuzzyInterval(Fraction(1, 1) / Fraction(v))


def eval_fuzzy(fmap: FuzzyMap, e: IntervalElement) -> FuzzyInterval:
    if fmap.table is not None:
        for k, v in fmap.table:
            if k == e:
                return v
        raise MapPartial(f"{e.render()} is outside the table domain")
    b = fmap.builtin
    if b == CONSTANT:
        return FuzzyInterval(fmap.constant)
    if b == RECIPROCAL_ENTRY:
        if len(e.entries) != 1:
            raise MapPartial("reciprocal_entry acts on single-entry elements")
        return _recip(e.entries[0].hi)
    if b == RECIPROCAL_MAX:
        uppers = [iv.hi for iv in e.entries]
        m = max(uppers, default=0)
        return _recip(m)
    if b == RECIPROCAL_SUM:
        return _recip(sum((iv.hi for iv in e.entries), start=Fraction(0)
                          if e.carrier.kind == "qplus" else 0))
    if b == RECIPROCAL_DEGREE:
        if e.kind != POLY:
            raise MapPartial("reciprocal_degree acts on polynomials")
        d = e.degree
        if d is None or d == 0:
            return ONE
        return FuzzyInterval(Fraction(1, d))
    raise AssertionError


# ---------------------------------------------------------------------------
# type I: a fuzzy layer over a verified interval structure
# ---------------------------------------------------------------------------


def check_fuzzy_type1(spec: SpaceSpec, fmap: FuzzyMap,
                      config: RunConfig = DEFAULT) -> CheckReport:
    """Monotonicity under the scalar action; plus min-superadditivity for
    algebras; plus zero-normalization and negation symmetry for group scalars.
    """
    full = materialize(spec.domain, config.enum_cap)
    elems = (sorted(full, key=sort_key) if full is not None
             else list(spec.domain.sample(80)))
    exhaustive = full is not None
    if spec.scalars.is_finite:
        scalars, sc_exh = list(spec.scalars.iter_values(0)), True
    else:
        scalars, sc_exh = list(itertools.islice(
            spec.scalars.iter_values(config.budget), 32)), False
    axioms = []
    try:
        for a in elems:
            ha = eval_fuzzy(fmap, a)
            for r in scalars:
                ra = act(spec, r, a)
                if ra is None or domain_contains(spec.domain, ra) is False:
                    return fails(Witness("scalar_closure", {"scalar": r, "element": a},
                                         "scalar action leaves the domain"), axioms)
                if eval_fuzzy(fmap, ra) < ha:
                    return fails(Witness(
                        "monotonicity",
                        {"scalar": r, "element": a,
                         "eta_ra": eval_fuzzy(fmap, ra), "eta_a": ha},
                        "eta(ra) < eta(a)"), axioms)
        axioms.append(AxiomResult("monotonicity", True,
                                  EXHAUSTIVE if exhaustive and sc_exh else SAMPLED))
        if spec.is_algebra:
            pairs = itertools.product(elems, repeat=2)
            total = len(elems) ** 2
            mode = EXHAUSTIVE if exhaustive and total <= config.pair_budget * 10 \
                else SAMPLED
            if mode == SAMPLED:
                pairs = itertools.islice(pairs, config.pair_budget)
            for a, b in pairs:
                s = a.combine(b, spec.op)
                lhs = eval_fuzzy(fmap, s)
                rhs = min(eval_fuzzy(fmap, a), eval_fuzzy(fmap, b))
                if lhs < rhs:
                    return fails(Witness(
                        "min_superadditivity",
                        {"a": a, "b": b, "eta_sum": lhs, "min": rhs},
                        "eta(a+b) < min(eta(a), eta(b))"), axioms)
            axioms.append(AxiomResult("min_superadditivity", True, mode))
        if spec.scalars.kind == GROUP:
            for z in elems:
                if z.is_zero and eval_fuzzy(fmap, z) != ONE:
                    return fails(Witness("zero_normalization",
                                         {"element": z, "eta": eval_fuzzy(fmap, z)},
                                         "eta(0) must be [0,1]"), axioms)
            axioms.append(AxiomResult("zero_normalization", True,
                                      EXHAUSTIVE if exhaustive else SAMPLED))
            for a in elems:
                try:
                    na = a.negated()
                except ValueError:
                    continue
                if domain_contains(spec.domain, na) is not True:
                    continue
                if eval_fuzzy(fmap, na) != eval_fuzzy(fmap, a):
                    return fails(Witness(
                        "negation_symmetry",
                        {"element": a, "negated": na,
                         "eta_a": eval_fuzzy(fmap, a), "eta_neg": eval_fuzzy(fmap, na)},
                        "eta(-a) differs from eta(a)"), axioms)
            axioms.append(AxiomResult("negation_symmetry", True,
                                      EXHAUSTIVE if exhaustive else SAMPLED))
    except MapPartial as exc:
        return fails(Witness("map_total", {}, str(exc)), axioms)
    verdict = Verdict.HOLDS if all(a.mode == EXHAUSTIVE for a in axioms) \
        else Verdict.BOUNDED_PASS
    return CheckReport(verdict, tuple(axioms))


# ---------------------------------------------------------------------------
# type II: spaces of fuzzy intervals with product action and min/max composition
# ---------------------------------------------------------------------------


def _fuzzy_entries_ok(e: IntervalElement) -> bool:
    return all(iv.is_canonical and 0 <= iv.hi <= 1 for iv in e.entries)


def check_fuzzy_type2(domain: Domain, scalar_values: Sequence,
                      structure: str = "vector_space",
                      op: Optional[str] = None,
                      config: RunConfig = DEFAULT) -> CheckReport:
    """Closure of the product action on fuzzy entries; for algebras also
    closure under the declared min/max composition and the distributive law
    s*(a o b) = (s*a) o (s*b), an exact rational identity for s >= 0.
    """
    svals = [Fraction(v) for v in scalar_values]
    for s in svals:
        if not 0 <= s <= 1:
            return fails(Witness("scalar_range", {"scalar": s},
                                 "type II scalars live in [0,1]"))
    pattern_proved = all(isinstance(sl, PatternFamily) and sl.fuzzy
                         for sl in domain_slices(domain))
    full = materialize(domain, config.enum_cap)
    elems = (sorted(full, key=sort_key) if full is not None
             else list(domain.sample(60)))
    for e in elems:
        if not _fuzzy_entries_ok(e):
            return fails(Witness("fuzzy_entries", {"element": e},
                                 "entry outside the fuzzy range"))
    axioms = [AxiomResult("fuzzy_entries", True,
                          PROVED if pattern_proved else (
                              EXHAUSTIVE if full is not None else SAMPLED))]
    mode = PROVED if pattern_proved else (
        EXHAUSTIVE if full is not None else SAMPLED)
    spot = elems[:20] if pattern_proved else elems
    for v in spot:
        for s in svals:
            w = v.scaled(s)
            r = domain_contains(domain, w)
            if r is False:
                return fails(Witness("scalar_closure",
                                     {"scalar": s, "element": v, "result": w},
                                     "product leaves the domain"), axioms)
    axioms.append(AxiomResult("scalar_closure", True, mode))
    if 0 in svals:
        axioms.append(AxiomResult("zero_action", True, mode))
    if 1 in svals:
        for v in spot[:10]:
            if v.scaled(1) != v:
                return fails(Witness("unit_action", {"element": v},
                                     "1*v differs from v"), axioms)
        axioms.append(AxiomResult("unit_action", True, mode))
    if structure == "linear_algebra":
        if op not in ("min", "max"):
            return fails(Witness("composition", {},
                                 "fuzzy algebras need a min or max composition"),
                         axioms)
        pairs = itertools.product(spot, repeat=2)
        if not pattern_proved and full is not None \
                and len(elems) ** 2 <= config.pair_budget * 10:
            comp_mode = EXHAUSTIVE
        else:
            comp_mode = mode
            pairs = itertools.islice(pairs, 400)
        for a, b in pairs:
            c = a.combine(b, op)
            if domain_contains(domain, c) is False:
                return fails(Witness("op_closure", {"a": a, "b": b, "result": c},
                                     "composition leaves the domain"), axioms)
            for s in svals[:12]:
                lhs = c.scaled(s)
                rhs = a.scaled(s).combine(b.scaled(s), op)
                if lhs != rhs:
                    return fails(Witness(
                        "op_distributivity",
                        {"scalar": s, "a": a, "b": b, "lhs": lhs, "rhs": rhs},
                        "s*(a o b) differs from (s*a) o (s*b)"), axioms)
        axioms.append(AxiomResult("op_closure", True, comp_mode))
        axioms.append(AxiomResult("op_distributivity", True, comp_mode))
    verdict = Verdict.HOLDS if all(a.mode in (EXHAUSTIVE, PROVED) for a in axioms) \
        else Verdict.BOUNDED_PASS
    return CheckReport(verdict, tuple(axioms))
