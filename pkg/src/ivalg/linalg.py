"""Independence, generation, linear maps, kernels, projections, decompositions.

Dependence comes in two flavours: the pairwise notion (x = c*y for
distinct members) used by set/semigroup kinds and group vector spaces,
and the combination notion (a nontrivial scalar combination sums to
zero) used by group linear algebras, searched exhaustively over scalar
tuples up to a configurable cap.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .carriers import CarrierMismatch, Interval, OrderViolation, Value
from .domains import (UNKNOWN, BudgetExceeded, Domain, ExplicitDomain,
                      PatternFamily, UnionDomain, domain_contains,
                      domain_slices, domain_subset, domain_zero_elements,
                      domains_equal, iter_domain, materialize)
from .elements import IntervalElement, ShapeMismatch, sort_key, zero_interval
from .report import (DEFAULT, EXHAUSTIVE, PROVED, SAMPLED, AxiomResult,
                     CheckReport, RunConfig, Verdict, Witness, bounded, fails,
                     holds, merge, unknown)
from .scalars import GROUP, ScalarStructure
from .spaces import LINEAR_ALGEBRA, SpaceSpec, act
from .verify import check_structure, check_substructure

# ---------------------------------------------------------------------------
# scalar solving
# ---------------------------------------------------------------------------


def _solve_entry(carrier, coeff_iv: Interval, target_iv: Interval) -> Optional[List[Value]]:
    """Candidate scalars c with c*coeff_iv == target_iv (both endpoints)."""
    cands: Optional[set] = None
    for a, b in ((coeff_iv.lo, target_iv.lo), (coeff_iv.hi, target_iv.hi)):
        if carrier.is_modular:
            n = carrier.mod
            a %= n
            b %= n
            if a == 0:
                if b != 0:
                    return None
                continue
            g = gcd(a, n)
            if b % g:
                return None
            n_g = n // g
            c0 = (pow(a // g, -1, n_g) * (b // g)) % n_g
            sols = {c0 + k * n_g for k in range(g)}
        else:
            if a == 0:
                if b != 0:
                    return None
                continue
            q = Fraction(b, a)
            if q < 0:
                return None
            if carrier.kind == "nat" and q.denominator != 1:
                return None
            sols = {q.numerator if carrier.kind == "nat" else q}
        cands = sols if cands is None else (cands & sols)
        if not cands:
            return None
    if cands is None:
        return []  # y had only zero endpoints on constrained entries
    return sorted(cands, key=lambda v: Fraction(v))


def solve_scale(x: IntervalElement, y: IntervalElement,
                scalars: ScalarStructure) -> Optional[Value]:
    """Least scalar c in the structure with x = c*y, or None."""
    if x.shape != y.shape or x.carrier != y.carrier:
        return None
    if x.kind == "poly":
        n = max(len(x.entries), len(y.entries))
        z = zero_interval(x.carrier)
        xs = x.entries + (z,) * (n - len(x.entries))
        ys = y.entries + (z,) * (n - len(y.entries))
    else:
        xs, ys = x.entries, y.entries
    cands: Optional[set] = None
    for xe, ye in zip(xs, ys):
        sols = _solve_entry(x.carrier, ye, xe)
        if sols is None:
            return None
        if sols == []:
            if not (ye.is_zero and xe.is_zero):
                return None
            continue
        s = set(sols)
        cands = s if cands is None else cands & s
        if not cands:
            return None
    if cands is None:  # y is the zero element
        return None
    for c in sorted(cands, key=lambda v: Fraction(v)):
        if scalars.contains(c):
            try:
                if y.scaled(c) == x:
                    return c
            except (OrderViolation, ValueError):
                continue
    return None


# ---------------------------------------------------------------------------
# independence / generation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IndependenceResult:
    independent: Optional[bool]
    witness: Optional[Witness]
    mode: str
    partial: bool = False

    @property
    def report(self) -> CheckReport:
        if self.independent is None:
            return unknown("independence undecided")
        if self.independent:
            rep = holds([AxiomResult("independent", True, self.mode)])
            return rep if not self.partial else CheckReport(
                Verdict.BOUNDED_PASS, rep.axioms, None, None, True)
        return fails(self.witness, [AxiomResult("independent", False, self.mode)])

    def to_json(self):
        return {"independent": self.independent, "mode": self.mode,
                "partial": self.partial,
                "witness": self.witness.to_json() if self.witness else None}


def check_independent(B: Sequence[IntervalElement], spec: SpaceSpec,
                      config: RunConfig = DEFAULT) -> IndependenceResult:
    B = list(B)
    for e in B:
        if domain_contains(spec.domain, e) is False:
            raise ValueError(f"{e.render()} is not in the domain")
    combination = spec.scalars.kind == GROUP and spec.is_algebra
    if combination:
        return _combination_independence(B, spec, config)
    # pairwise: dependent iff some x = c*y for distinct members
    for i, x in enumerate(B):
        for j, y in enumerate(B):
            if i == j or x == y:
                continue
            c = solve_scale(x, y, spec.scalars)
            if c is not None:
                return IndependenceResult(False, Witness(
                    "pairwise_dependence", {"x": x, "scalar": c, "y": y},
                    "x = c*y inside the candidate set"), EXHAUSTIVE)
    return IndependenceResult(True, None, EXHAUSTIVE)


def _combination_independence(B, spec, config):
    values = list(spec.scalars.iter_values(0)) if spec.scalars.is_finite else None
    if values is None:
        return IndependenceResult(None, None, SAMPLED, partial=True)
    if len(B) > 6 or len(values) ** len(B) > config.combo_cap:
        return IndependenceResult(None, None, SAMPLED, partial=True)
    zero = B[0].zero_like()
    for combo in itertools.product(values, repeat=len(B)):
        if all(c == 0 for c in combo):
            continue
        try:
            total = None
            for c, b in zip(combo, B):
                term = b.scaled(c)
                total = term if total is None else total + term
        except (OrderViolation, ShapeMismatch, CarrierMismatch):
            continue
        if total == zero:
            return IndependenceResult(False, Witness(
                "combination_dependence",
                {"coefficients": ",".join(str(c) for c in combo),
                 "elements": ";".join(b.render() for b in B)},
                "nontrivial combination sums to zero"), EXHAUSTIVE)
    return IndependenceResult(True, None, EXHAUSTIVE)


@dataclass(frozen=True)
class GenerationResult:
    generates: Optional[bool]
    witness: Optional[Witness]   # an element not generated, when False
    mode: str

    def to_json(self):
        return {"generates": self.generates, "mode": self.mode,
                "witness": self.witness.to_json() if self.witness else None}


def _generated_vs(v, B, scalars) -> bool:
    """Vector-space generation: v in B or v = c*b; {} generates the zero space."""
    if v.is_zero and not B:
        return True
    if v in B:
        return True
    return any(solve_scale(v, b, scalars) is not None for b in B)


def check_generating(B: Sequence[IntervalElement], spec: SpaceSpec,
                     config: RunConfig = DEFAULT) -> GenerationResult:
    B = list(B)
    for e in B:
        if domain_contains(spec.domain, e) is False:
            raise ValueError(f"{e.render()} is not in the domain")
    if spec.is_algebra:
        return _generates_algebra(B, spec, config)
    full = materialize(spec.domain, config.enum_cap)
    if full is not None:
        for v in sorted(full, key=sort_key):
            if not _generated_vs(v, B, spec.scalars):
                return GenerationResult(False, Witness(
                    "generation", {"element": v}, "element is not any c*b"),
                    EXHAUSTIVE)
        return GenerationResult(True, None, EXHAUSTIVE)
    for v in spec.domain.sample(min(config.budget, 300)):
        if not _generated_vs(v, B, spec.scalars):
            return GenerationResult(False, Witness(
                "generation", {"element": v}, "element is not any c*b"), SAMPLED)
    return GenerationResult(True, None, SAMPLED)


def _generates_algebra(B, spec, config):
    """Algebra generation: finite sums of scalar multiples reach everything."""
    full = materialize(spec.domain, config.enum_cap)
    if full is None or not spec.scalars.is_finite:
        return _generates_algebra_bounded(B, spec, config)
    values = list(spec.scalars.iter_values(0))
    seeds = set()
    for b in B:
        for c in values:
            w = act(spec, c, b)
            if w is not None:
                seeds.add(w)
    reached = set(seeds)
    frontier = list(seeds)
    while frontier:
        nxt = []
        for u in frontier:
            for s in sorted(seeds, key=sort_key):
                try:
                    w = u.combine(s, spec.op)
                except (ShapeMismatch, CarrierMismatch, OrderViolation):
                    continue
                if w not in reached:
                    reached.add(w)
                    nxt.append(w)
        frontier = nxt
        if len(reached) > len(full) * 2:
            break
    missing = sorted(full - reached, key=sort_key)
    if missing:
        return GenerationResult(False, Witness(
            "generation", {"element": missing[0]},
            "element is not a finite combination of the candidates"), EXHAUSTIVE)
    return GenerationResult(True, None, EXHAUSTIVE)


def _generates_algebra_bounded(B, spec, config):
    # infinite setting: certify sampled elements as bounded sums, prune by
    # monotone endpoints where the carrier is ordered
    for v in spec.domain.sample(60):
        if not _reaches_target(v, B, spec, config):
            return GenerationResult(False, Witness(
                "generation", {"element": v},
                "element is not a bounded combination of the candidates"), SAMPLED)
    return GenerationResult(True, None, SAMPLED)


def _reaches_target(target, B, spec, config) -> bool:
    if target.is_zero:
        return True
    values = list(itertools.islice(spec.scalars.iter_values(config.budget), 40))
    seeds = []
    for b in B:
        for c in values:
            w = act(spec, c, b)
            if w is not None and w.shape == target.shape:
                seeds.append(w)
    if target in seeds:
        return True
    if not spec.carrier.is_ordered:
        return False
    bound = max((iv.hi for iv in target.entries), default=0)
    reached = {s for s in seeds if all(iv.hi <= bound for iv in s.entries)}
    frontier = list(reached)
    steps = 0
    while frontier and steps < config.budget:
        nxt = []
        for u in frontier:
            for s in reached.copy():
                steps += 1
                try:
                    w = u.combine(s, spec.op)
                except (ShapeMismatch, CarrierMismatch, OrderViolation):
                    continue
                if w == target:
                    return True
                if w not in reached and all(iv.hi <= bound for iv in w.entries):
                    reached.add(w)
                    nxt.append(w)
        frontier = nxt
    return target in reached


def minimal_generating_set(spec: SpaceSpec,
                           config: RunConfig = DEFAULT) -> List[IntervalElement]:
    """Greedy subset-minimal generating set; canonical order breaks ties."""
    full = materialize(spec.domain, config.enum_cap)
    if full is None:
        raise BudgetExceeded("minimal generating set needs an enumerable domain")
    B = sorted(full, key=sort_key)
    changed = True
    while changed:
        changed = False
        for e in list(B):
            trial = [b for b in B if b != e]
            if check_generating(trial, spec, config).generates:
                B = trial
                changed = True
    return B


# ---------------------------------------------------------------------------
# linear maps
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MapRule:
    """Rule-backed graph: identity | scale k | remap slots | project_to domain."""

    name: str
    factor: Optional[Value] = None
    slots: Optional[Tuple[Optional[int], ...]] = None   # target slot <- source index
    target_shape: Optional[tuple] = None                # (kind, dims) for remap
    domain: Optional[Domain] = None

    def apply(self, e: IntervalElement) -> IntervalElement:
        if self.name == "identity":
            return e
        if self.name == "scale":
            return e.scaled(self.factor)
        if self.name == "project_to":
            r = domain_contains(self.domain, e)
            return e if r is True else e.zero_like()
        if self.name == "remap":
            kind = self.target_shape[0]
            dims = tuple(self.target_shape[1:])
            z = zero_interval(e.carrier)
            entries = tuple(e.entries[i] if i is not None and i < len(e.entries) else z
                            for i in self.slots)
            if kind == "poly":
                while entries and entries[-1].is_zero:
                    entries = entries[:-1]
                return IntervalElement("poly", (), entries, e.carrier)
            return IntervalElement(kind, dims, entries, e.carrier)
        raise ValueError(f"unknown rule {self.name!r}")


Graph = Union[Dict[IntervalElement, IntervalElement], MapRule]


@dataclass(frozen=True)
class LinearMap:
    source: SpaceSpec
    target: SpaceSpec
    graph: Graph

    def apply(self, e: IntervalElement) -> Optional[IntervalElement]:
        if isinstance(self.graph, MapRule):
            try:
                return self.graph.apply(e)
            except (OrderViolation, ShapeMismatch, CarrierMismatch):
                return None
        return self.graph.get(e)


def compose(first: LinearMap, second: LinearMap) -> LinearMap:
    """first then second, as a table over first's (enumerable) source."""
    table = {}
    for e in iter_domain(first.source.domain):
        mid = first.apply(e)
        out = second.apply(mid) if mid is not None else None
        if out is not None:
            table[e] = out
    return LinearMap(first.source, second.target, table)


def verify_map(m: LinearMap, config: RunConfig = DEFAULT) -> CheckReport:
    """Homogeneity for vector spaces, the combined law for algebras."""
    if not (m.source.scalars.equals(m.target.scalars)
            and m.source.scalars.kind == m.target.scalars.kind):
        return fails(Witness("same_scalars", {},
                             "source and target must share one scalar structure"))
    full = materialize(m.source.domain, config.enum_cap)
    elems = (sorted(full, key=sort_key) if full is not None
             else list(m.source.domain.sample(120)))
    exhaustive = full is not None
    scalars, sc_exh = ((list(m.source.scalars.iter_values(0)), True)
                       if m.source.scalars.is_finite else
                       (list(itertools.islice(
                           m.source.scalars.iter_values(config.budget), 32)), False))
    axioms = []
    for e in elems:
        img = m.apply(e)
        if img is None:
            return fails(Witness("totality", {"element": e},
                                 "map undefined on a domain element"))
        if domain_contains(m.target.domain, img) is False:
            return fails(Witness("image_in_target", {"element": e, "image": img},
                                 "image escapes the target domain"))
    axioms.append(AxiomResult("totality", True,
                              EXHAUSTIVE if exhaustive else SAMPLED))
    algebra = m.source.is_algebra and m.target.is_algebra
    if not algebra:
        for e in elems:
            for c in scalars:
                x = act(m.source, c, e)
                if x is None:
                    continue
                lhs = m.apply(x)
                rhs0 = m.apply(e)
                rhs = act(m.target, c, rhs0) if rhs0 is not None else None
                if lhs is None or rhs is None or lhs != rhs:
                    return fails(Witness("homogeneity",
                                         {"scalar": c, "element": e,
                                          "lhs": lhs, "rhs": rhs},
                                         "T(c*s) differs from c*T(s)"), axioms)
        axioms.append(AxiomResult("homogeneity", True,
                                  EXHAUSTIVE if exhaustive and sc_exh else SAMPLED))
    else:
        combos = itertools.product(scalars, elems, elems)
        total = len(scalars) * len(elems) ** 2
        mode = EXHAUSTIVE if exhaustive and sc_exh and total <= config.pair_budget * 20 \
            else SAMPLED
        if mode == SAMPLED:
            combos = itertools.islice(combos, config.pair_budget)
        for c, s, s1 in combos:
            try:
                xs = act(m.source, c, s)
                arg = xs.combine(s1, m.source.op) if xs is not None else None
            except (ShapeMismatch, CarrierMismatch, OrderViolation):
                continue
            lhs = m.apply(arg) if arg is not None else None
            ts, ts1 = m.apply(s), m.apply(s1)
            rhs = None
            if ts is not None and ts1 is not None:
                scaled = act(m.target, c, ts)
                if scaled is not None:
                    try:
                        rhs = scaled.combine(ts1, m.target.op)
                    except (ShapeMismatch, CarrierMismatch, OrderViolation):
                        rhs = None
            if arg is not None and (lhs is None or rhs is None or lhs != rhs):
                return fails(Witness("linearity",
                                     {"scalar": c, "s": s, "s1": s1,
                                      "lhs": lhs, "rhs": rhs},
                                     "T(c*s + s1) differs from c*T(s) + T(s1)"),
                             axioms)
        axioms.append(AxiomResult("linearity", True, mode))
    verdict = Verdict.HOLDS if all(a.mode == EXHAUSTIVE for a in axioms) \
        else Verdict.BOUNDED_PASS
    return CheckReport(verdict, tuple(axioms))


NOT_DEFINED = "not_defined"


@dataclass(frozen=True)
class KernelResult:
    defined: bool
    members: Tuple[IntervalElement, ...] = ()
    mode: str = EXHAUSTIVE

    def to_json(self):
        if not self.defined:
            return {"kernel": NOT_DEFINED}
        return {"kernel": [e.render() for e in self.members], "mode": self.mode}


def kernel(m: LinearMap, config: RunConfig = DEFAULT) -> KernelResult:
    """{v : m(v) = 0}; undefined when the source lacks the zero element."""
    if not domain_zero_elements(m.source.domain):
        return KernelResult(False)
    full = materialize(m.source.domain, config.enum_cap)
    if full is not None:
        members = tuple(sorted(
            (e for e in full if (img := m.apply(e)) is not None and img.is_zero),
            key=sort_key))
        return KernelResult(True, members, EXHAUSTIVE)
    members = tuple(sorted(
        (e for e in m.source.domain.sample(config.budget)
         if (img := m.apply(e)) is not None and img.is_zero), key=sort_key))
    return KernelResult(True, members, SAMPLED)


def verify_projection(m: LinearMap, P: Domain, strict: bool = False,
                      config: RunConfig = DEFAULT) -> CheckReport:
    """Linear operator with image inside P; strict additionally fixes P pointwise."""
    sub = check_substructure(m.source, P, config=config)
    if not sub.passed:
        return CheckReport(sub.verdict, sub.axioms, sub.witness,
                           error="substructure")
    base = verify_map(m, config)
    if not base.passed:
        return base
    axioms = list(base.axioms) + [AxiomResult("target_substructure", True,
                                              EXHAUSTIVE)]
    full = materialize(m.source.domain, config.enum_cap)
    elems = (sorted(full, key=sort_key) if full is not None
             else list(m.source.domain.sample(120)))
    for e in elems:
        img = m.apply(e)
        if img is not None and domain_contains(P, img) is False:
            return fails(Witness("image_in_part", {"element": e, "image": img},
                                 "image escapes the projection target"), axioms)
    axioms.append(AxiomResult("image_in_part", True,
                              EXHAUSTIVE if full is not None else SAMPLED))
    if strict:
        fullP = materialize(P, config.enum_cap)
        pts = (sorted(fullP, key=sort_key) if fullP is not None
               else list(P.sample(120)))
        for w in pts:
            if m.apply(w) != w:
                return fails(Witness("fixes_part", {"element": w,
                                                    "image": m.apply(w)},
                                     "projection moves a point of P"), axioms)
        axioms.append(AxiomResult("fixes_part", True,
                                  EXHAUSTIVE if fullP is not None else SAMPLED))
    verdict = base.verdict if all(a.ok for a in axioms) else Verdict.FAILS
    if verdict == Verdict.HOLDS and (full is None):
        verdict = Verdict.BOUNDED_PASS
    return CheckReport(verdict, tuple(axioms))


def verify_pseudo_operator(m: LinearMap, tau: MapRule,
                           sub_scalars: ScalarStructure,
                           config: RunConfig = DEFAULT) -> CheckReport:
    """T(a*v + u) = tau(a)*T(v) + T(u) with tau mapping scalars into R."""
    full = materialize(m.source.domain, config.enum_cap)
    elems = (sorted(full, key=sort_key) if full is not None
             else list(m.source.domain.sample(60)))
    scalars = list(m.source.scalars.iter_values(0)) if m.source.scalars.is_finite \
        else list(itertools.islice(m.source.scalars.iter_values(config.budget), 16))
    car = m.source.scalars.carrier

    def tau_val(a):
        out = tau.apply(IntervalElement("interval", (),
                                        (Interval(0, car.coerce(a), car),), car))
        return out.entries[0].hi

    axioms = []
    combos = itertools.islice(itertools.product(scalars, elems, elems),
                              config.pair_budget)
    exhaustive = (m.source.scalars.is_finite and full is not None
                  and len(scalars) * len(elems) ** 2 <= config.pair_budget)
    if exhaustive:
        combos = itertools.product(scalars, elems, elems)
    for a, v, u in combos:
        t = tau_val(a)
        if not sub_scalars.contains(t):
            return fails(Witness("tau_range", {"scalar": a, "tau": t},
                                 "tau leaves the scalar substructure"))
        try:
            xs = act(m.source, a, v)
            arg = xs.combine(u, m.source.op) if xs is not None else None
            lhs = m.apply(arg) if arg is not None else None
            tv, tu = m.apply(v), m.apply(u)
            rhs = None
            if tv is not None and tu is not None:
                scaled = act(m.target, t, tv)
                rhs = scaled.combine(tu, m.target.op) if scaled is not None else None
        except (ShapeMismatch, CarrierMismatch, OrderViolation):
            continue
        if arg is not None and (lhs is None or rhs is None or lhs != rhs):
            return fails(Witness("pseudo_linearity",
                                 {"scalar": a, "v": v, "u": u,
                                  "lhs": lhs, "rhs": rhs},
                                 "T(a*v+u) differs from tau(a)*T(v)+T(u)"))
    axioms.append(AxiomResult("pseudo_linearity", True,
                              EXHAUSTIVE if exhaustive else SAMPLED))
    return CheckReport(Verdict.HOLDS if exhaustive else Verdict.BOUNDED_PASS,
                       tuple(axioms))


# ---------------------------------------------------------------------------
# decompositions
# ---------------------------------------------------------------------------

DIRECT_UNION = "direct_union"
DIRECT_SUM = "direct_sum"
PSEUDO_DIRECT_SUM = "pseudo_direct_sum"
PSEUDO_DIRECT_UNION = "pseudo_direct_union"


@dataclass(frozen=True)
class Decomposition:
    parent: SpaceSpec
    parts: Tuple[Domain, ...]
    mode: str

    def __post_init__(self):
        if self.mode not in (DIRECT_UNION, DIRECT_SUM, PSEUDO_DIRECT_SUM,
                             PSEUDO_DIRECT_UNION):
            raise ValueError(f"unknown decomposition mode {self.mode!r}")


def _patterns_or_none(domains) -> Optional[List[PatternFamily]]:
    out = []
    for d in domains:
        slices = domain_slices(d)
        if len(slices) != 1 or not isinstance(slices[0], PatternFamily):
            return None
        out.append(slices[0])
    return out


def _intersection(a: Domain, b: Domain, config) -> Tuple[Optional[frozenset], bool]:
    """(common members, exact); (None, False) when not computable at all."""
    pats = _patterns_or_none([a, b])
    if pats is not None and all(p.is_untied_unit() for p in pats):
        pa, pb = pats
        if (pa.kind, pa.dims, pa.carrier, pa.fuzzy) != (pb.kind, pb.dims,
                                                        pb.carrier, pb.fuzzy):
            return frozenset(), True
        common = pa.support() & pb.support()
        sub = _support_family(pa, common)
        size = sub.size()
        if size is not None and size <= config.enum_cap:
            return frozenset(iter_domain(sub)), True
        # representative members only; enough for nonzero witnesses
        return frozenset(sub.sample(3)) | frozenset([sub.zero()]), False
    ea = materialize(a, config.enum_cap)
    eb = materialize(b, config.enum_cap)
    if ea is None or eb is None:
        return None, False
    return ea & eb, True


def _support_family(p: PatternFamily, support) -> PatternFamily:
    slots = tuple(s if i in support else None for i, s in enumerate(p.slots))
    return PatternFamily(p.carrier, p.kind, p.dims, slots, p.nparams, p.fuzzy)


def _intersection_nonzero_witness(a, b, config) -> Optional[IntervalElement]:
    common, _ = _intersection(a, b, config)
    if common is None:
        return None
    nz = sorted((e for e in common if not e.is_zero), key=sort_key)
    return nz[0] if nz else None


def _sum_covers(d: Decomposition, config) -> Tuple[object, Optional[Witness]]:
    """Does part_1 + ... + part_m equal the parent domain?"""
    pats = _patterns_or_none(list(d.parts) + [d.parent.domain])
    if pats is not None and all(p.is_untied_unit() for p in pats) \
            and d.parent.op in ("add", "max"):
        *parts, parent = pats
        if any((p.kind, p.dims, p.carrier) != (parent.kind, parent.dims,
                                               parent.carrier) for p in parts):
            return False, Witness("sum_covers", {}, "part shape differs from parent")
        covered = frozenset().union(*[p.support() for p in parts])
        missing = parent.support() - covered
        if missing:
            i = min(missing)
            probe = _support_family(parent, frozenset([i]))
            wit = next(e for e in probe.sample(4) if not e.is_zero)
            return False, Witness("sum_covers", {"element": wit},
                                  "no part touches one coordinate of the parent")
        return True, None
    # explicit iterated sumset
    sets = [materialize(p, config.enum_cap) for p in d.parts]
    parent = materialize(d.parent.domain, config.enum_cap)
    if parent is None or any(s is None for s in sets):
        return UNKNOWN, None
    acc = sets[0]
    for s in sets[1:]:
        nxt = set()
        for x in acc:
            for y in s:
                try:
                    nxt.add(x.combine(y, d.parent.op))
                except (ShapeMismatch, CarrierMismatch, OrderViolation):
                    pass
        acc = frozenset(nxt)
        if len(acc) > config.enum_cap * 4:
            return UNKNOWN, None
    if acc == parent:
        return True, None
    missing = sorted(parent - acc, key=sort_key)
    extra = sorted(acc - parent, key=sort_key)
    if missing:
        return False, Witness("sum_covers", {"element": missing[0]},
                              "parent element missed by the sumset")
    return False, Witness("sum_covers", {"element": extra[0]},
                          "sumset escapes the parent")


def _union_covers(d: Decomposition, config):
    parent = materialize(d.parent.domain, config.enum_cap)
    if parent is None:
        return UNKNOWN, None
    for e in sorted(parent, key=sort_key):
        if not any(domain_contains(p, e) is True for p in d.parts):
            return False, Witness("union_covers", {"element": e},
                                  "parent element in no part")
    return True, None


def check_decomposition(d: Decomposition, config: RunConfig = DEFAULT,
                        verify_parts: bool = True) -> CheckReport:
    if d.mode in (DIRECT_SUM, PSEUDO_DIRECT_SUM) and not d.parent.is_algebra:
        return fails(Witness("parent_kind", {},
                             "sum decompositions need an algebra parent"))
    memo: Dict[int, Optional[frozenset]] = {}

    def _mat(p):
        key = id(p)
        if key not in memo:
            memo[key] = materialize(p, config.enum_cap)
        return memo[key]
    axioms: List[AxiomResult] = []
    bounded_any = False
    if verify_parts:
        for i, p in enumerate(d.parts):
            rep = check_substructure(d.parent, p, config=config)
            if not rep.passed:
                return fails(Witness("part_substructure",
                                     {"part": str(i), "cause": rep.summary()},
                                     "a part is not a substructure"), axioms)
            bounded_any |= rep.verdict == Verdict.BOUNDED_PASS
        axioms.append(AxiomResult("parts_substructures", True,
                                  SAMPLED if bounded_any else EXHAUSTIVE))

    pairs = list(itertools.combinations(range(len(d.parts)), 2))
    inter_witnesses = {}
    for i, j in pairs:
        w = _intersection_nonzero_witness(d.parts[i], d.parts[j], config)
        inter_witnesses[(i, j)] = w

    if d.mode in (DIRECT_UNION, PSEUDO_DIRECT_UNION):
        cover, wit = _union_covers(d, config)
    else:
        cover, wit = _sum_covers(d, config)
    if cover is False:
        return fails(wit, axioms)
    if cover is UNKNOWN:
        bounded_any = True
    axioms.append(AxiomResult("covers_parent", True,
                              SAMPLED if cover is UNKNOWN else EXHAUSTIVE))

    if d.mode in (DIRECT_UNION, DIRECT_SUM):
        for (i, j), w in inter_witnesses.items():
            if w is not None:
                return fails(Witness("pairwise_intersection",
                                     {"parts": f"{i},{j}", "element": w},
                                     "nonzero intersection between parts"), axioms)
        axioms.append(AxiomResult("pairwise_intersection", True, EXHAUSTIVE))
    else:
        if all(w is None for w in inter_witnesses.values()):
            return fails(Witness("some_overlap", {},
                                 "pseudo modes require a nonzero intersection"),
                         axioms)
        axioms.append(AxiomResult("some_overlap", True, EXHAUSTIVE))
        if d.mode == PSEUDO_DIRECT_SUM:
            # distinctness of parts and clause (c): no intersection is a part
            for i, j in pairs:
                eq, _ = domains_equal(d.parts[i], d.parts[j], config.budget)
                if eq is True:
                    return fails(Witness("parts_distinct", {"parts": f"{i},{j}"},
                                         "two parts coincide"), axioms)
            for (i, j), w in inter_witnesses.items():
                if w is None:
                    continue
                common, exact = _intersection(d.parts[i], d.parts[j], config)
                if common is None or not exact:
                    bounded_any = True
                    continue
                for k, p in enumerate(d.parts):
                    pk = _mat(p)
                    if pk is None:
                        bounded_any = True
                    elif pk == common:
                        return fails(Witness(
                            "intersection_not_a_part",
                            {"parts": f"{i},{j}", "equals_part": str(k)},
                            "an intersection equals a listed part"), axioms)
            axioms.append(AxiomResult("parts_distinct", True, EXHAUSTIVE))
            axioms.append(AxiomResult("intersection_not_a_part", True, EXHAUSTIVE))

    verdict = Verdict.BOUNDED_PASS if bounded_any else Verdict.HOLDS
    return CheckReport(verdict, tuple(axioms))
