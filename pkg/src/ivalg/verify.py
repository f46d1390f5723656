"""Axiom checking for every structure kind plus the simplicity classification.

The axiom set is selected by (scalar kind, structure kind):

* closure of the scalar action - always;
* 0v = 0 in V and scalar distributivity (c1+c2)v = c1v + c2v - additive
  semigroup and group scalars;
* closure under the composition op and c(u+v) = cu+cv - linear algebras;
* additive inverses in V - group scalars on linear algebras.

Finite domains are exhausted; linear pattern families are handled by the
structural closure argument (mode "proved") with sampled spot checks;
anything else samples within budget and reports BoundedPass.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .carriers import CarrierMismatch, OrderViolation
from .domains import (UNKNOWN, BudgetExceeded, Domain, ExplicitDomain,
                      PatternFamily, UnionDomain, domain_contains,
                      domain_slices, domain_subset, domain_zero_elements,
                      domains_equal, iter_domain, materialize)
from .elements import IntervalElement, ShapeMismatch, sort_key
from .report import (DEFAULT, EXHAUSTIVE, PROVED, SAMPLED, AxiomResult,
                     CheckReport, RunConfig, Verdict, Witness, fails, merge)
from .scalars import GROUP, SEMIGROUP, SET, ScalarStructure
from .spaces import (LINEAR_ALGEBRA, VECTOR_SPACE, SpaceSpec, act,
                     orbit_closure)


def _scalar_stream(sc: ScalarStructure, config: RunConfig):
    """(values, exhaustive_flag): all values for finite structures, a
    deterministic budget-limited prefix otherwise."""
    if sc.is_finite:
        return list(sc.iter_values(0)), True
    return list(itertools.islice(sc.iter_values(config.budget), 64)), False


def _domain_stream(d: Domain, config: RunConfig):
    size = d.size()
    if _pattern_only(d):
        # closure is proved structurally; the stream only feeds spot checks
        if size is not None and size <= 200:
            return list(iter_domain(d)), True
        return list(d.sample(60)), False
    if size is not None and size <= config.enum_cap:
        return list(iter_domain(d)), True
    return list(d.sample(min(config.budget, 500))), False


def _pattern_only(d: Domain) -> bool:
    return all(isinstance(s, PatternFamily) for s in domain_slices(d))


def check_structure(spec: SpaceSpec, config: RunConfig = DEFAULT) -> CheckReport:
    """Verify the axioms of the claimed structure; Fails carries a witness."""
    axioms: List[AxiomResult] = []
    scalars, sc_exhaustive = _scalar_stream(spec.scalars, config)
    elems, dom_exhaustive = _domain_stream(spec.domain, config)
    proved_domain = _pattern_only(spec.domain)
    if proved_domain and any(getattr(s, "fuzzy", False) for s in domain_slices(spec.domain)):
        # the linear-image closure argument needs scalars inside [0,1]
        if any(c > 1 for c in scalars):
            proved_domain = False
    budget_used = 0
    bounded = False

    # scalar action closure
    mode = PROVED if proved_domain else (EXHAUSTIVE if (sc_exhaustive and dom_exhaustive)
                                         else SAMPLED)
    spot_elems = elems if mode != PROVED else elems[:24]
    spot_scalars = scalars if mode != PROVED else scalars[:24]
    for v in spot_elems:
        for c in spot_scalars:
            budget_used += 1
            w = act(spec, c, v)
            if w is None:
                return fails(Witness("scalar_closure", {"scalar": c, "element": v},
                                     "scalar action undefined (order violation)"),
                             axioms, budget_used)
            r = domain_contains(spec.domain, w)
            if r is False:
                return fails(Witness("scalar_closure",
                                     {"scalar": c, "element": v, "result": w},
                                     "scaled element escapes the domain"),
                             axioms, budget_used)
            if r is UNKNOWN:
                bounded = True
    if mode == SAMPLED or (mode == EXHAUSTIVE and not (sc_exhaustive and dom_exhaustive)):
        bounded = True
    axioms.append(AxiomResult("scalar_closure", True, mode))

    # semigroup/group extras: zero element and scalar distributivity
    if spec.scalars.kind in (SEMIGROUP, GROUP):
        zeros = domain_zero_elements(spec.domain)
        if not zeros:
            v = spot_elems[0] if spot_elems else None
            data = {"element": v} if v is not None else {}
            return fails(Witness("zero_in_domain", data,
                                 "0v = 0 requires the zero element in the domain"),
                         axioms, budget_used)
        axioms.append(AxiomResult("zero_in_domain", True,
                                  EXHAUSTIVE if dom_exhaustive or proved_domain else SAMPLED))
        for v in spot_elems:
            z = act(spec, 0, v)
            if z is None or not z.is_zero:
                return fails(Witness("zero_annihilation", {"element": v, "result": z},
                                     "0v is not the zero element"), axioms, budget_used)
        axioms.append(AxiomResult("zero_annihilation", True,
                                  PROVED if proved_domain else mode))
        dist_mode, ok_wit = _scalar_distributivity(spec, scalars, spot_elems, config)
        if ok_wit is not None:
            return fails(ok_wit, axioms, budget_used)
        axioms.append(AxiomResult("scalar_distributivity", True, dist_mode))

    # linear algebra extras
    if spec.is_algebra:
        r = _additive_closure(spec, elems, dom_exhaustive and sc_exhaustive,
                              proved_domain, config)
        if isinstance(r, Witness):
            return fails(r, axioms, budget_used)
        axioms.append(r)
        if r.mode == SAMPLED:
            bounded = True
        w = _vector_distributivity(spec, scalars, elems, config)
        if isinstance(w, Witness):
            return fails(w, axioms, budget_used)
        axioms.append(w)
        if spec.scalars.kind == GROUP:
            w = _additive_inverses(spec, elems, proved_domain)
            if isinstance(w, Witness):
                return fails(w, axioms, budget_used)
            axioms.append(w)

    verdict = Verdict.BOUNDED_PASS if bounded else Verdict.HOLDS
    return CheckReport(verdict, tuple(axioms), None, budget_used)


def _scalar_distributivity(spec, scalars, elems, config):
    """(c1+c2)v = c1v + c2v; exact endpoint identity, still executed."""
    pairs = list(itertools.product(scalars, repeat=2))
    sampled = False
    if len(pairs) * max(1, len(elems)) > config.pair_budget:
        rng = config.fresh_rng()
        pairs = [pairs[rng.randrange(len(pairs))] for _ in range(30)] if pairs else []
        sampled = True
    car = spec.scalars.carrier
    for v in elems[:30] if sampled else elems:
        for c1, c2 in pairs:
            try:
                lhs = act(spec, car.add(car.coerce(c1), car.coerce(c2)), v)
                a, b = act(spec, c1, v), act(spec, c2, v)
                rhs = a + b if a is not None and b is not None else None
            except (OrderViolation, ShapeMismatch):
                lhs = rhs = None
            if lhs is None or rhs is None or lhs != rhs:
                return SAMPLED, Witness(
                    "scalar_distributivity",
                    {"c1": c1, "c2": c2, "element": v, "lhs": lhs, "rhs": rhs},
                    "(c1+c2)v differs from c1v + c2v")
    return (SAMPLED if sampled else EXHAUSTIVE), None


def _additive_closure(spec, elems, exhaustive, proved_domain, config):
    if proved_domain:
        # linear images are closed under + (and entrywise max/min); spot-check
        for a, b in itertools.islice(itertools.product(elems[:12], repeat=2), 80):
            try:
                s = a.combine(b, spec.op)
            except (ShapeMismatch, CarrierMismatch, OrderViolation) as exc:
                return Witness("additive_closure", {"a": a, "b": b}, str(exc))
            if domain_contains(spec.domain, s) is False:
                return Witness("additive_closure", {"a": a, "b": b, "sum": s},
                               "sum escapes the domain")
        return AxiomResult("additive_closure", True, PROVED)
    pairs = itertools.product(elems, repeat=2)
    total = len(elems) ** 2
    mode = EXHAUSTIVE if exhaustive and total <= config.pair_budget * 10 else SAMPLED
    if mode == SAMPLED:
        pairs = itertools.islice(pairs, config.pair_budget)
    for a, b in pairs:
        try:
            s = a.combine(b, spec.op)
        except (ShapeMismatch, CarrierMismatch, OrderViolation) as exc:
            return Witness("additive_closure", {"a": a, "b": b}, str(exc))
        r = domain_contains(spec.domain, s)
        if r is False:
            return Witness("additive_closure", {"a": a, "b": b, "sum": s},
                           "sum escapes the domain")
        if r is UNKNOWN:
            mode = SAMPLED
    return AxiomResult("additive_closure", True, mode)


def _vector_distributivity(spec, scalars, elems, config):
    """c(u+v) = cu + cv under the declared op."""
    combos = itertools.product(scalars, elems, elems)
    total = len(scalars) * len(elems) ** 2
    mode = EXHAUSTIVE if total <= config.pair_budget * 10 else SAMPLED
    if mode == SAMPLED:
        combos = itertools.islice(combos, 300)
    for c, u, v in combos:
        try:
            lhs = u.combine(v, spec.op).scaled(c)
            a, b = u.scaled(c), v.scaled(c)
            rhs = a.combine(b, spec.op)
        except (ShapeMismatch, CarrierMismatch, OrderViolation):
            return Witness("vector_distributivity", {"c": c, "u": u, "v": v},
                           "composition undefined while distributing")
        if lhs != rhs:
            return Witness("vector_distributivity",
                           {"c": c, "u": u, "v": v, "lhs": lhs, "rhs": rhs},
                           "c(u+v) differs from cu + cv")
    return AxiomResult("vector_distributivity", True, mode)


def _additive_inverses(spec, elems, proved_domain):
    if proved_domain:
        return AxiomResult("additive_inverses", True, PROVED)
    for v in elems:
        try:
            w = v.negated()
        except (OrderViolation, ValueError):
            return Witness("additive_inverses", {"element": v},
                           "no additive inverse in the carrier")
        if domain_contains(spec.domain, w) is False:
            return Witness("additive_inverses", {"element": v, "inverse": w},
                           "inverse escapes the domain")
    return AxiomResult("additive_inverses", True, EXHAUSTIVE)


# ---------------------------------------------------------------------------
# substructures
# ---------------------------------------------------------------------------


def check_substructure(spec: SpaceSpec, sub_domain: Domain,
                       sub_scalars: Optional[ScalarStructure] = None,
                       target_structure: Optional[str] = None,
                       target_op: Optional[str] = None,
                       config: RunConfig = DEFAULT) -> CheckReport:
    """Is (W, T) a substructure of the given kind inside spec?

    T = spec.scalars (or omitted) checks the plain substructure notions;
    a proper T triggers the subset/subsemigroup/subgroup side conditions.
    target_structure may be weaker than the parent's (the pseudo variants).
    """
    T = sub_scalars or spec.scalars
    structure = target_structure or spec.structure
    op = target_op or spec.op

    inside, wit = domain_subset(sub_domain, spec.domain, config.budget)
    if inside is False:
        return fails(Witness("containment", {"element": wit},
                             "W is not contained in the parent domain"))
    if not T.subset_ok(spec.scalars):
        return fails(Witness("scalar_containment", {},
                             "T is not contained in the parent scalars"))

    # properness side conditions
    eq, _ = domains_equal(sub_domain, spec.domain, config.budget)
    t_proper = not T.equals(spec.scalars)
    if eq is True and not t_proper:
        return fails(Witness("properness", {}, "W equals the whole domain"))
    zeros = domain_zero_elements(sub_domain)
    size = sub_domain.size()
    if size == 0:
        return fails(Witness("properness", {}, "W is empty"))
    if size is not None and size == len(zeros) and size > 0:
        return fails(Witness("properness", {}, "W is the zero substructure"))
    if t_proper:
        if T.kind == SET and (T.size() or 2) <= 1:
            return fails(Witness("scalar_properness", {},
                                 "subset scalars need |T| > 1"))
        if T.kind in (SEMIGROUP, GROUP) and T.size() == 1:
            return fails(Witness("scalar_properness", {},
                                 "trivial scalar substructure"))

    try:
        sub_spec = SpaceSpec(sub_domain, T, structure, op, label="substructure")
    except Exception as exc:
        return fails(Witness("well_formed", {}, str(exc)))
    inner = check_structure(sub_spec, config)
    extra = AxiomResult("containment", True,
                        EXHAUSTIVE if inside is True else SAMPLED)
    bounded_contain = inside is UNKNOWN or eq is UNKNOWN
    rep = CheckReport(inner.verdict, (extra,) + inner.axioms, inner.witness,
                      inner.budget_used, inner.partial, inner.error)
    if rep.verdict == Verdict.HOLDS and bounded_contain:
        rep = CheckReport(Verdict.BOUNDED_PASS, rep.axioms, None, rep.budget_used)
    return rep


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SubVerdict:
    value: Optional[bool]            # None = undecided within budget
    witness: Optional[Witness] = None
    exact: bool = True
    partial: bool = False

    def to_json(self):
        return {"value": self.value, "exact": self.exact, "partial": self.partial,
                "witness": self.witness.to_json() if self.witness else None}


@dataclass(frozen=True)
class Classification:
    is_structure: CheckReport
    simple: SubVerdict
    pseudo_simple: SubVerdict
    partial: bool = False

    @property
    def doubly_simple(self) -> Optional[bool]:
        if self.simple.value is False or self.pseudo_simple.value is False:
            return False
        if self.simple.value is None or self.pseudo_simple.value is None:
            return None
        return True

    def to_json(self):
        return {
            "is_structure": self.is_structure.to_json(),
            "simple": self.simple.to_json(),
            "pseudo_simple": self.pseudo_simple.to_json(),
            "doubly_simple": self.doubly_simple,
            "partial": self.partial,
        }


def _closure_or_none(x, spec, config, scalars=None, cap=None):
    try:
        return orbit_closure(x, spec, config, scalars=scalars, cap=cap)
    except BudgetExceeded:
        return None


def _simple_verdict(spec: SpaceSpec, config: RunConfig) -> SubVerdict:
    """Simple iff every nonzero orbit closure is the whole domain."""
    size = spec.domain.size()
    full = materialize(spec.domain, config.classify_cap)
    if full is not None:
        for x in sorted(full, key=sort_key):
            if x.is_zero:
                continue
            cl = _closure_or_none(x, spec, config)
            if cl is None:
                return SubVerdict(None, exact=False)
            if cl != full:
                return SubVerdict(False, Witness(
                    "simple", {"generator": x,
                               "subspace_size": len(cl),
                               "subspace": _render_set(cl)},
                    "proper nonzero substructure generated"))
        return SubVerdict(True)
    # large or infinite domain: a small closure of any sampled nonzero element
    # is already a definite witness; absence within budget stays bounded
    for x in spec.domain.sample(50):
        if x.is_zero:
            continue
        cl = _closure_or_none(x, spec, config, cap=config.classify_cap)
        if cl is None:
            continue
        if size is not None and len(cl) == size:
            continue
        if size is None or len(cl) < size:
            sub_ok, _ = domain_subset(_as_explicit(cl), spec.domain, config.budget)
            if sub_ok is not False:
                return SubVerdict(False, Witness(
                    "simple", {"generator": x, "subspace_size": len(cl),
                               "subspace": _render_set(cl)},
                    "proper nonzero substructure generated"), exact=True)
    return SubVerdict(None, exact=False)


def _pseudo_pattern_witness(spec: SpaceSpec, T: ScalarStructure,
                            config: RunConfig) -> Optional[Witness]:
    """W = k*V is a T-closed substructure of a pattern domain; a definite
    witness whenever it is proper and nonzero (rescues infinite domains
    whose T-orbits do not terminate)."""
    k = T.multiple
    if k is None and T.carrier.is_modular:
        d = T.as_dzn()
        if d is not None and 1 < d < T.carrier.mod:
            k = d
    if k is None or k <= 1 or not _pattern_only(spec.domain):
        return None
    from .domains import scale_pattern
    parts = tuple(scale_pattern(s, k) for s in domain_slices(spec.domain))
    W: Domain = parts[0] if len(parts) == 1 else UnionDomain(parts)
    nonzero = any(not v.is_zero for v in W.sample(8))
    if not nonzero:
        return None
    for v in spec.domain.sample(80):
        if not v.is_zero and domain_contains(W, v) is False:
            return Witness("pseudo_simple",
                           {"scalars": T.render(), "scale": k, "outside": v},
                           "scaled copy of the domain is a proper substructure")
    return None


def _pseudo_verdict(spec: SpaceSpec, config: RunConfig) -> SubVerdict:
    """Pseudo-simple iff no admissible proper scalar substructure supports one."""
    candidates, complete = spec.scalars.proper_substructures(config.subset_cap)
    size = spec.domain.size()
    full = materialize(spec.domain, config.classify_cap)
    sample = (sorted(full, key=sort_key) if full is not None
              else list(spec.domain.sample(40)))
    for T in candidates:
        w = _pseudo_pattern_witness(spec, T, config)
        if w is not None:
            return SubVerdict(False, w, exact=True, partial=not complete)
        for x in sample:
            if x.is_zero:
                continue
            cl = _closure_or_none(x, spec, config, scalars=T,
                                  cap=None if full is not None
                                  else config.classify_cap)
            if cl is None:
                continue
            proper = (full is not None and cl != full) or (
                full is None and size is not None and len(cl) < size) or (
                full is None and size is None and len(cl) <= config.budget)
            if proper:
                return SubVerdict(False, Witness(
                    "pseudo_simple",
                    {"scalars": T.render(), "generator": x,
                     "subspace": _render_set(cl)},
                    "substructure over a proper scalar substructure"),
                    exact=True, partial=not complete)
    if not candidates:
        return SubVerdict(True, exact=True, partial=not complete)
    if full is None:
        return SubVerdict(None, exact=False, partial=not complete)
    return SubVerdict(True, exact=True, partial=not complete)


def _as_explicit(members) -> ExplicitDomain:
    return ExplicitDomain(tuple(members))


def _render_set(members, limit: int = 12) -> str:
    items = sorted(members, key=sort_key)[:limit]
    body = ",".join(e.render() for e in items)
    more = "" if len(members) <= limit else f",...({len(members)} total)"
    return "{" + body + more + "}"


def classify(spec: SpaceSpec, config: RunConfig = DEFAULT) -> Classification:
    base = check_structure(spec, config)
    simple = _simple_verdict(spec, config)
    pseudo = _pseudo_verdict(spec, config)
    return Classification(base, simple, pseudo,
                          partial=simple.partial or pseudo.partial)
