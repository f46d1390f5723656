"""Chapter-style bistructures: pairs of interval spaces with mutual
non-containment, over one shared scalar structure or a biscalar pair,
checked componentwise with bi-level simplicity verdicts.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .domains import (UNKNOWN, Domain, domain_contains, domain_is_plain,
                      domain_subset, domain_zero_elements, domains_equal,
                      materialize)
from .elements import sort_key
from .report import (DEFAULT, EXHAUSTIVE, SAMPLED, AxiomResult, CheckReport,
                     RunConfig, Verdict, Witness, fails, merge)
from .scalars import GROUP, SEMIGROUP, SET, ScalarStructure
from .spaces import LINEAR_ALGEBRA, VECTOR_SPACE, SpaceSpec, orbit_closure
from .verify import (Classification, SubVerdict, check_structure,
                     check_substructure, classify, _closure_or_none)

SHARED = "shared"
BISCALAR = "biscalar"

KIND_LABELS = frozenset({
    "set_bivector", "set_bialgebra", "biset", "quasi_set", "quasi_biset",
    "semi_quasi", "semigroup", "bisemigroup", "group", "bigroup",
    "set_semigroup", "group_semigroup", "set_group",
})


class BadBiSpec(ValueError):
    pass


@dataclass(frozen=True)
class BiSpec:
    left: SpaceSpec
    right: SpaceSpec
    scalar_mode: str = SHARED
    kind_label: str = "set_bivector"

    def __post_init__(self):
        if self.scalar_mode not in (SHARED, BISCALAR):
            raise BadBiSpec(f"unknown scalar mode {self.scalar_mode!r}")
        if self.kind_label not in KIND_LABELS:
            raise BadBiSpec(f"unknown bistructure kind {self.kind_label!r}")
        if self.scalar_mode == SHARED:
            if not (self.left.scalars.equals(self.right.scalars)
                    and self.left.scalars.kind == self.right.scalars.kind):
                raise BadBiSpec("shared mode requires identical scalar structures")
        self._validate_label()

    def _validate_label(self):
        lbl = self.kind_label
        lk, rk = self.left.scalars.kind, self.right.scalars.kind
        expect = {
            "set_bivector": (SET, SET), "set_bialgebra": (SET, SET),
            "biset": (SET, SET), "quasi_set": (SET, SET),
            "quasi_biset": (SET, SET), "semi_quasi": (SET, SET),
            "semigroup": (SEMIGROUP, SEMIGROUP),
            "bisemigroup": (SEMIGROUP, SEMIGROUP),
            "group": (GROUP, GROUP), "bigroup": (GROUP, GROUP),
            "set_semigroup": (SET, SEMIGROUP),
            "group_semigroup": (GROUP, SEMIGROUP),
            "set_group": (SET, GROUP),
        }[lbl]
        if (lk, rk) != expect and (rk, lk) != expect:
            raise BadBiSpec(f"{lbl} needs scalar kinds {expect}, got ({lk}, {rk})")
        if lbl in ("quasi_set", "quasi_biset"):
            if not (domain_is_plain(self.left.domain)
                    or domain_is_plain(self.right.domain)):
                raise BadBiSpec("quasi kinds need one plain (degenerate) side")
        if lbl == "semi_quasi" and self.left.structure == self.right.structure:
            raise BadBiSpec("semi-quasi kinds mix an algebra side with a "
                            "vector-space side")

    @property
    def sides(self) -> Tuple[SpaceSpec, SpaceSpec]:
        return (self.left, self.right)


def _distinctness(b: BiSpec, config: RunConfig) -> Optional[Witness]:
    lr, wl = domain_subset(b.left.domain, b.right.domain, config.budget)
    if lr is True:
        return Witness("distinctness", {}, "left domain contained in right")
    rl, wr = domain_subset(b.right.domain, b.left.domain, config.budget)
    if rl is True:
        return Witness("distinctness", {}, "right domain contained in left")
    if b.scalar_mode == BISCALAR:
        if b.left.scalars.subset_ok(b.right.scalars):
            return Witness("distinctness", {}, "left scalars contained in right")
        if b.right.scalars.subset_ok(b.left.scalars):
            return Witness("distinctness", {}, "right scalars contained in left")
    return None


def check_bistructure(b: BiSpec, config: RunConfig = DEFAULT) -> CheckReport:
    w = _distinctness(b, config)
    if w is not None:
        return CheckReport(Verdict.FAILS, (), w, error="distinctness")
    left = check_structure(b.left, config)
    if left.verdict == Verdict.FAILS:
        return CheckReport(left.verdict, left.axioms,
                           _tag(left.witness, "left"), left.budget_used)
    right = check_structure(b.right, config)
    if right.verdict == Verdict.FAILS:
        return CheckReport(right.verdict, right.axioms,
                           _tag(right.witness, "right"), right.budget_used)
    rep = merge([left, right])
    axioms = (AxiomResult("distinctness", True, EXHAUSTIVE),) + rep.axioms
    return CheckReport(rep.verdict, axioms, rep.witness, rep.budget_used)


def _tag(w: Optional[Witness], side: str) -> Optional[Witness]:
    if w is None:
        return None
    data = dict(w.data)
    data["side"] = side
    return Witness(w.axiom, data, w.message)


def check_bisubstructure(b: BiSpec, w_left: Domain, w_right: Domain,
                         t_left: Optional[ScalarStructure] = None,
                         t_right: Optional[ScalarStructure] = None,
                         target_left: Optional[str] = None,
                         target_right: Optional[str] = None,
                         config: RunConfig = DEFAULT) -> CheckReport:
    """Componentwise substructure check with pair-level properness: the pair
    (W1, W2) must differ from (V1, V2), sides may individually be full."""
    eq_l, _ = domains_equal(w_left, b.left.domain, config.budget)
    eq_r, _ = domains_equal(w_right, b.right.domain, config.budget)
    tl = t_left or b.left.scalars
    tr = t_right or b.right.scalars
    t_proper = (not tl.equals(b.left.scalars)) or (not tr.equals(b.right.scalars))
    if eq_l is True and eq_r is True and not t_proper:
        return fails(Witness("properness", {}, "W equals the whole pair"))
    reports = []
    for (side, W, T, tgt, eq) in (("left", w_left, tl, target_left, eq_l),
                                  ("right", w_right, tr, target_right, eq_r)):
        spec = b.left if side == "left" else b.right
        if eq is True and (T.equals(spec.scalars)):
            reports.append(check_structure(spec, config))
            continue
        rep = check_substructure(spec, W, T, tgt, config=config)
        # pair-level properness: allow a full component when the other is proper
        if (rep.verdict == Verdict.FAILS and rep.witness is not None
                and rep.witness.axiom == "properness" and eq is True):
            rep = check_structure(
                SpaceSpec(W, T, tgt or spec.structure, spec.op), config)
        if rep.verdict == Verdict.FAILS:
            return CheckReport(rep.verdict, rep.axioms,
                               _tag(rep.witness, side), rep.budget_used)
        reports.append(rep)
    return merge(reports)


@dataclass(frozen=True)
class BiClassification:
    is_structure: CheckReport
    left: Classification
    right: Classification
    simple: SubVerdict
    pseudo_simple: SubVerdict
    semi_simple: Optional[bool]

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
            "left": self.left.to_json(),
            "right": self.right.to_json(),
            "simple": self.simple.to_json(),
            "pseudo_simple": self.pseudo_simple.to_json(),
            "doubly_simple": self.doubly_simple,
            "semi_simple": self.semi_simple,
        }


def _bi_simple(b: BiSpec, left: Classification, right: Classification) -> SubVerdict:
    """No pair (W1, W2) != (V1, V2) of (full or proper-nonzero) substructures
    exists iff neither side has a proper nonzero substructure."""
    for side_name, cls, other in (("left", left, b.right),
                                  ("right", right, b.left)):
        if cls.simple.value is False:
            w = cls.simple.witness
            data = dict(w.data) if w else {}
            data["side"] = side_name
            data["other_component"] = "full"
            return SubVerdict(False, Witness("bi_simple", data,
                                             "one side has a proper nonzero "
                                             "substructure; pair it with the "
                                             "full other side"),
                              exact=cls.simple.exact)
    if left.simple.value is True and right.simple.value is True:
        return SubVerdict(True, exact=left.simple.exact and right.simple.exact)
    return SubVerdict(None, exact=False)


def _bi_pseudo(b: BiSpec, config: RunConfig) -> SubVerdict:
    """Shared mode: one proper admissible T plus a proper W on either side.
    Biscalar mode: both T_i must be proper (see ledger)."""
    if b.scalar_mode == SHARED:
        cands, complete = b.left.scalars.proper_substructures(config.subset_cap)
        for T in cands:
            for side_name, spec in (("left", b.left), ("right", b.right)):
                w = _proper_sub_over(spec, T, config)
                if w is not None:
                    data = dict(w.data)
                    data["side"] = side_name
                    return SubVerdict(False, Witness("bi_pseudo", data, w.message),
                                      exact=True, partial=not complete)
        if not cands:
            return SubVerdict(True, exact=True, partial=not complete)
        return SubVerdict(True, exact=True, partial=not complete)
    cands_l, comp_l = b.left.scalars.proper_substructures(config.subset_cap)
    cands_r, comp_r = b.right.scalars.proper_substructures(config.subset_cap)
    complete = comp_l and comp_r
    if not cands_l or not cands_r:
        return SubVerdict(True, exact=True, partial=not complete)
    for tl, tr in itertools.islice(itertools.product(cands_l, cands_r), 4000):
        ws = []
        for spec, T in ((b.left, tl), (b.right, tr)):
            ws.append(_sub_over(spec, T, config))
        if all(w is not None for w in ws):
            return SubVerdict(False, Witness(
                "bi_pseudo",
                {"left_scalars": tl.render(), "right_scalars": tr.render()},
                "bi-substructure over a proper scalar pair"),
                exact=True, partial=not complete)
    return SubVerdict(True, exact=True, partial=not complete)


def _proper_sub_over(spec: SpaceSpec, T: ScalarStructure,
                     config: RunConfig) -> Optional[Witness]:
    """A proper nonzero T-substructure of spec's domain, as a witness."""
    from .verify import _pseudo_pattern_witness
    w = _pseudo_pattern_witness(spec, T, config)
    if w is not None:
        return w
    size = spec.domain.size()
    full = materialize(spec.domain, config.classify_cap)
    sample = (sorted(full, key=sort_key) if full is not None
              else list(spec.domain.sample(30)))
    for x in sample:
        if x.is_zero:
            continue
        cl = _closure_or_none(x, spec, config, scalars=T,
                              cap=None if full is not None
                              else config.classify_cap)
        if cl is None:
            continue
        if (full is not None and cl != full) or \
                (full is None and size is not None and len(cl) < size) or \
                (full is None and size is None):
            return Witness("pseudo_simple",
                           {"scalars": T.render(), "generator": x},
                           "substructure over a proper scalar substructure")
    return None


def _sub_over(spec, T, config):
    """Any T-substructure at all (the full domain qualifies when T-closed)."""
    rep = check_structure(SpaceSpec(spec.domain, T, spec.structure, spec.op),
                          config)
    if rep.passed:
        return Witness("sub", {"scalars": T.render()}, "full side over proper T")
    return _proper_sub_over(spec, T, config)


def _semi_simple(left: Classification, right: Classification) -> Optional[bool]:
    ld, rd = left.doubly_simple, right.doubly_simple
    if ld is None or rd is None or left.simple.value is None \
            or right.simple.value is None:
        return None
    if ld and not rd:
        return right.simple.value is False
    if rd and not ld:
        return left.simple.value is False
    return False


def classify_bi(b: BiSpec, config: RunConfig = DEFAULT) -> BiClassification:
    base = check_bistructure(b, config)
    left = classify(b.left, config)
    right = classify(b.right, config)
    simple = _bi_simple(b, left, right)
    pseudo = _bi_pseudo(b, config)
    return BiClassification(base, left, right, simple, pseudo,
                            _semi_simple(left, right))
