"""Candidate structure declarations and scalar-orbit closures.

A SpaceSpec bundles an element domain, a scalar structure and the claimed
structure kind (vector space vs linear algebra, with an explicit
composition op so the fuzzy min/max algebras reuse the same machinery).
orbit_closure computes the least substructure containing an element,
which drives subspace discovery and every simplicity verdict.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional

from .carriers import CarrierMismatch, OrderViolation
from .domains import (BudgetExceeded, Domain, ExplicitDomain, PatternFamily,
                      UnionDomain, domain_contains, domain_slices, iter_domain,
                      materialize)
from .elements import IntervalElement, ShapeMismatch, sort_key
from .report import RunConfig, DEFAULT
from .scalars import GROUP, SEMIGROUP, SET, ScalarStructure

VECTOR_SPACE = "vector_space"
LINEAR_ALGEBRA = "linear_algebra"


class BadSpec(ValueError):
    pass


@dataclass(frozen=True)
class SpaceSpec:
    domain: Domain
    scalars: ScalarStructure
    structure: str = VECTOR_SPACE          # VECTOR_SPACE | LINEAR_ALGEBRA
    op: str = "add"                        # composition for algebras: add | max | min
    label: str = ""

    def __post_init__(self):
        if self.structure not in (VECTOR_SPACE, LINEAR_ALGEBRA):
            raise BadSpec(f"unknown structure kind {self.structure!r}")
        if self.op not in ("add", "max", "min"):
            raise BadSpec(f"unknown composition op {self.op!r}")
        if self.structure == LINEAR_ALGEBRA:
            shapes = self.domain.shapes()
            if len(shapes) > 1:
                raise BadSpec("linear algebras need a shape-homogeneous domain")
        dom_carriers = self.domain.carriers()
        if len(dom_carriers) != 1:
            raise BadSpec("domain must live in a single carrier")
        (dc,) = dom_carriers
        sc = self.scalars.carrier
        if dc.is_modular or sc.is_modular:
            if dc != sc:
                raise BadSpec(f"scalar carrier {sc.render()} does not act on {dc.render()}")
        # Nat scalars may act on QPlus domains (integer scalars embed); the
        # reverse direction would need fractional scaling of integer endpoints.
        if dc.kind == "nat" and sc.kind == "qplus":
            raise BadSpec("rational scalars cannot act on an integer domain")

    @property
    def carrier(self):
        (c,) = self.domain.carriers()
        return c

    @property
    def is_algebra(self) -> bool:
        return self.structure == LINEAR_ALGEBRA

    def describe(self) -> str:
        return self.label or (f"{self.scalars.kind} {self.structure} over "
                              f"{self.scalars.render()}")


def act(spec: SpaceSpec, c, e: IntervalElement) -> Optional[IntervalElement]:
    """Scalar action; None when the action is undefined (order violation)."""
    try:
        return e.scaled(c)
    except OrderViolation:
        return None


def orbit_closure(x: IntervalElement, spec: SpaceSpec,
                  config: RunConfig = DEFAULT,
                  scalars: Optional[ScalarStructure] = None,
                  algebra: Optional[bool] = None,
                  cap: Optional[int] = None) -> FrozenSet[IntervalElement]:
    """Smallest subset containing x closed under scalar action (and the
    composition op for algebras). Terminates on finite scalar structures;
    raises BudgetExceeded past the cap otherwise.
    """
    sc = scalars if scalars is not None else spec.scalars
    closed_under_op = spec.is_algebra if algebra is None else algebra
    if not sc.is_finite:
        scalar_values = list(itertools.islice(sc.iter_values(config.budget), 64))
        cap = cap or min(config.budget, 2000)
    else:
        scalar_values = list(sc.iter_values(0))
        cap = cap or max(config.enum_cap, config.budget)
    seen = {x}
    frontier = [x]
    while frontier:
        nxt = []
        for v in frontier:
            for c in scalar_values:
                w = act(spec, c, v)
                if w is not None and w not in seen:
                    seen.add(w)
                    nxt.append(w)
                    if len(seen) > cap:
                        raise BudgetExceeded(
                            f"closure of {x.render()} exceeded {cap} elements")
        if closed_under_op:
            current = sorted(seen, key=sort_key)
            for a, b in itertools.product(current, repeat=2):
                try:
                    w = a.combine(b, spec.op)
                except (ShapeMismatch, CarrierMismatch, OrderViolation):
                    continue
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
                    if len(seen) > cap:
                        raise BudgetExceeded(
                            f"closure of {x.render()} exceeded {cap} elements")
        frontier = nxt
    return frozenset(seen)


def orbit_subspaces(spec: SpaceSpec, config: RunConfig = DEFAULT) -> List[FrozenSet[IntervalElement]]:
    """Distinct proper nonzero single-generated substructures, canonically ordered.

    Requires an enumerable domain; used by subspace discovery and the
    composite-modulus theorem sweeps.
    """
    members = materialize(spec.domain, config.enum_cap)
    if members is None:
        raise BudgetExceeded("domain too large for exhaustive subspace discovery")
    full = frozenset(members)
    found = []
    for x in sorted(members, key=sort_key):
        if x.is_zero:
            continue
        cl = orbit_closure(x, spec, config)
        if cl != full and cl not in found and any(not e.is_zero for e in cl):
            found.append(cl)
    return found
