"""Shorthand constructors for the canonical structures the checks revisit
constantly: scalar interval families {[0, kt]}, full matrix/tuple families,
degree-stepped polynomial families, and Zmod scalar structures.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .carriers import NAT, QPLUS, Carrier, Interval, Zmod
from .domains import ExplicitDomain, PatternFamily, Slot, UnionDomain
from .elements import (MATRIX, POLY, SCALAR, TUPLE, IntervalElement,
                       matrix_element, poly_element, scalar_element,
                       tuple_element)
from .scalars import GROUP, SEMIGROUP, SET, ScalarStructure
from .spaces import LINEAR_ALGEBRA, VECTOR_SPACE, SpaceSpec


def iv(lo, hi, carrier: Carrier) -> Interval:
    return Interval(lo, hi, carrier)


def sc(hi, carrier: Carrier, lo=0) -> IntervalElement:
    return scalar_element(Interval(lo, hi, carrier))


def scalar_set(domain: Iterable, carrier: Carrier) -> ExplicitDomain:
    return ExplicitDomain(tuple(sc(a, carrier) for a in domain))


def scalar_family(carrier: Carrier, coeff: int = 1, fuzzy: bool = False) -> PatternFamily:
    return PatternFamily(carrier, SCALAR, (), (Slot(0, 0, coeff),), 1, fuzzy)


def tuple_family(carrier: Carrier, k: int, tied: bool = False,
                 support: Optional[Sequence[int]] = None,
                 fuzzy: bool = False) -> PatternFamily:
    sup = set(range(k)) if support is None else set(support)
    slots = []
    next_param = 0
    for i in range(k):
        if i not in sup:
            slots.append(None)
            continue
        slots.append(Slot(0 if tied else next_param, 0, 1))
        next_param += 1
    return PatternFamily(carrier, TUPLE, (k,), tuple(slots),
                         1 if tied else max(1, next_param), fuzzy)


def matrix_family(carrier: Carrier, rows: int, cols: int, tied: bool = False,
                  support: Optional[Sequence] = None,
                  fuzzy: bool = False) -> PatternFamily:
    cells = [(r, c) for r in range(rows) for c in range(cols)]
    sup = set(cells) if support is None else {tuple(x) for x in support}
    slots = []
    next_param = 0
    for cell in cells:
        if cell not in sup:
            slots.append(None)
            continue
        slots.append(Slot(0 if tied else next_param, 0, 1))
        next_param += 1
    return PatternFamily(carrier, MATRIX, (rows, cols), tuple(slots),
                         1 if tied else max(1, next_param), fuzzy)


def poly_family(carrier: Carrier, max_deg: int, step: int = 1,
                fuzzy: bool = False) -> PatternFamily:
    slots = []
    next_param = 0
    for d in range(max_deg + 1):
        if d % step:
            slots.append(None)
        else:
            slots.append(Slot(next_param, 0, 1))
            next_param += 1
    return PatternFamily(carrier, POLY, (), tuple(slots), next_param, fuzzy)


def zn_set(n: int) -> ScalarStructure:
    return ScalarStructure(Zmod(n), SET)


def zn_semigroup(n: int) -> ScalarStructure:
    return ScalarStructure(Zmod(n), SEMIGROUP)


def zn_group(n: int) -> ScalarStructure:
    return ScalarStructure(Zmod(n), GROUP)


def nat_semigroup(multiple: Optional[int] = None) -> ScalarStructure:
    if multiple is None:
        return ScalarStructure(NAT, SEMIGROUP)
    return ScalarStructure(NAT, SEMIGROUP, None, multiple)


def explicit_set_scalars(carrier: Carrier, values) -> ScalarStructure:
    return ScalarStructure(carrier, SET, tuple(values))


def canonical_space(n: int, scalar_kind: str, structure: str,
                    label: str = "") -> SpaceSpec:
    """{[0, a] : a in Z_n} over all of Z_n with the requested kinds."""
    sk = {SET: zn_set, SEMIGROUP: zn_semigroup, GROUP: zn_group}[scalar_kind]
    return SpaceSpec(scalar_family(Zmod(n)), sk(n), structure, label=label)


def explicit_space(elements, scalars: ScalarStructure, structure: str = VECTOR_SPACE,
                   op: str = "add", label: str = "") -> SpaceSpec:
    return SpaceSpec(ExplicitDomain(tuple(elements)), scalars, structure, op, label)
