"""Element domains: explicit finite sets, linear pattern families, unions.

A pattern family is the image of a linear map: each entry slot is either
the zero interval or [lo_coeff*t, hi_coeff*t] for one named parameter t
ranging over the full carrier (all of Z_n, all nonnegative integers, or
all rationals in [0,1] for fuzzy families). Parameters may be shared
between slots ("tied" entries) and carry integer coefficients, which is
exactly the restricted predicate language the definition files use.

Being linear images, pattern families are automatically closed under
scalar action, entrywise addition, negation (Zmod) and entrywise
max/min (fuzzy) - closure checks on them report mode "proved".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .carriers import Carrier, Interval, Value, zero_interval
from .elements import (MATRIX, POLY, SCALAR, TUPLE, IntervalElement, sort_key)

UNKNOWN = "unknown"  # three-valued membership marker


class BudgetExceeded(RuntimeError):
    """Deterministic enumeration ran out of budget before finishing."""


# ---------------------------------------------------------------------------
# explicit domains
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExplicitDomain:
    elements: Tuple[IntervalElement, ...]

    def __post_init__(self):
        elems = tuple(sorted(set(self.elements), key=sort_key))
        object.__setattr__(self, "elements", elems)

    @property
    def is_finite(self) -> bool:
        return True

    def size(self) -> Optional[int]:
        return len(self.elements)

    def contains(self, e: IntervalElement):
        return e in set(self.elements)

    def __iter__(self) -> Iterator[IntervalElement]:
        return iter(self.elements)

    def sample(self, budget: int) -> Iterator[IntervalElement]:
        return itertools.islice(iter(self.elements), budget)

    def shapes(self):
        return {e.shape for e in self.elements}

    def carriers(self):
        return {e.carrier for e in self.elements}

    def zero_members(self):
        return [e for e in self.elements if e.is_zero]


# ---------------------------------------------------------------------------
# pattern families
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Slot:
    """One entry of a pattern: [lo_coeff*t, hi_coeff*t] for parameter index t."""

    param: int
    lo_coeff: int
    hi_coeff: int


@dataclass(frozen=True)
class PatternFamily:
    carrier: Carrier
    kind: str                       # element kind of members
    dims: Tuple[int, ...]
    slots: Tuple[Optional[Slot], ...]   # None = pinned zero entry
    nparams: int
    fuzzy: bool = False             # params range over Q cap [0,1] instead of Nat

    def __post_init__(self):
        used = {s.param for s in self.slots if s is not None}
        if used and (min(used) < 0 or max(used) >= self.nparams):
            raise ValueError("slot references undeclared parameter")
        if self.fuzzy and self.carrier.kind != "qplus":
            raise ValueError("fuzzy families require the QPlus carrier")
        for s in self.slots:
            if s is not None and s.hi_coeff == 0 and s.lo_coeff == 0:
                raise ValueError("all-zero slot must be encoded as None")

    # -- size / finiteness --------------------------------------------------

    @property
    def is_finite(self) -> bool:
        return self.carrier.is_modular

    def size(self) -> Optional[int]:
        if not self.carrier.is_modular:
            return None
        # distinct members can be fewer than n^p when coefficients collide;
        # count via the distinct value grid per parameter
        n = self.carrier.mod
        total = 1
        for p in range(self.nparams):
            coeffs = []
            for s in self.slots:
                if s is not None and s.param == p:
                    if s.lo_coeff:
                        coeffs.append(s.lo_coeff)
                    if s.hi_coeff:
                        coeffs.append(s.hi_coeff)
            if not coeffs:
                continue
            g = 0
            for c in coeffs:
                g = gcd(g, c % n)
            g = gcd(g, n)
            total *= n // g if g else 1
        return total

    # -- member construction -------------------------------------------------

    def member(self, params: Sequence[Value]) -> IntervalElement:
        c = self.carrier
        entries = []
        for s in self.slots:
            if s is None:
                entries.append(zero_interval(c))
            else:
                t = c.coerce(params[s.param])
                entries.append(Interval(c.mul(c.coerce(s.lo_coeff), t),
                                        c.mul(c.coerce(s.hi_coeff), t), c))
        if self.kind == POLY:
            while entries and entries[-1].is_zero:
                entries.pop()
            return IntervalElement(POLY, (), tuple(entries), c)
        return IntervalElement(self.kind, self.dims, tuple(entries), self.carrier)

    def zero(self) -> IntervalElement:
        return self.member((0,) * self.nparams)

    # -- membership -----------------------------------------------------------

    def _solve_linear(self, coeff: int, value: Value) -> Optional[List[Value]]:
        """Solutions t of coeff*t = value in the carrier (None = unsolvable)."""
        c = self.carrier
        if c.is_modular:
            n = c.mod
            a, b = coeff % n, value % n
            if a == 0:
                return list(range(n)) if b == 0 else None
            g = gcd(a, n)
            if b % g:
                return None
            n_g = n // g
            t0 = (pow(a // g, -1, n_g) * (b // g)) % n_g
            return [t0 + k * n_g for k in range(g)]
        if coeff == 0:
            return None if value != 0 else UNKNOWN  # unconstrained
        q = Fraction(value, coeff)
        if c.kind == "nat":
            if q.denominator != 1 or q < 0:
                return None
            return [q.numerator]
        if q < 0 or (self.fuzzy and q > 1):
            return None
        return [q]

    def contains(self, e: IntervalElement):
        if e.carrier != self.carrier:
            return False
        if self.kind == POLY:
            if e.kind != POLY or len(e.entries) > len(self.slots):
                return False
            z = zero_interval(self.carrier)
            entries = e.entries + (z,) * (len(self.slots) - len(e.entries))
        else:
            if (e.kind, e.dims) != (self.kind, self.dims):
                return False
            entries = e.entries
        # candidate solution sets per parameter, intersected across slots
        cands: List[Optional[set]] = [None] * self.nparams
        for s, iv in zip(self.slots, entries):
            if s is None:
                if not iv.is_zero:
                    return False
                continue
            if self.fuzzy and not (iv.is_canonical and 0 <= iv.hi <= 1):
                return False
            for coeff, val in ((s.lo_coeff, iv.lo), (s.hi_coeff, iv.hi)):
                sols = self._solve_linear(coeff, val)
                if sols is None:
                    return False
                if sols is UNKNOWN:
                    continue
                ss = set(sols)
                if cands[s.param] is None:
                    cands[s.param] = ss
                else:
                    cands[s.param] &= ss
                    if not cands[s.param]:
                        return False
        return True

    # -- enumeration ------------------------------------------------------------

    def _param_values(self, budget: int) -> Iterable[Value]:
        if self.carrier.is_modular:
            return range(self.carrier.mod)
        if self.fuzzy:
            vals = []
            for den in range(1, budget + 2):
                for num in range(0, den + 1):
                    f = Fraction(num, den)
                    if f not in vals:
                        vals.append(f)
                if len(vals) > budget:
                    break
            return vals
        return range(budget + 1)

    def __iter__(self) -> Iterator[IntervalElement]:
        if not self.is_finite:
            raise BudgetExceeded("cannot exhaustively iterate an infinite family")
        return self.sample(None)

    def sample(self, budget: Optional[int]) -> Iterator[IntervalElement]:
        """Deterministic member stream; exhaustive for modular carriers."""
        per = 10 ** 6 if self.carrier.is_modular else max(2, int(
            (budget or 64) ** (1 / max(1, self.nparams))))
        values = list(self._param_values(per))
        if self.nparams == 0:
            yield self.member(())
            return
        live = sorted({s.param for s in self.slots if s is not None})
        dedupe = not self.is_untied_unit()
        seen = set()
        count = 0
        grids = [values if p in live else [values[0]] for p in range(self.nparams)]
        # vary the first parameter fastest so low-index slots move early
        for rev in itertools.product(*reversed(grids)):
            m = self.member(rev[::-1])
            if dedupe:
                if m in seen:
                    continue
                seen.add(m)
            yield m
            count += 1
            if budget is not None and count >= budget:
                return

    def shapes(self):
        return {((POLY,) if self.kind == POLY else (self.kind,) + self.dims)}

    def carriers(self):
        return {self.carrier}

    # -- structural predicates used by the fast decomposition paths -------------

    def support(self) -> frozenset:
        return frozenset(i for i, s in enumerate(self.slots) if s is not None)

    def is_untied_unit(self) -> bool:
        """Each live slot has its own parameter with canonical unit pattern [0, t]."""
        seen = set()
        for s in self.slots:
            if s is None:
                continue
            if s.lo_coeff != 0 or s.param in seen:
                return False
            seen.add(s.param)
            if self.carrier.is_modular:
                if gcd(s.hi_coeff, self.carrier.mod) != 1:
                    return False
            elif s.hi_coeff != 1:
                return False
        return True

    def is_full_on_shape(self) -> bool:
        return self.is_untied_unit() and all(s is not None for s in self.slots)


Domain = Union[ExplicitDomain, PatternFamily, "UnionDomain"]


@dataclass(frozen=True)
class UnionDomain:
    """Disjoint union of shape-homogeneous slices (mixed-shape collections)."""

    parts: Tuple[Domain, ...]

    @property
    def is_finite(self) -> bool:
        return all(p.is_finite for p in self.parts)

    def size(self) -> Optional[int]:
        total = 0
        for p in self.parts:
            s = p.size()
            if s is None:
                return None
            total += s
        return total

    def contains(self, e: IntervalElement):
        out = False
        for p in self.parts:
            r = p.contains(e)
            if r is True:
                return True
            if r is UNKNOWN:
                out = UNKNOWN
        return out

    def __iter__(self) -> Iterator[IntervalElement]:
        seen = set()
        for p in self.parts:
            for e in p:
                if e not in seen:
                    seen.add(e)
                    yield e

    def sample(self, budget: int) -> Iterator[IntervalElement]:
        per = max(1, budget // max(1, len(self.parts)))
        seen = set()
        for p in self.parts:
            for e in p.sample(per):
                if e not in seen:
                    seen.add(e)
                    yield e

    def shapes(self):
        out = set()
        for p in self.parts:
            out |= p.shapes()
        return out

    def carriers(self):
        out = set()
        for p in self.parts:
            out |= p.carriers()
        return out


# ---------------------------------------------------------------------------
# generic domain algorithms
# ---------------------------------------------------------------------------


def domain_slices(d: Domain) -> Tuple[Domain, ...]:
    return d.parts if isinstance(d, UnionDomain) else (d,)


def domain_contains(d: Domain, e: IntervalElement):
    return d.contains(e)


def iter_domain(d: Domain, budget: Optional[int] = None) -> Iterator[IntervalElement]:
    """Deterministic iteration; exhaustive when the domain is finite and
    budget is None, otherwise budget-limited."""
    if budget is None:
        if not d.is_finite:
            raise BudgetExceeded("infinite domain requires a budget")
        return iter(d)
    return d.sample(budget)


def materialize(d: Domain, cap: int) -> Optional[frozenset]:
    """Explicit member set if the domain is finite and within cap, else None."""
    s = d.size()
    if s is None or s > cap:
        return None
    return frozenset(iter_domain(d))


def domain_zero_elements(d: Domain) -> List[IntervalElement]:
    out = []
    for s in domain_slices(d):
        if isinstance(s, ExplicitDomain):
            out.extend(s.zero_members())
        else:
            z = s.zero()
            if s.contains(z):
                out.append(z)
    uniq = []
    for e in sorted(out, key=sort_key):
        if e not in uniq:
            uniq.append(e)
    return uniq


def domain_subset(a: Domain, b: Domain, budget: int) -> Tuple[object, Optional[IntervalElement]]:
    """Is a a subset of b? Returns (True | False | UNKNOWN, counterexample).

    Exact whenever a is finite/enumerable or both sides are pattern slices
    with comparable structure; bounded sampling otherwise.
    """
    verdict_unknown = False
    for sa in domain_slices(a):
        if isinstance(sa, ExplicitDomain):
            for e in sa:
                r = domain_contains(b, e)
                if r is False:
                    return False, e
                if r is UNKNOWN:
                    verdict_unknown = True
            continue
        res = _pattern_subset(sa, b, budget)
        if res[0] is False:
            return res
        if res[0] is UNKNOWN:
            verdict_unknown = True
    return (UNKNOWN, None) if verdict_unknown else (True, None)


def _pattern_subset(a: PatternFamily, b: Domain, budget: int):
    # structural fast path: untied-unit families are full modules on their
    # support, so containment reduces to support containment in a matching slice
    # b untied-unit is full on its support, so it swallows any family whose
    # support fits inside (a's internal ties/coefficients do not matter)
    for sb in domain_slices(b):
        if not (isinstance(sb, PatternFamily) and sb.carrier == a.carrier
                and sb.is_untied_unit() and a.fuzzy == sb.fuzzy):
            continue
        if a.kind == POLY and sb.kind == POLY:
            if all(i < len(sb.slots) and i in sb.support() for i in a.support()):
                return True, None
        elif (a.kind, a.dims) == (sb.kind, sb.dims) and a.support() <= sb.support():
            return True, None
    if a.is_finite and (a.size() or 0) <= budget:
        for e in a:
            r = domain_contains(b, e)
            if r is False:
                return False, e
            if r is UNKNOWN:
                return UNKNOWN, None
        return True, None
    # infinite, no structural argument: sampled members only -> bounded verdict
    for e in a.sample(min(budget, 200)):
        if domain_contains(b, e) is False:
            return False, e
    return UNKNOWN, None


def domains_equal(a: Domain, b: Domain, budget: int):
    r1, w1 = domain_subset(a, b, budget)
    if r1 is False:
        return False, w1
    r2, w2 = domain_subset(b, a, budget)
    if r2 is False:
        return False, w2
    if r1 is True and r2 is True:
        return True, None
    return UNKNOWN, None


def scale_pattern(p: PatternFamily, k: int) -> PatternFamily:
    """The family {k*v : v in p} - slot coefficients multiplied by k."""
    slots = []
    for s in p.slots:
        if s is None:
            slots.append(None)
            continue
        lo, hi = s.lo_coeff * k, s.hi_coeff * k
        if p.carrier.is_modular:
            lo, hi = lo % p.carrier.mod, hi % p.carrier.mod
        if lo == 0 and hi == 0:
            slots.append(None)
        else:
            slots.append(Slot(s.param, lo, hi))
    return PatternFamily(p.carrier, p.kind, p.dims, tuple(slots), p.nparams, p.fuzzy)


def domain_is_plain(d: Domain) -> bool:
    """All members are built from degenerate intervals [a, a] (non-interval side
    of the quasi structures)."""
    for s in domain_slices(d):
        if isinstance(s, ExplicitDomain):
            if any(not iv.is_degenerate for e in s for iv in e.entries):
                return False
        else:
            if any(sl is not None and sl.lo_coeff != sl.hi_coeff for sl in s.slots):
                return False
    return True
