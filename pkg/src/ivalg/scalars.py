"""Scalar structures: plain sets, additive semigroups and additive groups.

Substructure enumeration (what "proper subset / subsemigroup / subgroup"
means per kind) lives here because pseudo-simplicity sweeps depend on it.
Every additive subsemigroup of (Z_n, +) is a subgroup dZ_n (repeatedly
adding an element walks through its cyclic subgroup, 0 included), so the
divisor enumeration is exact for all n; tests cross-check by brute force
on small n.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, List, Optional, Tuple

from .carriers import Carrier, Value

SET = "set"
SEMIGROUP = "semigroup"
GROUP = "group"

# element descriptors
ALL = "all"                 # whole carrier (Zmod: Z_n; Nat: Z+ u {0})


class BadScalarStructure(ValueError):
    pass


@dataclass(frozen=True)
class ScalarStructure:
    carrier: Carrier
    kind: str                                 # SET | SEMIGROUP | GROUP
    values: Optional[Tuple[Value, ...]] = None  # explicit finite set (sorted)
    multiple: Optional[int] = None            # k means kZ+ u {0} over Nat
    recip_bases: Optional[Tuple[int, ...]] = None  # fuzzy {1/b^n} generators (with 0,1)

    def __post_init__(self):
        forms = [self.values is not None, self.multiple is not None,
                 self.recip_bases is not None]
        if sum(forms) > 1:
            raise BadScalarStructure("choose one of: explicit values, multiple, recip_bases")
        if self.kind not in (SET, SEMIGROUP, GROUP):
            raise BadScalarStructure(f"unknown scalar kind {self.kind!r}")
        if self.values is not None:
            vals = tuple(sorted({self.carrier.coerce(v) for v in self.values},
                                key=lambda v: Fraction(v)))
            object.__setattr__(self, "values", vals)
        if self.multiple is not None and self.carrier.kind != "nat":
            raise BadScalarStructure("multiples form requires the Nat carrier")
        if self.multiple == 1:  # 1N u {0} is the whole carrier
            object.__setattr__(self, "multiple", None)
        if self.recip_bases is not None and self.carrier.kind != "qplus":
            raise BadScalarStructure("reciprocal-power form requires the QPlus carrier")
        self._validate_kind()

    def _validate_kind(self):
        c = self.carrier
        if self.values is not None and not c.is_modular:
            if any(v < 0 for v in self.values):
                raise BadScalarStructure("scalars must be nonnegative on ordered carriers")
        if self.kind == SEMIGROUP:
            if self.values is not None:
                vals = set(self.values)
                if 0 not in vals:
                    raise BadScalarStructure("additive semigroup must contain 0")
                for a, b in itertools.product(self.values, repeat=2):
                    if c.add(a, b) not in vals:
                        raise BadScalarStructure(
                            f"{a}+{b} escapes the explicit semigroup")
        if self.kind == GROUP:
            if not c.is_modular:
                raise BadScalarStructure("additive groups are built from Zmod only")
            if self.values is not None:
                vals = set(self.values)
                if not vals or 0 not in vals:
                    raise BadScalarStructure("group must contain 0")
                d = self.as_dzn()
                if d is None:
                    raise BadScalarStructure("explicit group must be some dZ_n")

    # -- views ---------------------------------------------------------------

    @property
    def is_all(self) -> bool:
        return (self.values is None and self.multiple is None
                and self.recip_bases is None)

    @property
    def is_finite(self) -> bool:
        if self.values is not None:
            return True
        if self.is_all:
            return self.carrier.is_modular
        return False

    def size(self) -> Optional[int]:
        if self.values is not None:
            return len(self.values)
        if self.is_all and self.carrier.is_modular:
            return self.carrier.mod
        return None

    def as_dzn(self) -> Optional[int]:
        """If this is exactly {0, d, 2d, ...} = dZ_n, return d."""
        if not self.carrier.is_modular:
            return None
        n = self.carrier.mod
        if self.is_all:
            return 1
        if self.values is None:
            return None
        nonzero = [v for v in self.values if v != 0]
        if not nonzero:
            return n  # the trivial {0}
        import math
        d = 0
        for v in self.values:
            d = math.gcd(d, v)
        d = math.gcd(d, n)
        expected = {(d * k) % n for k in range(n // d)} if d else {0}
        return d if set(self.values) == expected else None

    def contains(self, v: Value) -> bool:
        try:
            v = self.carrier.coerce(v)
        except (TypeError, ValueError):
            return False
        if self.values is not None:
            return v in set(self.values)
        if self.multiple is not None:
            return v >= 0 and v % self.multiple == 0
        if self.recip_bases is not None:
            if v in (0, 1):
                return True
            if not (0 < v < 1):
                return False
            f = Fraction(v)
            if f.numerator != 1:
                return False
            den = f.denominator
            for b in self.recip_bases:
                while den % b == 0:
                    den //= b
                    if den == 1:
                        return True
            return den == 1
        if self.carrier.is_modular:
            return True
        return v >= 0

    def iter_values(self, budget: int) -> Iterator[Value]:
        """Deterministic scalar stream; exhaustive when finite."""
        if self.values is not None:
            yield from self.values
        elif self.is_all and self.carrier.is_modular:
            yield from range(self.carrier.mod)
        elif self.multiple is not None:
            for k in range(budget + 1):
                yield k * self.multiple
        elif self.recip_bases is not None:
            yield Fraction(0)
            yield Fraction(1)
            count = 0
            for depth in range(1, budget + 1):
                for b in self.recip_bases:
                    yield Fraction(1, b ** depth)
                    count += 1
                    if count >= budget:
                        return
        else:  # Nat all
            yield from range(budget + 1)

    def value_set(self) -> Optional[frozenset]:
        if not self.is_finite:
            return None
        return frozenset(self.iter_values(0))

    def render(self) -> str:
        body = ALL
        if self.values is not None:
            body = "{" + ",".join(str(v) for v in self.values) + "}"
        elif self.multiple is not None:
            body = f"{self.multiple}N"
        elif self.recip_bases is not None:
            body = "recip" + str(list(self.recip_bases))
        return f"{self.kind}:{body}@{self.carrier.render()}"

    # -- substructure enumeration ----------------------------------------------

    def subset_ok(self, other: "ScalarStructure") -> bool:
        """Is self's value set contained in other's (same carrier)?"""
        if self.carrier != other.carrier:
            return False
        if self.values is not None:
            return all(other.contains(v) for v in self.values)
        if other.is_all:
            return True
        if self.multiple is not None and other.multiple is not None:
            return self.multiple % other.multiple == 0
        if self.is_all:
            return other.is_all
        if self.recip_bases is not None and other.recip_bases is not None:
            # 1/b^k lands in other's powers iff b factors over other's bases
            return all(other.contains(Fraction(1, b)) for b in self.recip_bases)
        return False

    def equals(self, other: "ScalarStructure") -> bool:
        return self.subset_ok(other) and other.subset_ok(self)

    def proper_substructures(self, cap_subsets: int = 16,
                             nat_limit: int = 5) -> Tuple[List["ScalarStructure"], bool]:
        """Admissible proper scalar substructures for pseudo-simplicity sweeps.

        Returns (candidates, complete). SET kind: proper subsets with |T| > 1.
        SEMIGROUP/GROUP over Zmod: dZ_n for proper divisors d (the trivial {0}
        excluded). Infinite Nat semigroups: kN samples, flagged incomplete.
        """
        c = self.carrier
        out: List[ScalarStructure] = []
        if self.kind == SET:
            vals = self.values
            if vals is None and c.is_modular and self.is_all:
                vals = tuple(range(c.mod))
            if vals is None:
                # infinite scalar set: sample a few finite subsets
                base = list(self.iter_values(4))
                for r in (2, 3):
                    for combo in itertools.combinations(base, r):
                        out.append(ScalarStructure(c, SET, tuple(combo)))
                return out, False
            if len(vals) > cap_subsets:
                for combo in itertools.combinations(vals, 2):
                    out.append(ScalarStructure(c, SET, combo))
                return out, False
            for r in range(2, len(vals)):
                for combo in itertools.combinations(vals, r):
                    out.append(ScalarStructure(c, SET, combo))
            return out, True
        if c.is_modular:
            n = c.mod
            d0 = self.as_dzn()
            if d0 is None:
                return self._explicit_subsemigroups(cap_subsets)
            for d in divisors(n):
                if d <= d0 or d == n or d % d0:
                    continue
                vals = tuple(sorted((d * k) % n for k in range(n // d)))
                out.append(ScalarStructure(c, self.kind, vals))
            return out, True
        # Nat-style infinite semigroups: kN u {0}
        base = self.multiple or 1
        for k in range(2, 2 + nat_limit):
            out.append(ScalarStructure(c, SEMIGROUP, None, base * k))
        return out, False

    def _explicit_subsemigroups(self, cap: int):
        vals = self.values or ()
        if len(vals) > cap:
            return [], False
        out = []
        members = set(vals)
        c = self.carrier
        for r in range(2, len(vals)):
            for combo in itertools.combinations(vals, r):
                s = set(combo)
                if 0 not in s:
                    continue
                if all(c.add(a, b) in s for a in s for b in s):
                    out.append(ScalarStructure(c, self.kind, tuple(sorted(s))))
        return out, True


def divisors(n: int) -> List[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def zmod_all(n: int, kind: str) -> ScalarStructure:
    from .carriers import Zmod
    return ScalarStructure(Zmod(n), kind)


def explicit_scalars(carrier: Carrier, kind: str, values: Iterable[Value]) -> ScalarStructure:
    return ScalarStructure(carrier, kind, tuple(values))
