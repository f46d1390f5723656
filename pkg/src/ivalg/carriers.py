"""Exact carriers and the interval value type.

Three carriers supply endpoints and scalars: Z_n (modular integers),
nonnegative integers extended with signed lower endpoints, and exact
rationals. All arithmetic is exact; floats are rejected everywhere.

The canonical interval is [0, a]. General [x, y] intervals are kept
ordered (lo <= hi); scaling a general modular interval is only legal
when it preserves that order, otherwise OrderViolation is raised.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Value = Union[int, Fraction]


class CarrierMismatch(ValueError):
    """Two operands live in different carriers."""


class OrderViolation(ValueError):
    """Scaling a general modular interval broke lo < hi (Def 2.1.4 style restriction)."""


class NotCanonical(ValueError):
    """Operation requires canonical [0, a] operands."""


@dataclass(frozen=True, order=True)
class Carrier:
    """Tagged arithmetic domain: Zmod(n), Nat or QPlus."""

    kind: str  # "zmod" | "nat" | "qplus"
    mod: int = 0

    def __post_init__(self):
        if self.kind not in ("zmod", "nat", "qplus"):
            raise ValueError(f"unknown carrier kind {self.kind!r}")
        if self.kind == "zmod":
            if self.mod < 2:
                raise ValueError("Zmod modulus must be >= 2")
        elif self.mod != 0:
            raise ValueError(f"{self.kind} carrier takes no modulus")

    @property
    def is_modular(self) -> bool:
        return self.kind == "zmod"

    @property
    def is_ordered(self) -> bool:
        """Nat and QPlus carry the usual total order; Zmod does not."""
        return self.kind != "zmod"

    def coerce(self, v) -> Value:
        """Validate and normalize a raw value into this carrier.

        Floats are rejected (exactness requirement). Zmod values are
        reduced mod n; Nat values must be integers; QPlus values become
        Fractions.
        """
        if type(v) is int:  # hot path
            if self.kind == "zmod":
                return v % self.mod
            if self.kind == "nat":
                return v
            return Fraction(v)
        if isinstance(v, float):
            raise TypeError("floating point values are not allowed")
        if self.kind == "zmod":
            if isinstance(v, Fraction):
                if v.denominator != 1:
                    raise ValueError(f"{v} is not an integer mod {self.mod}")
                v = v.numerator
            if not isinstance(v, int):
                raise TypeError(f"Zmod value must be an integer, got {v!r}")
            return v % self.mod
        if self.kind == "nat":
            if isinstance(v, Fraction):
                if v.denominator != 1:
                    raise ValueError(f"{v} is not an integer")
                return v.numerator
            if not isinstance(v, int):
                raise TypeError(f"Nat value must be an integer, got {v!r}")
            return v
        # qplus
        if isinstance(v, int):
            return Fraction(v)
        if isinstance(v, Fraction):
            return v
        if isinstance(v, str):
            return Fraction(v)
        raise TypeError(f"QPlus value must be rational, got {v!r}")

    def add(self, a: Value, b: Value) -> Value:
        s = a + b
        return s % self.mod if self.kind == "zmod" else s

    def mul(self, a: Value, b: Value) -> Value:
        p = a * b
        return p % self.mod if self.kind == "zmod" else p

    def neg(self, a: Value) -> Value:
        if self.kind != "zmod":
            raise ValueError(f"additive inverses are not defined in {self.kind}")
        return (-a) % self.mod

    def render(self) -> str:
        if self.kind == "zmod":
            return f"Zmod({self.mod})"
        return "Nat" if self.kind == "nat" else "QPlus"

    @staticmethod
    def parse(text: str) -> "Carrier":
        text = text.strip()
        if text == "Nat":
            return NAT
        if text == "QPlus":
            return QPLUS
        if text.startswith("Zmod(") and text.endswith(")"):
            return Zmod(int(text[5:-1]))
        raise ValueError(f"cannot parse carrier {text!r}")


def Zmod(n: int) -> Carrier:
    return Carrier("zmod", n)


NAT = Carrier("nat")
QPLUS = Carrier("qplus")


def render_value(v: Value) -> str:
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}" if v.denominator != 1 else str(v.numerator)
    return str(v)


def parse_value(text: str, carrier: Carrier) -> Value:
    text = text.strip()
    if "/" in text:
        return carrier.coerce(Fraction(text))
    return carrier.coerce(int(text))


@dataclass(frozen=True, order=True)
class Interval:
    """An ordered pair [lo, hi] of carrier values; [0, 0] is the unique zero.

    Invariant: lo <= hi (after modular reduction for Zmod). Equality is
    componentwise and carrier-sensitive.
    """

    lo: Value
    hi: Value
    carrier: Carrier

    def __post_init__(self):
        lo = self.carrier.coerce(self.lo)
        hi = self.carrier.coerce(self.hi)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if lo > hi:
            raise ValueError(f"interval endpoints out of order: [{lo}, {hi}]")
        if self.carrier.kind == "nat" and hi < 0:
            raise ValueError("Nat interval upper endpoint must be nonnegative")
        if self.carrier.kind == "qplus" and hi < 0:
            raise ValueError("QPlus interval upper endpoint must be nonnegative")
        object.__setattr__(self, "_h", hash((lo, hi, self.carrier)))

    def __hash__(self):
        return self._h

    @property
    def is_canonical(self) -> bool:
        return self.lo == 0

    @property
    def is_zero(self) -> bool:
        return self.lo == 0 and self.hi == 0

    @property
    def is_degenerate(self) -> bool:
        return self.lo == self.hi

    def _require_same(self, other: "Interval"):
        if self.carrier != other.carrier:
            raise CarrierMismatch(f"{self.carrier.render()} vs {other.carrier.render()}")

    def __add__(self, other: "Interval") -> "Interval":
        self._require_same(other)
        c = self.carrier
        lo = c.add(self.lo, other.lo)
        hi = c.add(self.hi, other.hi)
        if c.is_modular and lo > hi:
            # canonical and degenerate operands cannot get here; general
            # operands may wrap asymmetrically
            raise OrderViolation(f"addition broke endpoint order: [{lo}, {hi}] mod {c.mod}")
        return Interval(lo, hi, c)

    def times(self, other: "Interval") -> "Interval":
        """Interval product [0,a]*[0,b] = [0,ab]; canonical operands only."""
        self._require_same(other)
        if not (self.is_canonical and other.is_canonical):
            raise NotCanonical("interval product requires canonical [0, a] operands")
        return Interval(0, self.carrier.mul(self.hi, other.hi), self.carrier)

    def scaled(self, c: Value) -> "Interval":
        """Scalar action c*[x,y] = [cx, cy].

        Nonnegative c is required on ordered carriers. For Zmod the
        result endpoints are reduced; general intervals must keep
        lo < hi after reduction (OrderViolation otherwise), while
        canonical and degenerate intervals are always safe.
        """
        car = self.carrier
        c = car.coerce(c)
        if car.is_ordered and c < 0:
            raise ValueError("scalars must be nonnegative on ordered carriers")
        lo = car.mul(c, self.lo)
        hi = car.mul(c, self.hi)
        if car.is_modular and not self.is_canonical and not self.is_degenerate:
            if not lo < hi:
                raise OrderViolation(
                    f"{c} * [{self.lo}, {self.hi}] = [{lo}, {hi}] mod {car.mod} is out of order"
                )
        return Interval(lo, hi, car)

    def negated(self) -> "Interval":
        """Additive inverse under interval addition (Zmod canonical/degenerate only)."""
        car = self.carrier
        if not car.is_modular:
            raise ValueError("additive inverses require a Zmod carrier")
        lo = car.neg(self.lo)
        hi = car.neg(self.hi)
        if lo > hi:
            raise OrderViolation(f"negation broke endpoint order: [{lo}, {hi}]")
        return Interval(lo, hi, car)

    def render(self) -> str:
        return f"[{render_value(self.lo)},{render_value(self.hi)}]@{self.carrier.render()}"

    def __repr__(self):  # keeps pytest output readable
        return self.render()


def zero_interval(carrier: Carrier) -> Interval:
    return Interval(0, 0, carrier)


def interval_add(a: Interval, b: Interval) -> Interval:
    return a + b


def interval_mul(a: Interval, b: Interval) -> Interval:
    return a.times(b)


def interval_scalar_mul(c: Value, v: Interval) -> Interval:
    return v.scaled(c)


def parse_interval(text: str) -> Interval:
    """Inverse of Interval.render: "[lo,hi]@Carrier"."""
    text = text.strip()
    if "@" not in text or not text.startswith("["):
        raise ValueError(f"cannot parse interval {text!r}")
    body, car_text = text.rsplit("@", 1)
    carrier = Carrier.parse(car_text)
    body = body.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"cannot parse interval body {body!r}")
    lo_text, hi_text = body[1:-1].split(",")
    return Interval(parse_value(lo_text, carrier), parse_value(hi_text, carrier), carrier)
