"""Composite interval-valued elements: scalars, tuples, matrices, polynomials.

All entries of an element share one carrier. Shape is part of equality
(a 1xk matrix is not a k-tuple). The polynomial zero is the empty
coefficient list; trailing zero coefficients are trimmed on construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Tuple

from .carriers import Carrier, CarrierMismatch, Interval, Value, zero_interval

SCALAR = "interval"
TUPLE = "tuple"
MATRIX = "matrix"
POLY = "poly"


class ShapeMismatch(ValueError):
    """Elements have incompatible kinds or dimensions."""


class NotFuzzy(ValueError):
    """Operation requires fuzzy entries (canonical, upper endpoint in [0,1])."""


@dataclass(frozen=True, order=True)
class IntervalElement:
    kind: str                      # SCALAR | TUPLE | MATRIX | POLY
    dims: Tuple[int, ...]          # () | (k,) | (rows, cols) | ()
    entries: Tuple[Interval, ...]  # row-major for matrices, ascending degree for polys
    carrier: Carrier

    def __post_init__(self):
        if self.kind not in (SCALAR, TUPLE, MATRIX, POLY):
            raise ShapeMismatch(f"unknown element kind {self.kind!r}")
        for e in self.entries:
            if e.carrier != self.carrier:
                raise CarrierMismatch("entry carrier differs from element carrier")
        if self.kind == SCALAR and len(self.entries) != 1:
            raise ShapeMismatch("scalar element has exactly one entry")
        if self.kind == TUPLE and self.dims != (len(self.entries),):
            raise ShapeMismatch("tuple length does not match entries")
        if self.kind == MATRIX:
            r, c = self.dims
            if r * c != len(self.entries):
                raise ShapeMismatch("matrix dims do not match entry count")
        if self.kind == POLY:
            if self.entries and self.entries[-1].is_zero:
                raise ShapeMismatch("polynomial coefficients must be trimmed")
        object.__setattr__(self, "_h",
                           hash((self.kind, self.dims, self.entries)))

    def __hash__(self):
        return self._h

    # -- structure helpers ------------------------------------------------

    @property
    def shape(self) -> tuple:
        """Shape key used for compatibility checks; poly degree is not shape."""
        return (self.kind,) + (self.dims if self.kind != POLY else ())

    @property
    def is_zero(self) -> bool:
        return all(e.is_zero for e in self.entries)

    @property
    def degree(self) -> Optional[int]:
        """Polynomial degree; None for the zero polynomial (undefined marker)."""
        if self.kind != POLY:
            raise ShapeMismatch("degree is defined for polynomials only")
        return len(self.entries) - 1 if self.entries else None

    def entry(self, i: int) -> Interval:
        return self.entries[i]

    def zero_like(self) -> "IntervalElement":
        if self.kind == POLY:
            return IntervalElement(POLY, (), (), self.carrier)
        z = zero_interval(self.carrier)
        return IntervalElement(self.kind, self.dims, (z,) * len(self.entries), self.carrier)

    def _aligned(self, other: "IntervalElement"):
        if self.carrier != other.carrier:
            raise CarrierMismatch("elements live in different carriers")
        if self.kind != other.kind:
            raise ShapeMismatch(f"{self.kind} vs {other.kind}")
        if self.kind == POLY:
            n = max(len(self.entries), len(other.entries))
            z = zero_interval(self.carrier)
            a = self.entries + (z,) * (n - len(self.entries))
            b = other.entries + (z,) * (n - len(other.entries))
            return a, b
        if self.dims != other.dims:
            raise ShapeMismatch(f"dims {self.dims} vs {other.dims}")
        return self.entries, other.entries

    def _rebuild(self, entries: Iterable[Interval]) -> "IntervalElement":
        entries = tuple(entries)
        if self.kind == POLY:
            while entries and entries[-1].is_zero:
                entries = entries[:-1]
            return IntervalElement(POLY, (), entries, self.carrier)
        return IntervalElement(self.kind, self.dims, entries, self.carrier)

    # -- operations --------------------------------------------------------

    def __add__(self, other: "IntervalElement") -> "IntervalElement":
        a, b = self._aligned(other)
        return self._rebuild(x + y for x, y in zip(a, b))

    def scaled(self, c: Value) -> "IntervalElement":
        return self._rebuild(e.scaled(c) for e in self.entries)

    def negated(self) -> "IntervalElement":
        return self._rebuild(e.negated() for e in self.entries)

    def _fuzzy_pair(self, other: "IntervalElement"):
        a, b = self._aligned(other)
        for e in a + b:
            if not is_fuzzy_entry(e):
                raise NotFuzzy(f"{e.render()} is not a fuzzy interval")
        return a, b

    def emax(self, other: "IntervalElement") -> "IntervalElement":
        a, b = self._fuzzy_pair(other)
        return self._rebuild(x if x.hi >= y.hi else y for x, y in zip(a, b))

    def emin(self, other: "IntervalElement") -> "IntervalElement":
        a, b = self._fuzzy_pair(other)
        return self._rebuild(x if x.hi <= y.hi else y for x, y in zip(a, b))

    def combine(self, other: "IntervalElement", op: str) -> "IntervalElement":
        """Dispatch on a composition op name: add | max | min."""
        if op == "add":
            return self + other
        if op == "max":
            return self.emax(other)
        if op == "min":
            return self.emin(other)
        raise ValueError(f"unknown composition op {op!r}")

    def render(self) -> str:
        inner = ";".join(e.render().split("@")[0] for e in self.entries)
        if self.kind == SCALAR:
            return self.entries[0].render()
        if self.kind == TUPLE:
            tag = f"tuple{self.dims[0]}"
        elif self.kind == MATRIX:
            tag = f"mat{self.dims[0]}x{self.dims[1]}"
        else:
            tag = "poly"
        return f"{tag}({inner})@{self.carrier.render()}"

    def __repr__(self):
        return self.render()


def is_fuzzy_entry(e: Interval) -> bool:
    return (e.carrier.kind == "qplus" and e.is_canonical
            and 0 <= e.hi <= 1)


def scalar_element(iv: Interval) -> IntervalElement:
    return IntervalElement(SCALAR, (), (iv,), iv.carrier)


def tuple_element(entries: Iterable[Interval], carrier: Carrier) -> IntervalElement:
    entries = tuple(entries)
    return IntervalElement(TUPLE, (len(entries),), entries, carrier)


def matrix_element(rows: int, cols: int, entries: Iterable[Interval],
                   carrier: Carrier) -> IntervalElement:
    return IntervalElement(MATRIX, (rows, cols), tuple(entries), carrier)


def poly_element(coeffs: Iterable[Interval], carrier: Carrier) -> IntervalElement:
    coeffs = tuple(coeffs)
    while coeffs and coeffs[-1].is_zero:
        coeffs = coeffs[:-1]
    return IntervalElement(POLY, (), coeffs, carrier)


def upper(e: IntervalElement, i: int = 0) -> Value:
    return e.entries[i].hi


def sort_key(e: IntervalElement):
    """Canonical total order on elements: kind, dims, then endpoint values."""
    vals = tuple((Fraction(iv.lo), Fraction(iv.hi)) for iv in e.entries)
    return (e.kind, e.dims, len(e.entries), vals)


def element_add(a: IntervalElement, b: IntervalElement) -> IntervalElement:
    return a + b


def element_scalar_mul(c: Value, e: IntervalElement) -> IntervalElement:
    return e.scaled(c)


def element_max(a: IntervalElement, b: IntervalElement) -> IntervalElement:
    return a.emax(b)


def element_min(a: IntervalElement, b: IntervalElement) -> IntervalElement:
    return a.emin(b)
