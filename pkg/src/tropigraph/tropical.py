"""Exact arithmetic in the min-plus and max-plus tropical semirings.

Values are exact extended rationals: a reduced Fraction, +inf, or -inf.
+inf is the additive identity of min-plus, -inf of max-plus.  A single
value type carries both infinities; which one is admissible in a given
representation is policed at the representation level, not here.

Everything in this module is immutable and pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Union

from .errors import BadParameter, DimensionMismatch, MixedInfinity


class Algebra(Enum):
    """Which tropical semiring an operation runs in."""

    MIN_PLUS = "min-plus"
    MAX_PLUS = "max-plus"


MIN_PLUS = Algebra.MIN_PLUS
MAX_PLUS = Algebra.MAX_PLUS

Rationalish = Union[int, Fraction, str]

_FINITE = 0
_POS = 1
_NEG = -1


def as_fraction(x: Rationalish) -> Fraction:
    """Coerce an int, Fraction, or "p/q" string to an exact Fraction.

    Floats are rejected on purpose: every computation in this package is
    exact, and a float would smuggle rounding error into strict
    inequalities.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise BadParameter(f"not an exact rational: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise BadParameter(f"not an exact rational: {x!r}") from exc
    raise BadParameter(f"not an exact rational: {x!r}")


@dataclass(frozen=True)
class TropicalValue:
    """An exact rational, +inf, or -inf, totally ordered the obvious way."""

    kind: int
    frac: Fraction

    @staticmethod
    def finite(x: Rationalish) -> "TropicalValue":
        return TropicalValue(_FINITE, as_fraction(x))

    @staticmethod
    def parse(text: str) -> "TropicalValue":
        s = text.strip()
        if s == "inf":
            return POS_INF
        if s == "-inf":
            return NEG_INF
        return TropicalValue.finite(s)

    @property
    def is_finite(self) -> bool:
        return self.kind == _FINITE

    @property
    def is_pos_inf(self) -> bool:
        return self.kind == _POS

    @property
    def is_neg_inf(self) -> bool:
        return self.kind == _NEG

    def _key(self):
        return (self.kind, self.frac)

    def __lt__(self, other: "TropicalValue") -> bool:
        return self._key() < other._key()

    def __le__(self, other: "TropicalValue") -> bool:
        return self._key() <= other._key()

    def __gt__(self, other: "TropicalValue") -> bool:
        return self._key() > other._key()

    def __ge__(self, other: "TropicalValue") -> bool:
        return self._key() >= other._key()

    def __str__(self) -> str:
        if self.kind == _POS:
            return "inf"
        if self.kind == _NEG:
            return "-inf"
        return f"{self.frac.numerator}/{self.frac.denominator}"

    def __repr__(self) -> str:
        return f"TropicalValue({self})"


POS_INF = TropicalValue(_POS, Fraction(0))
NEG_INF = TropicalValue(_NEG, Fraction(0))


def tv(x) -> TropicalValue:
    """Coerce a TropicalValue, exact rational, or string to a TropicalValue."""
    if isinstance(x, TropicalValue):
        return x
    if isinstance(x, str):
        return TropicalValue.parse(x)
    return TropicalValue.finite(x)


def trop_add(a: TropicalValue, b: TropicalValue, alg: Algebra) -> TropicalValue:
    """Tropical addition: min in min-plus, max in max-plus.

    Total on all values; the semiring identities (+inf for min-plus,
    -inf for max-plus) fall out of the total order.
    """
    if alg is MIN_PLUS:
        return a if a <= b else b
    return a if a >= b else b


def trop_mul(a: TropicalValue, b: TropicalValue) -> TropicalValue:
    """Tropical multiplication: classical addition, with absorbing infinities.

    +inf * -inf is undefined and raises MixedInfinity.
    """
    if a.kind != _FINITE:
        if b.kind == -a.kind:
            raise MixedInfinity("cannot multiply +inf with -inf")
        return a
    if b.kind != _FINITE:
        return b
    return TropicalValue(_FINITE, a.frac + b.frac)


def trop_sub(a: TropicalValue, b: TropicalValue) -> TropicalValue:
    """Tropical division, i.e. classical subtraction, on finite values only."""
    if not (a.is_finite and b.is_finite):
        raise BadParameter("tropical division is defined on finite values only")
    return TropicalValue(_FINITE, a.frac - b.frac)


@dataclass(frozen=True)
class TropicalVector:
    """A fixed-length, immutable sequence of tropical values."""

    entries: tuple[TropicalValue, ...]

    def __post_init__(self) -> None:
        if len(self.entries) < 1:
            raise BadParameter("tropical vectors must have dimension >= 1")

    @staticmethod
    def of(values: Iterable) -> "TropicalVector":
        return TropicalVector(tuple(tv(x) for x in values))

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[TropicalValue]:
        return iter(self.entries)

    def __getitem__(self, i: int) -> TropicalValue:
        return self.entries[i]

    def to_json(self) -> list[str]:
        return [str(x) for x in self.entries]

    @staticmethod
    def from_json(data: list[str]) -> "TropicalVector":
        return TropicalVector.of(data)

    def __repr__(self) -> str:
        return f"TropicalVector([{', '.join(str(x) for x in self.entries)}])"


def trop_scale(c, u: TropicalVector) -> TropicalVector:
    """Tropical scalar multiple: add the finite scalar c to every entry."""
    cv = tv(c)
    if not cv.is_finite:
        raise BadParameter("tropical scaling requires a finite scalar")
    return TropicalVector(tuple(trop_mul(cv, x) for x in u))


def trop_dot(u: TropicalVector, v: TropicalVector, alg: Algebra) -> TropicalValue:
    """Tropical dot product: tropical sum of coordinate-wise tropical products."""
    if u.dim != v.dim:
        raise DimensionMismatch(f"dimension {u.dim} vs {v.dim}")
    best = None
    for a, b in zip(u, v):
        s = trop_mul(a, b)
        best = s if best is None else trop_add(best, s, alg)
    assert best is not None
    return best
