"""Sparse coefficient functions.

A coefficient function is a finitely-supported map from indices (1, 2, 3, ...)
to non-negative integer digits.  Everything else in this package -- digit
systems over the integers, over (0,1), over the p-adics -- is phrased in terms
of these maps and two lexicographic orders on them:

* ascending lex: compare digits at the *largest* index where they differ
  (used for integer systems, where high indices carry large weights);
* descending lex: compare digits at the *smallest* index where they differ
  (used for real systems, where low indices carry large weights).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Union

# Digits must fit a signed 64-bit word so the textual wire format stays
# portable; anything at or above this bound is rejected at construction.
DIGIT_LIMIT = 1 << 63


class _Infinite:
    """Sentinel for the descending order of the zero function.

    Compares strictly above every int, equal only to itself.  A dedicated
    singleton (rather than None or a huge int) so that accidental arithmetic
    fails loudly.
    """

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITE"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("zecknum.INFINITE")

    def __gt__(self, other):
        if isinstance(other, int) or other is self:
            return other is not self
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, int) or other is self:
            return True
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, int) or other is self:
            return False
        return NotImplemented

    def __le__(self, other):
        if isinstance(other, int) or other is self:
            return other is self
        return NotImplemented


INFINITE = _Infinite()

Order = Union[int, _Infinite]


@dataclass(frozen=True)
class IndexInterval:
    """Closed index interval [lo, hi]; hi may be INFINITE for [lo, oo)."""

    lo: int
    hi: Order

    def __post_init__(self):
        if self.lo < 1:
            raise ValueError(f"interval lower end {self.lo} < 1")
        if isinstance(self.hi, int) and self.hi < self.lo:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    def __contains__(self, i: int) -> bool:
        return self.lo <= i and (self.hi is INFINITE or i <= self.hi)

    def __repr__(self) -> str:
        hi = "oo" if self.hi is INFINITE else self.hi
        return f"[{self.lo}, {hi}]"


class CoeffFn:
    """Immutable finitely-supported index -> digit map.

    Only indices with digit >= 1 are stored; ``digit(i)`` returns 0 off the
    support.  Instances hash and compare by their support pairs.
    """

    __slots__ = ("_pairs", "_map")

    def __init__(self, digits: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = digits.items() if isinstance(digits, Mapping) else digits
        acc: dict[int, int] = {}
        for i, d in items:
            if i < 1:
                raise ValueError(f"index {i} < 1")
            if d < 0:
                raise ValueError(f"negative digit {d} at index {i}")
            if d >= DIGIT_LIMIT:
                raise ValueError(f"digit {d} at index {i} exceeds the wire-format bound")
            if d:
                acc[i] = acc.get(i, 0) + d
                if acc[i] >= DIGIT_LIMIT:
                    raise ValueError(f"digit overflow at index {i}")
        pairs = tuple(sorted(acc.items()))
        object.__setattr__(self, "_pairs", pairs)
        object.__setattr__(self, "_map", dict(pairs))

    def __setattr__(self, name, value):
        raise AttributeError("CoeffFn is immutable")

    # -- basic access ------------------------------------------------------

    def digit(self, i: int) -> int:
        return self._map.get(i, 0)

    def items(self) -> tuple[tuple[int, int], ...]:
        """Support pairs (index, digit) in ascending index order."""
        return self._pairs

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self._pairs)

    def __bool__(self) -> bool:
        return bool(self._pairs)

    def __len__(self) -> int:
        return len(self._pairs)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self._pairs)

    def __eq__(self, other):
        return isinstance(other, CoeffFn) and self._pairs == other._pairs

    def __hash__(self):
        return hash(self._pairs)

    def __repr__(self) -> str:
        return f"CoeffFn({self.render()!r})"

    # -- orders ------------------------------------------------------------

    @property
    def order_asc(self) -> int:
        """Largest support index; 0 for the zero function."""
        return self._pairs[-1][0] if self._pairs else 0

    @property
    def order_desc(self) -> Order:
        """Smallest support index; INFINITE for the zero function."""
        return self._pairs[0][0] if self._pairs else INFINITE

    # -- surgery -----------------------------------------------------------

    def restrict(self, lo: int = 1, hi: Order = INFINITE) -> "CoeffFn":
        """Digits on [lo, hi], everything else dropped."""
        return CoeffFn(
            (i, d) for i, d in self._pairs if lo <= i and (hi is INFINITE or i <= hi)
        )

    def plus_basis(self, i: int, count: int = 1) -> "CoeffFn":
        """This function with the digit at ``i`` raised by ``count``."""
        return CoeffFn(self._pairs + ((i, count),))

    def minus_basis(self, i: int) -> "CoeffFn":
        d = self.digit(i)
        if d < 1:
            raise ValueError(f"digit at index {i} is 0, cannot decrement")
        return CoeffFn(
            tuple((j, e) for j, e in self._pairs if j != i) + ((i, d - 1),)
        )

    def __add__(self, other: "CoeffFn") -> "CoeffFn":
        if not isinstance(other, CoeffFn):
            return NotImplemented
        return CoeffFn(self._pairs + other._pairs)

    # -- wire format -------------------------------------------------------

    def render(self) -> str:
        """Sparse text form ``i1:d1,i2:d2,...`` with ascending indices; zero is ``0``."""
        if not self._pairs:
            return "0"
        return ",".join(f"{i}:{d}" for i, d in self._pairs)

    @classmethod
    def parse(cls, text: str) -> "CoeffFn":
        text = text.strip()
        if text in ("", "0"):
            return cls()
        pairs = []
        last = 0
        for chunk in text.split(","):
            i_str, _, d_str = chunk.partition(":")
            try:
                i, d = int(i_str), int(d_str)
            except ValueError:
                raise ValueError(f"bad sparse pair {chunk!r}") from None
            if i <= last:
                raise ValueError(f"indices not strictly increasing at {chunk!r}")
            last = i
            pairs.append((i, d))
        return cls(pairs)


ZERO = CoeffFn()


def basis(i: int) -> CoeffFn:
    """The function with a single digit 1 at index ``i``."""
    return CoeffFn(((i, 1),))


def from_dense(digits: Iterable[int]) -> CoeffFn:
    """Build from a dense low-to-high digit list: (1, 0, 3) -> {1:1, 3:3}."""
    return CoeffFn((i, d) for i, d in enumerate(digits, start=1))


def to_dense(f: CoeffFn, length: int | None = None) -> tuple[int, ...]:
    """Dense low-to-high digit tuple, padded/truncated to ``length`` if given."""
    n = f.order_asc if length is None else length
    return tuple(f.digit(i) for i in range(1, n + 1))


def lex_compare_asc(a: CoeffFn, b: CoeffFn) -> int:
    """-1/0/+1 comparing at the largest index where ``a`` and ``b`` differ."""
    if a == b:
        return 0
    for i in sorted(set(a.support) | set(b.support), reverse=True):
        da, db = a.digit(i), b.digit(i)
        if da != db:
            return -1 if da < db else 1
    return 0


def lex_compare_desc(a: CoeffFn, b: CoeffFn) -> int:
    """-1/0/+1 comparing at the smallest index where ``a`` and ``b`` differ.

    The function with the larger digit at that index is the larger one (low
    indices carry the large weights in decreasing systems).
    """
    if a == b:
        return 0
    for i in sorted(set(a.support) | set(b.support)):
        da, db = a.digit(i), b.digit(i)
        if da != db:
            return -1 if da < db else 1
    return 0
