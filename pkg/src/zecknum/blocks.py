"""Digit-admissibility via block decompositions.

An *ascending system* (for integer numeration) is determined by a predecessor
family: for every n >= 2 a coefficient function ``row(n)`` of order n-1 that
acts as the immediate predecessor of basis(n).  A function belongs to the
system iff it splits into contiguous blocks, scanned from its top index
downwards against the rows, with only the bottom block allowed to exhaust a
whole row ("maximal").

A *descending system* (for numeration of (0,1)) is determined by a maximal
family: for every n >= 1 a lazily-evaluated row of order n with infinite
support, the largest member starting at index n.  Membership is decided at a
finite horizon M by the mirrored scan, upwards from index 1; the last block
may be cut by the horizon and is flagged as truncated.

Both scans yield the successor/predecessor rules and hence enumeration.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Callable, Iterator

from .coeff import INFINITE, ZERO, CoeffFn, IndexInterval, basis


class FamilyError(ValueError):
    """A family row failed validation (wrong order, bad support, bad digit)."""


class NotMemberError(ValueError):
    """Function not admissible; ``witness`` is the index where the scan failed."""

    def __init__(self, witness: int, message: str | None = None):
        self.witness = witness
        super().__init__(message or f"not a member, witness index {witness}")


class AtMaximumError(ValueError):
    """The horizon-restricted maximum has no successor."""


class PredecessorFamily:
    """Memoized, lazily-validated table n -> immediate predecessor of basis(n).

    ``row_fn(n)`` is consulted once per index (n >= 2) under a lock, and the
    result must have order exactly n-1.  Rows with bounded domain (explicit
    tables) raise FamilyError past their last row.
    """

    def __init__(self, row_fn: Callable[[int], CoeffFn], name: str = "family"):
        self._row_fn = row_fn
        self.name = name
        self._rows: dict[int, CoeffFn] = {}
        self._lock = threading.Lock()

    def row(self, n: int) -> CoeffFn:
        if n < 2:
            raise FamilyError(f"{self.name}: predecessor rows start at n=2, got {n}")
        r = self._rows.get(n)
        if r is None:
            with self._lock:
                r = self._rows.get(n)
                if r is None:
                    r = self._row_fn(n)
                    if r.order_asc != n - 1:
                        raise FamilyError(
                            f"{self.name}: row {n} has order {r.order_asc}, expected {n - 1}"
                        )
                    self._rows[n] = r
        return r

    def __repr__(self) -> str:
        return f"PredecessorFamily({self.name!r})"


class MaximalRow:
    """One lazily-evaluated descending row: the largest member of order n."""

    __slots__ = ("family", "n")

    def __init__(self, family: "MaximalFamily", n: int):
        self.family = family
        self.n = n

    def digit(self, k: int) -> int:
        if k < self.n:
            return 0
        return self.family._digit_fn(self.n, k)

    def support_iter(self, start: int | None = None) -> Iterator[tuple[int, int]]:
        """Nonzero (index, digit) pairs in ascending index order, never ending."""
        return self.family._support_fn(self.n, start if start is not None else self.n)


class MaximalFamily:
    """Descending family n -> maximal row of order n (infinite support).

    ``digit_fn(n, k)`` gives the digit of row n at index k >= n; ``support_fn``
    may be supplied to iterate nonzero digits directly (defaults to scanning
    digit_fn index by index, fine for dense patterns, hopeless for sparse
    ones like the harmonic chain).
    """

    def __init__(
        self,
        digit_fn: Callable[[int, int], int],
        support_fn: Callable[[int, int], Iterator[tuple[int, int]]] | None = None,
        name: str = "maximal-family",
    ):
        self._digit_fn = digit_fn
        self._support_fn = support_fn or self._scan_support
        self.name = name
        self._checked: set[int] = set()
        self._lock = threading.Lock()

    def _scan_support(self, n: int, start: int) -> Iterator[tuple[int, int]]:
        k = max(start, n)
        while True:
            d = self._digit_fn(n, k)
            if d:
                yield (k, d)
            k += 1

    def row(self, n: int) -> MaximalRow:
        if n < 1:
            raise FamilyError(f"{self.name}: rows start at n=1, got {n}")
        if n not in self._checked:
            with self._lock:
                if n not in self._checked:
                    if self._digit_fn(n, n) < 1:
                        raise FamilyError(f"{self.name}: row {n} has digit 0 at its own index")
                    self._checked.add(n)
        return MaximalRow(self, n)

    def __repr__(self) -> str:
        return f"MaximalFamily({self.name!r})"


@dataclass(frozen=True)
class Block:
    """One block of a decomposition: digits restricted to a support interval.

    ``maximal`` marks an ascending bottom block that exhausts a family row;
    ``truncated`` marks a descending last block cut by the horizon.
    """

    support: IndexInterval
    digits: CoeffFn
    maximal: bool = False
    truncated: bool = False


@dataclass(frozen=True)
class Decomposition:
    """Blocks in ascending support order, tiling [1, top] with no gaps."""

    blocks: tuple[Block, ...]

    @property
    def bottom(self) -> Block | None:
        return self.blocks[0] if self.blocks else None

    @property
    def last(self) -> Block | None:
        return self.blocks[-1] if self.blocks else None


# -- ascending world ---------------------------------------------------------


def _scan_asc(mu: CoeffFn, fam: PredecessorFamily) -> list[tuple[int, int, bool]]:
    """Split ``mu`` into spans (lo, hi, maximal), top-down, or raise NotMemberError.

    Scanning from the top index n against row(n+1): the first index where mu
    drops below the row closes a block there; exceeding the row anywhere is a
    failure; matching the row all the way down to 1 is the maximal block,
    necessarily the bottom one.
    """
    spans: list[tuple[int, int, bool]] = []
    n = mu.order_asc
    while n >= 1:
        row = fam.row(n + 1)
        k = n
        while True:
            mk = mu.digit(k)
            dk = row.digit(k)
            if mk > dk:
                raise NotMemberError(k)
            if mk < dk:
                spans.append((k, n, False))
                n = k - 1
                break
            if k == 1:
                spans.append((1, n, True))
                n = 0
                break
            k -= 1
    return spans


def decompose_asc(mu: CoeffFn, fam: PredecessorFamily) -> Decomposition:
    """Unique block decomposition of an ascending member (NotMemberError otherwise)."""
    spans = _scan_asc(mu, fam)
    blocks = tuple(
        Block(IndexInterval(lo, hi), mu.restrict(lo, hi), maximal=mx)
        for lo, hi, mx in reversed(spans)
    )
    return Decomposition(blocks)


def is_member_asc(mu: CoeffFn, fam: PredecessorFamily) -> bool:
    try:
        _scan_asc(mu, fam)
        return True
    except NotMemberError:
        return False


def successor_asc(mu: CoeffFn, fam: PredecessorFamily) -> CoeffFn:
    """Immediate successor in ascending lex order among members.

    Bottom block maximal (= row(n), support [1, n-1]): clear it and carry one
    digit into index n.  Otherwise just raise the digit at index 1.
    """
    spans = _scan_asc(mu, fam)
    if spans and spans[-1][2]:
        n = spans[-1][1] + 1
        return mu.restrict(n).plus_basis(n)
    return mu.plus_basis(1)


def predecessor_asc(mu: CoeffFn, fam: PredecessorFamily) -> CoeffFn:
    """Inverse of successor_asc; undefined on the zero function."""
    if not mu:
        raise ValueError("the zero function has no predecessor")
    if mu.digit(1) >= 1:
        return mu.minus_basis(1)
    n = mu.order_desc
    assert isinstance(n, int)
    return fam.row(n) + mu.minus_basis(n)


def enumerate_asc(fam: PredecessorFamily, start: CoeffFn = ZERO) -> Iterator[CoeffFn]:
    """Members from ``start`` on, in ascending lex order (never ends)."""
    cur = start
    while True:
        yield cur
        cur = successor_asc(cur, fam)


def members_upto_order(fam: PredecessorFamily, k: int) -> list[CoeffFn]:
    """All members of order <= k in ascending lex order, zero included.

    Walks successors until the first member of order k+1 shows up; in
    ascending lex every member of order <= k precedes it.
    """
    out = []
    for mu in enumerate_asc(fam):
        if mu.order_asc > k:
            break
        out.append(mu)
    return out


# -- descending world --------------------------------------------------------


def _scan_desc(eps: CoeffFn, fam: MaximalFamily, horizon: int) -> list[tuple[int, int, bool]]:
    """Split ``eps`` into spans (lo, hi, truncated), bottom-up, at the horizon.

    The mirror scan: a block starting at n matches row(n) upwards; the first
    index where eps drops below the row closes the block; exceeding it is a
    failure; running out of horizon leaves the last block truncated.
    """
    if eps.order_asc > horizon:
        raise ValueError(f"support reaches {eps.order_asc}, beyond horizon {horizon}")
    spans: list[tuple[int, int, bool]] = []
    n = 1
    while n <= horizon:
        row = fam.row(n)
        i = n
        while i <= horizon:
            ei = eps.digit(i)
            pi = row.digit(i)
            if ei > pi:
                raise NotMemberError(i)
            if ei < pi:
                spans.append((n, i, False))
                n = i + 1
                break
            i += 1
        else:
            spans.append((n, horizon, True))
            n = horizon + 1
    return spans


def decompose_desc(eps: CoeffFn, fam: MaximalFamily, horizon: int) -> Decomposition:
    """Block decomposition of a horizon-restricted member (NotMemberError otherwise)."""
    spans = _scan_desc(eps, fam, horizon)
    blocks = tuple(
        Block(IndexInterval(lo, hi), eps.restrict(lo, hi), truncated=tr)
        for lo, hi, tr in spans
    )
    return Decomposition(blocks)


def is_member_desc(eps: CoeffFn, fam: MaximalFamily, horizon: int) -> bool:
    try:
        _scan_desc(eps, fam, horizon)
        return True
    except NotMemberError:
        return False


def successor_desc(eps: CoeffFn, fam: MaximalFamily, horizon: int) -> CoeffFn:
    """Immediate successor in descending lex order at the horizon.

    If the last block is cut by the horizon, drop it and carry one digit into
    the index just below its start; if it closes exactly at the horizon, raise
    the digit there.  The full row(1) restriction is the maximum and has no
    successor.
    """
    spans = _scan_desc(eps, fam, horizon)
    lo, _, truncated = spans[-1]
    if truncated:
        if lo == 1:
            raise AtMaximumError(f"maximum of the system restricted to [1, {horizon}]")
        return eps.restrict(1, lo - 1).plus_basis(lo - 1)
    return eps.plus_basis(horizon)


def enumerate_desc(fam: MaximalFamily, horizon: int) -> Iterator[CoeffFn]:
    """All horizon-restricted members in descending lex order, zero first."""
    cur = ZERO
    while True:
        yield cur
        try:
            cur = successor_desc(cur, fam, horizon)
        except AtMaximumError:
            return
