"""Integer numeration on top of a block system.

A fundamental sequence assigns a positive integer value Q_n to each basis
function.  Derived sequences take Q_1 = 1 and Q_n = 1 + (value of the
immediate predecessor of basis(n)); with those, the greedy block encoder is
exact and every natural number has exactly one admissible representation.

User-supplied sequences may be anything positive (bounded tables, linear
recurrences, non-monotone), which is what the coverage and collision probes
are for; encoding against a non-increasing sequence falls back to walking
the members in lex order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .blocks import PredecessorFamily, FamilyError, enumerate_asc, members_upto_order
from .coeff import CoeffFn

EXTENSION_LIMIT = 10**6

# misses tolerated past the last hit when searching a possibly non-monotone
# sequence for its largest term under a bound
LOOKAHEAD_WINDOW = 16


class NotRepresentableError(ValueError):
    """No admissible function evaluates to the requested value."""


class FundamentalSeq:
    """Lazy, memoized sequence of basis values Q_1, Q_2, ...

    ``extend`` is called as extend(n, self) for indices past the seed values;
    passing None makes the sequence a bounded table.
    """

    def __init__(
        self,
        values: Iterable[int],
        extend: Callable[[int, "FundamentalSeq"], int] | None = None,
        name: str = "Q",
    ):
        self._vals: list[int] = []
        self._extend = extend
        self.name = name
        self._increasing = True
        for v in values:
            self._push(v)
        if not self._vals and extend is None:
            raise FamilyError(f"{name}: empty sequence")

    def _push(self, v: int) -> None:
        if not isinstance(v, int) or v < 1:
            raise FamilyError(f"{self.name}: term {len(self._vals) + 1} is {v!r}, need a positive integer")
        if self._vals and v <= self._vals[-1]:
            self._increasing = False
        self._vals.append(v)

    @classmethod
    def from_family(cls, fam: PredecessorFamily, name: str | None = None) -> "FundamentalSeq":
        """Derived sequence: Q_1 = 1, Q_n = 1 + sum of row(n) digits times Q."""

        def ext(n: int, seq: "FundamentalSeq") -> int:
            return 1 + sum(d * seq.value(k) for k, d in fam.row(n).items())

        return cls([1], ext, name or f"Q[{fam.name}]")

    @classmethod
    def from_linear(
        cls, seeds: Iterable[int], coeffs: Iterable[int], name: str = "Q"
    ) -> "FundamentalSeq":
        """Q_n = c_1 Q_{n-1} + ... + c_m Q_{n-m} past the seeds."""
        cs = tuple(coeffs)

        def ext(n: int, seq: "FundamentalSeq") -> int:
            return sum(c * seq.value(n - 1 - j) for j, c in enumerate(cs))

        return cls(seeds, ext, name)

    @property
    def increasing(self) -> bool:
        """Whether every materialized term so far exceeds the one before it."""
        return self._increasing

    @property
    def bounded(self) -> bool:
        return self._extend is None

    def __len__(self) -> int:
        return len(self._vals)

    def value(self, n: int) -> int:
        if n < 1:
            raise IndexError(f"{self.name}: index {n} out of range")
        if n > EXTENSION_LIMIT:
            raise FamilyError(f"{self.name}: refusing to extend past {EXTENSION_LIMIT} terms")
        while len(self._vals) < n:
            if self._extend is None:
                raise IndexError(f"{self.name}: bounded table of {len(self._vals)} terms, index {n}")
            self._push(self._extend(len(self._vals) + 1, self))
        return self._vals[n - 1]

    def upto(self, n: int) -> list[int]:
        self.value(n)
        return self._vals[:n]

    def find_top(self, x: int) -> int:
        """Largest n with Q_n <= x for an increasing sequence (0 if none).

        Terms materialized during the search can reveal a decreasing step,
        which invalidates the search; that raises like a non-increasing
        sequence would at entry.
        """
        if not self._increasing:
            raise FamilyError(f"{self.name}: find_top needs an increasing sequence")
        result = self._search_top(x)
        if not self._increasing:
            raise FamilyError(f"{self.name}: find_top needs an increasing sequence")
        return result

    def _search_top(self, x: int) -> int:
        if x < self.value(1):
            return 0
        lo = 1
        hi = 2
        while True:
            try:
                if self.value(hi) > x:
                    break
            except IndexError:
                hi = len(self._vals)
                if self._vals[hi - 1] <= x:
                    return hi
                break
            lo = hi
            hi *= 2
        # Q_lo <= x < Q_hi
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if self.value(mid) <= x:
                lo = mid
            else:
                hi = mid
        return lo

    def top_below(self, x: int, window: int = LOOKAHEAD_WINDOW) -> int:
        """Largest n with Q_n <= x, by forward scan with a miss window.

        Sound for sequences that eventually stay above x (every fixture here
        grows at least geometrically along residue classes); the window says
        how many consecutive terms above x end the search.
        """
        if self._increasing:
            try:
                return self.find_top(x)
            except FamilyError:
                pass  # a lazy term broke monotonicity; scan instead
        best = 0
        misses = 0
        n = 0
        while misses < window:
            n += 1
            try:
                v = self.value(n)
            except IndexError:
                break
            if v <= x:
                best = n
                misses = 0
            else:
                misses += 1
        return best

    def __repr__(self) -> str:
        head = ", ".join(str(v) for v in self._vals[:6])
        more = ", ..." if self._extend is not None or len(self._vals) > 6 else ""
        return f"FundamentalSeq({self.name}: {head}{more})"


def decode_int(mu: CoeffFn, seq: FundamentalSeq) -> int:
    """Value of a coefficient function: sum of digit times Q over the support."""
    return sum(d * seq.value(k) for k, d in mu.items())


def shift_value(eps: CoeffFn, seq: FundamentalSeq) -> int:
    """Value with every index shifted up one slot: sum of digit times Q_{k+1}."""
    return sum(d * seq.value(k + 1) for k, d in eps.items())


def encode_int(x: int, fam: PredecessorFamily, seq: FundamentalSeq) -> CoeffFn:
    """The admissible function with value ``x``.

    Greedy for increasing sequences: take the top, then follow the row of the
    next basis index downwards, taking each digit as far as the remainder
    affords; the first short digit closes the block and the recursion floor
    drops strictly below it.  For non-increasing sequences this walks the
    members in lex order instead (and can honestly fail).
    """
    if x < 0:
        raise ValueError(f"cannot encode negative value {x}")
    if not seq.increasing:
        return _encode_by_walk(x, fam, seq)
    pairs: list[tuple[int, int]] = []
    rem = x
    while rem > 0:
        try:
            n = seq.find_top(rem)
        except FamilyError:
            # the lazy table revealed a decreasing term part way through
            return _encode_by_walk(x, fam, seq)
        if n == 0:
            raise NotRepresentableError(f"{rem} is below every basis value of {seq.name}")
        row = fam.row(n + 1)
        for k, d in sorted(row.items(), reverse=True):
            q = seq.value(k)
            c = min(d, rem // q)
            if c:
                pairs.append((k, c))
                rem -= c * q
            if c < d:
                break
    return CoeffFn(pairs)


def _encode_by_walk(x: int, fam: PredecessorFamily, seq: FundamentalSeq) -> CoeffFn:
    if x == 0:
        return CoeffFn()
    m_max = seq.top_below(x)
    if m_max == 0:
        raise NotRepresentableError(f"{x} is below every basis value of {seq.name}")
    for mu in enumerate_asc(fam):
        if mu.order_asc > m_max:
            break
        if decode_int(mu, seq) == x:
            return mu
    raise NotRepresentableError(f"no admissible function of order <= {m_max} has value {x}")


@dataclass
class SubsetReport:
    """Members with value under a bound, in lex order, plus the first collision.

    ``collision`` is (value, earlier function, later function) or None; values
    at or under the bound are checked for repeats, so a clean uniqueness-and-
    coverage claim is ``collision is None`` plus a check of ``values()``.
    """

    bound: int
    pairs: list[tuple[CoeffFn, int]]
    collision: tuple[int, CoeffFn, CoeffFn] | None

    def values(self) -> list[int]:
        return sorted(v for _, v in self.pairs)

    def covers_all_below_bound(self, start: int = 0) -> bool:
        return self.values() == list(range(start, self.bound + 1))


def enumerate_subset(fam: PredecessorFamily, seq: FundamentalSeq, bound: int) -> SubsetReport:
    """All members with value <= bound, walking lex order up to the last
    basis index whose value fits under the bound."""
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    m_max = seq.top_below(bound)
    pairs: list[tuple[CoeffFn, int]] = []
    first_by_value: dict[int, CoeffFn] = {}
    collision: tuple[int, CoeffFn, CoeffFn] | None = None
    for mu in enumerate_asc(fam):
        if mu.order_asc > m_max:
            break
        v = decode_int(mu, seq)
        if v > bound:
            continue
        pairs.append((mu, v))
        if collision is None:
            if v in first_by_value:
                collision = (v, first_by_value[v], mu)
            else:
                first_by_value[v] = mu
    return SubsetReport(bound, pairs, collision)


def reconstruct_sequence(
    fam: PredecessorFamily, value_set: Iterable[int], count: int
) -> list[int]:
    """Rebuild a fundamental sequence from the family and the covered set.

    Q'_n is the least element of the value set not reached by any member of
    order below n (using the already-rebuilt prefix).  When the original
    sequence is increasing and the system covers the set uniquely, this
    returns it exactly; it is the converse probe, not a constructor.
    """
    values = sorted(set(value_set))
    rebuilt: list[int] = []

    def dec(mu: CoeffFn) -> int:
        return sum(d * rebuilt[k - 1] for k, d in mu.items())

    for n in range(1, count + 1):
        used = {dec(mu) for mu in members_upto_order(fam, n - 1)}
        rest = [v for v in values if v not in used]
        if not rest:
            raise NotRepresentableError(
                f"value set exhausted after {n - 1} rebuilt terms"
            )
        rebuilt.append(rest[0])
    return rebuilt
