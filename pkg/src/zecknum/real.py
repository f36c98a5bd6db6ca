"""Numeration of the unit interval.

Here the basis values Q_1 > Q_2 > ... decrease to zero (Q_0 = 1 by
convention), admissibility is a maximal family read upwards, and the greedy
expansion takes the largest affordable basis value, then follows the maximal
row of that index as far as the remainder affords, block by block.

Three sequence shapes cover the fixtures: geometric Q_n = omega^n with omega
the positive root of the multiplicity polynomial (a Decimal, or an exact
Fraction when the root is rational), the harmonic Q_n = 1/(n+1), and
block-geometric sequences constant-ratio per period.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union

from .blocks import FamilyError, MaximalFamily
from .coeff import CoeffFn

Numeric = Union[Fraction, Decimal]

# first 100 decimal digits; enough to make greedy index traces exact
PI_100 = "3.1415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421170679"


class GeometricSeq:
    """Q_n = omega^n for a fixed omega in (0, 1)."""

    def __init__(self, omega: Numeric):
        if not 0 < omega < 1:
            raise FamilyError(f"geometric ratio must lie in (0,1), got {omega}")
        self.omega = omega

    def value(self, n: int) -> Numeric:
        return self.omega ** n

    def __repr__(self) -> str:
        return f"GeometricSeq({self.omega})"


class HarmonicSeq:
    """Q_n = 1/(n+1), exactly."""

    def value(self, n: int) -> Fraction:
        return Fraction(1, n + 1)

    def __repr__(self) -> str:
        return "HarmonicSeq()"


class BlockGeometricSeq:
    """Q_{mN+t} = seed_t * ratio^m for t in 1..N; extends to Q_0 = 1.

    Seeds must decrease strictly and the ratio must drop the next period
    strictly below the current one.
    """

    def __init__(self, seeds: Sequence[Fraction], ratio: Fraction):
        self.seeds = tuple(Fraction(s) for s in seeds)
        self.ratio = Fraction(ratio)
        if not self.seeds or any(b >= a for a, b in zip(self.seeds, self.seeds[1:])):
            raise FamilyError(f"seeds must decrease strictly, got {self.seeds}")
        if not 0 < self.ratio < 1 or self.seeds[0] >= 1:
            raise FamilyError("need 0 < ratio < 1 and seeds below 1")
        if self.seeds[0] * self.ratio >= self.seeds[-1]:
            raise FamilyError("ratio too large: periods would overlap")

    def value(self, n: int) -> Fraction:
        m, t = divmod(n - 1, len(self.seeds))
        return self.seeds[t] * self.ratio**m

    def __repr__(self) -> str:
        return f"BlockGeometricSeq({self.seeds}, ratio={self.ratio})"


def find_first_below(seq, x: Numeric) -> int:
    """Smallest n >= 1 with Q_n <= x, for a decreasing sequence and 0 < x < 1."""
    if not 0 < x < 1:
        raise ValueError(f"need 0 < x < 1, got {x}")
    lo, hi = 0, 1
    while seq.value(hi) > x:
        lo = hi
        hi *= 2
    # Q_lo > x >= Q_hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if seq.value(mid) > x:
            lo = mid
        else:
            hi = mid
    return hi


# -- roots of multiplicity polynomials ---------------------------------------


def rational_root(e: Sequence[int]) -> Fraction | None:
    """Exact root in (0,1) of sum e_k x^k = 1 when one exists.

    Any rational root is 1/q with q dividing the top multiplicity, so the
    candidate list is short.
    """
    top = e[-1]
    for q in range(2, top + 1):
        if top % q:
            continue
        x = Fraction(1, q)
        if sum(ek * x**k for k, ek in enumerate(e, start=1)) == 1:
            return x
    return None


def positive_root(e: Sequence[int], digits: int = 60) -> Decimal:
    """The root in (0,1) of sum e_k x^k = 1, by bisection, to ``digits`` digits.

    The polynomial is strictly increasing on [0,1] with a sign change, so
    bisection is safe; work runs at a guard precision and the result is
    rounded down to the requested one.
    """
    es = tuple(e)
    if not es or es[0] < 1 or es[-1] < 1 or any(v < 0 for v in es):
        raise FamilyError(f"multiplicities {es} must be nonnegative with positive ends")
    with localcontext() as ctx:
        ctx.prec = digits + 10
        lo, hi = Decimal(0), Decimal(1)
        steps = int((digits + 10) * 3.33) + 4
        for _ in range(steps):
            mid = (lo + hi) / 2
            f = sum(ek * mid**k for k, ek in enumerate(es, start=1)) - 1
            if f < 0:
                lo = mid
            else:
                hi = mid
        root = (lo + hi) / 2
    with localcontext() as ctx:
        ctx.prec = digits
        return +root


def geometric_fundamental(e: Sequence[int], digits: int = 60) -> GeometricSeq:
    """Geometric sequence on the positive root, exact when the root is rational."""
    r = rational_root(e)
    return GeometricSeq(r if r is not None else positive_root(e, digits))


# -- root dominance ----------------------------------------------------------


@dataclass(frozen=True)
class DominanceResult:
    """``dominant`` True with a witness pair, or None when the test is silent."""

    dominant: bool | None
    witness: tuple[int, int] | None


def dominance_criterion(coeffs: Sequence[int]) -> DominanceResult:
    """Interior-coefficient test for a dominant root of
    a_n z^n - a_{n-1} z^{n-1} - ... - a_1 z - a_0.

    ``coeffs`` is (a_0, ..., a_n), entries nonnegative with a_0, a_n >= 1.
    Two interior powers m < l, both with nonzero coefficients and coprime,
    certify a dominant root; without such a pair the test says nothing
    (which happens even for some polynomials whose root is dominant).
    """
    a = tuple(coeffs)
    n = len(a) - 1
    if n < 1 or a[0] < 1 or a[n] < 1 or any(v < 0 for v in a):
        raise ValueError(f"need nonnegative coefficients with positive ends, got {a}")
    for m in range(1, n):
        if not a[m]:
            continue
        for l in range(m + 1, n):
            if a[l] and gcd(m, l) == 1:
                return DominanceResult(True, (m, l))
    return DominanceResult(None, None)


def multiplicity_list_dominant(e: Sequence[int]) -> DominanceResult:
    """Dominance of z^N - e_1 z^{N-1} - ... - e_N, decided for every valid list.

    The tail positions 1 and N (counted down from the leading term) carry
    positive coefficients and are coprime, which certifies a dominant root
    where the interior-only test can stay silent (N = 2 being the standard
    case).  Witness positions are tail distances, not z-powers.
    """
    es = tuple(e)
    if not es or es[0] < 1 or es[-1] < 1 or any(v < 0 for v in es):
        raise FamilyError(f"multiplicities {es} must be nonnegative with positive ends")
    if len(es) == 1:
        return DominanceResult(True, None)
    return DominanceResult(True, (1, len(es)))


# -- identities and expansions -----------------------------------------------


@dataclass(frozen=True)
class IdentityReport:
    lhs: Numeric
    rhs: Numeric
    error: Numeric
    tol: Numeric
    ok: bool


def verify_maximal_identity(fam: MaximalFamily, seq, n: int, horizon: int, tol) -> IdentityReport:
    """Check that the maximal row at n, summed against Q up to the horizon,
    lands within tol of Q_{n-1}."""
    total = seq.value(n) * 0  # zero of the sequence's numeric type
    for k, d in fam.row(n).support_iter():
        if k > horizon:
            break
        total += d * seq.value(k)
    rhs = seq.value(n - 1)
    err = abs(rhs - total)
    return IdentityReport(total, rhs, err, tol, err <= tol)


@dataclass(frozen=True)
class Expansion:
    """Greedy expansion result: the digit function, what is left, and whether
    the remainder is exactly zero."""

    fn: CoeffFn
    residual: Numeric
    exact: bool
    blocks_used: int


def expand_real(
    x: Numeric,
    fam: MaximalFamily,
    seq,
    max_blocks: int = 8,
    residual_tol: Numeric | None = Fraction(1, 10**30),
) -> Expansion:
    """Greedy block expansion of 0 < x < 1.

    Each block starts at the largest affordable basis value and follows that
    maximal row upward, taking every digit as fully as the remainder affords;
    the first short digit closes the block, and the next block necessarily
    starts strictly above it.  Stops on an exact zero remainder, a remainder
    at or under residual_tol, or after max_blocks blocks.
    """
    rem = x
    pairs: list[tuple[int, int]] = []
    blocks = 0
    exact = False
    while True:
        if rem == 0:
            exact = True
            break
        if residual_tol is not None and rem <= residual_tol:
            break
        if blocks >= max_blocks:
            break
        n = find_first_below(seq, rem)
        for k, d in fam.row(n).support_iter():
            q = seq.value(k)
            c = int(rem / q)
            # division may land a hair high at fixed precision
            while c > 0 and c * q > rem:
                c -= 1
            c = min(c, d)
            if c:
                pairs.append((k, c))
                rem -= c * q
            if c < d:
                break
        blocks += 1
    return Expansion(CoeffFn(pairs), rem, exact, blocks)


def eval_expansion(fn, seq) -> Numeric:
    """Value of a digit function against a decreasing sequence."""
    total = seq.value(1) * 0
    for k, d in fn.items():
        total += d * seq.value(k)
    return total


# -- specific families on (0,1) ----------------------------------------------


def harmonic_maximal_family() -> MaximalFamily:
    """Maximal rows of the 1/(n+1) system: the support chain n, n(n+1), and
    then m -> m(m+1) forever, every digit 1 (a telescoping of 1/n)."""

    def digit(n: int, k: int) -> int:
        m = n
        while m < k:
            m = m * (m + 1)
        return 1 if m == k else 0

    def support(n: int, start: int):
        m = n
        while True:
            if m >= start:
                yield (m, 1)
            m = m * (m + 1)

    return MaximalFamily(digit, support, name="harmonic")


def periodic_maximal_family(own_rows: Sequence[Sequence[int]], name: str = "periodic") -> MaximalFamily:
    """Maximal rows for a period-N block system on (0,1).

    own_rows[t-1] gives the digits of a row starting at position t of its
    period, through that period's end (so its length is N-t+1); past its own
    period every row continues with own_rows[0] repeated period-aligned.
    """
    rows = [tuple(r) for r in own_rows]
    N = len(rows)
    if any(len(r) != N - i for i, r in enumerate(rows)):
        raise FamilyError(f"{name}: own-row lengths must be N, N-1, ..., 1")
    if len(rows[0]) != N or any(d < 0 for r in rows for d in r):
        raise FamilyError(f"{name}: bad own rows {rows}")

    def digit(n: int, k: int) -> int:
        if k < n:
            return 0
        t0 = (n - 1) % N
        end = n + (N - 1 - t0)
        if k <= end:
            return rows[t0][k - n]
        return rows[0][(k - end - 1) % N]

    return MaximalFamily(digit, name=name)
