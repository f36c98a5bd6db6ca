"""Numeration of p-adic integers at finite precision.

Everything is an integer residue mod p**prec.  A p-adic fundamental sequence
carries strictly increasing valuations, so a value splits into digits one
valuation layer at a time: compare the remainder's valuation with the next
term's, emit a digit in 0..p-1 when they meet, and fail honestly when the
remainder's valuation falls below every remaining term.  Terms whose
valuation reaches the precision are invisible and are not materialized.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Callable, Iterable

from .blocks import FamilyError, PredecessorFamily, _scan_asc, enumerate_asc
from .coeff import CoeffFn
from .integers import NotRepresentableError
from .uniqueness import UniquenessReport


def padic_valuation(x: int, p: int, cap: int) -> int:
    """Largest v <= cap with p**v dividing x, with the zero residue capped."""
    if x == 0:
        return cap
    v = 0
    while v < cap and x % p == 0:
        x //= p
        v += 1
    return v


@dataclass(frozen=True)
class PadicApprox:
    """An integer known modulo p**prec."""

    p: int
    prec: int
    residue: int

    def __post_init__(self):
        object.__setattr__(self, "residue", self.residue % self.p**self.prec)

    @property
    def valuation(self) -> int:
        return padic_valuation(self.residue, self.p, self.prec)

    def __repr__(self) -> str:
        return f"{self.residue} (mod {self.p}^{self.prec})"


class PadicSeq:
    """Fundamental sequence of p-adic values, materialized while visible.

    ``term_fn(k)`` gives the residue of Q_k mod p**prec; terms are collected
    from k = 1 until the first one with valuation at or past the precision,
    and the collected valuations must increase strictly.
    """

    def __init__(self, p: int, prec: int, term_fn: Callable[[int], int], name: str = "Q"):
        if p < 2 or prec < 1:
            raise FamilyError(f"need p >= 2 and prec >= 1, got p={p}, prec={prec}")
        self.p = p
        self.prec = prec
        self.name = name
        self.modulus = p**prec
        terms: list[int] = []
        vals: list[int] = []
        k = 1
        while True:
            t = term_fn(k) % self.modulus
            v = padic_valuation(t, p, prec)
            if v >= prec:
                break
            if vals and v <= vals[-1]:
                raise FamilyError(
                    f"{name}: valuation {v} of term {k} does not exceed the previous {vals[-1]}"
                )
            terms.append(t)
            vals.append(v)
            k += 1
        if not terms:
            raise FamilyError(f"{name}: no visible terms at precision {prec}")
        self.terms = tuple(terms)
        self.valuations = tuple(vals)

    def __len__(self) -> int:
        return len(self.terms)

    def value(self, k: int) -> int:
        """Residue of Q_k; zero beyond the visible terms."""
        if k < 1:
            raise IndexError(f"{self.name}: index {k}")
        return self.terms[k - 1] if k <= len(self.terms) else 0

    def approx(self, k: int) -> PadicApprox:
        return PadicApprox(self.p, self.prec, self.value(k))

    def __repr__(self) -> str:
        return f"PadicSeq({self.name}, p={self.p}, prec={self.prec}, len={len(self.terms)})"


def eval_padic(fn: CoeffFn, seq: PadicSeq) -> int:
    """Residue of the digit function's value; indices past the visible terms
    contribute nothing."""
    return sum(d * seq.value(k) for k, d in fn.items()) % seq.modulus


def decode_padic(x: int, seq: PadicSeq, fam: PredecessorFamily | None = None) -> CoeffFn:
    """Digits of the residue ``x``, one valuation layer at a time.

    Raises NotRepresentableError when the remainder's valuation drops below
    every remaining term or survives past the last one; with a family given,
    also rejects digit functions outside it (NotMemberError, with witness).
    """
    p, prec, m = seq.p, seq.prec, seq.modulus
    rem = x % m
    pairs: list[tuple[int, int]] = []
    for k, (q, vk) in enumerate(zip(seq.terms, seq.valuations), start=1):
        if rem == 0:
            break
        rv = padic_valuation(rem, p, prec)
        if rv < vk:
            raise NotRepresentableError(
                f"remainder valuation {rv} below term {k} valuation {vk}"
            )
        if rv > vk:
            continue
        unit_r = rem // p**rv
        unit_q = q // p**vk
        d = unit_r * pow(unit_q, -1, p) % p
        if d:
            pairs.append((k, d))
            rem = (rem - d * q) % m
    if rem:
        raise NotRepresentableError(
            f"residue {rem} left after the last visible term of {seq.name}"
        )
    fn = CoeffFn(pairs)
    if fam is not None:
        _scan_asc(fn, fam)  # raises NotMemberError with the witness index
    return fn


def check_unique_padic(
    fam: PredecessorFamily,
    seq: PadicSeq,
    order_cap: int,
    stop_at_collision: bool = True,
) -> UniquenessReport:
    """Collision walk over members of order <= order_cap, by residue."""
    first_by_value: dict[int, CoeffFn] = {}
    collision = None
    seen = 0
    for mu in enumerate_asc(fam):
        if mu.order_asc > order_cap:
            break
        seen += 1
        v = eval_padic(mu, seq)
        if collision is None:
            if v in first_by_value:
                collision = (v, first_by_value[v], mu)
                if stop_at_collision:
                    return UniquenessReport(order_cap, seen, len(first_by_value), collision, False)
            else:
                first_by_value[v] = mu
    return UniquenessReport(order_cap, seen, len(first_by_value), collision, True)


# -- roots and specific sequences --------------------------------------------


def _eval_poly(coeffs: Iterable[int], x: int, m: int) -> int:
    total = 0
    for c in reversed(tuple(coeffs)):
        total = (total * x + c) % m
    return total


def _eval_dpoly(coeffs: Iterable[int], x: int, m: int) -> int:
    cs = tuple(coeffs)
    total = 0
    for i in range(len(cs) - 1, 0, -1):
        total = (total * x + i * cs[i]) % m
    return total


def hensel_root(coeffs: Iterable[int], p: int, seed: int, prec: int) -> int:
    """Lift a simple root of f mod p to a root mod p**prec by Newton steps.

    ``coeffs`` are (c_0, c_1, ..., c_n) of f = sum c_i x^i.  The seed must
    satisfy f(seed) = 0 and f'(seed) != 0 mod p.
    """
    cs = tuple(coeffs)
    m = p**prec
    x = seed % p
    if _eval_poly(cs, x, p) != 0:
        raise ValueError(f"{seed} is not a root mod {p}")
    if _eval_dpoly(cs, x, p) == 0:
        raise ValueError(f"derivative vanishes at {seed} mod {p}, root is not simple")
    for _ in range(prec.bit_length() + 2):
        fx = _eval_poly(cs, x, m)
        if fx == 0:
            break
        x = (x - fx * pow(_eval_dpoly(cs, x, m), -1, m)) % m
    if _eval_poly(cs, x, m):
        raise ArithmeticError("Newton iteration failed to converge")
    return x


def power_padic_seq(p: int, prec: int, unit: int = 1, name: str | None = None) -> PadicSeq:
    """Q_k = (unit * p)**(k-1): valuation k-1 with a geometric unit part."""
    if unit % p == 0:
        raise FamilyError(f"unit {unit} must be coprime to {p}")
    return PadicSeq(
        p, prec, lambda k: pow(unit * p, k - 1, p**prec), name or f"({unit}*{p})^k"
    )


def golden_padic_seq(
    p: int = 41, prec: int = 8, mix: int = 3, seed: int = 7
) -> PadicSeq:
    """Q_k = (phi^k + mix*(1-phi)^k) * p^(k-1) with phi a root of x^2 = x + 1.

    Needs p to split the golden polynomial; the seed picks which root.  The
    unit parts satisfy the Fibonacci recurrence, so Q_{n+2} = p Q_{n+1} +
    p^2 Q_n holds mod p**prec.
    """
    m = p**prec
    phi = hensel_root((-1, -1, 1), p, seed, prec)
    psi = (1 - phi) % m

    def term(k: int) -> int:
        return (pow(phi, k, m) + mix * pow(psi, k, m)) * pow(p, k - 1, m) % m

    return PadicSeq(p, prec, term, name=f"golden-{p}")


# -- weak converse probing ----------------------------------------------------


def weak_converse_digit_bound(p: int) -> int:
    """Digit ceiling under which matching value sets force matching sequences."""
    return min(isqrt(p), (p - 1) // 2)


@dataclass(frozen=True)
class ConverseProbe:
    """Comparison of two sequences through one family's members."""

    values_match: bool
    first_difference: int | None
    max_digit_seen: int
    digit_bound: int


def weak_converse_probe(
    fam: PredecessorFamily, seq_a: PadicSeq, seq_b: PadicSeq, order_cap: int
) -> ConverseProbe:
    """Do the two sequences reach the same residues through this family, and
    where do the sequences themselves first differ?

    A match with an early difference exhibits the converse failing; the
    reported digit bound is the hypothesis that would have forbidden it.
    """
    if (seq_a.p, seq_a.prec) != (seq_b.p, seq_b.prec):
        raise FamilyError("sequences live at different p or precision")
    vals_a: set[int] = set()
    vals_b: set[int] = set()
    max_digit = 0
    for mu in enumerate_asc(fam):
        if mu.order_asc > order_cap:
            break
        if mu:
            max_digit = max(max_digit, max(d for _, d in mu.items()))
        vals_a.add(eval_padic(mu, seq_a))
        vals_b.add(eval_padic(mu, seq_b))
    diff = None
    for k in range(1, max(len(seq_a), len(seq_b)) + 1):
        if seq_a.value(k) != seq_b.value(k):
            diff = k
            break
    return ConverseProbe(vals_a == vals_b, diff, max_digit, weak_converse_digit_bound(seq_a.p))
