"""Uniqueness and counting probes.

A family paired with an arbitrary positive sequence need not represent
values uniquely.  The probe walks the members in ascending lex order up to
an order cap, evaluates each, and reports the first value hit twice; for a
multiplicity-list system with the matching linear recurrence, a cap of a
few periods is the interesting regime (four by default, two with the
shortcut flag).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .blocks import PredecessorFamily, enumerate_asc, members_upto_order
from .coeff import CoeffFn
from .integers import FundamentalSeq, decode_int
from .recurrences import MultiplicityList


@dataclass
class UniquenessReport:
    """Outcome of a lex-order collision walk.

    ``members_seen`` counts the zero function; when a collision stops the
    walk early, ``complete`` is False and the counts cover only the prefix
    up to and including the colliding member.
    """

    order_cap: int
    members_seen: int
    distinct_values: int
    collision: tuple[int, CoeffFn, CoeffFn] | None
    complete: bool

    @property
    def nonzero_members(self) -> int:
        return self.members_seen - 1

    @property
    def ok(self) -> bool:
        return self.collision is None and self.complete


def check_unique(
    fam: PredecessorFamily,
    seq: FundamentalSeq,
    order_cap: int,
    stop_at_collision: bool = True,
) -> UniquenessReport:
    """Walk members of order <= order_cap and look for a repeated value."""
    first_by_value: dict[int, CoeffFn] = {}
    collision: tuple[int, CoeffFn, CoeffFn] | None = None
    seen = 0
    for mu in enumerate_asc(fam):
        if mu.order_asc > order_cap:
            break
        seen += 1
        v = decode_int(mu, seq)
        if collision is None:
            if v in first_by_value:
                collision = (v, first_by_value[v], mu)
                if stop_at_collision:
                    return UniquenessReport(order_cap, seen, len(first_by_value), collision, False)
            else:
                first_by_value[v] = mu
    return UniquenessReport(order_cap, seen, len(first_by_value), collision, True)


def check_unique_multiplicity(
    e: Iterable[int],
    seeds: Iterable[int],
    shortcut: bool = False,
    stop_at_collision: bool = True,
) -> UniquenessReport:
    """Collision walk for a multiplicity-list family against the sequence
    grown from ``seeds`` by the list's own linear recurrence."""
    ml = MultiplicityList(tuple(e))
    fam = ml.predecessor_family()
    seq = FundamentalSeq.from_linear(tuple(seeds), ml.recurrence_coeffs(), name=f"Q{tuple(seeds)}")
    cap = (2 if shortcut else 4) * ml.period
    return check_unique(fam, seq, cap, stop_at_collision)


def count_upto_order(
    fam: PredecessorFamily,
    order_cap: int,
    pred: Callable[[CoeffFn], bool] | None = None,
) -> int:
    """Number of members of order <= order_cap, zero function included,
    optionally filtered."""
    if pred is None:
        return len(members_upto_order(fam, order_cap))
    return sum(1 for mu in members_upto_order(fam, order_cap) if pred(mu))
