"""Build numeration systems from JSON descriptions.

A system file names a kind (integer, real, padic), a family, and one or
more sequences.  Bundled fixtures live next to this module; user files use
the same schema via an explicit path.  Fractions appear in JSON as strings
like "3/7".
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .blocks import FamilyError
from .integers import FundamentalSeq
from .padic import PadicSeq, golden_padic_seq, power_padic_seq
from .real import (
    BlockGeometricSeq,
    HarmonicSeq,
    geometric_fundamental,
    harmonic_maximal_family,
    periodic_maximal_family,
)
from .recurrences import (
    MultiplicityList,
    factorial_family,
    family_from_blocks,
    family_from_neg_recurrence,
    family_from_sequence,
    family_from_table,
    index_bounded_family,
    j_plus_family,
    pinned_radix_seq,
)


@dataclass
class System:
    """A loaded numeration system: family plus named sequences."""

    name: str
    kind: str
    family: object
    sequences: dict[str, object] = field(default_factory=dict)
    base: int | None = None
    multiplicities: tuple[int, ...] | None = None
    notes: str = ""

    @property
    def sequence(self):
        return self.sequences["main"]


def _build_integer_family(entry: dict):
    t = entry.get("type")
    if t == "multiplicity":
        ml = MultiplicityList(tuple(entry["e"]))
        return ml.predecessor_family(), ml.e, None
    if t == "index-bounded":
        return index_bounded_family(), None, None
    if t == "neg-recurrence":
        return family_from_neg_recurrence(entry["c"]), None, None
    if t == "factorial":
        return factorial_family(), None, None
    if t == "pin":
        return j_plus_family(int(entry["j"])), None, None
    if t == "blocks":
        sysb = family_from_blocks([tuple(b) for b in entry["blocks"]], entry.get("name", "blocks"))
        return sysb.family, None, sysb.base
    if t == "table":
        return family_from_table(entry["rows"]), None, None
    if t == "greedy":
        return family_from_sequence(entry["values"]), None, None
    raise FamilyError(f"unknown family type {t!r}")


def _build_real_family(entry: dict):
    t = entry.get("type")
    if t == "harmonic":
        return harmonic_maximal_family(), None
    if t == "periodic":
        return periodic_maximal_family(entry["rows"]), None
    if t == "multiplicity":
        ml = MultiplicityList(tuple(entry["e"]))
        return ml.maximal_family(), ml.e
    raise FamilyError(f"unknown real family type {t!r}")


def _build_integer_seq(entry: dict, fam) -> FundamentalSeq:
    t = entry.get("type")
    if t == "derived":
        return FundamentalSeq.from_family(fam)
    if t == "linear":
        return FundamentalSeq.from_linear(entry["seeds"], entry["coeffs"], name=entry.get("name", "Q"))
    if t == "table":
        return FundamentalSeq(entry["values"], name=entry.get("name", "Q"))
    if t == "pinned-radix":
        return pinned_radix_seq(int(entry["j"]))
    raise FamilyError(f"unknown sequence type {t!r}")


def _build_real_seq(entry: dict, e, precision: int):
    t = entry.get("type")
    if t == "harmonic":
        return HarmonicSeq()
    if t == "geometric":
        ml = tuple(entry.get("e", e or ()))
        if not ml:
            raise FamilyError("geometric sequence needs multiplicities")
        return geometric_fundamental(ml, digits=precision)
    if t == "block-geometric":
        return BlockGeometricSeq(
            [Fraction(s) for s in entry["seeds"]], Fraction(entry["ratio"])
        )
    raise FamilyError(f"unknown real sequence type {t!r}")


def _build_padic_seq(entry: dict, p: int, prec: int) -> PadicSeq:
    t = entry.get("type")
    if t == "power":
        return power_padic_seq(p, prec, int(entry.get("unit", 1)), name=entry.get("name"))
    if t == "golden":
        return golden_padic_seq(p, prec, mix=int(entry.get("mix", 3)), seed=int(entry.get("seed", 7)))
    raise FamilyError(f"unknown padic sequence type {t!r}")


def build_system(doc: dict, precision: int = 60) -> System:
    name = doc.get("name", "unnamed")
    kind = doc.get("kind")
    seq_entries = doc.get("sequences")
    if seq_entries is None:
        seq_entries = {"main": doc["sequence"]}

    if kind == "integer":
        fam, e, base = _build_integer_family(doc["family"])
        seqs = {label: _build_integer_seq(s, fam) for label, s in seq_entries.items()}
        return System(name, kind, fam, seqs, base=base, multiplicities=e, notes=doc.get("notes", ""))
    if kind == "real":
        fam, e = _build_real_family(doc["family"])
        seqs = {label: _build_real_seq(s, e, precision) for label, s in seq_entries.items()}
        return System(name, kind, fam, seqs, multiplicities=e, notes=doc.get("notes", ""))
    if kind == "padic":
        fam, e, base = _build_integer_family(doc["family"])
        p, prec = int(doc["p"]), int(doc["prec"])
        seqs = {label: _build_padic_seq(s, p, prec) for label, s in seq_entries.items()}
        return System(name, kind, fam, seqs, multiplicities=e, notes=doc.get("notes", ""))
    raise FamilyError(f"unknown system kind {doc.get('kind')!r}")


def load_config(path: str | Path, precision: int = 60) -> System:
    with open(path, encoding="utf-8") as fh:
        return build_system(json.load(fh), precision)


def fixture_names() -> list[str]:
    pkg = resources.files("zecknum.fixtures")
    return sorted(p.name[:-5] for p in pkg.iterdir() if p.name.endswith(".json"))


def load_fixture(name: str, precision: int = 60) -> System:
    pkg = resources.files("zecknum.fixtures")
    res = pkg / f"{name}.json"
    if not res.is_file():
        raise FamilyError(f"no fixture {name!r}; available: {', '.join(fixture_names())}")
    return build_system(json.loads(res.read_text(encoding="utf-8")), precision)
