"""Known disagreements between the case lists and the block computation.

The ledger is a JSON file (bundled copy in ``cleanring/data``) whose
entries describe where the literal case lists are expected to disagree
with first principles.  An entry matches a disagreement by base kind, a
glob on the matched case label, the verdict pair, and optional
constraints on a small set of derived features (see :func:`features`).
Entries without verdicts are interpretation notes and never match.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fnmatch import fnmatchcase
from importlib import resources
from pathlib import Path

from ..abelian import AbelianGroup, is_cyclic
from ..base_rings import CYCLOTOMIC, QUADRATIC, BaseRing, coprime_split
from ..ntheory import is_prime
from .first_principles import classify_first_principles
from .report import ClassificationReport
from .theorems import classify_theorem

LEDGER_ENV = "CLEANRING_LEDGER"


def _discriminant_shape(D: int) -> str:
    a = abs(D)
    if D in (-4, 8, -8):
        return str(D)
    if a % 8 == 0:
        return "8q"
    if a % 4 == 0:
        return "4q"
    return "odd"


def features(R: BaseRing, G: AbelianGroup) -> dict:
    e = G.exponent
    out = {
        "p_mod4": R.p % 4,
        "p_mod8": R.p % 8,
        "p_mod16": R.p % 16,
        "exp": e,
        "exp_is_odd_prime": e > 2 and is_prime(e),
        "exp_is_2_power": e & (e - 1) == 0,
        "cyclic": is_cyclic(G),
    }
    if R.kind == CYCLOTOMIC:
        n1, nprime = coprime_split(e, R.m)
        out.update(m=R.m, n1_is_1=n1 == 1, nprime=nprime)
    if R.kind == QUADRATIC:
        out.update(
            d=R.d,
            discriminant=R.discriminant,
            discriminant_shape=_discriminant_shape(R.discriminant),
            legendre=R.legendre_delta,
        )
    return out


def _as_list(x):
    return x if isinstance(x, list) else [x]


@dataclass(frozen=True)
class LedgerEntry:
    id: str
    kind: str
    case: str
    note: str
    theorem: tuple[str, ...] = ()
    first_principles: tuple[str, ...] = ()
    where: dict = field(default_factory=dict)

    @classmethod
    def from_dict(cls, data: dict) -> LedgerEntry:
        return cls(
            id=data["id"],
            kind=data["kind"],
            case=data["case"],
            note=data.get("note", ""),
            theorem=tuple(_as_list(data.get("theorem", []))),
            first_principles=tuple(_as_list(data.get("first_principles", []))),
            where=dict(data.get("where", {})),
        )

    @property
    def is_expected_disagreement(self) -> bool:
        return bool(self.theorem and self.first_principles)

    def matches(self, R: BaseRing, theorem: ClassificationReport, first: ClassificationReport, feats: dict) -> bool:
        if not self.is_expected_disagreement or R.kind != self.kind:
            return False
        if not fnmatchcase(theorem.matched_case or "", self.case):
            return False
        if theorem.verdict.label not in self.theorem or first.verdict.label not in self.first_principles:
            return False
        for key, allowed in self.where.items():
            if key not in feats or feats[key] not in _as_list(allowed):
                return False
        return True


class DiscrepancyLedger:
    def __init__(self, entries: list[LedgerEntry], version: int = 1, source: str = "<memory>"):
        self.entries = list(entries)
        self.version = version
        self.source = source

    @classmethod
    def from_dict(cls, data: dict, source: str = "<memory>") -> DiscrepancyLedger:
        return cls([LedgerEntry.from_dict(e) for e in data.get("entries", [])], data.get("version", 1), source)

    @classmethod
    def load(cls, path: str | os.PathLike | None = None) -> DiscrepancyLedger:
        """Explicit path, else $CLEANRING_LEDGER, else the bundled copy."""
        path = path or os.environ.get(LEDGER_ENV)
        if path:
            text = Path(path).read_text()
            source = str(path)
        else:
            text = resources.files("cleanring.data").joinpath("discrepancies.json").read_text()
            source = "bundled"
        return cls.from_dict(json.loads(text), source)

    def match(self, R, theorem, first, feats=None) -> LedgerEntry | None:
        feats = feats if feats is not None else features(R, theorem.group)
        for entry in self.entries:
            if entry.matches(R, theorem, first, feats):
                return entry
        return None


AGREE = "agree"
LEDGERED = "ledgered"
UNEXPECTED = "unexpected"


@dataclass
class Agreement:
    base: BaseRing
    group: AbelianGroup
    theorem: ClassificationReport
    first_principles: ClassificationReport
    status: str
    ledger_id: str | None = None

    @property
    def agree(self) -> bool:
        return self.status == AGREE

    @property
    def expected(self) -> bool:
        return self.status != UNEXPECTED

    def to_dict(self) -> dict:
        return {
            "base": self.base.to_dict(),
            "group": list(self.group.invariant_factors),
            "status": self.status,
            "theorem_verdict": self.theorem.verdict.label,
            "first_principles_verdict": self.first_principles.verdict.label,
            "matched_case": self.theorem.matched_case,
            "ledger_id": self.ledger_id,
        }


def cross_validate(R: BaseRing, G: AbelianGroup, ledger: DiscrepancyLedger | None = None) -> Agreement:
    theorem = classify_theorem(R, G)
    first = classify_first_principles(R, G)
    if theorem.verdict == first.verdict:
        return Agreement(R, G, theorem, first, AGREE)
    entry = ledger.match(R, theorem, first) if ledger else None
    if entry:
        return Agreement(R, G, theorem, first, LEDGERED, entry.id)
    return Agreement(R, G, theorem, first, UNEXPECTED)
