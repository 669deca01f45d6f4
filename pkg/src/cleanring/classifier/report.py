"""Verdicts, per-divisor witness rows and classification reports."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import IntEnum

from ..abelian import AbelianGroup
from ..base_rings import BaseRing


class CleannessClass(IntEnum):
    """Ordered so that a larger value is a stronger property."""

    NOT_FEEBLY_CLEAN = 0
    FEEBLY_CLEAN_NOT_WEAKLY_CLEAN = 1
    WEAKLY_CLEAN_NOT_CLEAN = 2
    CLEAN = 3

    @property
    def label(self) -> str:
        return _LABELS[self]

    @classmethod
    def from_label(cls, text: str) -> CleannessClass:
        for k, v in _LABELS.items():
            if v == text:
                return k
        raise ValueError(f"unknown verdict {text!r}")

    @property
    def is_clean(self) -> bool:
        return self is CleannessClass.CLEAN

    @property
    def is_weakly_clean(self) -> bool:
        return self >= CleannessClass.WEAKLY_CLEAN_NOT_CLEAN

    @property
    def is_feebly_clean(self) -> bool:
        return self >= CleannessClass.FEEBLY_CLEAN_NOT_WEAKLY_CLEAN

    def __str__(self) -> str:
        return self.label


_LABELS = {
    CleannessClass.CLEAN: "Clean",
    CleannessClass.WEAKLY_CLEAN_NOT_CLEAN: "WeaklyCleanNotClean",
    CleannessClass.FEEBLY_CLEAN_NOT_WEAKLY_CLEAN: "FeeblyCleanNotWeaklyClean",
    CleannessClass.NOT_FEEBLY_CLEAN: "NotFeeblyClean",
}

FIRST_PRINCIPLES = "first-principles"
THEOREM = "theorem"


@dataclass(frozen=True)
class DivisorWitness:
    """One factor block R[x]/(phi_d) of the group ring, with its multiplicity."""

    d: int
    deg_phi: int
    ord_norm: int
    max_ideals: int
    mu: int
    nu: int
    lam: int

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "deg_phi": self.deg_phi,
            "ord_norm": self.ord_norm,
            "max_ideals": self.max_ideals,
            "mu": self.mu,
            "nu": self.nu,
            "lambda": self.lam,
        }

    @classmethod
    def from_dict(cls, data: dict) -> DivisorWitness:
        return cls(
            data["d"], data["deg_phi"], data["ord_norm"], data["max_ideals"],
            data["mu"], data["nu"], data["lambda"],
        )


@dataclass
class ClassificationReport:
    base: BaseRing
    group: AbelianGroup
    verdict: CleannessClass
    method: str
    witnesses: list[DivisorWitness]
    matched_case: str | None = None
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "base": self.base.to_dict(),
            "p": self.base.p,
            "group": list(self.group.invariant_factors),
            "method": self.method,
            "verdict": self.verdict.label,
            "matched_case": self.matched_case,
            "witnesses": [w.to_dict() for w in self.witnesses],
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> ClassificationReport:
        return cls(
            base=BaseRing.from_dict(data["base"]),
            group=AbelianGroup(tuple(data["group"])),
            verdict=CleannessClass.from_label(data["verdict"]),
            method=data["method"],
            witnesses=[DivisorWitness.from_dict(w) for w in data["witnesses"]],
            matched_case=data.get("matched_case"),
            notes=list(data.get("notes", [])),
        )
