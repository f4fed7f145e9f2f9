"""Machine-checkable inequality steps, bound certificates and verification reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence, Union

from .exact import (
    MAX_BITS,
    Precision,
    PrecisionLike,
    RealEnclosure,
    as_precision,
    certify,
    format_rational,
    parse_rational,
    refine,
)

Quantity = Union[Fraction, RealEnclosure]


def quantity_to_json(q: Quantity):
    if isinstance(q, RealEnclosure):
        return q.to_json()
    return format_rational(q)


def quantity_from_json(data) -> Quantity:
    if isinstance(data, dict):
        return RealEnclosure.from_json(data)
    return parse_rational(data)


@dataclass(frozen=True)
class Step:
    """One inequality ``lhs rel rhs`` with a named justification."""

    label: str
    lhs: Quantity
    rel: str
    rhs: Quantity
    ref: str

    @property
    def status(self) -> bool | None:
        return certify(self.lhs, self.rel, self.rhs)

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "lhs": quantity_to_json(self.lhs),
            "rel": self.rel,
            "rhs": quantity_to_json(self.rhs),
            "ref": self.ref,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Step":
        return cls(data["label"], quantity_from_json(data["lhs"]), data["rel"],
                   quantity_from_json(data["rhs"]), data.get("ref", ""))


def _input_to_json(v):
    if isinstance(v, Fraction):
        return format_rational(v)
    return v


@dataclass(frozen=True)
class BoundCertificate:
    inputs: dict
    steps: tuple[Step, ...]
    final_bound: Fraction
    precision: int = 0

    @property
    def verified(self) -> bool:
        return all(s.status is True for s in self.steps) and self._final_matches()

    def _final_matches(self) -> bool:
        return bool(self.steps) and self.steps[-1].rhs == self.final_bound

    @property
    def failing_step(self) -> Step | None:
        for s in self.steps:
            if s.status is not True:
                return s
        return None

    def step(self, label: str) -> Step:
        for s in self.steps:
            if s.label == label:
                return s
        raise KeyError(label)

    def to_json(self) -> dict:
        out = {
            "inputs": {k: _input_to_json(v) for k, v in self.inputs.items()},
            "steps": [s.to_json() for s in self.steps],
            "final": format_rational(self.final_bound),
            "verified": self.verified,
            "precision": self.precision,
        }
        failing = self.failing_step
        if failing is not None:
            out["failing_step"] = failing.label
        return out


def verify_certificate_json(data: dict) -> bool:
    """Re-check a serialized certificate from its own contents.

    Every step is recertified from the stored endpoints, the final bound must
    equal the last right-hand side, and the stored ``verified`` flag must
    agree with the recomputation.
    """
    steps = [Step.from_json(s) for s in data["steps"]]
    if not steps:
        return False
    final = parse_rational(data["final"])
    ok = all(s.status is True for s in steps) and steps[-1].rhs == final
    return ok and bool(data.get("verified")) == ok


def build_certificate(build: Callable[[Precision], tuple[dict, list[Step], Fraction]],
                      p: PrecisionLike = None, cap: int = MAX_BITS) -> BoundCertificate:
    """Build at doubling precision until no step is undecided (or the cap is reached)."""

    def make(prec: Precision) -> BoundCertificate:
        inputs, steps, final = build(prec)
        return BoundCertificate(inputs, tuple(steps), final, prec.bits)

    cert, _ = refine(make, lambda c: all(s.status is not None for s in c.steps), p, cap)
    return cert


@dataclass(frozen=True)
class ReportItem:
    label: str
    lhs: Quantity
    rel: str
    rhs: Quantity
    ref: str
    precision: int

    @property
    def status(self) -> str:
        verdict = certify(self.lhs, self.rel, self.rhs)
        return {True: "certified", False: "refuted", None: "unknown"}[verdict]

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "lhs": quantity_to_json(self.lhs),
            "rel": self.rel,
            "rhs": quantity_to_json(self.rhs),
            "ref": self.ref,
            "status": self.status,
            "precision": self.precision,
        }


def check_item(label: str, ref: str, rel: str,
               build: Callable[[Precision], tuple[Quantity, Quantity]],
               p: PrecisionLike = None, cap: int = MAX_BITS) -> ReportItem:
    """Evaluate one inequality, doubling precision while it stays undecided."""

    def make(prec: Precision) -> ReportItem:
        lhs, rhs = build(prec)
        return ReportItem(label, lhs, rel, rhs, ref, prec.bits)

    item, _ = refine(make, lambda it: it.status != "unknown", as_precision(p), cap)
    return item


@dataclass(frozen=True)
class VerificationReport:
    title: str
    items: tuple[ReportItem, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return all(it.status == "certified" for it in self.items)

    def count(self, status: str) -> int:
        return sum(1 for it in self.items if it.status == status)

    @property
    def max_precision(self) -> int:
        return max((it.precision for it in self.items), default=0)

    def to_json(self, detail: bool = True) -> dict:
        out = {
            "report": self.title,
            "passed": self.passed,
            "certified": self.count("certified"),
            "refuted": self.count("refuted"),
            "unknown": self.count("unknown"),
            "max_precision": self.max_precision,
        }
        if detail:
            out["items"] = [it.to_json() for it in self.items]
        return out

    @staticmethod
    def merge(title: str, reports: Sequence["VerificationReport"]) -> "VerificationReport":
        return VerificationReport(title, tuple(it for r in reports for it in r.items))
