"""Structured step records for the reduction pipeline.

A record is one line of ``key=value`` fields, the first always being
``stage=<name>``.  Values never contain whitespace: integers and rationals are
written in decimal (``-3/2``), exponent vectors as comma-separated triples
(``19,-3/2,-1``).  :func:`terms_from_records` rebuilds the emitted rational
terms from a parsed trace, so a trace alone is enough to re-derive the count.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional

STAGES = (
    "normalize",
    "gcd-reduce",
    "split",
    "unit-transform",
    "euclid-step",
    "base-case",
    "mu-select",
    "eval-term",
    "sum",
)


@dataclass(frozen=True)
class TraceRecord:
    stage: str
    payload: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if self.stage not in STAGES:
            raise ValueError(f"unknown trace stage {self.stage!r}")
        for key, value in self.payload.items():
            if not key or any(ch.isspace() or ch == "=" for ch in key):
                raise ValueError(f"bad trace key {key!r}")
            if any(ch.isspace() for ch in value):
                raise ValueError(f"trace value for {key!r} contains whitespace: {value!r}")

    def format(self) -> str:
        fields = [f"stage={self.stage}"]
        fields.extend(f"{k}={v}" for k, v in self.payload.items())
        return " ".join(fields)

    @classmethod
    def parse(cls, line: str) -> "TraceRecord":
        fields = line.split()
        if not fields or not fields[0].startswith("stage="):
            raise ValueError(f"not a trace record: {line!r}")
        stage = fields[0][len("stage="):]
        payload = {}
        for item in fields[1:]:
            key, sep, value = item.partition("=")
            if not sep:
                raise ValueError(f"malformed field {item!r} in {line!r}")
            payload[key] = value
        return cls(stage, payload)


Tracer = Optional[Callable[[TraceRecord], None]]


def emit(trace: Tracer, stage: str, **payload) -> None:
    """Send one record to ``trace`` (a no-op when tracing is off)."""
    if trace is not None:
        trace(TraceRecord(stage, {k: render(v) for k, v in payload.items()}))


def render(value) -> str:
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else str(value)
    if isinstance(value, (tuple, list)):
        return ",".join(render(v) for v in value)
    return str(value)


class TraceLog(list):
    """A list of records that doubles as a tracer callback."""

    def __call__(self, record: TraceRecord) -> None:
        self.append(record)

    def lines(self) -> list[str]:
        return [r.format() for r in self]


def read_records(lines: Iterable[str]) -> list[TraceRecord]:
    return [TraceRecord.parse(line) for line in lines if line.strip()]


def terms_from_records(records: Iterable[TraceRecord]):
    """Rebuild the emitted ``RationalTerm`` list, in emission order."""
    from .arith import ExpVec
    from .ctcore import RationalTerm

    terms = []
    for rec in records:
        if rec.stage in ("euclid-step", "base-case") and "m1" in rec.payload:
            p = rec.payload
            terms.append(RationalTerm(
                m1=ExpVec.parse(p["m1"]), m2=ExpVec.parse(p["m2"]),
                omega=ExpVec.parse(p["omega"]), theta=ExpVec.parse(p["theta"]),
            ))
    return terms


def mu_from_records(records: Iterable[TraceRecord]) -> Optional[tuple[int, int, int]]:
    for rec in records:
        if rec.stage == "mu-select":
            return tuple(int(x) for x in rec.payload["mu"].split(","))
    return None
