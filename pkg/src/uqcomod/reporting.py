"""Structured pass/fail reports shared by all verification entry points."""

from __future__ import annotations

import json


class Check:
    __slots__ = ("claim_id", "anchor", "ok", "witness", "elapsed_ms")

    def __init__(self, claim_id, anchor, ok, witness=None, elapsed_ms=None):
        self.claim_id = claim_id
        self.anchor = anchor
        self.ok = bool(ok)
        self.witness = witness
        self.elapsed_ms = elapsed_ms

    def as_dict(self, include_timings=False):
        return {
            "claim_id": self.claim_id,
            "paper_anchor": self.anchor,
            "status": "pass" if self.ok else "fail",
            "witness": self.witness,
            "elapsed_ms": self.elapsed_ms if include_timings else None,
        }

    def __repr__(self):
        state = "pass" if self.ok else f"FAIL witness={self.witness!r}"
        return f"<Check {self.claim_id}: {state}>"


class VerificationReport:
    """An ordered list of checks plus the configuration that produced them."""

    def __init__(self, config=None):
        self.config = dict(config or {})
        self.checks: list[Check] = []

    def add(self, claim_id, anchor, ok, witness=None, elapsed_ms=None):
        self.checks.append(Check(claim_id, anchor, ok, witness, elapsed_ms))
        return ok

    def extend(self, other: "VerificationReport"):
        self.checks.extend(other.checks)
        return self

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def summary(self) -> dict:
        return {
            "total": len(self.checks),
            "passed": sum(1 for c in self.checks if c.ok),
            "failed": sum(1 for c in self.checks if not c.ok),
        }

    def as_dict(self, include_timings=False):
        return {
            "config": self.config,
            "claims": [c.as_dict(include_timings) for c in self.checks],
            "summary": self.summary(),
        }

    def to_json(self, include_timings=False) -> str:
        return json.dumps(self.as_dict(include_timings), sort_keys=True, indent=2)

    def raise_on_failure(self, context=""):
        bad = self.failures()
        if bad:
            first = bad[0]
            raise VerificationError(
                f"{context or 'verification'} failed: {first.claim_id} "
                f"witness={first.witness!r} ({len(bad)} failing checks)"
            )

    def __repr__(self):
        s = self.summary()
        return f"<VerificationReport {s['passed']}/{s['total']} passed>"


class VerificationError(RuntimeError):
    pass
