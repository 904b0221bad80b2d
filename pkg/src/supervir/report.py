"""Structured results of verification sweeps and probes."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

SCHEMA_VERSION = 1
MAX_WITNESSES = 10


@dataclass
class VerificationReport:
    """Outcome of one sweep.

    ``status`` is ``"pass"``, ``"fail"`` or ``"evidence"``.  A failing
    report always carries at least one witness; a passing one carries none.
    Witness entries are dicts of printed, re-parseable strings.
    """

    check_name: str
    parameters: dict = field(default_factory=dict)
    bounds: dict = field(default_factory=dict)
    status: str = "pass"
    witnesses: list = field(default_factory=list)
    elapsed: float = 0.0
    checked: int = 0
    failures: int = 0
    evidence_only: bool = False
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status in ("pass", "evidence")

    def record(self, ok: bool, witness=None):
        """Count one check; keep the witness of a failure (first few only)."""
        self.checked += 1
        if not ok:
            self.failures += 1
            self.status = "fail"
            if witness is not None and len(self.witnesses) < MAX_WITNESSES:
                self.witnesses.append(witness)

    def fail(self, witness):
        self.record(False, witness)

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "check": self.check_name,
            "parameters": self.parameters,
            "bounds": self.bounds,
            "status": self.status,
            "checked": self.checked,
            "failures": self.failures,
            "evidence_only": self.evidence_only,
            "witnesses": self.witnesses,
            "details": self.details,
            "elapsed": round(self.elapsed, 3),
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    def summary(self) -> str:
        bounds = ", ".join(f"{k}={v}" for k, v in self.bounds.items())
        line = f"{self.check_name} [{bounds}]: {self.status.upper()} ({self.checked} checks"
        if self.failures:
            line += f", {self.failures} failures"
        return line + ")"


class timed:
    """Context manager that stores wall time into ``report.elapsed``."""

    def __init__(self, report: VerificationReport):
        self.report = report

    def __enter__(self):
        self._t0 = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.elapsed = time.perf_counter() - self._t0
        return False
