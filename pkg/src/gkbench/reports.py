"""Verification report records and their two output formats.

A record is one sub-check: claim id, inputs, outputs, verdict, timing.
Machine format is JSON Lines with exactly the keys claim_id, inputs,
outputs, verdict, millis (one object per line; an empty stream renders as
an empty document).  Human format is an aligned table.  The record schema
is versioned by REPORT_SCHEMA.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass

REPORT_SCHEMA = 1

PASS = "pass"
FAIL = "fail"


@dataclass(frozen=True)
class Record:
    claim_id: str
    inputs: dict
    outputs: dict
    verdict: str
    millis: int

    @property
    def passed(self) -> bool:
        return self.verdict == PASS


def timed_record(claim_id: str, inputs: dict, outputs: dict, ok: bool, started: float) -> Record:
    """Record with millis measured from a time.perf_counter() start."""
    millis = int((time.perf_counter() - started) * 1000)
    return Record(claim_id, inputs, outputs, PASS if ok else FAIL, millis)


def all_passed(records) -> bool:
    return all(r.passed for r in records)


def emit(records, fmt: str) -> str:
    if fmt == "machine":
        return emit_machine(records)
    if fmt == "human":
        return emit_human(records)
    raise ValueError(f"unknown format {fmt!r}; pick 'human' or 'machine'")


def emit_machine(records) -> str:
    lines = []
    for rec in records:
        lines.append(
            json.dumps(
                {
                    "claim_id": rec.claim_id,
                    "inputs": rec.inputs,
                    "outputs": rec.outputs,
                    "verdict": rec.verdict,
                    "millis": rec.millis,
                },
                default=str,
            )
        )
    return "\n".join(lines) + ("\n" if lines else "")


def _compact(mapping: dict) -> str:
    return " ".join(f"{k}={_short(v)}" for k, v in mapping.items())


def _short(value) -> str:
    text = str(value)
    return text if len(text) <= 48 else text[:45] + "..."


def emit_human(records) -> str:
    records = list(records)
    if not records:
        return "no records\n"
    rows = [
        (r.claim_id, r.verdict.upper(), str(r.millis), _compact(r.inputs), _compact(r.outputs))
        for r in records
    ]
    headers = ("claim", "verdict", "ms", "inputs", "outputs")
    widths = [
        max(len(headers[c]), max(len(row[c]) for row in rows)) for c in range(5)
    ]
    lines = []
    lines.append("  ".join(h.ljust(widths[c]) for c, h in enumerate(headers)))
    lines.append("  ".join("-" * widths[c] for c in range(5)))
    for row in rows:
        lines.append("  ".join(cell.ljust(widths[c]) for c, cell in enumerate(row)))
    failed = sum(1 for r in records if not r.passed)
    lines.append(f"{len(records)} records, {failed} failed")
    return "\n".join(lines) + "\n"
