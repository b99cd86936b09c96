"""
Structured verification reports.

A report is an ordered collection of check records.  Every record names the
identity it checks through a short anchor string, so a report doubles as an
audit ledger of what was verified and with which parameters.  Constants that
had to be determined from the computation itself (signs, shifts) are listed
separately as errata entries.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction

SCHEMA_VERSION = 1

PASS = "pass"
FAIL = "fail"
SKIPPED_SINGULAR = "skipped-singular"
PASS_PINNED = "pass-with-pinned-constant"
STATUSES = (PASS, FAIL, SKIPPED_SINGULAR, PASS_PINNED)


def plain(x):
    """Convert nested values to JSON-friendly builtins (Fractions become strings)."""
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else x.numerator
    if isinstance(x, dict):
        return {str(k): plain(v) for k, v in sorted(x.items(), key=lambda kv: str(kv[0]))}
    if isinstance(x, (list, tuple)):
        return [plain(v) for v in x]
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    return str(x)


@dataclass
class CheckRecord:
    check_id: str
    anchor: str
    params: dict
    status: str
    witness: dict = None

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError("unknown status %r" % self.status)

    @property
    def ok(self):
        return self.status != FAIL

    def to_dict(self):
        d = {"check": self.check_id, "anchor": self.anchor,
             "params": plain(self.params), "status": self.status}
        if self.witness is not None:
            d["witness"] = plain(self.witness)
        return d


@dataclass
class VerificationReport:
    suite: str
    records: list = field(default_factory=list)
    errata: list = field(default_factory=list)

    def add(self, check_id, anchor, params, ok, witness=None, status=None):
        if status is None:
            status = PASS if ok else FAIL
        rec = CheckRecord(check_id, anchor, dict(params), status,
                          None if status == PASS else witness)
        self.records.append(rec)
        return rec

    def add_erratum(self, name, value, note):
        entry = {"name": name, "value": plain(value), "note": note}
        if entry not in self.errata:
            self.errata.append(entry)

    def extend(self, other):
        self.records.extend(other.records)
        for e in other.errata:
            if e not in self.errata:
                self.errata.append(e)
        return self

    @property
    def passed(self):
        return all(r.ok for r in self.records)

    @property
    def failures(self):
        return [r for r in self.records if r.status == FAIL]

    @property
    def singular(self):
        return [r for r in self.records if r.status == SKIPPED_SINGULAR]

    def counts(self):
        out = {s: 0 for s in STATUSES}
        for r in self.records:
            out[r.status] += 1
        return out

    def exit_code(self):
        if not self.passed:
            return 1
        if self.singular:
            return 3
        return 0

    def _sorted_records(self):
        return sorted(self.records, key=lambda r: (r.check_id, json.dumps(plain(r.params), sort_keys=True)))

    def to_dict(self):
        return {
            "schema": SCHEMA_VERSION,
            "suite": self.suite,
            "passed": self.passed,
            "counts": self.counts(),
            "records": [r.to_dict() for r in self._sorted_records()],
            "errata": sorted(self.errata, key=lambda e: e["name"]),
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=1, sort_keys=True)

    def summary_lines(self):
        by_check = {}
        for r in self.records:
            c = by_check.setdefault(r.check_id, {s: 0 for s in STATUSES})
            c[r.status] += 1
        lines = ["suite %s: %s" % (self.suite, "PASS" if self.passed else "FAIL")]
        for check in sorted(by_check):
            c = by_check[check]
            bits = ", ".join("%d %s" % (v, k) for k, v in c.items() if v)
            lines.append("  %-40s %s" % (check, bits))
        for r in self.failures[:20]:
            lines.append("  FAIL %s %s %s" % (r.check_id, json.dumps(plain(r.params)), json.dumps(plain(r.witness))))
        for r in self.singular[:20]:
            lines.append("  SINGULAR %s %s" % (r.check_id, json.dumps(plain(r.params))))
        if self.errata:
            lines.append("errata:")
            for e in sorted(self.errata, key=lambda e: e["name"]):
                lines.append("  %s = %s  (%s)" % (e["name"], e["value"], e["note"]))
        return lines

    def to_text(self):
        return "\n".join(self.summary_lines()) + "\n"
