"""Check records and machine-readable reports.

A Check is one verified identity: name, pass flag, and on failure a
witness locating the first differing entry in row-major order.  Reports
aggregate checks and serialize to JSON with sorted keys and fixed
separators, so identical runs produce identical bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .exactlin import Mat


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: dict | None = None

    def as_dict(self) -> dict:
        d = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


def eq_check(name: str, lhs: Mat, rhs: Mat) -> Check:
    """Entrywise equality with a first-difference witness on failure."""
    if lhs.rows != rhs.rows or lhs.cols != rhs.cols:
        return Check(name, False, {
            "kind": "shape",
            "lhs_shape": [lhs.rows, lhs.cols],
            "rhs_shape": [rhs.rows, rhs.cols],
        })
    F = lhs.field
    for i in range(lhs.rows):
        for j in range(lhs.cols):
            a = lhs[i, j]
            b = rhs[i, j]
            if a != b:
                return Check(name, False, {
                    "kind": "entry",
                    "row": i,
                    "col": j,
                    "lhs": F.show(a),
                    "rhs": F.show(b),
                })
    return Check(name, True)


def zero_check(name: str, m: Mat) -> Check:
    return eq_check(name, m, Mat.zeros(m.field, m.rows, m.cols))


@dataclass
class Report:
    """Named collection of checks plus free-form result data."""

    title: str
    checks: list = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def require(self, check: Check) -> None:
        """Record the check and raise if it failed."""
        self.add(check)
        if not check.passed:
            raise CheckFailure(self.title, check)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_dict(self) -> dict:
        return {
            "title": self.title,
            "passed": self.passed,
            "checks": [c.as_dict() for c in self.checks],
            "data": self.data,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, separators=(",", ":"))


class CheckFailure(ValueError):
    def __init__(self, title: str, check: Check):
        self.check = check
        msg = "%s: check %r failed" % (title, check.name)
        if check.witness:
            msg += " at %s" % (json.dumps(check.witness, sort_keys=True),)
        super().__init__(msg)


def mat_as_lists(m: Mat) -> list:
    """Matrix as row lists of canonical scalar strings, for JSON output."""
    return [[m.field.show(m[i, j]) for j in range(m.cols)] for i in range(m.rows)]


@dataclass(frozen=True)
class Verdict:
    """Outcome of a decision procedure.

    status is FOUND, NONE, or UNKNOWN.  A FOUND verdict carries named
    witness matrices that re-verify against the defining equations; a
    NONE verdict carries the kind of certificate that rules a witness
    out ("linear" infeasibility or "exhaustive" search); UNKNOWN carries
    only the strategy log.
    """

    status: str
    witness: dict | None = None
    certificate: str | None = None
    log: tuple = ()
    data: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in ("FOUND", "NONE", "UNKNOWN"):
            raise ValueError("bad verdict status %r" % (self.status,))
        if self.status == "NONE" and self.certificate not in ("linear", "exhaustive"):
            raise ValueError("NONE requires a certificate kind")

    @property
    def found(self) -> bool:
        return self.status == "FOUND"

    def as_dict(self) -> dict:
        d = {"status": self.status, "log": list(self.log), "data": self.data}
        if self.witness is not None:
            d["witness"] = {
                k: (mat_as_lists(v) if isinstance(v, Mat) else v)
                for k, v in sorted(self.witness.items())
            }
        if self.certificate is not None:
            d["certificate"] = self.certificate
        return d

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, separators=(",", ":"))
