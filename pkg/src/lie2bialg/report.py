"""Verification reports with re-evaluable witnesses."""

import time
from dataclasses import dataclass
from fractions import Fraction

__all__ = ["Violation", "Report", "REPORT_SCHEMA"]

REPORT_SCHEMA = "lie2-report/1"


@dataclass(frozen=True)
class Violation:
    """A named identity failing on a basis tuple, with its exact residual."""

    identity: str
    basis: tuple
    residual: object

    def sort_key(self):
        return (self.identity, tuple(str(b) for b in self.basis))


class Report:
    """Outcome of a verification: verdict, classification and witnesses.

    Every identity is registered with the callable that evaluates it, so a
    violation can be re-evaluated later and compared with its residual.
    """

    def __init__(self, target):
        self.target = target
        self.classification = None
        self.notes = []
        self.checked = []
        self._violations = []
        self._identities = {}
        self._start = time.perf_counter()
        self.elapsed = 0.0

    # -- recording ----------------------------------------------------------
    def check(self, name, fn, tuples):
        """Evaluate ``fn(*t)`` for each tuple (or bare index); nonzero results are violations."""
        self._register(name, fn)
        for t in tuples:
            t = tuple(t) if isinstance(t, (tuple, list)) else (t,)
            res = fn(*t)
            if res:
                self._violations.append(Violation(name, t, res))
        return self

    def check_value(self, name, fn):
        """A single identity without basis arguments."""
        return self.check(name, fn, [()])

    def fail(self, name, basis, residual, fn=None):
        if fn is not None:
            self._register(name, fn)
        elif name not in self.checked:
            self.checked.append(name)
        self._violations.append(Violation(name, tuple(basis), residual))

    def _register(self, name, fn):
        if name not in self._identities:
            self.checked.append(name)
        self._identities[name] = fn

    def absorb(self, other, prefix=""):
        """Merge ``other`` into this report, prefixing identity names."""
        for name in other.checked:
            full = prefix + name
            if full not in self.checked:
                self.checked.append(full)
            if name in other._identities:
                self._identities[full] = other._identities[name]
        for v in other._violations:
            self._violations.append(Violation(prefix + v.identity, v.basis, v.residual))
        self.notes.extend(other.notes)
        return self

    def finish(self):
        self.elapsed = time.perf_counter() - self._start
        return self

    # -- reading ------------------------------------------------------------
    @property
    def violations(self):
        return sorted(self._violations, key=Violation.sort_key)

    @property
    def passed(self):
        return not self._violations

    verdict = passed

    def __bool__(self):
        return self.passed

    def failing_identities(self):
        return sorted({v.identity for v in self._violations})

    def reevaluate(self, violation):
        """Recompute the residual of ``violation`` from its identity and basis."""
        fn = self._identities.get(violation.identity)
        if fn is None:
            raise KeyError(f"identity {violation.identity!r} has no evaluator")
        return fn(*violation.basis)

    def to_dict(self, basis_namer=None):
        name = basis_namer or (lambda b: b)
        return {
            "schema": REPORT_SCHEMA,
            "target": self.target,
            "verdict": "pass" if self.passed else "fail",
            "classification": self.classification,
            "checked": sorted(self.checked),
            "violations": [
                {"identity": v.identity,
                 "basis": [name(b) for b in v.basis],
                 "residual": _residual_str(v.residual)}
                for v in self.violations
            ],
            "notes": list(self.notes),
            "elapsed_seconds": round(self.elapsed, 6),
        }

    def to_text(self, limit=20):
        lines = [f"{self.target}: {'PASS' if self.passed else 'FAIL'}"]
        if self.classification:
            lines.append(f"  classification: {self.classification}")
        lines.append(f"  identities checked: {len(self.checked)}")
        for v in self.violations[:limit]:
            lines.append(f"  violated {v.identity} at {v.basis}: residual {_residual_str(v.residual)}")
        extra = len(self._violations) - limit
        if extra > 0:
            lines.append(f"  ... and {extra} more violations")
        for note in self.notes:
            lines.append(f"  note: {note}")
        return "\n".join(lines)

    def __repr__(self):
        return f"Report({self.target!r}, {'pass' if self.passed else 'fail'}, {len(self._violations)} violations)"


def _residual_str(res):
    if isinstance(res, Fraction):
        return str(res)
    if isinstance(res, bool):
        return str(res).lower()
    return repr(res)
