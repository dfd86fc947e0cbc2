"""Structured pass/fail reports for axiom checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exactlin import LinMap, TensorIndex


class StructureError(ValueError):
    """Input data is malformed (wrong dimensions, non-invertible structure map, ...).

    Distinct from an axiom failing: a structural error means the question
    could not even be asked.
    """


@dataclass(frozen=True)
class Condition:
    name: str
    passed: bool
    witness: tuple[int, ...] | None = None
    witness_names: tuple[str, ...] | None = None
    lhs: tuple[Fraction, ...] | None = None
    rhs: tuple[Fraction, ...] | None = None

    def to_dict(self) -> dict:
        out = {"name": self.name, "passed": self.passed}
        if not self.passed:
            out["witness"] = list(self.witness)
            out["witness_names"] = list(self.witness_names)
            out["lhs"] = [str(v) for v in self.lhs]
            out["rhs"] = [str(v) for v in self.rhs]
        return out


@dataclass
class CheckReport:
    subject: str
    conditions: list[Condition] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.conditions)

    def __bool__(self) -> bool:
        return self.ok

    @property
    def failures(self) -> list[Condition]:
        return [c for c in self.conditions if not c.passed]

    def names(self) -> list[str]:
        return [c.name for c in self.conditions]

    def __getitem__(self, name: str) -> Condition:
        for c in self.conditions:
            if c.name == name:
                return c
        raise KeyError(name)

    def failed(self, prefix: str) -> bool:
        """True if any condition whose name starts with ``prefix`` failed."""
        return any(c.name.startswith(prefix) for c in self.failures)

    def passed(self, prefix: str) -> bool:
        hits = [c for c in self.conditions if c.name.startswith(prefix)]
        if not hits:
            raise KeyError(prefix)
        return all(c.passed for c in hits)

    def extend(self, other: "CheckReport") -> "CheckReport":
        self.conditions.extend(other.conditions)
        return self

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "conditions": [c.to_dict() for c in self.conditions],
        }

    def format(self) -> str:
        width = max((len(c.name) for c in self.conditions), default=4)
        lines = ["%s: %s" % (self.subject, "PASS" if self.ok else "FAIL")]
        for c in self.conditions:
            line = "  %-*s  %s" % (width, c.name, "pass" if c.passed else "FAIL")
            if not c.passed:
                line += "  at (%s)  lhs=[%s]  rhs=[%s]" % (
                    ", ".join(c.witness_names),
                    ", ".join(str(v) for v in c.lhs),
                    ", ".join(str(v) for v in c.rhs),
                )
            lines.append(line)
        return "\n".join(lines)


def compare(
    name: str,
    lhs: LinMap,
    rhs: LinMap,
    factors: Sequence[Sequence[str]],
) -> Condition:
    """Compare two maps column by column.

    ``factors`` lists the basis names of each tensor factor of the common
    domain; the witness is the lexicographically smallest basis tuple on
    which the maps differ.
    """
    if lhs.shape != rhs.shape:
        raise StructureError("%s: sides have shapes %s and %s" % (name, lhs.shape, rhs.shape))
    index = TensorIndex([len(f) for f in factors])
    if index.size != lhs.dom_dim:
        raise StructureError("%s: domain factors %s do not match dom_dim %d" % (name, index.factor_dims, lhs.dom_dim))
    if lhs == rhs:
        return Condition(name, True)
    diff = (lhs - rhs)
    col = min(c for _, c, _ in diff.nonzero())
    wit = index.unflatten(col)
    return Condition(
        name,
        False,
        witness=wit,
        witness_names=tuple(f[i] for f, i in zip(factors, wit)),
        lhs=tuple(lhs.col(col)),
        rhs=tuple(rhs.col(col)),
    )
