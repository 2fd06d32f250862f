"""Exhaustive axiom checkers that return replayable certificates."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable

from . import kernels
from .core_sign import SignVector, compose, separation_mask
from .systems import (
    SignSystem,
    asym,
    dagger,
    elim_I,
    elim_I_e,
    elim_Iprime_e,
    parallel_vectors,
    q_vectors,
)


class AxiomId(str, enum.Enum):
    O1 = "O1"
    O2 = "O2"
    O3 = "O3"
    O4 = "O4"
    O4P = "O4'"
    SE = "SE"
    A1 = "A1"
    A1P = "A1'"
    A2 = "A2"
    A2P = "A2'"
    A3 = "A3"
    A3P = "A3'"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, text: str) -> AxiomId:
        text = text.strip().upper()
        try:
            return cls(text)
        except ValueError:
            return cls[text]


COVECTOR_AXIOMS = (AxiomId.O1, AxiomId.O2, AxiomId.O3, AxiomId.O4, AxiomId.O4P, AxiomId.SE)
AFFINE_AXIOMS = (AxiomId.A1, AxiomId.A1P, AxiomId.A2, AxiomId.A2P, AxiomId.A3, AxiomId.A3P)
OM_AXIOMS = (AxiomId.O1, AxiomId.O2, AxiomId.O3, AxiomId.O4)
AOM_AXIOMS = (AxiomId.A1, AxiomId.A2, AxiomId.A3)
COM_AXIOMS = (AxiomId.A1P, AxiomId.A2P)


class InconsistencyError(RuntimeError):
    """Two routes that must agree produced different answers."""


@dataclass(frozen=True)
class Violation:
    """A failed axiom with the witnesses that reproduce the failure.

    ``witnesses`` holds up to two sign vectors; ``element`` is the coordinate
    ``e`` for elimination axioms.
    """

    axiom: AxiomId
    witnesses: tuple[SignVector, ...]
    element: str | None = None
    note: str = ""

    def to_dict(self) -> dict:
        d = {"axiom": str(self.axiom), "witnesses": [str(v) for v in self.witnesses], "note": self.note}
        if self.element is not None:
            d["element"] = self.element
        return d

    def replay(self, system: SignSystem) -> bool:
        """True when the witnesses still violate the axiom on ``system``."""
        return _replay(self, system)


@dataclass
class AxiomReport:
    verdicts: dict[AxiomId, bool] = field(default_factory=dict)
    violations: dict[AxiomId, Violation] = field(default_factory=dict)
    counts: dict[AxiomId, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.verdicts.values())

    def failed(self) -> list[AxiomId]:
        return [a for a, ok in self.verdicts.items() if not ok]

    def merge(self, other: AxiomReport) -> AxiomReport:
        out = AxiomReport(dict(self.verdicts), dict(self.violations), dict(self.counts))
        out.verdicts.update(other.verdicts)
        out.violations.update(other.violations)
        out.counts.update(other.counts)
        return out

    def to_dict(self) -> dict:
        return {
            str(a): {
                "verdict": "pass" if ok else "fail",
                "checked": self.counts.get(a, 0),
                **({"violation": self.violations[a].to_dict()} if a in self.violations else {}),
            }
            for a, ok in self.verdicts.items()
        }

    def render_text(self) -> str:
        lines = []
        for a, ok in self.verdicts.items():
            line = f"{str(a):<4} {'pass' if ok else 'FAIL'}  ({self.counts.get(a, 0)} checked)"
            if a in self.violations:
                v = self.violations[a]
                wit = ", ".join(str(w) for w in v.witnesses)
                extra = f" e={v.element}" if v.element is not None else ""
                line += f"\n     witness: [{wit}]{extra}  {v.note}"
            lines.append(line)
        return "\n".join(lines)


# --- individual checks --------------------------------------------------------


def _zero_check(s: SignSystem, axiom: AxiomId):
    zero = SignVector.zero(s.ground)
    if zero in s:
        return None, 1
    return Violation(axiom, (zero,), note="zero vector is not a member"), 1


def _symmetry_check(s: SignSystem, axiom: AxiomId):
    for v in s:
        if -v not in s:
            return Violation(axiom, (v,), note="opposite is not a member"), len(s)
    return None, len(s)


def _composition_check(left: SignSystem, right: SignSystem, target: SignSystem, axiom: AxiomId, negate: bool, what: str):
    hit = kernels.first_composition_failure(
        left.plus, left.minus, right.plus, right.minus, target.plus, target.minus, negate
    )
    n = len(left) * len(right)
    if hit is None:
        return None, n
    x = left.members[hit[0]]
    y = right.members[hit[1]]
    if negate:
        y = -y
    return Violation(axiom, (x, y), note=f"{what} is not a member"), n


def _closure_pm_check(s: SignSystem, axiom: AxiomId):
    a = kernels.first_composition_failure(s.plus, s.minus, s.plus, s.minus, s.plus, s.minus, False)
    b = kernels.first_composition_failure(s.plus, s.minus, s.plus, s.minus, s.plus, s.minus, True)
    n = 2 * len(s) ** 2
    if a is None and b is None:
        return None, n
    if b is None or (a is not None and a <= b):
        x, y = s.members[a[0]], s.members[a[1]]
    else:
        x, y = s.members[b[0]], -s.members[b[1]]
    return Violation(axiom, (x, y), note="X o Y is not a member"), n


def _elimination_tuples(s: SignSystem, equal_support: bool, per_element: bool) -> int:
    n = 0
    for x in s:
        for y in s:
            if equal_support and (x.support_mask != y.support_mask or x == y):
                continue
            sep = separation_mask(x, y)
            if sep:
                n += sep.bit_count() if per_element else 1
    return n


def _elimination_check(s: SignSystem, axiom: AxiomId, equal_support: bool, per_element: bool):
    hit = kernels.first_elimination_failure(s.plus, s.minus, equal_support, per_element)
    n = _elimination_tuples(s, equal_support, per_element)
    if hit is None:
        return None, n
    i, j, e = hit
    x, y = s.members[i], s.members[j]
    if e < 0:
        return Violation(axiom, (x, y), note="elimination set I(X,Y) misses the system"), n
    label = s.ground.labels[e]
    kind = "I_e" if equal_support else "I'_e"
    return Violation(axiom, (x, y), label, note=f"{kind}(X,Y) misses the system"), n


def _run(s: SignSystem, axiom: AxiomId, derived: dict):
    A = AxiomId
    if axiom is A.O1:
        return _zero_check(s, axiom)
    if axiom is A.O2:
        return _symmetry_check(s, axiom)
    if axiom is A.O3:
        return _composition_check(s, s, s, axiom, False, "X o Y")
    if axiom is A.A1:
        return _closure_pm_check(s, axiom)
    if axiom is A.A1P:
        return _composition_check(s, s, s, axiom, True, "X o (-Y)")
    if axiom in (A.O4, A.A2):
        return _elimination_check(s, axiom, True, True)
    if axiom is A.O4P:
        return _elimination_check(s, axiom, True, False)
    if axiom in (A.SE, A.A2P):
        return _elimination_check(s, axiom, False, True)
    if axiom is A.A3:
        if "P" not in derived:
            derived["P"] = parallel_vectors(s)
        return _composition_check(derived["P"], s, s, axiom, False, "P o Z")
    if axiom is A.A3P:
        if "Q" not in derived:
            derived["Q"] = q_vectors(s)
        return _composition_check(derived["Q"], s, s, axiom, False, "Q o Z")
    raise ValueError(f"unknown axiom {axiom!r}")


def _check(s: SignSystem, axioms: Iterable[AxiomId | str], allowed: tuple[AxiomId, ...]) -> AxiomReport:
    report = AxiomReport()
    derived: dict = {}
    for ax in axioms:
        ax = AxiomId(ax) if not isinstance(ax, AxiomId) else ax
        if ax not in allowed:
            raise ValueError(f"axiom {ax} is not applicable here")
        violation, count = _run(s, ax, derived)
        report.verdicts[ax] = violation is None
        report.counts[ax] = count
        if violation is not None:
            report.violations[ax] = violation
    return report


def check_covector(s: SignSystem, axioms: Iterable[AxiomId | str] = COVECTOR_AXIOMS) -> AxiomReport:
    return _check(s, axioms, COVECTOR_AXIOMS)


def check_affine(w: SignSystem, axioms: Iterable[AxiomId | str] = AFFINE_AXIOMS) -> AxiomReport:
    return _check(w, axioms, AFFINE_AXIOMS)


def is_om(s: SignSystem) -> tuple[bool, AxiomReport]:
    report = check_covector(s, OM_AXIOMS)
    return report.passed, report


def is_com(w: SignSystem) -> tuple[bool, AxiomReport]:
    report = check_affine(w, COM_AXIOMS)
    return report.passed, report


@dataclass
class AomEvidence:
    strategy: str
    axioms: AxiomReport | None = None
    dagger: AxiomReport | None = None
    dagger_system: SignSystem | None = None

    def to_dict(self) -> dict:
        d: dict = {"strategy": self.strategy}
        if self.axioms is not None:
            d["axioms"] = self.axioms.to_dict()
        if self.dagger is not None:
            d["dagger"] = self.dagger.to_dict()
        return d


def fresh_label(w: SignSystem, base: str = "g") -> str:
    label = base
    k = 0
    while label in w.ground:
        k += 1
        label = f"{base}{k}"
    return label


def is_aom(w: SignSystem, strategy: str = "axioms") -> tuple[bool, AomEvidence]:
    """Affine oriented matroid test via the axioms, via the lifted system, or both.

    With ``strategy="both"`` a disagreement raises :class:`InconsistencyError`.
    """
    if strategy not in ("axioms", "dagger", "both"):
        raise ValueError(f"unknown strategy {strategy!r}")
    ev = AomEvidence(strategy)
    verdicts = []
    if strategy in ("axioms", "both"):
        ev.axioms = check_affine(w, AOM_AXIOMS)
        verdicts.append(ev.axioms.passed)
    if strategy in ("dagger", "both"):
        lifted = dagger(w, fresh_label(w))
        ev.dagger_system = lifted
        ev.dagger = check_covector(lifted, OM_AXIOMS)
        verdicts.append(ev.dagger.passed)
    if len(set(verdicts)) > 1:
        raise InconsistencyError(
            f"axiom route says {verdicts[0]}, lifted route says {verdicts[1]} for {w!r}"
        )
    return verdicts[0], ev


# --- certificate replay -------------------------------------------------------
# These predicates use explicit set enumeration, not the kernels.


def is_parallel_vector(p: SignVector, w: SignSystem) -> bool:
    """Brute-force membership test for ``P(W)`` straight from the definition."""
    return find_parallel_decomposition(p, w) is not None


def find_parallel_decomposition(p: SignVector, w: SignSystem):
    """Lexicographically first ``(X, Y)`` in asym(W) witnessing ``p = X + (-Y)``."""
    a = asym(w)
    members = set(w)
    for x in a:
        for y in a:
            if x.support_mask != y.support_mask or x + (-y) != p:
                continue
            if x == -y:
                continue
            if elim_I(x, -y).intersection(members) or elim_I(-x, y).intersection(members):
                continue
            return x, y
    return None


def _is_q_vector(q: SignVector, w: SignSystem) -> bool:
    members = set(w)
    for x in w:
        for y in w:
            if x + (-y) != q:
                continue
            if _iprime(x, -y).intersection(members) or _iprime(-x, y).intersection(members):
                continue
            return True
    return False


def _iprime(x: SignVector, y: SignVector) -> SignSystem:
    s = separation_mask(x, y)
    out = SignSystem(x.ground)
    for lab in x.ground.labels_of(s):
        out = out | elim_Iprime_e(x, y, lab)
    return out


def _replay(v: Violation, s: SignSystem) -> bool:
    A = AxiomId
    ax = v.axiom
    members = set(s)
    if ax is A.O1:
        return SignVector.zero(s.ground) not in members
    if ax is A.O2:
        (x,) = v.witnesses
        return x in members and -x not in members
    if ax in (A.O3, A.A1, A.A1P):
        x, y = v.witnesses
        if ax is A.A1P:
            ok_y = -y in members
        elif ax is A.A1:
            ok_y = y in members or -y in members
        else:
            ok_y = y in members
        return x in members and ok_y and compose(x, y) not in members
    if ax in (A.O4, A.A2):
        x, y = v.witnesses
        return (
            x in members
            and y in members
            and not elim_I_e(x, y, v.element).intersection(members)
        )
    if ax is A.O4P:
        x, y = v.witnesses
        return x in members and y in members and not elim_I(x, y).intersection(members)
    if ax in (A.SE, A.A2P):
        x, y = v.witnesses
        return (
            x in members
            and y in members
            and not elim_Iprime_e(x, y, v.element).intersection(members)
        )
    if ax is A.A3:
        p, z = v.witnesses
        return z in members and compose(p, z) not in members and is_parallel_vector(p, s)
    if ax is A.A3P:
        q, z = v.witnesses
        return z in members and compose(q, z) not in members and _is_q_vector(q, s)
    raise ValueError(f"unknown axiom {ax!r}")
