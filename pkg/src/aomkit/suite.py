"""Theorem verification over a generated corpus, and the Case 3.2 counterexample demo."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from . import fixtures
from .axioms import (
    AOM_AXIOMS,
    AxiomId,
    InconsistencyError,
    check_affine,
    check_covector,
    find_parallel_decomposition,
    is_aom,
    is_om,
)
from .core_sign import SignVector, compose
from .geometry import (
    Arrangement,
    embed_affine,
    enumerate_covectors,
    feasible_point,
    random_arrangement,
    sign_at,
)
from .systems import (
    SignSystem,
    asym,
    dagger,
    elim_B,
    elim_I,
    mandel_closure,
    parallel_vectors,
    q_vectors,
    restrict_positive,
    stabilizer,
    sym,
    topes,
    zero_section,
)


@dataclass
class Instance:
    id: str
    system: SignSystem
    source: str
    arrangement: Arrangement | None = None
    parent: SignSystem | None = None  # oriented matroid this system was restricted from
    parent_label: str | None = None
    expect_aom: bool | None = None
    expect_om: bool | None = None
    _cache: dict = field(default_factory=dict, repr=False)

    def cached(self, key: str, fn: Callable):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def aom(self) -> bool:
        # the axiom route; agreement with the lifted route is its own check
        return self.cached("aom", lambda: is_aom(self.system, "axioms")[0])

    @property
    def om(self) -> bool:
        return self.cached("om", lambda: is_om(self.system)[0])

    @property
    def P(self):
        return self.cached("P", lambda: parallel_vectors(self.system))

    @property
    def N(self):
        return self.cached("N", lambda: stabilizer(self.system))

    @property
    def Q(self):
        return self.cached("Q", lambda: q_vectors(self.system))

    @property
    def cov(self):
        return self.cached("cov", lambda: check_covector(self.system))

    @property
    def aff(self):
        return self.cached("aff", lambda: check_affine(self.system))


@dataclass
class CorpusSpec:
    seeds: Iterable[int] = range(1, 21)
    max_n: int = 5
    max_dim: int = 3
    fixtures: bool = True
    extra: list[tuple[str, SignSystem]] = field(default_factory=list)
    inject_broken: bool = False


# --- corpus -------------------------------------------------------------------


def _random_partition(rng: random.Random, labels: list[str]) -> list[list[str]]:
    classes: list[list[str]] = []
    for lab in labels:
        if classes and rng.random() < 0.35:
            rng.choice(classes).append(lab)
        else:
            classes.append([lab])
    return [c for c in classes if c]


def _drop_one(rng: random.Random, w: SignSystem) -> SignSystem:
    victim = rng.choice(w.members)
    return w.difference([victim])


def build_corpus(spec: CorpusSpec) -> list[Instance]:
    out: list[Instance] = []
    for seed in spec.seeds:
        rng = random.Random(seed)
        n = rng.randint(2, max(2, spec.max_n))
        d = rng.randint(2, max(2, spec.max_dim)) if spec.max_dim >= 2 else 1
        central = random_arrangement(seed, n, d, kind="central")
        o = enumerate_covectors(central)
        out.append(Instance(f"s{seed}/central", o, "central", central, expect_om=True))

        g = rng.choice(list(central.labels))
        w = restrict_positive(o, g)
        out.append(Instance(f"s{seed}/restrict-{g}", w, "restriction", parent=o, parent_label=g, expect_aom=True))

        n = rng.randint(1, spec.max_n)
        d = rng.randint(1, spec.max_dim)
        labels = [chr(ord("a") + i) for i in range(n)]
        classes = _random_partition(rng, labels) if d >= 2 else [[lab] for lab in labels]
        affine = random_arrangement(seed, n, d, classes, kind="affine")
        wa = enumerate_covectors(affine)
        out.append(Instance(f"s{seed}/affine", wa, "affine", affine, expect_aom=True))

        if len(wa) > 1:
            out.append(Instance(f"s{seed}/affine-minus-one", _drop_one(rng, wa), "mutation"))
        if len(o) > 1:
            out.append(Instance(f"s{seed}/central-minus-one", _drop_one(rng, o), "mutation"))

    if spec.fixtures:
        f1 = fixtures.five_lines()
        out.append(Instance("five_lines", enumerate_covectors(f1), "fixture", f1, expect_aom=True))
        f3 = fixtures.coincident()
        out.append(Instance("coincident", enumerate_covectors(f3), "fixture", f3, expect_om=True))
        f5 = fixtures.three_lines()
        out.append(Instance("three_lines", enumerate_covectors(f5), "fixture", f5, expect_aom=True))
        three = fixtures.three_lines_system()
        out.append(Instance("three-lines-listing", three, "fixture", expect_aom=True))
        out.append(Instance("three-lines-minus-0+0", three.difference(
            [SignVector.from_string(three.ground, "0+0")]), "fixture", expect_aom=False))
        x, y = fixtures.elim_pair()
        z = SignVector.zero(x.ground)
        out.append(Instance("elim-pair", SignSystem(x.ground, [z, x, -x, y, -y]), "fixture"))
        out.append(Instance("plus-minus", SignSystem.from_strings("1", ["+", "-"]), "fixture", expect_om=False))
        out.append(Instance("diagonal", SignSystem.from_strings("12", ["++", "--"]), "fixture"))
        out.append(Instance("zero-only", SignSystem.from_strings("12", ["00"]), "fixture", expect_om=True))
        out.append(Instance("empty", SignSystem.from_strings("a", []), "fixture", expect_aom=True))
    if spec.inject_broken:
        three = fixtures.three_lines_system()
        out.append(Instance("injected-broken", three.difference(
            [SignVector.from_string(three.ground, "0+0")]), "injected"))
    for name, system in spec.extra:
        out.append(Instance(name, system, "extra"))
    return out


# --- checks -------------------------------------------------------------------
# Each check returns None when it does not apply, else (ok, detail).


def _fmt(vs) -> str:
    return "[" + ", ".join(str(v) for v in vs) + "]"


def chk_realizable(inst: Instance):
    if inst.expect_om is None and inst.expect_aom is None:
        return None
    if inst.expect_om is not None and inst.om != inst.expect_om:
        return False, f"expected om={inst.expect_om}: {inst.cov.render_text()}"
    if inst.expect_aom is not None and inst.aom != inst.expect_aom:
        return False, f"expected aom={inst.expect_aom}: {inst.aff.render_text()}"
    return True, ""


def chk_tope_supports(inst: Instance):
    if not inst.om:
        return None
    supports = {t.support_mask for t in topes(inst.system)}
    return len(supports) == 1, f"tope supports {sorted(supports)}"


def chk_mandel(inst: Instance):
    if not inst.om:
        return None
    rebuilt = mandel_closure(topes(inst.system))
    diff = sorted(set(rebuilt.strings()) ^ set(inst.system.strings()))
    return rebuilt == inst.system, f"symmetric difference {diff}"


def chk_o4_o4prime(inst: Instance):
    cov = inst.cov
    if not cov.verdicts[AxiomId.O3]:
        return None
    a, b = cov.verdicts[AxiomId.O4], cov.verdicts[AxiomId.O4P]
    return a == b, f"O4={a} O4'={b}"


def chk_se_o4(inst: Instance):
    cov = inst.cov
    if not cov.verdicts[AxiomId.O3]:
        return None
    a, b = cov.verdicts[AxiomId.O4], cov.verdicts[AxiomId.SE]
    return a == b, f"O4={a} SE={b}"


def chk_zero_section(inst: Instance):
    if inst.parent is None:
        return None
    expected = zero_section(inst.parent, inst.parent_label)
    return inst.N == expected, f"N(W)={inst.N.strings()} vs zero section {expected.strings()}"


def chk_dagger_round_trip(inst: Instance):
    if inst.parent is None:
        return None
    o, g = inst.parent, inst.parent_label
    bit = 1 << o.ground.index(g)
    if not any(v.support_mask & bit for v in o):
        return None
    lifted = dagger(restrict_positive(o, g), g)
    # dagger appends g last; compare after reordering the parent
    reordered = _move_last(o, g)
    return lifted == reordered, "lift of the restriction differs from the oriented matroid"


def _move_last(o: SignSystem, g: str) -> SignSystem:
    ground = o.ground.without(g).extend(g)
    return SignSystem(
        ground,
        (SignVector.from_sets(ground,
                              [lab for lab in o.ground if v[lab] == "+"],
                              [lab for lab in o.ground if v[lab] == "-"]) for v in o),
    )


def chk_blocked_equal_support(inst: Instance):
    if not inst.aom:
        return None
    w = inst.system
    members = set(w)
    for x in w:
        for y in w:
            if x.support_mask != y.support_mask or x == -y:
                continue
            if elim_I(x, -y).intersection(members):
                continue
            hit = elim_B(x, -y).intersection(members)
            if hit:
                return False, f"X={x} Y={y} B(X,-Y) meets W at {_fmt(sorted(hit, key=str))}"
    return True, ""


def chk_stabilizer_decomposition(inst: Instance):
    # W empty comes from a loop g, where N(W) is everything
    if not inst.aom or not len(inst.system):
        return None
    w, p, n = inst.system, inst.P, inst.N
    s = sym(w)
    if p & s:
        return False, f"sym and P overlap at {(p & s).strings()}"
    if p & w:
        return False, f"P meets W at {(p & w).strings()}"
    if not p.is_symmetric():
        return False, "P is not symmetric"
    return n == s | p, f"N={n.strings()} sym|P={(s | p).strings()}"


def chk_parallel_conformity(inst: Instance):
    if not inst.aom:
        return None
    w = inst.system
    a = asym(w)
    members = set(w)
    for pv in inst.P:
        for u in a:
            for u2 in a:
                if u.support_mask != u2.support_mask or u + (-u2) != pv:
                    continue
                if elim_I(u, -u2).intersection(members) or elim_I(-u, u2).intersection(members):
                    continue
                rest = u.support_mask & ~pv.support_mask
                for z in w:
                    if z.support_mask & ~u.support_mask:
                        continue
                    if (z.plus & rest) != (u.plus & rest) or (z.minus & rest) != (u.minus & rest):
                        return False, f"P={pv} U={u} U'={u2} Z={z}"
    return True, ""


def chk_route_agreement(inst: Instance):
    try:
        is_aom(inst.system, "both")
    except InconsistencyError as exc:
        return False, str(exc)
    return True, ""


def chk_p_subset_q(inst: Instance):
    extra = inst.P - inst.Q
    return not len(extra), f"P - Q = {extra.strings()}"


def chk_q_equals_n(inst: Instance):
    if not inst.aom or not len(inst.system):
        return None
    return inst.Q == inst.N, f"Q={inst.Q.strings()} N={inst.N.strings()}"


def chk_primed_axioms(inst: Instance):
    aff = inst.aff
    plain = all(aff.verdicts[a] for a in AOM_AXIOMS)
    primed = all(aff.verdicts[a] for a in (AxiomId.A1P, AxiomId.A2P, AxiomId.A3P))
    return plain == primed, f"A1-A3={plain} A1'-A3'={primed}"


def chk_a1prime_closure(inst: Instance):
    if not inst.aff.verdicts[AxiomId.A1P]:
        return None
    ok = inst.cov.verdicts[AxiomId.O3]
    return ok, "" if ok else f"O3 fails: {inst.cov.violations[AxiomId.O3].to_dict()}"


def chk_embedding(inst: Instance):
    arr = inst.arrangement
    if arr is None or arr.kind != "affine":
        return None
    label = "g"
    while label in arr.labels:
        label += "'"
    o = enumerate_covectors(embed_affine(arr, label))
    return restrict_positive(o, label) == inst.system, "restriction of the embedding differs"


def chk_sign_map(inst: Instance):
    arr = inst.arrangement
    if arr is None:
        return None
    rng = random.Random(inst.id)
    for _ in range(25):
        x = [Fraction(rng.randint(-12, 12), rng.randint(1, 4)) for _ in range(arr.dim)]
        v = sign_at(arr, x)
        if v not in inst.system:
            return False, f"sign vector {v} of point {x} missing"
    for v in inst.system:
        pt = feasible_point(arr, v)
        if pt is None or sign_at(arr, pt) != v:
            return False, f"witness point for {v} does not reproduce it"
    return True, ""


CHECKS: list[tuple[str, Callable]] = [
    ("realizable systems satisfy their axioms", chk_realizable),
    ("tope supports coincide", chk_tope_supports),
    ("topes determine the covectors", chk_mandel),
    ("O4 <=> O4' under O3", chk_o4_o4prime),
    ("SE <=> O4 under O3", chk_se_o4),
    ("N(W) is the zero section", chk_zero_section),
    ("lift of restriction recovers the OM", chk_dagger_round_trip),
    ("empty I(X,-Y) forces empty B(X,-Y)", chk_blocked_equal_support),
    ("N(W) = sym(W) + P(W)", chk_stabilizer_decomposition),
    ("members under U agree with U off P", chk_parallel_conformity),
    ("axiom and lift routes agree", chk_route_agreement),
    ("P(W) subset of Q(W)", chk_p_subset_q),
    ("Q(W) = N(W)", chk_q_equals_n),
    ("A1-A3 <=> A1'-A3'", chk_primed_axioms),
    ("A1' implies composition closure", chk_a1prime_closure),
    ("affine embedding round trip", chk_embedding),
    ("sign map and feasibility agree", chk_sign_map),
]


@dataclass
class CheckResult:
    name: str
    applicable: int = 0
    passed: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.applicable


@dataclass
class SuiteResult:
    checks: list[CheckResult]
    instances: int
    elapsed: float
    sources: dict[str, int]
    verdicts: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "instances": self.instances,
            "sources": self.sources,
            "elapsed_seconds": round(self.elapsed, 3),
            "checks": [
                {
                    "name": c.name,
                    "verdict": "pass" if c.ok else "fail",
                    "applicable": c.applicable,
                    "passed": c.passed,
                    "failures": c.failures,
                }
                for c in self.checks
            ],
            "instances_detail": self.verdicts,
        }

    def render_text(self) -> str:
        lines = [f"{self.instances} instances ({', '.join(f'{k}: {v}' for k, v in sorted(self.sources.items()))})"]
        for c in self.checks:
            lines.append(f"{'pass' if c.ok else 'FAIL'}  {c.name:<42} {c.passed}/{c.applicable}")
            for f in c.failures:
                lines.append(f"      {f['instance']}: {f['detail']}")
                lines.append(f"      system: {' '.join(f['system']) or '(empty)'}")
        for v in self.verdicts:
            if v["source"] in ("injected", "extra"):
                failed = ", ".join(v["failed_axioms"]) or "none"
                lines.append(f"{v['id']}: om={v['om']} aom={v['aom']} failed axioms: {failed}")
        lines.append(f"elapsed {self.elapsed:.2f}s")
        return "\n".join(lines)


def run_checks(corpus: list[Instance]) -> SuiteResult:
    t0 = time.perf_counter()
    results = [CheckResult(name) for name, _ in CHECKS]
    for inst in corpus:
        for res, (_, fn) in zip(results, CHECKS):
            try:
                outcome = fn(inst)
            except Exception as exc:  # a crashing check is a failed check
                outcome = False, f"{type(exc).__name__}: {exc}"
            if outcome is None:
                continue
            ok, detail = outcome
            res.applicable += 1
            if ok:
                res.passed += 1
            else:
                res.failures.append({
                    "instance": inst.id,
                    "elements": list(inst.system.ground.labels),
                    "system": inst.system.strings(),
                    "detail": detail,
                })
    sources: dict[str, int] = {}
    for inst in corpus:
        sources[inst.source] = sources.get(inst.source, 0) + 1
    verdicts = [
        {
            "id": inst.id,
            "source": inst.source,
            "size": len(inst.system),
            "om": inst.om,
            "aom": inst.aom,
            "failed_axioms": [str(a) for a in inst.cov.failed() + inst.aff.failed()],
        }
        for inst in corpus
    ]
    return SuiteResult(results, len(corpus), time.perf_counter() - t0, sources, verdicts)


def verify(spec: CorpusSpec | None = None) -> SuiteResult:
    t0 = time.perf_counter()
    result = run_checks(build_corpus(spec or CorpusSpec()))
    result.elapsed = time.perf_counter() - t0
    return result


# --- flaw demonstration -------------------------------------------------------


@dataclass
class FlawDemo:
    found: bool
    reason: str = ""
    n1: SignVector | None = None
    n2: SignVector | None = None
    u: SignVector | None = None
    u_prime: SignVector | None = None
    v: SignVector | None = None
    witness: SignVector | None = None
    meets: list[SignVector] = field(default_factory=list)
    sum_in_p: bool | None = None

    def to_dict(self) -> dict:
        if not self.found:
            return {"found": False, "reason": self.reason}
        return {
            "found": True,
            "N1": str(self.n1),
            "N2": str(self.n2),
            "U": str(self.u),
            "U'": str(self.u_prime),
            "V": str(self.v),
            "-V": str(-self.v),
            "U+(-V)": str(self.u + (-self.v)),
            "I(U,-V) meets W": [str(z) for z in self.meets],
            "witness": str(self.witness),
            "pair (U,V) witnesses U+(-V) in P(W)": False,
            "U+(-V) in P(W) via another pair": self.sum_in_p,
        }

    def render_text(self) -> str:
        if not self.found:
            return f"no qualifying pair: {self.reason}"
        uv = self.u + (-self.v)
        lines = [
            f"N1 = {self.n1}   N2 = {self.n2}   (both parallel vectors, equal support)",
            f"decomposition N1 = U + (-U'):  U = {self.u}, U' = {self.u_prime}",
            f"V = (-N2) o U = {self.v}   -V = {-self.v}",
            f"I(U,-V) meets W in {_fmt(self.meets)}",
            f"witness Z = {self.witness} lies in I(U,-V) and in W",
            f"so the pair (U, V) cannot witness U + (-V) = {uv} in P(W)",
        ]
        if self.sum_in_p:
            lines.append(f"(note: {uv} is in P(W) through a different pair)")
        return "\n".join(lines)


def qualifying_pairs(w: SignSystem, p: SignSystem | None = None):
    p = parallel_vectors(w) if p is None else p
    for n1 in p:
        for n2 in p:
            if n1 != n2 and n1.support_mask == n2.support_mask:
                yield n1, n2


def flaw_demo(w: SignSystem, n1: SignVector | None = None, n2: SignVector | None = None) -> FlawDemo:
    """Replay the failed witness step: ``(U, V)`` never certifies ``U + (-V)`` in ``P(W)``.

    Without explicit ``n1, n2`` the lexicographically first qualifying pair is used.
    """
    p = parallel_vectors(w)
    if n1 is None or n2 is None:
        pair = next(qualifying_pairs(w, p), None)
        if pair is None:
            return FlawDemo(False, "P(W) has no two distinct members of equal support")
        n1, n2 = pair
    if n1 not in p or n2 not in p:
        return FlawDemo(False, f"{n1 if n1 not in p else n2} is not a parallel vector of W")
    if n1 == n2 or n1.support_mask != n2.support_mask:
        return FlawDemo(False, "N1 and N2 must be distinct with equal support")
    dec = find_parallel_decomposition(n1, w)
    if dec is None:
        return FlawDemo(False, f"no decomposition of {n1} over asym(W)")
    u, u2 = dec
    v = compose(-n2, u)
    if v not in w:
        return FlawDemo(False, f"V = {v} is not in W; W violates A3")
    if v.support_mask != u.support_mask or u == -v:
        return FlawDemo(False, "U and -V do not have equal support")
    meets = sorted(elim_I(u, -v).intersection(set(w)), key=str)
    if not meets:
        return FlawDemo(False, "I(U,-V) misses W; W is not an affine oriented matroid")
    return FlawDemo(
        True, n1=n1, n2=n2, u=u, u_prime=u2, v=v, witness=meets[0], meets=meets,
        sum_in_p=(u + (-v)) in p,
    )
