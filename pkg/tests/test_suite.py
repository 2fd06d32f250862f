import json

from aomkit import fixtures
from aomkit.suite import CHECKS, CorpusSpec, Instance, build_corpus, flaw_demo, run_checks, verify
from aomkit.core_sign import SignVector
from aomkit.geometry import enumerate_covectors, random_arrangement
from aomkit.systems import SignSystem
from conftest import systems_from


def test_corpus_is_deterministic():
    spec = CorpusSpec(seeds=range(1, 4), max_n=4)
    a, b = build_corpus(spec), build_corpus(spec)
    assert [(i.id, i.system) for i in a] == [(i.id, i.system) for i in b]


def test_small_corpus_passes():
    result = verify(CorpusSpec(seeds=range(1, 4), max_n=4))
    assert result.ok
    assert all(c.applicable > 0 for c in result.checks)
    d = result.to_dict()
    assert json.loads(json.dumps(d))["ok"] is True


def test_empty_corpus_is_vacuous():
    result = verify(CorpusSpec(seeds=range(0), fixtures=False))
    assert result.ok and result.instances == 0
    assert all(c.applicable == 0 for c in result.checks)


def test_injected_broken_system():
    result = verify(CorpusSpec(seeds=range(0), fixtures=False, inject_broken=True))
    assert result.ok
    (v,) = result.verdicts
    assert v["aom"] is False and "A2" in v["failed_axioms"]
    assert "failed axioms" in result.render_text()


def test_failures_carry_certificates():
    wrong = Instance("mislabelled", fixtures.three_lines_system(), "extra", expect_aom=False)
    result = run_checks([wrong])
    assert not result.ok
    (failing,) = [c for c in result.checks if not c.ok]
    cert = failing.failures[0]
    assert cert["instance"] == "mislabelled" and len(cert["system"]) == 15
    assert "FAIL" in result.render_text()


def test_crashing_check_does_not_abort(monkeypatch):
    import aomkit.suite as suite

    def boom(inst):
        raise RuntimeError("boom")

    monkeypatch.setattr(suite, "CHECKS", [("boom", boom)] + CHECKS[1:])
    result = suite.run_checks([Instance("x", systems_from(1, ["0"]), "extra")])
    assert result.checks[0].failures[0]["detail"] == "RuntimeError: boom"
    assert all(c.ok for c in result.checks[1:])


def test_flaw_demo_three_lines(lines_w):
    g = lines_w.ground
    demo = flaw_demo(lines_w, SignVector.from_string(g, "+00"), SignVector.from_string(g, "-00"))
    assert demo.found
    assert [str(v) for v in (demo.u, demo.u_prime, demo.v, demo.witness)] == ["++0", "-+0", "++0", "0+0"]
    assert demo.witness in lines_w
    assert "0+0" in demo.render_text()


def test_flaw_demo_default_pair(lines_w):
    assert flaw_demo(lines_w).found


def test_flaw_demo_parallel_classes():
    w = enumerate_covectors(random_arrangement(7, 4, 2, [["a", "b"], ["c", "d"]]))
    demo = flaw_demo(w)
    assert demo.found and demo.n1 == -demo.n2
    assert demo.witness in w


def test_flaw_demo_rejections(lines_w):
    g = lines_w.ground
    assert not flaw_demo(systems_from(1, ["0"])).found
    assert "not a parallel vector" in flaw_demo(lines_w, SignVector.from_string(g, "0+0"), SignVector.from_string(g, "+00")).reason
    same = SignVector.from_string(g, "+00")
    assert not flaw_demo(lines_w, same, same).found
    assert flaw_demo(lines_w).to_dict()["found"] is True
    assert flaw_demo(SignSystem.from_strings("a", ["0"])).to_dict() == {
        "found": False, "reason": "P(W) has no two distinct members of equal support"
    }
