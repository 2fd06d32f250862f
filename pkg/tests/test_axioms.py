import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from aomkit.axioms import (
    AFFINE_AXIOMS,
    AOM_AXIOMS,
    COVECTOR_AXIOMS,
    AxiomId,
    check_affine,
    check_covector,
    find_parallel_decomposition,
    fresh_label,
    is_aom,
    is_com,
    is_om,
    is_parallel_vector,
)
from aomkit.core_sign import SignVector
from aomkit.geometry import enumerate_covectors, random_arrangement
from aomkit.systems import parallel_vectors
from conftest import systems_from

A = AxiomId


@st.composite
def random_systems(draw, max_n=3):
    n = draw(st.integers(1, max_n))
    members = draw(st.lists(st.sampled_from(oracle.vectors(n)), unique=True, max_size=16))
    return systems_from(n, members)


def test_axiom_ids_parse():
    assert AxiomId.parse("o4'") is A.O4P
    assert AxiomId.parse("O4P") is A.O4P
    assert str(A.A2P) == "A2'"
    with pytest.raises((KeyError, ValueError)):
        AxiomId.parse("O9")


def test_zero_system_is_om():
    report = check_covector(systems_from(2, ["00"]))
    assert report.passed and set(report.verdicts) == set(COVECTOR_AXIOMS)


def test_two_generic_lines():
    s = systems_from(2, ["00", "+0", "-0", "0+", "0-", "++", "+-", "-+", "--"])
    assert check_covector(s).passed
    assert is_om(s)[0]


def test_missing_zero_fails_o1():
    report = check_covector(systems_from(1, ["+", "-"]))
    assert A.O1 in report.failed()
    v = report.violations[A.O1]
    assert [str(x) for x in v.witnesses] == ["0"] and v.replay(systems_from(1, ["+", "-"]))


def test_three_lines_affine_axioms(lines_w):
    report = check_affine(lines_w)
    assert report.passed
    assert is_aom(lines_w, "both")[0]
    assert is_com(lines_w)[0]


def test_broken_three_lines_fails_a2(lines_broken):
    report = check_affine(lines_broken, AOM_AXIOMS)
    assert report.failed() == [A.A2]
    v = report.violations[A.A2]
    assert [str(x) for x in v.witnesses] == ["++0", "-+0"] and v.element == "a"
    assert v.replay(lines_broken)
    assert not v.replay(lines_broken | systems_from(3, ["0+0"]))
    assert is_aom(lines_broken, "both")[0] is False


def test_empty_system_passes_vacuously():
    empty = systems_from(2, [])
    assert check_affine(empty).passed
    assert is_aom(empty, "both")[0] is True


def test_symmetric_pair_routes_agree():
    w = systems_from(1, ["+", "-"])
    ok, ev = is_aom(w, "both")
    assert ev.axioms.passed == ev.dagger.passed == ok
    assert ok is False and ev.axioms.failed() == [A.A2]


def test_com_examples():
    assert is_com(systems_from(2, ["00"]))[0]
    ok, report = is_com(systems_from(2, ["++", "--"]))
    assert not ok and report.failed() == [A.A2P]


def test_inapplicable_axiom_rejected(lines_w):
    with pytest.raises(ValueError):
        check_covector(lines_w, [A.A1])
    with pytest.raises(ValueError):
        is_aom(lines_w, "fast")


def test_report_rendering(lines_broken):
    report = check_affine(lines_broken)
    d = report.to_dict()
    assert d["A2"]["verdict"] == "fail" and d["A2"]["violation"]["witnesses"] == ["++0", "-+0"]
    assert json.loads(json.dumps(d)) == d
    assert "FAIL" in report.render_text()
    merged = report.merge(check_covector(lines_broken, [A.O3]))
    assert A.O3 in merged.verdicts and A.A2 in merged.verdicts


def test_fresh_label(lines_w):
    assert fresh_label(lines_w) == "g"
    assert fresh_label(systems_from(1, ["0"]), "a") == "a1"


def test_parallel_decomposition(lines_w):
    g = lines_w.ground
    p = SignVector.from_string(g, "+00")
    x, y = find_parallel_decomposition(p, lines_w)
    assert (str(x), str(y)) == ("++0", "-+0")
    assert is_parallel_vector(p, lines_w)
    assert not is_parallel_vector(SignVector.from_string(g, "0+0"), lines_w)
    assert all(is_parallel_vector(q, lines_w) for q in parallel_vectors(lines_w))


def test_central_arrangements_are_oms():
    for seed in range(1, 10):
        o = enumerate_covectors(random_arrangement(seed, 4, 3, kind="central"))
        assert check_covector(o).passed


@settings(max_examples=150, deadline=None)
@given(random_systems())
def test_routes_agree_with_oracle(w):
    ok, ev = is_aom(w, "both")
    strings = set(w.strings())
    assert ok == oracle.is_aom_axioms(strings)
    assert ok == oracle.is_om(oracle.dagger(strings, len(w.ground)))


@settings(max_examples=150, deadline=None)
@given(random_systems())
def test_violations_replay(w):
    for report in (check_covector(w), check_affine(w)):
        for axiom in report.failed():
            assert report.violations[axiom].replay(w), axiom


@settings(max_examples=150, deadline=None)
@given(random_systems())
def test_metatheorems(w):
    cov = check_covector(w)
    aff = check_affine(w, AFFINE_AXIOMS)
    if cov.verdicts[A.O3]:
        assert cov.verdicts[A.O4] == cov.verdicts[A.O4P]
        assert cov.verdicts[A.O4] == cov.verdicts[A.SE]
    if aff.verdicts[A.A1P]:
        assert cov.verdicts[A.O3]
    plain = all(aff.verdicts[a] for a in AOM_AXIOMS)
    primed = all(aff.verdicts[a] for a in (A.A1P, A.A2P, A.A3P))
    assert plain == primed
    if plain:
        assert aff.verdicts[A.A1P] and aff.verdicts[A.A2P]
