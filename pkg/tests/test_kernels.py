import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from aomkit import _kernels_py, kernels
from aomkit.core_sign import all_keys, key_string

try:
    from aomkit import _kernels
except ImportError:
    _kernels = None

BACKENDS = [_kernels_py] + ([_kernels] if _kernels is not None else [])


@st.composite
def systems(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    strings = oracle.vectors(n)
    members = draw(st.lists(st.sampled_from(strings), unique=True, max_size=20))
    return n, sorted(members)


def masks(strings):
    plus = [sum(1 << i for i, c in enumerate(s) if c == "+") for s in strings]
    minus = [sum(1 << i for i, c in enumerate(s) if c == "-") for s in strings]
    return plus, minus


def test_backend_selection():
    assert kernels.BACKEND in ("compiled", "python")
    if _kernels is not None:
        assert kernels.BACKEND == "compiled"


@pytest.mark.skipif(_kernels is None, reason="compiled extension not built")
@settings(max_examples=200, deadline=None)
@given(systems(), st.booleans())
def test_backends_agree(sys_, flag):
    n, w = sys_
    p, m = masks(w)
    cands = list(all_keys(n))
    cp, cm = [c[0] for c in cands], [c[1] for c in cands]
    for fn, args in [
        ("first_composition_failure", (p, m, p, m, p, m, flag)),
        ("stabilizer_scan", (cp, cm, p, m, p, m, flag)),
        ("first_elimination_failure", (p, m, flag, True)),
        ("first_elimination_failure", (p, m, flag, False)),
        ("pair_sums", (p, m, p, m, flag)),
    ]:
        assert getattr(_kernels, fn)(*args) == getattr(_kernels_py, fn)(*args), fn
    if len(w) >= 2:
        args = (p[0], m[0], p[1], m[1], p, m)
        assert _kernels.elimination_cover(*args) == _kernels_py.elimination_cover(*args)


@pytest.mark.parametrize("k", BACKENDS, ids=lambda k: k.__name__)
@settings(max_examples=60, deadline=None)
@given(sys_=systems(max_n=3))
def test_stabilizer_scan_matches_oracle(k, sys_):
    n, w = sys_
    p, m = masks(w)
    cands = list(all_keys(n))
    keep = k.stabilizer_scan([c[0] for c in cands], [c[1] for c in cands], p, m, p, m, True)
    got = {key_string(*cands[i], n) for i in keep}
    assert got == oracle.N(set(w), n)


@pytest.mark.parametrize("k", BACKENDS, ids=lambda k: k.__name__)
@settings(max_examples=60, deadline=None)
@given(sys_=systems(max_n=3))
def test_composition_failure_matches_oracle(k, sys_):
    n, w = sys_
    p, m = masks(w)
    closed = all(oracle.comp(x, y) in w for x in w for y in w)
    assert (k.first_composition_failure(p, m, p, m, p, m) is None) == closed


@pytest.mark.parametrize("k", BACKENDS, ids=lambda k: k.__name__)
@settings(max_examples=60, deadline=None)
@given(sys_=systems(max_n=3))
def test_equal_support_elimination_matches_oracle(k, sys_):
    n, w = sys_
    p, m = masks(w)
    ws = set(w)
    ok = all(
        oracle.I_e(x, y, e) & ws
        for x in w for y in w if x != y and oracle.supp(x) == oracle.supp(y)
        for e in oracle.sep(x, y)
    )
    assert (k.first_elimination_failure(p, m, True, True) is None) == ok


@pytest.mark.parametrize("k", BACKENDS, ids=lambda k: k.__name__)
@settings(max_examples=60, deadline=None)
@given(sys_=systems(max_n=3))
def test_pair_sums_match_oracle(k, sys_):
    n, w = sys_
    p, m = masks(w)
    got = {key_string(kp, km, n) for kp, km in k.pair_sums(p, m, p, m, False)}
    assert got == oracle.Q(set(w))
