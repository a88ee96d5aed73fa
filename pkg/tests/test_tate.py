import json

import pytest

from flagko.groebner import LaurentQuotient
from flagko.laurent import parse_poly, reduced_character
from flagko.oracle import run_fixtures, synthetic_fixtures
from flagko.rootdata import build_root_datum
from flagko.tate import (
    InvolutiveModule,
    InvolutiveRing,
    TransferFixture,
    exterior_check,
    predicted_dims,
    quotient_ring,
    swap_module,
    tate_cohomology,
    tate_dims_by_rank,
    tate_ring,
)

TRIVIAL = InvolutiveModule(1, [[1]])
SIGN = InvolutiveModule(1, [[-1]])


@pytest.mark.parametrize("method", ["snf", "parity"])
@pytest.mark.parametrize("module,dims", [
    (TRIVIAL, (1, 0)),
    (SIGN, (0, 1)),
    (swap_module(), (0, 0)),
    (TRIVIAL.direct_sum(SIGN).direct_sum(swap_module()), (1, 1)),
    (InvolutiveModule(0, []), (0, 0)),
])
def test_basic_modules(module, dims, method):
    t = tate_cohomology(module, method)
    assert t.dims == dims == tate_dims_by_rank(module)


def test_disguised_swap():
    # sigma = [[1, 1], [0, -1]] is conjugate to the swap over Z
    m = InvolutiveModule(2, [[1, 1], [0, -1]])
    for method in ("snf", "parity"):
        assert tate_cohomology(m, method).dims == (0, 0)
    # whereas diag(1, -1) is not
    assert tate_cohomology(InvolutiveModule(2, [[1, 0], [0, -1]])).dims == (1, 1)


def test_rejects_non_involution():
    with pytest.raises(ValueError, match="involution"):
        InvolutiveModule(2, [[0, 1], [2, 0]])


def test_classify_rejects_non_cocycle():
    t = tate_cohomology(TRIVIAL.direct_sum(SIGN))
    with pytest.raises(ValueError, match="cocycle"):
        t.class_plus([1, 1])
    assert t.class_plus([3, 0]) == [1]
    assert t.class_plus([2, 0]) == [0]
    assert t.class_minus([0, -5]) == [1]


def test_unknown_method():
    with pytest.raises(ValueError):
        tate_cohomology(TRIVIAL, "guess")


def test_module_json_roundtrip():
    m = InvolutiveModule(2, [[1, 1], [0, -1]], ["a", "b"])
    again = InvolutiveModule.from_json(json.loads(json.dumps(m.to_json())))
    assert again == m


def _laurent_ring(t):
    d = build_root_datum(t)
    q = LaurentQuotient(d.rank, [reduced_character(d, i) for i in range(d.rank)])
    return q, quotient_ring(q)


def test_ring_json_roundtrip_and_validate():
    q, r = _laurent_ring("A2")
    r.validate()
    data = json.loads(InvolutiveRing(r.module, r.unit, r.structure_constants()).dumps())
    again = InvolutiveRing.from_json(data)
    again.validate()
    e = [[int(i == j) for j in range(r.rank)] for i in range(r.rank)]
    assert again.multiply(e[1], e[2]) == r.multiply(e[1], e[2])


def test_a1_tate_ring_is_exterior_on_one_class():
    q, r = _laurent_ring("A1")
    t = tate_cohomology(r.module)
    assert t.dims == (1, 1)
    tr = tate_ring(r, t)
    minus = [0, 1]
    assert tr.mul_bits(minus, minus) == [0, 0]
    assert tr.unit_bits() == [1, 0]
    # x - 1 is a generator: (x - 1) + (x^-1 - 1) = reduced character
    w = q.normal_form(parse_poly("x^(1) - 1", 1))
    rep = exterior_check(tr, [w])
    assert rep.ok


@pytest.mark.parametrize("t", ["A2", "B2", "G2"])
def test_methods_agree_on_flag_quotients(t):
    q, r = _laurent_ring(t)
    a = tate_cohomology(r.module, "snf")
    b = tate_cohomology(r.module, "parity")
    assert a.dims == b.dims
    for v in a.reps_plus:
        b.class_plus(v)
    from flagko.intmat import rank_mod2
    if a.dim_plus:
        assert rank_mod2([b.class_plus(v) for v in a.reps_plus]) == a.dim_plus
    if a.dim_minus:
        assert rank_mod2([b.class_minus(v) for v in a.reps_minus]) == a.dim_minus


def test_predicted_dims():
    assert predicted_dims(0) == (1, 0)
    assert predicted_dims(1) == (1, 1)
    assert predicted_dims(4) == (8, 8)


def test_fixtures_behave_as_declared():
    reports = run_fixtures()
    assert len(reports) == len(synthetic_fixtures())
    for fx, rep in zip(synthetic_fixtures(), reports):
        assert rep.status == fx.expect, (fx.name, rep.errors)
        if rep.status == "pass":
            assert rep.measured == rep.predicted
            assert rep.exterior_ok and rep.squares_ok and rep.anti_self_dual_ok


def test_fixture_json_roundtrip():
    for fx in synthetic_fixtures():
        again = TransferFixture.from_json(json.loads(json.dumps(fx.to_json())))
        assert again.to_json() == fx.to_json()
    with pytest.raises(ValueError):
        TransferFixture.from_json({"name": "x", "nvars": 1,
                                   "generators": [{"kind": "odd", "poly": "x^(1)"}]})


def test_fixture_error_messages():
    reports = {r.name: r for r in run_fixtures()}
    assert "finite" in reports["degenerate-pair"].errors[0]
    assert "rank" in reports["nonzero-rank"].errors[0]
    assert "length" in reports["short-sequence"].errors[0]
