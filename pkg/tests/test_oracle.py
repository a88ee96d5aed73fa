import pytest

from flagko.oracle import (
    build_quotient,
    oracle_report,
    verify_generators,
    verify_main_theorem,
)
from flagko.rootdata import GroupTooLarge


@pytest.mark.parametrize("t,dims", [("A1", (1, 1)), ("A2", (1, 1)), ("B2", (2, 2)),
                                    ("G2", (2, 2)), ("A1xA1", (2, 2))])
def test_main_theorem_small(t, dims):
    rep = verify_main_theorem(t)
    assert rep.measured == dims == rep.predicted
    assert rep.passed


def test_presentation_is_reused():
    p = build_quotient("B2")
    assert p.rank == p.weyl_order == 8
    assert verify_main_theorem("B2", presentation=p).passed
    g = verify_generators("B2", presentation=p)
    assert g.passed and not g.failures


def test_cap():
    with pytest.raises(GroupTooLarge):
        build_quotient("E8")
    with pytest.raises(GroupTooLarge):
        build_quotient("B3", cap=10)


def test_unknown_order():
    with pytest.raises(ValueError):
        build_quotient("A2", order="revlex")


def test_report_schema():
    r = oracle_report("A2")
    for key in ("type", "rank_W", "basis_size", "tate", "predicted", "generators_ok",
                "squares_ok", "basis_ok", "elapsed_ms"):
        assert key in r
    assert r["passed"] and r["tate"] == {"plus": 1, "minus": 1}


def test_lex_order():
    assert oracle_report("G2", order="lex")["passed"]
