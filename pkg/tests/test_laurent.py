import pytest

from flagko.laurent import (
    LaurentPoly,
    character,
    check_demazure_division,
    demazure,
    format_poly,
    parse_poly,
    reduced_character,
    split_anti_self_dual,
    split_self_dual,
    weyl_dimension,
)
from flagko.reptypes import duality_permutation
from flagko.rootdata import build_root_datum


def P(text, n):
    return parse_poly(text, n)


def test_arithmetic():
    f = P("x^(1,0) + x^(0,-1) - 2", 2)
    g = P("x^(-1,0) + 1", 2)
    assert f * g == P("1 + x^(-1,-1) - 2*x^(-1,0) + x^(1,0) + x^(0,-1) - 2", 2)
    assert f - f == LaurentPoly.zero(2)
    assert (f ** 2).rank() == 0
    assert 3 - f == P("5 - x^(1,0) - x^(0,-1)", 2)


def test_format_roundtrip():
    f = P("3*x^(2,-1) - x^(0,0) + x^(-4,7)", 2)
    assert parse_poly(format_poly(f), 2) == f
    assert format_poly(LaurentPoly.zero(3)) == "0"
    assert parse_poly("0", 3) == LaurentPoly.zero(3)


@pytest.mark.parametrize("bad", ["x^(1)", "2*y", "x^(1,2,3)", "+"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_poly(bad, 2)


def test_star():
    f = P("2*x^(1,-2) + 5", 2)
    assert f.star() == P("2*x^(-1,2) + 5", 2)
    assert f.star().star() == f


@pytest.mark.parametrize("t", ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4", "F4", "A1xA2"])
def test_fundamental_dimensions(t):
    d = build_root_datum(t)
    for i in range(d.rank):
        w = d.fundamental_weight(i)
        assert character(d, w).rank() == weyl_dimension(d, w)


@pytest.mark.parametrize("t,weights", [
    ("A2", [(2, 1), (3, 0)]), ("B2", [(1, 1), (2, 3)]), ("G2", [(1, 1), (0, 2)]),
    ("C3", [(1, 0, 1)]), ("A3", [(1, 1, 1)]),
])
def test_weyl_dimension_oracle(t, weights):
    d = build_root_datum(t)
    for w in weights:
        chi = character(d, w)
        assert chi.rank() == weyl_dimension(d, w)
        # characters are W-invariant
        for m in d.simple_reflection_matrices:
            assert chi.act(m) == chi


def test_known_dimensions():
    assert weyl_dimension(build_root_datum("G2"), (1, 0)) == 7
    assert weyl_dimension(build_root_datum("G2"), (0, 1)) == 14
    assert weyl_dimension(build_root_datum("E8"), (0,) * 7 + (1,)) == 248
    assert weyl_dimension(build_root_datum("D4"), (0, 1, 0, 0)) == 28


def test_character_rejects_non_dominant():
    with pytest.raises(ValueError):
        character(build_root_datum("A2"), (1, -1))


@pytest.mark.parametrize("t", ["A2", "B2", "G2", "A3"])
def test_demazure_division_exact(t):
    d = build_root_datum(t)
    f = LaurentPoly({(1,) + (0,) * (d.rank - 1): 2, (-2,) + (1,) * (d.rank - 1): -1,
                     (0,) * d.rank: 3})
    for i in range(d.rank):
        g = check_demazure_division(d, i, f)
        assert demazure(d, i, g) == g


@pytest.mark.parametrize("t", ["A1", "A2", "A3", "A5", "B3", "C3", "D4", "D5", "E6", "G2"])
def test_star_matches_duality(t):
    d = build_root_datum(t)
    sigma = duality_permutation(d)
    chars = [character(d, d.fundamental_weight(i)) for i in range(d.rank)]
    for i, chi in enumerate(chars):
        assert chi.star() == chars[sigma[i]]


def test_reduced_character_rank_zero():
    d = build_root_datum("B3")
    for i in range(3):
        assert reduced_character(d, i).rank() == 0


def test_split_self_dual():
    f = P("x^(1,0) + x^(-1,0) + 3*x^(1,-1) + 3*x^(-1,1) - 8", 2)
    g = split_self_dual(f)
    assert g + g.star() == f
    with pytest.raises(ValueError):
        split_self_dual(P("x^(1,0) + x^(-1,0) - 3", 2))
    with pytest.raises(ValueError):
        split_self_dual(P("x^(1,0)", 2))


def test_split_anti_self_dual():
    f = P("x^(2,1) - x^(-2,-1)", 2)
    g = split_anti_self_dual(f)
    assert g - g.star() == f
    with pytest.raises(ValueError):
        split_anti_self_dual(P("x^(2,1) + x^(-2,-1)", 2))
