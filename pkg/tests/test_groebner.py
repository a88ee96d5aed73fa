import pytest

from flagko.groebner import LaurentQuotient, MonomialOrder, QuotientError, groebner_basis
from flagko.laurent import LaurentPoly, parse_poly, reduced_character
from flagko.rootdata import build_root_datum


def _gb(polys, nvars, order="grevlex"):
    o = MonomialOrder(nvars, order)
    packed = [{o.pack(e): c for e, c in p.items()} for p in polys]
    return o, groebner_basis(packed, o)


def test_gcd_of_coefficients():
    # (6x, 4x) generates (2x) over the integers
    o, gb = _gb([{(1,): 6}, {(1,): 4}], 1)
    assert [(e.lm, e.lc) for e in gb.elements] == [(o.pack((1,)), 2)]


def test_gcd_polynomial_is_added():
    # xy = x*(3y) - y*(2x) lies in (2x, 3y) with a unit leading coefficient
    o, gb = _gb([{(1, 0): 2}, {(0, 1): 3}], 2)
    assert sorted(gb.leading_coefficients) == [1, 2, 3]
    assert o.pack((1, 1)) in gb.leading_monomials


def test_reduction_to_zero_on_ideal_members():
    o, gb = _gb([{(2, 0): 1, (0, 0): -1}, {(1, 1): 1, (0, 0): -1}], 2)
    # x^2 - 1 and xy - 1 imply y^2 - 1
    member = {o.pack((0, 2)): 1, o.pack((0, 0)): -1}
    assert gb.reduce(member) == {}


@pytest.mark.parametrize("order", ["grevlex", "lex"])
@pytest.mark.parametrize("t,rank", [("A1", 2), ("A2", 6), ("B2", 8), ("G2", 12), ("A3", 24),
                                    ("A1xA1", 4)])
def test_flag_quotient_rank(t, rank, order):
    d = build_root_datum(t)
    q = LaurentQuotient(d.rank, [reduced_character(d, i) for i in range(d.rank)], order)
    assert q.rank == rank
    for k in range(q.rank):
        assert q.normal_form(q.basis_poly(k)) == [int(j == k) for j in range(q.rank)]
    s = q.sigma
    n = q.rank
    sq = [[sum(s[i][k] * s[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    assert sq == [[int(i == j) for j in range(n)] for i in range(n)]


def test_g2_basis_is_not_monomial():
    # the grevlex basis of the G2 ideal has leading coefficients 7 and 22
    d = build_root_datum("G2")
    q = LaurentQuotient(2, [reduced_character(d, i) for i in range(2)])
    assert not q.monomial_basis
    assert any(abs(c) > 1 for c in q.gb.leading_coefficients)
    assert q.rank == 12


def test_multiplication_agrees_with_polynomials():
    d = build_root_datum("B2")
    q = LaurentQuotient(2, [reduced_character(d, i) for i in range(2)])
    f = parse_poly("x^(1,0) + 2*x^(-1,1) - 3", 2)
    g = parse_poly("x^(0,-1) - x^(2,-1)", 2)
    assert q.multiply(q.normal_form(f), q.normal_form(g)) == q.normal_form(f * g)
    for gen in q.generators:
        assert q.normal_form(gen) == [0] * q.rank
    assert q.unit() == q.normal_form(LaurentPoly.constant(1, 2))


def test_torsion_is_reported():
    with pytest.raises(QuotientError, match="torsion"):
        LaurentQuotient(1, [parse_poly("x^(1) - 1", 1), parse_poly("2", 1)])


def test_infinite_quotient_is_reported():
    with pytest.raises(QuotientError):
        LaurentQuotient(2, [parse_poly("x^(1,0) - 1", 2)], max_rank=50)


def test_structure_constants_commute():
    d = build_root_datum("A2")
    q = LaurentQuotient(2, [reduced_character(d, i) for i in range(2)])
    m = q.structure_constants()
    n = q.rank
    assert all(m[i][j] == m[j][i] for i in range(n) for j in range(n))
