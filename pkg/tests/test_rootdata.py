import pytest

from flagko.rootdata import (
    GroupTooLarge,
    build_root_datum,
    enumerate_weyl,
    length_parity_counts,
    longest_element,
    parse_type,
    weyl_order,
)


@pytest.mark.parametrize("text,expected", [
    ("A2", "A2"),
    ("SU(6)", "A5"),
    ("Sp(3)", "C3"),
    ("Spin(8)", "D4"),
    ("Spin(7)", "B3"),
    ("A1xA2", "A1xA2"),
    ("SU(2)xSU(3)", "A1xA2"),
    ("trivial", "trivial"),
])
def test_parse(text, expected):
    assert str(parse_type(text)) == expected


@pytest.mark.parametrize("text", ["", "  ", "A0", "B1", "D3", "E9", "X2", "SU(1)"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_type(text)


@pytest.mark.parametrize("t,order", [
    ("A1", 2), ("A2", 6), ("A3", 24), ("A4", 120), ("B2", 8), ("B3", 48), ("C3", 48),
    ("D4", 192), ("G2", 12), ("F4", 1152), ("E6", 51840), ("E8", 696729600), ("A1xA2", 12),
])
def test_weyl_order(t, order):
    assert weyl_order(parse_type(t)) == order


@pytest.mark.parametrize("t", ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4", "A1xA2", "F4"])
def test_enumeration_matches_order(t):
    d = build_root_datum(t)
    elems = enumerate_weyl(d)
    assert len(elems) == weyl_order(d.type)
    assert len({e.matrix for e in elems}) == len(elems)


def test_enumeration_cap():
    with pytest.raises(GroupTooLarge):
        enumerate_weyl(build_root_datum("E8"), cap=1000)


@pytest.mark.parametrize("t", ["A2", "B3", "C3", "G2", "D4"])
def test_longest_element(t):
    d = build_root_datum(t)
    w0 = longest_element(d)
    assert w0.length == len(d.positive_coroots)
    assert w0.act(d.rho) == tuple(-x for x in d.rho)


def test_g2_short_root_first():
    d = build_root_datum("G2")
    # alpha1 short: <alpha2^vee, alpha1> = -1, <alpha1^vee, alpha2> = -3
    assert d.cartan[0][1] == -3 and d.cartan[1][0] == -1
    assert d.two_rho_covector == (6, 10)


@pytest.mark.parametrize("t,counts", [("A1", (1, 1)), ("A2", (3, 3)), ("B2", (4, 4)),
                                      ("trivial", (1, 0))])
def test_length_parity(t, counts):
    assert length_parity_counts(build_root_datum(t)) == counts


def test_node_labels_for_repeated_factors():
    d = build_root_datum("A1xA1xA2")
    labels = [d.node_label(i) for i in range(d.rank)]
    assert labels == ["A1#1.omega1", "A1#2.omega1", "A2.omega1", "A2.omega2"]
    assert build_root_datum("B3").node_label(2) == "omega3"
