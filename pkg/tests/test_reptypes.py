import pytest

from flagko.reptypes import (
    TableMismatch,
    classify,
    duality_permutation,
    table_one,
    table_one_expected,
    table_types,
)
from flagko.rootdata import SimpleType, build_root_datum


def test_table_rows_match_closed_forms():
    rows = table_one(8)
    assert len(rows) == len(table_types(8))
    by_type = {r["type"]: (r["b_C"], r["b_R"], r["b_H"]) for r in rows}
    assert by_type["E8"] == (0, 8, 0)
    assert by_type["C4"] == (0, 2, 2)
    assert by_type["A1"] == (0, 0, 1)
    assert by_type["E6"] == (4, 2, 0)
    assert by_type["E7"] == (0, 4, 3)
    assert by_type["D6"] == (0, 4, 2)
    assert by_type["D5"] == (2, 3, 0)


def test_table_includes_exceptional_types():
    names = {str(t) for t in table_types(2)}
    assert {"E6", "E7", "E8", "F4", "G2"} <= names


def test_table_rejects_bad_rank():
    with pytest.raises(ValueError):
        table_one(0)


@pytest.mark.parametrize("t", [SimpleType("A", n) for n in range(1, 9)]
                         + [SimpleType("D", n) for n in range(4, 9)])
def test_sigma_is_an_involution(t):
    sigma = duality_permutation(build_root_datum(str(t)))
    assert all(sigma[sigma[i]] == i for i in range(len(sigma)))


def test_products_concatenate():
    a, b = classify("A1"), classify("A2")
    ab = classify("A1xA2")
    assert ab.counts == tuple(x + y for x, y in zip(a.counts, b.counts))
    assert ab.quaternionic == (0,)
    assert ab.dual_pairs == ((1, 2),)


def test_json_uses_one_based_nodes():
    assert classify("A3").to_json() == {
        "type": "A3", "b_C": 2, "b_R": 1, "b_H": 0,
        "dual_pairs": [[1, 3]], "real": [2], "quaternionic": [],
    }


def test_expected_is_checked():
    # TableMismatch is an AssertionError so that a disagreement is loud
    assert issubclass(TableMismatch, AssertionError)
    assert table_one_expected(SimpleType("B", 5)) == (0, 4, 1)
