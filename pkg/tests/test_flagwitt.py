import pytest

from flagko.flagwitt import (
    INJECTIVE_TYPES,
    classifier_sweep,
    coker_alpha,
    exterior_degree_dims,
    generator_reps,
    injectivity_classifier,
    ko_groups,
    witt_ring,
)
from flagko.rootdata import GroupTooLarge, weyl_order


def test_su6():
    w = witt_ring("SU(6)")
    assert w.count(1) == 1 and w.count(3) == 2
    assert w.degree_dims == [3, 1, 1, 3]
    assert [g.label for g in w.generators] == ["a[omega1]", "a[omega2]", "c[omega3]"]


@pytest.mark.parametrize("t,dims", [
    ("A1", [1, 1, 0, 0]), ("G2", [1, 0, 1, 2]), ("trivial", [1, 0, 0, 0]),
    ("A2", [1, 0, 0, 1]), ("D4", [2, 4, 6, 4]),
])
def test_degree_dims(t, dims):
    w = witt_ring(t)
    assert w.degree_dims == dims
    assert sum(dims) == w.total_dim


def test_exterior_degree_dims():
    assert exterior_degree_dims([]) == [1, 0, 0, 0]
    assert exterior_degree_dims([1, 1]) == [1, 2, 1, 0]


def test_exterior_degree_dims_wraps_mod_4():
    # five degree-3 generators: k of them sit in degree 3k mod 4
    from math import comb
    want = [0, 0, 0, 0]
    for k in range(6):
        want[(3 * k) % 4] += comb(5, k)
    assert exterior_degree_dims([3] * 5) == want


def test_tate_dims_prediction():
    assert witt_ring("B3").tate_dims == (4, 4)
    assert witt_ring("trivial").tate_dims == (1, 0)


def test_ko_su2():
    k = ko_groups("SU(2)")
    assert (k.n0, k.n2) == (1, 1)
    assert k.describe(0) == "Z + Z/2"
    assert k.torsion == [1, 1, 0, 0, 0, 0, 1, 1]
    assert k.describe(3) == "0"


def test_ko_su3():
    k = ko_groups("SU(3)")
    assert (k.n0, k.n2) == (3, 3)
    assert k.k_rank == 6


@pytest.mark.parametrize("t", ["A3", "B3", "C3", "G2", "D4", "A1xA2", "F4"])
def test_k_rank_is_weyl_order(t):
    k = ko_groups(t)
    assert k.k_rank == weyl_order(k.type)
    # the Poincare polynomial at -1 vanishes for positive rank
    assert k.n0 == k.n2


def test_ko_cap():
    with pytest.raises(GroupTooLarge):
        ko_groups("E8", cap=10_000)


@pytest.mark.parametrize("t", ["A1", "A2", "A5", "B2", "G2", "D5", "A1xA2"])
def test_generator_identities(t):
    reps = generator_reps(t)
    assert reps.check()
    assert len(reps.items()) == witt_ring(t).N


def test_classifier():
    assert injectivity_classifier("B2") == (True, 2)
    assert injectivity_classifier("D4") == (False, 4)
    rows = classifier_sweep()
    assert {t for t, ok, _ in rows if ok} == set(INJECTIVE_TYPES)
    assert len(rows) == 41


def test_coker_alpha():
    assert coker_alpha("A1") == [0, 1, 0, 0]
    assert coker_alpha("SU(6)") == [2, 1, 1, 3]
