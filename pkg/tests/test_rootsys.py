import random

import pytest

from invconn.rootsys import (ConfigurationError, PreconditionError, RootSystem,
                             SimpleType, adjoint_weight)

ALL_TYPES = [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("B", 4),
             ("C", 2), ("C", 3), ("C", 4), ("D", 3), ("D", 4), ("G", 2), ("F", 4),
             ("E", 6), ("E", 7), ("E", 8)]


@pytest.mark.parametrize("series,rank", ALL_TYPES)
def test_adjoint_dimension(series, rank):
    st = SimpleType(series, rank)
    rs = RootSystem([st])
    assert len(rs.pos_roots) == st.num_positive_roots
    assert rs.weyl_dimension(adjoint_weight(st)) == st.dim


def test_so4_splits_as_two_a1():
    rs = RootSystem([SimpleType("D", 2)])
    assert len(rs.pos_roots) == 2
    assert rs.weyl_dimension((2, 0)) + rs.weyl_dimension((0, 2)) == 6


@pytest.mark.parametrize("bad", [("A", 0), ("B", 1), ("E", 5), ("F", 3), ("G", 3), ("X", 2)])
def test_invalid_simple_types(bad):
    with pytest.raises(ConfigurationError):
        SimpleType(*bad)


def test_build_examples():
    a1 = RootSystem([SimpleType("A", 1)])
    assert a1.pos_roots == ((2,),)
    assert a1.rho == (1,)

    g2 = RootSystem([SimpleType("G", 2)])
    assert len(g2.pos_roots) == 6
    assert SimpleType("G", 2).dim == 14

    prod = RootSystem([SimpleType("A", 1), SimpleType("A", 2)])
    assert len(prod.pos_roots) == 1 + 3
    # block-diagonal pairing: cross terms vanish
    assert prod.pairing((1, 0, 0), (0, 1, 0)) == 0
    assert prod.pairing((1, 0, 0), (0, 0, 1)) == 0
    a2 = RootSystem([SimpleType("A", 2)])
    assert prod.pairing((0, 1, 1), (0, 1, 1)) == a2.pairing((1, 1), (1, 1))


def test_positive_root_norms_positive():
    for series, rank in ALL_TYPES:
        rs = RootSystem([SimpleType(series, rank)])
        for alpha in rs.pos_roots:
            assert rs.pairing(alpha, alpha) > 0


def test_cartan_shape():
    rs = RootSystem([SimpleType("F", 4)])
    for i in range(4):
        assert rs.cartan[i][i] == 2
        for j in range(4):
            if i != j:
                assert rs.cartan[i][j] <= 0


def test_to_dominant_examples():
    a1 = RootSystem([SimpleType("A", 1)])
    assert a1.to_dominant((-3,)) == ((3,), -1)
    assert a1.to_dominant((0,)) == ((0,), 0)
    a2 = RootSystem([SimpleType("A", 2)])
    dom, sign = a2.to_dominant((-1, 2))
    assert dom == (1, 1) and sign == -1


def test_double_reflection_is_identity():
    rs = RootSystem([SimpleType("F", 4)])
    rnd = random.Random(11)
    for _ in range(50):
        lam = tuple(rnd.randint(-4, 4) for _ in range(4))
        for i in range(4):
            assert rs.reflect(i, rs.reflect(i, lam)) == lam


@pytest.mark.parametrize("series,rank", [("A", 2), ("B", 2), ("G", 2), ("A", 3), ("C", 3)])
def test_to_dominant_sign_tracks_reflection_parity(series, rank):
    # Walk a strictly dominant weight around with random reflections and
    # check the recovered chamber representative and determinant.
    rs = RootSystem([SimpleType(series, rank)])
    rnd = random.Random(7)
    start = tuple(rnd.randint(1, 3) for _ in range(rank))
    for _ in range(200):
        w = start
        sign = 1
        for _ in range(rnd.randint(0, 12)):
            i = rnd.randrange(rank)
            w2 = rs.reflect(i, w)
            if w2 != w:
                w = w2
                sign = -sign
        dom, s = rs.to_dominant(w)
        assert dom == start
        assert s == sign


def test_to_dominant_idempotent():
    rs = RootSystem([SimpleType("B", 3)])
    rnd = random.Random(3)
    for _ in range(100):
        lam = tuple(rnd.randint(-5, 5) for _ in range(3))
        dom, _ = rs.to_dominant(lam)
        assert rs.to_dominant(dom)[0] == dom


def test_weyl_dimension_examples():
    a2 = RootSystem([SimpleType("A", 2)])
    assert a2.weyl_dimension((1, 1)) == 8
    a1 = RootSystem([SimpleType("A", 1)])
    assert a1.weyl_dimension((0,)) == 1
    a4 = RootSystem([SimpleType("A", 4)])
    assert a4.weyl_dimension((0, 1, 1, 0)) == 75  # = dim su(10) - dim su(5)
    with pytest.raises(PreconditionError):
        a2.weyl_dimension((-1, 0))


def test_dual_weight_examples():
    a2 = RootSystem([SimpleType("A", 2)])
    assert a2.dual_weight((3, 0)) == (0, 3)
    g2 = RootSystem([SimpleType("G", 2)])
    assert g2.dual_weight((1, 0)) == (1, 0)
    a3 = RootSystem([SimpleType("A", 3)])
    assert a3.dual_weight((1, 0, 0)) == (0, 0, 1)


def test_dual_weight_via_lowest_weight():
    # The dual highest weight is minus the lowest weight of the module.
    from invconn.chars import irrep_character
    a3 = RootSystem([SimpleType("A", 3)])
    chi = irrep_character(a3, (1, 0, 0))
    lowest = min(chi.mult, key=a3.height)
    assert tuple(-x for x in lowest) == a3.dual_weight((1, 0, 0)) == (0, 0, 1)


def test_dual_weight_involution():
    rnd = random.Random(5)
    for series, rank in [("A", 3), ("D", 4), ("E", 6)]:
        rs = RootSystem([SimpleType(series, rank)])
        for _ in range(20):
            lam = tuple(rnd.randint(0, 2) for _ in range(rank))
            assert rs.dual_weight(rs.dual_weight(lam)) == lam


def test_weyl_orbit_and_signed_orbit():
    rs = RootSystem([SimpleType("B", 2)])
    orbit = rs.signed_orbit((1, 1))
    assert len(orbit) == rs.weyl_order == 8
    assert sum(orbit.values()) == 0  # equal numbers of even and odd elements
    assert orbit[(1, 1)] == 1
    with pytest.raises(PreconditionError):
        rs.signed_orbit((1, 0))


def test_orbit_size_via_stabilizer():
    rs = RootSystem([SimpleType("F", 4)])
    for lam in [(1, 0, 0, 0), (0, 1, 0, 1), (1, 1, 1, 1), (0, 0, 0, 0)]:
        assert rs.orbit_size(lam) == len(rs.weyl_orbit(lam))
    prod = RootSystem([SimpleType("A", 2), SimpleType("B", 2)])
    for lam in [(1, 0, 1, 0), (0, 0, 1, 1), (1, 1, 0, 0)]:
        assert prod.orbit_size(lam) == len(prod.weyl_orbit(lam))


def test_weyl_orders():
    assert RootSystem([SimpleType("E", 8)]).weyl_order == 696_729_600
    assert RootSystem([SimpleType("D", 8)]).weyl_order == 5_160_960
    assert RootSystem([SimpleType("A", 2), SimpleType("A", 2)]).weyl_order == 36


def test_product_structure_matches_factors():
    prod = RootSystem([SimpleType("A", 1), SimpleType("A", 2)])
    a1 = RootSystem([SimpleType("A", 1)])
    a2 = RootSystem([SimpleType("A", 2)])
    roots = {r for r in prod.pos_roots}
    expected = {(r[0], 0, 0) for r in a1.pos_roots} | {(0,) + r for r in a2.pos_roots}
    assert roots == expected
    assert prod.split((2, 1, 0)) == [(2,), (1, 0)]
    assert prod.join([(2,), (1, 0)]) == (2, 1, 0)
