import random

import pytest

from invconn.chars import (Character, PlethysmOps, UsageError, adams, alt2, alt3,
                           decompose, expand, expression_character, irrep_character,
                           multiplicity, plethysm21, sym2, sym3, tensor,
                           trivial_character)
from invconn.rootsys import PreconditionError, RootSystem, SimpleType


@pytest.fixture(scope="module")
def a1():
    return RootSystem([SimpleType("A", 1)])


@pytest.fixture(scope="module")
def a2():
    return RootSystem([SimpleType("A", 2)])


def test_irrep_character_examples(a1, a2):
    assert irrep_character(a1, (2,)).mult == {(2,): 1, (0,): 1, (-2,): 1}
    ad = irrep_character(a2, (1, 1))
    assert ad.dim() == 8 and ad[(0, 0)] == 2
    g2 = RootSystem([SimpleType("G", 2)])
    chi = irrep_character(g2, (0, 1))
    assert chi.dim() == g2.weyl_dimension((0, 1)) == 14
    assert chi[(0, 0)] == 2
    with pytest.raises(PreconditionError):
        irrep_character(a2, (1, -1))


def test_sl3_adjoint_against_explicit_root_system(a2):
    # Brute-force construction: the adjoint weights are the six roots plus a
    # double zero weight.
    roots = set(a2.pos_roots) | {tuple(-x for x in r) for r in a2.pos_roots}
    expected = {r: 1 for r in roots}
    expected[(0, 0)] = 2
    assert irrep_character(a2, (1, 1)).mult == expected


def test_weyl_invariance_spot_checks(a2):
    chi = irrep_character(a2, (2, 1))
    rnd = random.Random(0)
    weights = list(chi.mult)
    for _ in range(25):
        w = rnd.choice(weights)
        dom = a2.to_dominant(w)[0]
        assert chi[w] == chi[dom]


def test_tensor_examples(a1, a2):
    v = irrep_character(a1, (1,))
    assert decompose(tensor(v, v)) == [((2,), 1), ((0,), 1)]
    ad = irrep_character(a2, (1, 1))
    sq = tensor(ad, ad)
    assert sq.dim() == 64
    assert multiplicity(sq, (1, 1)) == 2
    w = irrep_character(a1, (2,))
    assert decompose(tensor(w, w)) == [((4,), 1), ((2,), 1), ((0,), 1)]
    b2 = RootSystem([SimpleType("B", 2)])
    with pytest.raises(UsageError):
        tensor(v, irrep_character(b2, (1, 0)))


def test_adams_examples(a1, a2):
    v = irrep_character(a1, (1,))
    assert adams(v, 2).mult == {(2,): 1, (-2,): 1}
    assert adams(v, 1) is v
    ad = irrep_character(a2, (1, 1))
    tripled = adams(ad, 3)
    assert tripled.dim() == 8
    assert all(tripled[tuple(3 * x for x in w)] == m for w, m in ad.mult.items())


def test_alt2_sym2_examples(a1, a2):
    ad = irrep_character(a2, (1, 1))
    assert sorted(decompose(alt2(ad))) == sorted([((3, 0), 1), ((0, 3), 1), ((1, 1), 1)])
    assert sorted(decompose(sym2(ad))) == sorted([((2, 2), 1), ((1, 1), 1), ((0, 0), 1)])
    v = irrep_character(a1, (1,))
    assert decompose(alt2(v)) == [((0,), 1)]
    assert decompose(sym2(v)) == [((2,), 1)]


def test_square_dimensions_random():
    rnd = random.Random(1)
    systems = [RootSystem([SimpleType("A", 2)]), RootSystem([SimpleType("B", 2)]),
               RootSystem([SimpleType("A", 1), SimpleType("A", 1)])]
    for rs in systems:
        for _ in range(5):
            lam = tuple(rnd.randint(0, 2) for _ in range(rs.rank))
            chi = irrep_character(rs, lam)
            d = chi.dim()
            assert alt2(chi).dim() == d * (d - 1) // 2
            assert sym2(chi).dim() == d * (d + 1) // 2
            assert alt3(chi).dim() == d * (d - 1) * (d - 2) // 6
            assert sym3(chi).dim() == d * (d + 1) * (d + 2) // 6


def test_alt3_sym3_examples(a1, a2):
    w = irrep_character(a1, (2,))
    assert decompose(alt3(w)) == [((0,), 1)]
    ad = irrep_character(a2, (1, 1))
    assert multiplicity(alt3(ad), (0, 0)) == 1
    v = irrep_character(a1, (1,))
    assert decompose(sym3(v)) == [((3,), 1)]


def test_sym3_brute_force_oracle(a1):
    # Unordered triples of weights of the 2-dimensional module.
    import itertools
    v = irrep_character(a1, (1,))
    weights = [w for w, m in v.mult.items() for _ in range(m)]
    counts = {}
    for combo in itertools.combinations_with_replacement(range(len(weights)), 3):
        tot = tuple(sum(weights[i][k] for i in combo) for k in range(1))
        counts[tot] = counts.get(tot, 0) + 1
    assert sym3(v).mult == counts


def test_multiplicity_examples(a1, a2):
    assert multiplicity(alt2(irrep_character(a1, (2,))), (2,)) == 1
    assert multiplicity(sym2(irrep_character(a1, (1,))), (0,)) == 0
    a4 = RootSystem([SimpleType("A", 4)])
    al = alt2(irrep_character(a4, (1, 0, 0, 1)))
    assert multiplicity(al, (2, 0, 1, 0)) == 1


def test_decompose_round_trip_examples(a1, a2):
    v = irrep_character(a1, (1,))
    assert decompose(tensor(v, v)) == [((2,), 1), ((0,), 1)]
    terms = [((2, 0), 2), ((0, 1), 1), ((1, 1), 3)]
    chi = expand(a2, terms)
    assert sorted(decompose(chi)) == sorted(terms)
    bad = chi - irrep_character(a2, (3, 3))
    with pytest.raises(UsageError):
        decompose(bad)


def test_mult_point_matches_materialized(a2):
    ad = irrep_character(a2, (1, 1))
    ops = PlethysmOps(ad)
    mats = {"alt2": alt2(ad), "sym2": sym2(ad), "alt3": alt3(ad), "sym3": sym3(ad),
            "p21": plethysm21(ad)}
    fns = {"alt2": ops.alt2_at, "sym2": ops.sym2_at, "alt3": ops.alt3_at,
           "sym3": ops.sym3_at, "p21": ops.plethysm21_at}
    probe = set()
    for chi in mats.values():
        probe.update(chi.mult)
    probe.add((7, 7))  # off-support
    for name in mats:
        for nu in probe:
            assert fns[name](nu) == mats[name][nu], (name, nu)


def test_mult_point_examples(a1, a2):
    v = irrep_character(a1, (1,))
    assert PlethysmOps(v).alt2_at((0,)) == 1
    ad = irrep_character(a2, (1, 1))
    ops = PlethysmOps(ad)
    assert ops.sym2_at((2, 2)) == 1
    assert ops.mult_in_alt2((1, 1)) == multiplicity(alt2(ad), (1, 1)) == 1


def test_virtual_characters_allowed_in_arithmetic(a2):
    ad = irrep_character(a2, (1, 1))
    virt = ad - irrep_character(a2, (2, 2))
    assert not virt.is_genuine()
    with pytest.raises(UsageError):
        PlethysmOps(virt)


def _random_genuine_character(rs, rnd, max_terms=3, max_label=2):
    terms = []
    for _ in range(rnd.randint(1, max_terms)):
        lam = tuple(rnd.randint(0, max_label) for _ in range(rs.rank))
        terms.append((lam, rnd.randint(1, 2)))
    merged = {}
    for lam, m in terms:
        merged[lam] = merged.get(lam, 0) + m
    return expand(rs, merged.items()), merged


SMALL_SYSTEMS = [
    [("A", 1)], [("A", 2)], [("A", 3)], [("B", 2)], [("C", 3)], [("G", 2)],
    [("A", 1), ("A", 2)], [("A", 1), ("A", 1), ("A", 1)], [("B", 2), ("A", 1)],
    [("D", 4)],
]


def test_decompose_and_klimyk_agree_on_random_characters():
    rnd = random.Random(42)
    count = 0
    while count < 50:
        rs = RootSystem([SimpleType(*f) for f in SMALL_SYSTEMS[count % len(SMALL_SYSTEMS)]])
        chi, merged = _random_genuine_character(rs, rnd)
        got = dict(decompose(chi))
        assert got == merged
        for lam in merged:
            assert multiplicity(chi, lam) == merged[lam]
        assert multiplicity(chi, (3,) * rs.rank) == got.get((3,) * rs.rank, 0)
        count += 1


def test_binomial_identity_on_sums():
    # alt2(x + y) = alt2 x + x*y + alt2 y, and the symmetric analogue.
    rnd = random.Random(9)
    for _ in range(10):
        rs = RootSystem([SimpleType(*f) for f in SMALL_SYSTEMS[rnd.randrange(len(SMALL_SYSTEMS))]])
        x = irrep_character(rs, tuple(rnd.randint(0, 2) for _ in range(rs.rank)))
        y = irrep_character(rs, tuple(rnd.randint(0, 2) for _ in range(rs.rank)))
        s = x + y
        assert alt2(s) == alt2(x) + tensor(x, y) + alt2(y)
        assert sym2(s) == sym2(x) + tensor(x, y) + sym2(y)


def test_expression_character_dispatch(a1):
    v = irrep_character(a1, (1,))
    assert expression_character("tensor", v).mult == tensor(v, v).mult
    assert expression_character("plethysm21", v).mult == plethysm21(v).mult
    with pytest.raises(UsageError):
        expression_character("nope", v)


def test_trivial_character(a2):
    one = trivial_character(a2)
    assert one.dim() == 1
    ad = irrep_character(a2, (1, 1))
    assert tensor(one, ad) == ad
