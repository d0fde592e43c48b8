import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from loopforge import datasets, structure
from loopforge.errors import DegreeMismatch, EnumerationTooLarge, NotNilpotent, NotNormal, NotSolvable
from loopforge.permgrp import (
    PermGroup,
    Permutation,
    center,
    derived_length,
    derived_series,
    derived_subgroup,
    elementary_abelian_prime,
    equal_groups,
    group_from_generators,
    is_abelian,
    is_elementary_abelian,
    is_normal_subgroup,
    is_solvable,
    lower_central_series,
    nilpotency_class,
    normal_closure,
    quotient_is_elementary_abelian,
)


def cyc(n, *cycles):
    return Permutation.from_cycles(n, *cycles)


def sym(n):
    return group_from_generators([cyc(n, (0, 1)), cyc(n, tuple(range(n)))])


def alt(n):
    gens = [cyc(n, (0, 1, k)) for k in range(2, n)]
    return group_from_generators(gens)


# Permutation

def test_permutation_basics():
    p = cyc(4, (0, 1, 2))
    assert p(0) == 1 and p(2) == 0 and p(3) == 3
    assert p.order() == 3
    assert (p * ~p).is_identity()
    assert p**3 == Permutation.identity(4)
    assert p**-1 == ~p
    assert p.cycles() == [(0, 1, 2)]


def test_product_applies_left_factor_first():
    a, b = cyc(3, (0, 1)), cyc(3, (1, 2))
    assert (a * b)(0) == b(a(0))


def test_invalid_permutation():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])


# orders

def test_small_orders():
    assert group_from_generators([cyc(3, (0, 1, 2))]).order() == 3
    assert group_from_generators([cyc(3, (0, 1)), cyc(3, (0, 1, 2))]).order() == 6


@pytest.mark.parametrize("n,expected", [(4, 24), (5, 120), (6, 720), (8, 40320)])
def test_symmetric_orders(n, expected):
    assert sym(n).order() == expected


def test_alternating_order():
    assert alt(7).order() == 2520


def test_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        group_from_generators([cyc(3, (0, 1)), cyc(4, (0, 1))])


def test_mlt_table1_order():
    assert structure.mlt(datasets.table1()).order() == 139968


# membership and enumeration

def test_contains_small():
    C3 = group_from_generators([cyc(3, (0, 1, 2))])
    assert C3.contains(cyc(3, (0, 2, 1)))
    assert not C3.contains(cyc(3, (0, 1)))


def test_enumeration_cap():
    with pytest.raises(EnumerationTooLarge):
        sym(8).elements(cap=1000)


def test_elements_of_mlt_table1():
    G = structure.mlt(datasets.table1())
    E = G.element_array()
    assert len(E) == 139968
    assert len({row.tobytes() for row in E}) == 139968


SMALL_GROUPS = [
    [cyc(4, (0, 1, 2, 3)), cyc(4, (0, 2))],
    [cyc(5, (0, 1)), cyc(5, (0, 1, 2, 3, 4))],
    [cyc(6, (0, 1, 2)), cyc(6, (3, 4, 5)), cyc(6, (0, 3), (1, 4), (2, 5))],
    [cyc(7, (0, 1, 2, 3, 4, 5, 6)), cyc(7, (1, 2, 4), (3, 6, 5))],
    [cyc(8, (0, 1), (2, 3)), cyc(8, (0, 2), (1, 3)), cyc(8, (4, 5, 6, 7))],
]


@pytest.mark.parametrize("gens", SMALL_GROUPS)
def test_contains_agrees_with_closure(gens):
    n = gens[0].degree
    G = group_from_generators(gens)
    closed = oracles.generated_group([g.images for g in gens], n)
    assert G.order() == len(closed)
    assert {p.images for p in G.elements()} == closed
    rng = random.Random(n)
    for _ in range(300):
        q = list(range(n))
        rng.shuffle(q)
        assert G.contains(Permutation(q)) == (tuple(q) in closed)


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 7).flatmap(lambda n: st.lists(st.permutations(range(n)), min_size=1, max_size=3)))
def test_order_and_membership_random(gen_lists):
    n = len(gen_lists[0])
    closed = oracles.generated_group(gen_lists, n)
    G = PermGroup(n, gen_lists)
    assert G.order() == len(closed)
    for p in list(closed)[:50]:
        assert p in G


@settings(max_examples=30, deadline=None)
@given(st.integers(3, 7).flatmap(
    lambda n: st.tuples(st.lists(st.permutations(range(n)), min_size=1, max_size=3), st.permutations(range(n)))))
def test_order_independent_of_generator_order_and_base(args):
    gens, base = args
    G1 = PermGroup(len(base), gens)
    G2 = PermGroup(len(base), list(reversed(gens)), base=list(base))
    assert G1.order() == G2.order()
    assert equal_groups(G1, G2)


@settings(max_examples=30, deadline=None)
@given(st.integers(3, 7).flatmap(
    lambda n: st.tuples(st.lists(st.permutations(range(n)), min_size=1, max_size=3), st.integers(0, n - 1))))
def test_orbit_stabilizer(args):
    gens, point = args
    n = len(gens[0])
    G = PermGroup(n, gens)
    H = G.stabilizer(point)
    assert H.order() * len(G.orbit(point)) == G.order()
    els = oracles.generated_group(gens, n)
    assert H.order() == sum(1 for p in els if p[point] == point)
    assert all(h.images[point] == point for h in H.generators)


# stabilisers of loop groups

def test_stabilizers_table1():
    L = datasets.table1()
    assert structure.mlt(L).stabilizer(L.identity).order() == 5184
    assert structure.rmlt(L).stabilizer(L.identity).order() == 9
    C3 = group_from_generators([cyc(3, (0, 1, 2))])
    assert C3.stabilizer(0).is_trivial()


# series

def test_s3_derived_length():
    assert derived_length(sym(3)) == 2


def test_s4_derived_series():
    assert [H.order() for H in derived_series(sym(4))] == [24, 12, 4, 1]


def test_s5_not_solvable():
    assert not is_solvable(sym(5))
    with pytest.raises(NotSolvable):
        derived_length(sym(5))


def test_mlt_table1_series():
    G = structure.mlt(datasets.table1())
    orders = [H.order() for H in derived_series(G)]
    assert orders[:2] == [139968, 46656]
    assert derived_length(G) == 3


def test_second_derived_of_mlt_table1_is_elementary_abelian_of_order_729():
    G2 = derived_series(structure.mlt(datasets.table1()))[2]
    assert G2.order() == 729
    assert is_elementary_abelian(G2, 3)


def test_second_derived_matches_sympy():
    sympy_pg = pytest.importorskip("sympy.combinatorics")
    L = datasets.table1()
    gens = [L.table[:, x].tolist() for x in range(L.n)] + [L.table[x].tolist() for x in range(L.n)]
    # sympy composes left to right as well: (p*q)(i) = q(p(i))
    G = sympy_pg.PermutationGroup([sympy_pg.Permutation(g) for g in gens])
    orders = [H.order() for H in G.derived_series()]
    assert orders == [139968, 46656, 729, 1]


def test_inn_table1_series():
    H = structure.inn(datasets.table1())
    assert H.order() == 5184
    assert derived_length(H) == 2
    Hd = derived_subgroup(H)
    assert Hd.order() == 81 and is_elementary_abelian(Hd, 3)


def test_derived_subgroup_is_normal():
    for G in (sym(4), structure.inn(datasets.table1()), structure.rmlt(datasets.table2())):
        assert is_normal_subgroup(derived_subgroup(G), G)


def test_derived_subgroup_matches_closure_oracle():
    for gens in SMALL_GROUPS:
        n = gens[0].degree
        els = oracles.generated_group([g.images for g in gens], n)
        D = derived_subgroup(group_from_generators(gens))
        assert {p.images for p in D.elements()} == oracles.group_commutator_subgroup(els, n)


# centre and nilpotency

def test_center_s3_trivial():
    assert center(sym(3)).is_trivial()


def test_center_matches_oracle():
    for gens in SMALL_GROUPS:
        n = gens[0].degree
        G = group_from_generators(gens)
        els = oracles.generated_group([g.images for g in gens], n)
        assert {p.images for p in center(G).elements()} == oracles.group_center(els)


def test_center_elements_commute_with_everything():
    G = structure.rmlt(datasets.table1())
    Z = center(G)
    E = G.elements()
    for z in Z.elements():
        assert all(z * g == g * z for g in E)


def test_rmlt_table1():
    K = structure.rmlt(datasets.table1())
    assert K.order() == 243
    assert nilpotency_class(K) == 2
    Z = center(K)
    assert Z.order() == 9
    assert equal_groups(derived_subgroup(K), Z)
    assert is_elementary_abelian(Z, 3)
    assert quotient_is_elementary_abelian(K, Z, 3)


def test_nilpotency():
    assert nilpotency_class(group_from_generators([cyc(4, (0, 1, 2, 3))])) == 1
    D4 = group_from_generators([cyc(4, (0, 1, 2, 3)), cyc(4, (0, 2))])
    assert nilpotency_class(D4) == 2
    assert [H.order() for H in lower_central_series(D4)] == [8, 2, 1]
    with pytest.raises(NotNilpotent):
        nilpotency_class(sym(3))


def test_trivial_group_conventions():
    T = PermGroup(3)
    assert T.order() == 1
    assert nilpotency_class(T) == 0 and derived_length(T) == 0
    assert elementary_abelian_prime(T) is None


# predicates

def test_abelian_predicates():
    V = group_from_generators([cyc(4, (0, 1), (2, 3)), cyc(4, (0, 2), (1, 3))])
    assert is_abelian(V) and is_elementary_abelian(V, 2)
    assert elementary_abelian_prime(V) == 2
    C4 = group_from_generators([cyc(4, (0, 1, 2, 3))])
    assert is_abelian(C4) and not is_elementary_abelian(C4, 2)
    assert elementary_abelian_prime(C4) is None
    assert not is_abelian(sym(3))


def test_rinn_elementary_abelian():
    R = structure.rinn(datasets.table1())
    assert R.order() == 9 and is_elementary_abelian(R, 3)


def test_mlt_equals_lmlt_table1():
    L = datasets.table1()
    assert equal_groups(structure.mlt(L), structure.lmlt(L))
    assert not equal_groups(structure.mlt(L), structure.rmlt(L))


def test_normal_closure():
    S4 = sym(4)
    N = normal_closure(S4, [cyc(4, (0, 1), (2, 3))])
    assert N.order() == 4
    assert normal_closure(S4, [cyc(4, (0, 1))]).order() == 24


def test_quotient_requires_normal_subgroup():
    S3 = sym(3)
    H = group_from_generators([cyc(3, (0, 1))])
    with pytest.raises(NotNormal):
        quotient_is_elementary_abelian(S3, H, 2)
    A3 = derived_subgroup(S3)
    assert quotient_is_elementary_abelian(S3, A3, 2)
    assert not quotient_is_elementary_abelian(S3, A3, 3)


def test_mlt_table1_has_order_three_element_outside_derived_subgroup():
    L = datasets.table1()
    G = structure.mlt(L)
    D = derived_subgroup(G)
    found = [g for g in G.generators if g.order() == 3 and not D.contains(g)]
    assert found
    # an element of order 3 outside G' spans a C3 with trivial intersection, so |G| = 3 |G'|
    assert G.order() == 3 * D.order()
