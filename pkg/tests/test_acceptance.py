"""Acceptance criteria AC1-AC11, each with its runtime bound.

Every test is tagged with ``@pytest.mark.acceptance("ACn")``; the run summary
prints one PASS/FAIL line per criterion.
"""
import time
from itertools import product

import numpy as np
import pytest

from conftest import clear_caches
from corpus import bruck_corpus
from loopforge import datasets
from loopforge import permgrp as pg
from loopforge import structure as st
from loopforge.isotopy import is_isomorphic, isotopy_classes
from loopforge.report import AnalysisOptions, analyze
from loopforge.tableloop import is_associative, is_bruck, is_commutative, is_uniquely_2_divisible
from loopforge.twisted import (
    as_group,
    aschbacher_radical,
    generated_subgroup,
    involutory_automorphisms,
    k_tau,
    t_half,
    thalf_commutes,
)


class Clock:
    def __init__(self, bound, record):
        self.bound = bound
        self.record = record

    def __enter__(self):
        clear_caches()
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0
        self.record("runtime_s", round(self.elapsed, 3))
        return False

    def check(self):
        assert self.elapsed < self.bound, f"took {self.elapsed:.2f} s, bound {self.bound} s"


@pytest.fixture
def clock(record_property):
    def make(bound):
        return Clock(bound, record_property)
    return make


def detail(record_property, text):
    record_property("detail", text)


@pytest.mark.acceptance("AC1")
def test_ac1_table_integrity(clock, record_property):
    with clock(1.0) as c:
        reports = []
        for name in ("table1", "table2"):
            L = datasets.builtin(name)
            assert L.n == 27 and L.identity + 1 == 1
            reports.append(analyze(L, AnalysisOptions(timings=False)))
    for rep in reports:
        assert rep.order == 27 and rep.identity == 1
        assert rep.properties["exponent"] == 3
        assert rep.properties["right_bol"] is True
    detail(record_property, f"both tables: order 27, identity 1, exponent 3, right Bol ({c.elapsed:.2f} s)")
    c.check()


@pytest.mark.acceptance("AC2")
def test_ac2_mlt_structure(clock, record_property):
    with clock(30.0) as c:
        L = datasets.table1()
        G = st.mlt(L)
        same = pg.equal_groups(G, st.lmlt(L))
        series = pg.derived_series(G)
        length = pg.derived_length(G)
        g2 = series[2]
        g2_p = pg.elementary_abelian_prime(g2)
    orders = [H.order() for H in series]
    detail(record_property, f"derived series orders {orders}, G'' elementary abelian p={g2_p} ({c.elapsed:.2f} s)")
    assert G.order() == 2**6 * 3**7 == 139968
    assert same
    assert length == 3
    assert series[1].order() == 46656
    assert g2_p == 3
    assert g2.order() == 243
    c.check()


@pytest.mark.acceptance("AC3")
def test_ac3_inn_structure(clock, record_property):
    with clock(30.0) as c:
        H = st.inn(datasets.table1())
        length = pg.derived_length(H)
        Hd = pg.derived_subgroup(H)
    detail(record_property, f"|Inn| = {H.order()}, derived length {length}, |H'| = {Hd.order()} ({c.elapsed:.2f} s)")
    assert H.order() == 5184
    assert length == 2
    assert Hd.order() == 81 and pg.is_elementary_abelian(Hd, 3)
    c.check()


@pytest.mark.acceptance("AC4")
def test_ac4_rmlt_structure(clock, record_property):
    with clock(5.0) as c:
        K = st.rmlt(datasets.table1())
        cls = pg.nilpotency_class(K)
        Kd = pg.derived_subgroup(K)
        Z = pg.center(K)
        eq = pg.equal_groups(Kd, Z)
        quot = pg.quotient_is_elementary_abelian(K, Z, 3)
    detail(record_property, f"|K| = {K.order()}, class {cls}, |K'| = |Z(K)| = {Z.order()} ({c.elapsed:.2f} s)")
    assert K.order() == 243
    assert cls == 2
    assert eq and Z.order() == 9 and pg.is_elementary_abelian(Z, 3)
    assert quot
    c.check()


@pytest.mark.acceptance("AC5")
def test_ac5_rinn(clock, record_property):
    with clock(5.0) as c:
        R = st.rinn(datasets.table1())
        ea = pg.is_elementary_abelian(R, 3)
    detail(record_property, f"|RInn| = {R.order()}, elementary abelian: {ea} ({c.elapsed:.2f} s)")
    assert R.order() == 9 and ea
    c.check()


@pytest.mark.acceptance("AC6")
def test_ac6_substructures(clock, record_property):
    nine = list(range(9))
    with clock(10.0) as c:
        L = datasets.table1()
        nr, nm, nl = st.nucleus_right(L), st.nucleus_middle(L), st.nucleus_left(L)
        comm, Z = st.commutant(L), st.center_loop(L)
        A, D = st.associator_subloop(L), st.derived_subloop(L)
        lattice = [list(N) for N in st.all_normal_subloops(L)]
        nl_loop = nl.as_loop()
    detail(record_property, f"N_l = A(Q) = Q' = {{1..9}}, lattice sizes {[len(N) for N in lattice]} ({c.elapsed:.2f} s)")
    assert list(nr) == list(nm) == [0]
    assert comm == [0] and list(Z) == [0]
    assert list(nl) == list(A) == list(D) == nine
    assert is_associative(nl_loop) and is_commutative(nl_loop) and nl_loop.exponent() == 3
    assert lattice == [[0], nine, list(range(27))]
    c.check()


@pytest.mark.acceptance("AC7")
def test_ac7_isotopy(clock, record_property):
    with clock(300.0) as c:
        L1, L2 = datasets.table1(), datasets.table2()
        part = isotopy_classes(L1)
        own = part.class_of(L1.identity)
        hits = [i for i, (rep, _) in enumerate(part.classes) if is_isomorphic(part.isotopes[rep], L2) is not None]
        mlt_orders = {st.mlt(I).order() for I in part.isotopes}
    detail(record_property, f"{len(part)} classes, table2 in class {hits}, table1 in class {own} ({c.elapsed:.2f} s)")
    assert len(part) == 2
    assert hits == [1 - own]
    assert mlt_orders == {139968}
    c.check()


def odd_abelian_groups(limit):
    """One representative per isomorphism type of abelian group of odd order <= limit."""
    def partitions(k, largest=None):
        largest = largest or k
        if k == 0:
            yield ()
            return
        for first in range(min(k, largest), 0, -1):
            for rest in partitions(k - first, first):
                yield (first,) + rest

    out = []
    for n in range(1, limit + 1, 2):
        m, factors = n, {}
        p = 3
        while m > 1:
            while m % p == 0:
                factors[p] = factors.get(p, 0) + 1
                m //= p
            p += 2
        choices = [[tuple(p**e for e in part) for part in partitions(k)] for p, k in sorted(factors.items())]
        for combo in product(*choices):
            moduli = [q for part in combo for q in part] or [1]
            out.append((n, moduli))
    return out


@pytest.mark.acceptance("AC8")
def test_ac8_glauberman_pipeline(clock, record_property):
    with clock(10.0) as c:
        groups = odd_abelian_groups(81)
        for n, moduli in groups:
            G = as_group(datasets.abelian(*moduli))
            assert G.n == n
            assert t_half(G, range(n)) == G, moduli
        G21 = as_group(datasets.g21())
        Q = t_half(G21, range(21))
        bruck, assoc = is_bruck(Q), is_associative(Q)
        orders_match = all(Q.element_order(x) == G21.element_order(x) for x in range(21))
    detail(record_property, f"{len(groups)} odd abelian groups, T(1/2) of order-21 group nonassociative Bruck ({c.elapsed:.2f} s)")
    assert bruck and not assoc and orders_match
    c.check()


@pytest.mark.acceptance("AC9")
def test_ac9_commutant_normal_suite(clock, record_property):
    with clock(30.0) as c:
        loops = bruck_corpus.__wrapped__()
        checked = 0
        for name, Q in loops:
            assert is_bruck(Q) and is_uniquely_2_divisible(Q), name
            maps = np.unique(st.inner_generators(Q).right.reshape(-1, Q.n), axis=0)
            assert all(st.is_automorphism(Q, r.tolist()) for r in maps), name
            C = st.commutant(Q)
            assert st.is_subloop(Q, C) and st.is_normal(Q, C), name
            checked += 1
    detail(record_property, f"{checked} uniquely 2-divisible Bruck loops, orders {sorted(L.n for _, L in loops)} ({c.elapsed:.2f} s)")
    assert checked >= 10
    c.check()


RADICAL_GROUPS = ["c3", "c5", "c7", "c9", "c3xc3", "g21", "g39", "g55", "heis27", "s3", "d4", "q8", "a4", "s4"]


@pytest.mark.acceptance("AC10")
def test_ac10_radical_suite(clock, record_property):
    with clock(60.0) as c:
        abelian = [datasets.builtin(n) for n in ("c3", "c5", "c7", "c9", "c3xc3")]
        abelian += [datasets.abelian(2, 4), datasets.abelian(2, 2, 2), datasets.abelian(5, 5), datasets.cyclic(12)]
        for A in abelian:
            A = as_group(A)
            subsets = [range(A.n), [A.identity]] + [list(k_tau(A, t)) for t in involutory_automorphisms(A)]
            for T in subsets:
                assert aschbacher_radical(A, T) == [A.identity]
        for name in ("s3", "d4", "a4"):
            G = as_group(datasets.builtin(name))
            R = aschbacher_radical(G, range(G.n))
            D = pg.derived_subgroup(st.lmlt(G))
            # lmlt(G) is the left regular action; its derived subgroup moves e onto G'
            assert R == sorted(D.orbit(G.identity)), name
        instances = 0
        extra = [("d5", datasets.dihedral(5)), ("d6", datasets.dihedral(6))]
        for name, G in [(n, datasets.builtin(n)) for n in RADICAL_GROUPS] + extra:
            G = as_group(G)
            assert G.n <= 100
            for tau in involutory_automorphisms(G):
                K = k_tau(G, tau)
                if len(generated_subgroup(G, K)) == G.n:
                    assert aschbacher_radical(G, K) == [G.identity], name
                    instances += 1
    detail(record_property, f"{instances} generating K(tau) instances with trivial radical ({c.elapsed:.2f} s)")
    assert instances > 0
    c.check()


@pytest.mark.acceptance("AC11")
def test_ac11_commutation_oracle(clock, record_property):
    G = as_group(datasets.g21())
    with clock(1.0) as c:
        Q = t_half(G, range(21))
        agree = sum(thalf_commutes(G, x, y) == (Q.mul(x, y) == Q.mul(y, x)) for x in range(21) for y in range(21))
    detail(record_property, f"{agree}/441 pairs agree ({c.elapsed:.3f} s)")
    assert agree == 441
    c.check()
