"""Twisted subgroups of finite groups and the Bruck loops T(1/2) they carry."""
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import (
    ConstructionFailed,
    InternalInconsistency,
    LoopforgeError,
    NotAssociative,
    NotAutomorphism,
    NotInvolutory,
    NotTwisted,
    NotUniquely2Divisible,
    OrderCapExceeded,
)
from .permgrp import Permutation
from .tableloop import LoopTable, is_associative, is_bruck, is_uniquely_2_divisible

RADICAL_CAP = 512
AUTOMORPHISM_SEARCH_CAP = 100


class GroupTable(LoopTable):
    """A LoopTable certified to be associative."""

    def __init__(self, table, identity=None, **kw):
        super().__init__(table, identity, **kw)
        if not is_associative(self):
            raise NotAssociative("table is not associative")

    @classmethod
    def from_loop(cls, L):
        return cls(L.table, max_order=None)

    def commutator(self, x, y):
        """[x, y] = x^-1 y^-1 x y."""
        inv, T = self.inverses, self.table
        return int(T[T[inv[x], inv[y]], T[x, y]])

    def conjugate(self, x, y):
        """x^y = y^-1 x y."""
        return int(self.table[self.table[self.inverses[y], x], y])


def as_group(L):
    return L if isinstance(L, GroupTable) else GroupTable.from_loop(L)


@dataclass(frozen=True, eq=False)
class TwistedSubset:
    parent: GroupTable
    members: tuple

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(int(m) for m in self.members)))

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, x):
        return x in set(self.members)

    def __eq__(self, other):
        if isinstance(other, TwistedSubset):
            return self.members == other.members
        return NotImplemented

    def __hash__(self):
        return hash(self.members)


def _members(T):
    return sorted(set(int(t) for t in T))


def is_twisted_subgroup(G, T):
    """1 in T, T^-1 = T and xTx within T for all x in T."""
    T = _members(T)
    if G.identity not in T:
        return False
    mask = np.zeros(G.n, dtype=bool)
    mask[T] = True
    if not mask[G.inverses[T]].all():
        return False
    t = np.asarray(T)
    xtx = G.table[G.table[t[:, None], t[None, :]], t[:, None]]
    return bool(mask[xtx].all())


def _twisted(G, T):
    T = _members(T)
    if not is_twisted_subgroup(G, T):
        raise NotTwisted("subset is not a twisted subgroup")
    return TwistedSubset(G, tuple(T))


def k_tau(G, tau):
    """K(tau) = {g : g^tau = g^-1} for an automorphism tau with tau^2 = 1."""
    phi = np.asarray(tau.images if isinstance(tau, Permutation) else tau, dtype=np.intp)
    if phi[G.identity] != G.identity or not kernels.is_homomorphism(G.table, G.table, phi):
        raise NotAutomorphism("tau is not an automorphism")
    if not (phi[phi] == np.arange(G.n)).all():
        raise NotInvolutory("tau^2 is not the identity")
    K = np.nonzero(phi == G.inverses)[0].tolist()
    return TwistedSubset(G, tuple(K))


def generated_subgroup(G, S):
    return kernels.closure(G.table, np.asarray(_members(S), dtype=np.intp), G.identity).tolist()


def aschbacher_radical(G, T, cap=RADICAL_CAP):
    """{x1...xn : xi in T, x1^-1...xn^-1 = 1}, via reachability on pairs."""
    if G.n > cap:
        raise OrderCapExceeded(f"group order {G.n} exceeds the radical cap {cap}")
    T = _members(getattr(T, "members", T))
    R = kernels.pair_reach(G.table, G.inverses, np.asarray(T, dtype=np.intp), G.identity).tolist()
    if generated_subgroup(G, R) != R:
        raise InternalInconsistency("radical is not a subgroup")
    rset = set(R)
    for g in T:
        for r in R:
            if G.conjugate(r, g) not in rset:
                raise InternalInconsistency("radical is not normal in <T>")
    return R


def _squares(G, T):
    return {t: int(G.table[t, t]) for t in T}


def is_u2d_twisted(G, T):
    """Whether squaring permutes the members of T."""
    T = _members(getattr(T, "members", T))
    return sorted(_squares(G, T).values()) == T


def sqrt_in(G, T, x):
    """The unique y in T with y*y = x."""
    T = _members(getattr(T, "members", T))
    if not is_u2d_twisted(G, T):
        raise NotUniquely2Divisible("squaring is not a bijection on T")
    return _sqrt(G, T, x)


def _sqrt(G, T, x):
    k = G.element_order(x)
    root = None
    if k % 2:
        root = G.power(x, (k + 1) // 2)
    if root is None or __debug__:
        found = [t for t in T if G.table[t, t] == x]
        if len(found) != 1:
            raise NotUniquely2Divisible(f"element {x} has {len(found)} square roots in T")
        if root is not None and root != found[0]:
            raise InternalInconsistency("power-formula root disagrees with scan")
        root = found[0]
    return root


def t_half(G, T):
    """The Bruck loop on T with x.y = (y x^2 y)^(1/2); element i is sorted(T)[i]."""
    T = _twisted(G, getattr(T, "members", T)).members
    if not is_u2d_twisted(G, T):
        raise NotUniquely2Divisible("T is not uniquely 2-divisible")
    tab = G.table
    root = {}
    for t in T:
        root[int(tab[t, t])] = t
    pos = {t: i for i, t in enumerate(T)}
    m = len(T)
    out = np.empty((m, m), dtype=np.intp)
    for i, x in enumerate(T):
        x2 = tab[x, x]
        for j, y in enumerate(T):
            out[i, j] = pos[root[int(tab[tab[y, x2], y])]]
    try:
        Q = LoopTable(out, max_order=None)
    except LoopforgeError as exc:
        raise ConstructionFailed(f"T(1/2) is not a loop: {exc}") from exc
    if not (is_bruck(Q) and is_uniquely_2_divisible(Q)):
        raise ConstructionFailed("T(1/2) failed Bruck / unique 2-divisibility certification")
    return Q


def thalf_commutes(G, x, y):
    """x.y = y.x in T(1/2), decided in G as [x, y] = [x^-1, y^-1]."""
    inv = G.inverses
    return G.commutator(x, y) == G.commutator(int(inv[x]), int(inv[y]))


def involutory_automorphisms(G, cap=AUTOMORPHISM_SEARCH_CAP):
    """All automorphisms tau of G with tau^2 = 1 (identity included), by exhaustive search."""
    from .isotopy import isomorphisms

    if G.n > cap:
        raise OrderCapExceeded(f"group order {G.n} exceeds the automorphism search cap {cap}")
    out = []
    for phi in isomorphisms(G, G):
        phi = np.asarray(phi)
        if (phi[phi] == np.arange(G.n)).all():
            out.append(Permutation(phi.tolist(), check=False))
    return out


def inverting_involution(G, T, cap=AUTOMORPHISM_SEARCH_CAP):
    """Some involutory automorphism tau with T inside K(tau), or None."""
    T = _members(getattr(T, "members", T))
    inv = G.inverses
    for tau in involutory_automorphisms(G, cap):
        img = tau.images
        if all(img[t] == inv[t] for t in T):
            return tau
    return None
