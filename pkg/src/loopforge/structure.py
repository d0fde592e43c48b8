"""Substructures of finite loops: multiplication groups, nuclei, normal subloops."""
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations

import numpy as np

from . import kernels
from .errors import IllDefined, InternalInconsistency, NotASubloop, NotNormal, OrderCapExceeded
from .permgrp import PermGroup, Permutation
from .tableloop import LoopTable, is_associative, is_commutative

NORMAL_LATTICE_CAP = 256


@dataclass(frozen=True, eq=False)
class SubloopSet:
    parent: LoopTable
    members: tuple

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(int(m) for m in self.members)))

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, x):
        return x in self.mask_set

    def __eq__(self, other):
        if isinstance(other, SubloopSet):
            return self.members == other.members and self.parent.n == other.parent.n
        return NotImplemented

    def __hash__(self):
        return hash(self.members)

    @cached_property
    def mask_set(self):
        return frozenset(self.members)

    def mask(self):
        out = np.zeros(self.parent.n, dtype=bool)
        out[list(self.members)] = True
        return out

    def labels(self, base=1):
        return [m + base for m in self.members]

    def as_loop(self):
        return self.parent.restrict(self.members)

    def __repr__(self):
        return f"SubloopSet({self.labels()})"


def _sub(L, members):
    return SubloopSet(L, tuple(members))


# multiplication groups

@lru_cache(maxsize=64)
def mlt(L):
    gens = [L.table[:, x].tolist() for x in range(L.n)] + [L.table[x].tolist() for x in range(L.n)]
    return PermGroup(L.n, gens)


@lru_cache(maxsize=64)
def rmlt(L):
    return PermGroup(L.n, [L.table[:, x].tolist() for x in range(L.n)])


@lru_cache(maxsize=64)
def lmlt(L):
    return PermGroup(L.n, [L.table[x].tolist() for x in range(L.n)])


def inn(L):
    return mlt(L).stabilizer(L.identity)


def rinn(L):
    return rmlt(L).stabilizer(L.identity)


def linn(L):
    return lmlt(L).stabilizer(L.identity)


class InnerGenerators:
    """All R_{x,y}, T_x and L_{x,y} of a loop.

    ``right[x, y]``, ``middle[x]`` and ``left[x, y]`` are image arrays of the
    respective maps.
    """

    def __init__(self, L):
        T, n = L.table, L.n
        ld, rd = L._ldiv, L._rdiv
        z = np.arange(n)
        # R_{x,y}: z -> ((z x) y) / (x y)
        zx = T[:, :].T  # zx[x, z] = z*x
        zxy = T[zx[:, None, :], np.arange(n)[None, :, None]]  # [x, y, z] = (z x) y
        self.right = rd[zxy, T[:, :, None]]
        # T_x: z -> x \ (z x)
        self.middle = ld[z[:, None], zx]
        # L_{x,y}: z -> (y x) \ (y (x z))
        yxz = T[np.arange(n)[None, :, None], T[:, None, :]]  # [x, y, z] = y (x z)
        self.left = ld[T.T[:, :, None], yxz]
        e = L.identity
        for arr in (self.right, self.middle, self.left):
            if not (arr[..., e] == e).all():
                raise InternalInconsistency("an inner mapping moves the identity")
        self.n = n

    def stacked(self):
        """Every inner generator as rows of one (m, n) array, duplicates removed."""
        n = self.n
        allmaps = np.concatenate(
            [self.right.reshape(-1, n), self.middle.reshape(-1, n), self.left.reshape(-1, n)]
        )
        return np.unique(allmaps, axis=0)

    @property
    def right_maps(self):
        return [Permutation(r, check=False) for r in self.right.reshape(-1, self.n).tolist()]

    @property
    def middle_maps(self):
        return [Permutation(r, check=False) for r in self.middle.tolist()]

    @property
    def left_maps(self):
        return [Permutation(r, check=False) for r in self.left.reshape(-1, self.n).tolist()]

    def group(self):
        return PermGroup(self.n, self.stacked().tolist())


@lru_cache(maxsize=64)
def inner_generators(L):
    return InnerGenerators(L)


@lru_cache(maxsize=64)
def _inner_stack(L):
    return inner_generators(L).stacked()


# nuclei, commutant, centre

@lru_cache(maxsize=64)
def _assoc_mask(L):
    T, n = L.table, L.n
    lhs = T[T]  # (xy)z
    rhs = T[np.arange(n)[:, None, None], T[None, :, :]]  # x(yz)
    return lhs == rhs


def nucleus_left(L):
    """a with (ax)y = a(xy) for all x, y."""
    return _sub(L, np.nonzero(_assoc_mask(L).all(axis=(1, 2)))[0])


def nucleus_middle(L):
    """a with (xa)y = x(ay) for all x, y."""
    return _sub(L, np.nonzero(_assoc_mask(L).all(axis=(0, 2)))[0])


def nucleus_right(L):
    """a with (xy)a = x(ya) for all x, y."""
    return _sub(L, np.nonzero(_assoc_mask(L).all(axis=(0, 1)))[0])


def nucleus(L):
    m = _assoc_mask(L)
    keep = m.all(axis=(1, 2)) & m.all(axis=(0, 2)) & m.all(axis=(0, 1))
    return _sub(L, np.nonzero(keep)[0])


def commutant(L):
    """Elements commuting with everything, as a sorted list (not always a subloop)."""
    return np.nonzero((L.table == L.table.T).all(axis=1))[0].tolist()


def commutant_of(L, x):
    return np.nonzero(L.table[:, x] == L.table[x, :])[0].tolist()


def fixed_points_of_inner(L):
    stack = _inner_stack(L)
    return np.nonzero((stack == np.arange(L.n)).all(axis=0))[0].tolist()


def center_loop(L):
    """Z(Q) = N(Q) & C(Q), cross-checked against the common fixed points of Inn(Q)."""
    via_nc = sorted(set(nucleus(L).members) & set(commutant(L)))
    via_fix = fixed_points_of_inner(L)
    if via_nc != via_fix:
        raise InternalInconsistency(f"centre by N&C {via_nc} != fixed points {via_fix}")
    return _sub(L, via_nc)


# subloops

def subloop_generated(L, S):
    return _sub(L, kernels.closure(L.table, np.asarray(sorted(set(int(s) for s in S)), dtype=np.intp), L.identity))


def is_subloop(L, S):
    members = list(S)
    if L.identity not in members:
        return False
    mask = np.zeros(L.n, dtype=bool)
    mask[members] = True
    return bool(mask[L.table[np.ix_(members, members)]].all())


def _as_subloop(L, S):
    if isinstance(S, SubloopSet):
        S = S.members
    S = sorted(set(int(s) for s in S))
    if not is_subloop(L, S):
        raise NotASubloop(f"{[s + 1 for s in S]} is not a subloop")
    return _sub(L, S)


def _invariant(L, members):
    mask = np.zeros(L.n, dtype=bool)
    mask[list(members)] = True
    return bool(mask[_inner_stack(L)[:, list(members)]].all())


def is_normal(L, S):
    S = _as_subloop(L, S)
    return _invariant(L, S.members)


def normal_closure_loop(L, S):
    stack = _inner_stack(L)
    cur = subloop_generated(L, S if not isinstance(S, SubloopSet) else S.members).members
    while True:
        images = np.unique(stack[:, list(cur)])
        nxt = subloop_generated(L, images).members
        if nxt == cur:
            return _sub(L, cur)
        cur = nxt


def product_set(L, A, B):
    """{a*b : a in A, b in B}."""
    A, B = list(A), list(B)
    return sorted(set(L.table[np.ix_(A, B)].ravel().tolist()))


def small_subloops(L, max_generators=2):
    """Distinct subloops generated by at most ``max_generators`` elements."""
    seen = {}
    for k in range(max_generators + 1):
        for gens in combinations(range(L.n), k):
            S = subloop_generated(L, gens)
            seen.setdefault(S.members, S)
    return sorted(seen.values(), key=lambda s: (len(s), s.members))


def all_normal_subloops(L, cap=NORMAL_LATTICE_CAP):
    """Every normal subloop, as joins of normal closures of single elements."""
    if L.n > cap:
        raise OrderCapExceeded(f"order {L.n} exceeds the normal-lattice cap {cap}")
    found = {}
    for x in range(L.n):
        N = normal_closure_loop(L, [x])
        found.setdefault(N.members, N)
    frontier = list(found)
    while frontier:
        new = []
        keys = list(found)
        for a in frontier:
            for b in keys:
                J = normal_closure_loop(L, set(a) | set(b))
                if J.members not in found:
                    found[J.members] = J
                    new.append(J.members)
        frontier = new
    return sorted(found.values(), key=lambda s: (len(s), s.members))


def is_simple(L):
    return len(all_normal_subloops(L)) == 2


# associators and commutators

def associators(L, convention="left"):
    """Set of associators.

    ``left``: a with (x(yz)) a = (xy)z; ``right``: a with a (x(yz)) = (xy)z.
    """
    T, n = L.table, L.n
    xy_z = T[T]
    x_yz = T[np.arange(n)[:, None, None], T[None, :, :]]
    if convention == "left":
        vals = L._ldiv[x_yz, xy_z]
    elif convention == "right":
        vals = L._rdiv[xy_z, x_yz]
    else:
        raise ValueError(f"unknown associator convention {convention!r}")
    return np.unique(vals).tolist()


def commutators(L):
    """c with (yx) c = xy, over all x, y."""
    T = L.table
    return np.unique(L._ldiv[T.T, T]).tolist()


def associator_subloop(L, convention="left", certify=True):
    A = normal_closure_loop(L, associators(L, convention))
    if certify:
        _certify_minimal(L, A, lambda Q: is_associative(Q))
    return A


def derived_subloop(L, certify=True):
    D = normal_closure_loop(L, associators(L) + commutators(L))
    if certify:
        _certify_minimal(L, D, lambda Q: is_associative(Q) and is_commutative(Q))
    return D


def _certify_minimal(L, N, prop):
    if not prop(quotient(L, N)):
        raise InternalInconsistency("quotient does not have the required property")
    if L.n > NORMAL_LATTICE_CAP:
        return
    for M in all_normal_subloops(L):
        if len(M) < len(N) and prop(quotient(L, M)):
            raise InternalInconsistency(f"smaller normal subloop {M} also works")


def quotient(L, N):
    """Q/N on cosets N*x, each labelled by its smallest member (in sorted order)."""
    N = _as_subloop(L, N)
    if not _invariant(L, N.members):
        raise NotNormal(f"{N} is not normal")
    T = L.table
    cos = T[list(N.members)]  # cos[i, x] = n_i * x
    reps = cos.min(axis=0)  # coset representative of every x
    uniq = np.unique(reps)
    cid = np.searchsorted(uniq, reps)
    m = len(uniq)
    table = np.full((m, m), -1, dtype=np.intp)
    prod = cid[T]
    a = np.broadcast_to(cid[:, None], (L.n, L.n))
    b = np.broadcast_to(cid[None, :], (L.n, L.n))
    table[a.ravel(), b.ravel()] = prod.ravel()
    if not (table[a.ravel(), b.ravel()] == prod.ravel()).all():
        raise IllDefined("coset products are not well defined")
    return LoopTable(table, max_order=None)


def coset_map(L, N):
    """Coset index of every element, matching :func:`quotient`'s labels."""
    reps = L.table[list(N.members)].min(axis=0)
    return np.searchsorted(np.unique(reps), reps)


# series

def upper_central_series(L):
    """Z_0 = 1 <= Z_1 <= ... up to the first repeat."""
    series = [_sub(L, [L.identity])]
    while True:
        cur = series[-1]
        Qb = quotient(L, cur)
        Zq = set(center_loop(Qb).members)
        cid = coset_map(L, cur)
        nxt = _sub(L, [x for x in range(L.n) if cid[x] in Zq])
        if nxt.members == cur.members:
            return series
        series.append(nxt)


def is_centrally_nilpotent(L):
    return len(upper_central_series(L)[-1]) == L.n


def derived_series_loop(L):
    """Q >= Q' >= Q'' >= ... as subsets of Q, up to the first repeat."""
    series = [_sub(L, range(L.n))]
    while True:
        cur = series[-1]
        sub = L.restrict(cur.members)
        D = derived_subloop(sub, certify=False)
        nxt = _sub(L, [cur.members[i] for i in D.members])
        if nxt.members == cur.members:
            return series
        series.append(nxt)


def is_solvable(L):
    return len(derived_series_loop(L)[-1]) == 1


def is_automorphism(L, p):
    phi = p.images if isinstance(p, Permutation) else tuple(int(v) for v in p)
    if phi[L.identity] != L.identity:
        return False
    return bool(kernels.is_homomorphism(L.table, L.table, np.asarray(phi, dtype=np.intp)))
