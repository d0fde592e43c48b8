"""Principal isotopes, isomorphism search and isotopy classes."""
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import OrderCapExceeded
from .structure import nucleus_left, nucleus_middle, nucleus_right, subloop_generated
from .tableloop import LoopTable

ISOTOPY_CAP = 64


def principal_isotope(L, a):
    """The loop x o y = (x*a) * (a\\y).

    The result is always a Latin square; outside Bol-type loops it may lack an
    identity, in which case NoIdentity is raised.
    """
    T = L.table
    table = T[T[:, a][:, None], L._ldiv[a][None, :]]
    return LoopTable(table, max_order=None)


def element_signatures(L):
    """Isomorphism-invariant fingerprint of every element."""
    T = L.table
    orders = np.array([L.element_order(x) for x in range(L.n)])
    comm = (T == T.T).sum(axis=1)
    nl = nucleus_left(L).mask()
    nm = nucleus_middle(L).mask()
    nr = nucleus_right(L).mask()
    right_orders = np.sort(orders[T], axis=1)
    left_orders = np.sort(orders[T.T], axis=1)
    squares = np.bincount(np.diagonal(T), minlength=L.n)
    return [
        (int(orders[x]), int(comm[x]), bool(nl[x]), bool(nm[x]), bool(nr[x]), int(squares[x]),
         tuple(right_orders[x].tolist()), tuple(left_orders[x].tolist()))
        for x in range(L.n)
    ]


@dataclass
class _Plan:
    gens: list
    left: list
    right: list
    bounds: list  # bounds[i]: list length once generators 0..i are placed


def _plan(L, sigs):
    """Greedy small generating set plus a product-word list covering the loop."""
    T = L.table
    counts = {}
    for s in sigs:
        counts[s] = counts.get(s, 0) + 1
    members = [L.identity]
    pos = {L.identity: 0}
    left, right = [-1], [-1]
    gens, bounds = [], []
    while len(members) < L.n:
        best = None
        for x in range(L.n):
            if x in pos:
                continue
            size = len(subloop_generated(L, members + [x]))
            key = (-size, counts[sigs[x]], x)
            if best is None or key < best:
                best = key
        x = best[2]
        gens.append(x)
        pos[x] = len(members)
        members.append(x)
        left.append(-1)
        right.append(len(gens) - 1)
        # close under products, remembering how each new element arose
        k = 0
        while k < len(members):
            a = members[k]
            for j in range(k + 1):
                b = members[j]
                for u, v in ((a, b), (b, a)):
                    w = int(T[u, v])
                    if w not in pos:
                        pos[w] = len(members)
                        members.append(w)
                        left.append(pos[u])
                        right.append(pos[v])
            k += 1
        bounds.append(len(members))
    return _Plan(gens, left, right, bounds), members


def isomorphisms(L1, L2, first_only=False):
    """Yield every isomorphism L1 -> L2 as a list phi with phi[x] in L2."""
    if L1.n != L2.n:
        return
    s1, s2 = element_signatures(L1), element_signatures(L2)
    if sorted(s1) != sorted(s2):
        return
    if L1.n == 1:
        yield [0]
        return
    plan, members = _plan(L1, s1)
    T1, T2 = L1.table, L2.table
    by_sig = {}
    for y, s in enumerate(s2):
        by_sig.setdefault(s, []).append(y)
    left = np.asarray(plan.left, dtype=np.intp)
    right = np.asarray(plan.right, dtype=np.intp)
    members_arr = np.asarray(members, dtype=np.intp)
    index = np.empty(L1.n, dtype=np.intp)
    index[members_arr] = np.arange(L1.n)

    def consistent(img, m):
        # members[:m] is the subloop generated by the generators placed so far
        sub = members_arr[:m]
        prod = index[T1[np.ix_(sub, sub)]]
        img = np.asarray(img)
        return bool((img[prod] == T2[img[:m][:, None], img[:m][None, :]]).all())

    def search(depth, images):
        m = plan.bounds[depth]
        for y in by_sig[s1[plan.gens[depth]]]:
            if y in images:
                continue
            trial = images + [y]
            img = kernels.extend_by_words(T2, left[:m], right[:m], trial, L2.identity)
            if img is None or not consistent(img, m):
                continue
            if depth + 1 == len(plan.gens):
                phi = np.empty(L1.n, dtype=np.intp)
                phi[members_arr] = img
                if kernels.is_homomorphism(T1, T2, phi):
                    yield phi.tolist()
            else:
                yield from search(depth + 1, trial)

    for phi in search(0, []):
        yield phi
        if first_only:
            return


def is_isomorphic(L1, L2):
    """An explicit isomorphism L1 -> L2, or None."""
    return next(isomorphisms(L1, L2, first_only=True), None)


def automorphisms(L):
    return list(isomorphisms(L, L))


@dataclass
class IsotopyPartition:
    parent: LoopTable
    classes: list = field(default_factory=list)  # (representative, members)
    isotopes: list = field(default_factory=list, repr=False)

    def __len__(self):
        return len(self.classes)

    def class_of(self, a):
        for i, (_, members) in enumerate(self.classes):
            if a in members:
                return i
        raise KeyError(a)


def isotopy_classes(L, cap=ISOTOPY_CAP):
    """Partition the principal isotopes by isomorphism type."""
    if L.n > cap:
        raise OrderCapExceeded(f"order {L.n} exceeds the isotopy cap {cap}")
    isotopes = [principal_isotope(L, a) for a in range(L.n)]
    classes = []
    for a, iso in enumerate(isotopes):
        for rep, members in classes:
            if is_isomorphic(isotopes[rep], iso) is not None:
                members.append(a)
                break
        else:
            classes.append((a, [a]))
    return IsotopyPartition(L, classes, isotopes)
