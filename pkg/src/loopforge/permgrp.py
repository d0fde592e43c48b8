"""Permutations and permutation groups with deterministic Schreier-Sims chains.

Permutations act on the right: ``p * q`` applies ``p`` first, then ``q``, so
that ``(i)(p * q) == q(p(i))``. This matches the loop convention ``y R_x = yx``
under which ``R_x R_y`` means "first R_x, then R_y".
"""
from math import gcd
from operator import itemgetter

import numpy as np

from .errors import DegreeMismatch, EnumerationTooLarge, NotNilpotent, NotNormal, NotSolvable

DEFAULT_ENUMERATION_CAP = 2**20
SERIES_STEP_CAP = 32


def _mul(p, q):
    if len(p) == 1:
        return (q[p[0]],)
    return itemgetter(*p)(q)


def _inv(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def _is_id(p):
    return all(i == v for i, v in enumerate(p))


def _comm(a, b):
    return _mul(_mul(_inv(a), _inv(b)), _mul(a, b))


def _conj(a, g):
    """g^-1 a g."""
    return _mul(_mul(_inv(g), a), g)


class Permutation:
    """A bijection of ``range(degree)``; ``images[i]`` is the image of ``i``."""

    __slots__ = ("images", "_hash")

    def __init__(self, images, *, check=True):
        images = tuple(int(v) for v in images)
        if check and sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images!r}")
        self.images = images
        self._hash = None

    @classmethod
    def identity(cls, degree):
        return cls(range(degree), check=False)

    @classmethod
    def from_cycles(cls, degree, *cycles):
        img = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a] = b
        return cls(img)

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, point):
        return self.images[point]

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise DegreeMismatch(f"degrees {self.degree} and {other.degree}")
        return Permutation(_mul(self.images, other.images), check=False)

    def __invert__(self):
        return Permutation(_inv(self.images), check=False)

    def __pow__(self, k):
        base = self if k >= 0 else ~self
        k = abs(k)
        result = Permutation.identity(self.degree)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.images)
        return self._hash

    def is_identity(self):
        return _is_id(self.images)

    def cycles(self):
        seen = set()
        out = []
        for i in range(self.degree):
            if i in seen or self.images[i] == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def order(self):
        k = 1
        for cyc in self.cycles():
            k = k * len(cyc) // gcd(k, len(cyc))
        return k

    def __repr__(self):
        cyc = "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())
        return f"Permutation<{self.degree}>{cyc or '()'}"


def _raw(p):
    return p.images if isinstance(p, Permutation) else tuple(p)


class _Level:
    __slots__ = ("point", "gens", "trans", "trans_inv", "orbit", "done")

    def __init__(self, point, degree):
        ident = tuple(range(degree))
        self.point = point
        self.gens = []
        self.trans = {point: ident}
        self.trans_inv = {point: ident}
        self.orbit = [point]
        # done[k]: number of generators whose Schreier generator at orbit[k] was sifted
        self.done = [0]

    def add_gen(self, g):
        old = len(self.orbit)
        self.gens.append(g)
        # points already in the orbit were closed under the previous generators
        k = 0
        while k < len(self.orbit):
            p = self.orbit[k]
            for s in ((g,) if k < old else self.gens):
                q = s[p]
                if q not in self.trans:
                    u = _mul(self.trans[p], s)
                    self.trans[q] = u
                    self.trans_inv[q] = _inv(u)
                    self.orbit.append(q)
                    self.done.append(0)
            k += 1


class _Chain:
    """Mutable stabilizer chain; frozen into a PermGroup once complete."""

    def __init__(self, degree, base=()):
        self.degree = degree
        self.levels = [_Level(b, degree) for b in base]
        self.essential = []

    def sift(self, g, start=0):
        for j in range(start, len(self.levels)):
            lvl = self.levels[j]
            q = g[lvl.point]
            u_inv = lvl.trans_inv.get(q)
            if u_inv is None:
                return g, j
            g = _mul(g, u_inv)
        return g, len(self.levels)

    def _insert(self, r, lo, hi):
        if hi == len(self.levels):
            moved = next(i for i, v in enumerate(r) if i != v)
            self.levels.append(_Level(moved, self.degree))
        for k in range(lo, hi + 1):
            self.levels[k].add_gen(r)

    def _pending(self, i):
        lvl = self.levels[i]
        k = 0
        while k < len(lvl.orbit):
            p = lvl.orbit[k]
            while lvl.done[k] < len(lvl.gens):
                s = lvl.gens[lvl.done[k]]
                lvl.done[k] += 1
                q = s[p]
                h = _mul(_mul(lvl.trans[p], s), lvl.trans_inv[q])
                if _is_id(h):
                    continue
                r, j = self.sift(h, i + 1)
                if not _is_id(r):
                    return r, j
            k += 1
        return None

    def _complete(self, i):
        while i >= 0:
            found = self._pending(i)
            if found is None:
                i -= 1
                continue
            r, j = found
            self._insert(r, i + 1, j)
            i = j

    def add(self, g):
        """Add a generator; return True iff the group grew."""
        g = _raw(g)
        if len(g) != self.degree:
            raise DegreeMismatch(f"expected degree {self.degree}, got {len(g)}")
        r, j = self.sift(g)
        if _is_id(r):
            return False
        self.essential.append(g)
        self._insert(r, 0, j)
        self._complete(j)
        return True

    def order(self):
        out = 1
        for lvl in self.levels:
            out *= len(lvl.orbit)
        return out


class PermGroup:
    """A permutation group given by generators, with its stabilizer chain."""

    def __init__(self, degree, generators=(), base=()):
        self.degree = degree
        self._gens = []
        chain = _Chain(degree, base)
        for g in generators:
            g = _raw(g)
            if len(g) != degree:
                raise DegreeMismatch(f"expected degree {degree}, got {len(g)}")
            if not _is_id(g):
                self._gens.append(g)
            chain.add(g)
        self._freeze(chain)

    def _freeze(self, chain):
        self._levels = chain.levels
        self._essential = list(chain.essential)
        self._order = chain.order()
        self._elements = None

    @classmethod
    def _from_levels(cls, degree, levels):
        self = cls.__new__(cls)
        self.degree = degree
        self._levels = levels
        gens = []
        seen = set()
        for lvl in levels:
            for g in lvl.gens:
                if g not in seen:
                    seen.add(g)
                    gens.append(g)
        self._gens = gens
        # a strong generating set generates; trim it to an irredundant list
        chain = _Chain(degree)
        for g in gens:
            chain.add(g)
        self._essential = chain.essential
        self._order = 1
        for lvl in levels:
            self._order *= len(lvl.orbit)
        self._elements = None
        return self

    @property
    def generators(self):
        return [Permutation(g, check=False) for g in self._gens]

    @property
    def essential_generators(self):
        """An irredundant generating list (each entry enlarged the group when added)."""
        return [Permutation(g, check=False) for g in self._essential]

    @property
    def base(self):
        return [lvl.point for lvl in self._levels]

    def transversal_sizes(self):
        return [len(lvl.orbit) for lvl in self._levels]

    def order(self):
        return self._order

    def is_trivial(self):
        return self._order == 1

    def contains(self, p):
        p = _raw(p)
        if len(p) != self.degree:
            return False
        g = p
        for lvl in self._levels:
            u_inv = lvl.trans_inv.get(g[lvl.point])
            if u_inv is None:
                return False
            g = _mul(g, u_inv)
        return _is_id(g)

    __contains__ = contains

    def orbit(self, point):
        seen = {point}
        todo = [point]
        while todo:
            p = todo.pop()
            for g in self._essential:
                q = g[p]
                if q not in seen:
                    seen.add(q)
                    todo.append(q)
        return sorted(seen)

    def stabilizer(self, point):
        chain = _Chain(self.degree, base=[point])
        for g in self._essential:
            chain.add(g)
        return PermGroup._from_levels(self.degree, chain.levels[1:])

    def element_array(self, cap=DEFAULT_ENUMERATION_CAP):
        """All elements as an ``(order, degree)`` integer array."""
        if self._order > cap:
            raise EnumerationTooLarge(f"group order {self._order} exceeds enumeration cap {cap}")
        dtype = np.int16 if self.degree < 2**15 else np.int32
        E = np.arange(self.degree, dtype=dtype)[None, :]
        for lvl in reversed(self._levels):
            U = np.array([lvl.trans[p] for p in lvl.orbit], dtype=dtype)
            E = U[:, E].reshape(-1, self.degree)
        return E

    def elements(self, cap=DEFAULT_ENUMERATION_CAP):
        if self._elements is None:
            arr = self.element_array(cap)
            self._elements = [Permutation(row.tolist(), check=False) for row in arr]
        return list(self._elements)

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self._order})"


def group_from_generators(gens, degree=None):
    gens = list(gens)
    if degree is None:
        if not gens:
            raise ValueError("degree is required for an empty generator list")
        degree = len(_raw(gens[0]))
    for g in gens:
        if len(_raw(g)) != degree:
            raise DegreeMismatch("generators do not share one degree")
    return PermGroup(degree, gens)


def normal_closure(G, S):
    """Smallest subgroup of G that contains S and is normalised by G."""
    chain = _Chain(G.degree)
    todo = []
    for s in S:
        s = _raw(s)
        if chain.add(s):
            todo.append(s)
    conj = [(g, _inv(g)) for g in G._essential]
    while todo:
        s = todo.pop()
        for g, g_inv in conj:
            c = _mul(_mul(g_inv, s), g)
            if chain.add(c):
                todo.append(c)
    N = PermGroup.__new__(PermGroup)
    N.degree = G.degree
    N._gens = list(chain.essential)
    N._freeze(chain)
    return N


def derived_subgroup(G):
    gens = G._essential
    comms = [_comm(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]]
    return normal_closure(G, comms)


def derived_series(G):
    """G, G', G'', ... ending with the first repeated term."""
    series = [G]
    for _ in range(SERIES_STEP_CAP):
        D = derived_subgroup(series[-1])
        if D.order() == series[-1].order():
            return series
        series.append(D)
    raise NotSolvable("derived series did not stabilise within the step cap")


def derived_length(G):
    series = derived_series(G)
    if not series[-1].is_trivial():
        raise NotSolvable(f"derived series stalls at order {series[-1].order()}")
    return len(series) - 1


def is_solvable(G):
    return derived_series(G)[-1].is_trivial()


def lower_central_series(G):
    """G = gamma_1 >= gamma_2 >= ... ending with the first repeated term."""
    series = [G]
    for _ in range(SERIES_STEP_CAP):
        cur = series[-1]
        comms = [_comm(a, g) for a in cur._essential for g in G._essential]
        nxt = normal_closure(G, comms)
        if nxt.order() == cur.order():
            return series
        series.append(nxt)
    raise NotNilpotent("lower central series did not stabilise within the step cap")


def nilpotency_class(G):
    """Length of the lower central series; 0 for the trivial group."""
    series = lower_central_series(G)
    if not series[-1].is_trivial():
        raise NotNilpotent(f"lower central series stalls at order {series[-1].order()}")
    return len(series) - 1


def is_nilpotent(G):
    return lower_central_series(G)[-1].is_trivial()


def center(G, cap=DEFAULT_ENUMERATION_CAP):
    """Centre of G by scanning its elements against the generators."""
    E = G.element_array(cap)
    for s in G._essential:
        s = np.asarray(s, dtype=E.dtype)
        E = E[(s[E] == E[:, s]).all(axis=1)]  # survivors shrink fast
    chain = _Chain(G.degree)
    for row in E:
        chain.add(tuple(row.tolist()))
    Z = PermGroup.__new__(PermGroup)
    Z.degree = G.degree
    Z._gens = list(chain.essential)
    Z._freeze(chain)
    return Z


def is_subgroup(H, G):
    return H.degree == G.degree and all(G.contains(h) for h in H._essential)


def is_normal_subgroup(N, G):
    if not is_subgroup(N, G):
        return False
    return all(N.contains(_conj(n, g)) for n in N._essential for g in G._essential)


def is_abelian(G):
    gens = G._essential
    return all(_mul(a, b) == _mul(b, a) for i, a in enumerate(gens) for b in gens[i + 1:])


def is_elementary_abelian(G, p):
    if not is_abelian(G):
        return False
    return all(Permutation(g, check=False).order() == p for g in G._essential)


def elementary_abelian_prime(G):
    """The prime p if G is a nontrivial elementary abelian p-group, else None."""
    if G.is_trivial() or not is_abelian(G):
        return None
    p = Permutation(G._essential[0], check=False).order()
    if any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        return None
    return p if is_elementary_abelian(G, p) else None


def equal_groups(G, H):
    if G.degree != H.degree or G.order() != H.order():
        return False
    return all(G.contains(h) for h in H._essential) and all(H.contains(g) for g in G._essential)


def _power(p, k):
    return Permutation(p, check=False).__pow__(k).images


def quotient_is_elementary_abelian(G, N, p):
    """Whether G/N is an elementary abelian p-group (N must be normal in G)."""
    if not is_normal_subgroup(N, G):
        raise NotNormal("N is not a normal subgroup of G")
    gens = G._essential
    if not all(N.contains(_comm(a, b)) for i, a in enumerate(gens) for b in gens[i + 1:]):
        return False
    return all(N.contains(_power(g, p)) for g in gens)
