"""Finite loops as Cayley tables, with arithmetic and identity checks.

Elements are the integers ``0..n-1``. External (file and user-facing) labels
are 1-based; :func:`load_table` and :meth:`LoopTable.rows` do the conversion.
"""
from dataclasses import asdict, dataclass
from functools import cached_property
from math import lcm

import numpy as np

from . import kernels
from .errors import (
    BadDimensions,
    InternalInconsistency,
    NoIdentity,
    NotLatinSquare,
    NotUniquely2Divisible,
    OrderCapExceeded,
)
from .permgrp import Permutation

DEFAULT_MAX_ORDER = 1024


class LoopTable:
    """An immutable finite loop given by its multiplication table.

    ``table[x, y]`` is the product ``x*y``. The identity is located by
    scanning unless given explicitly.
    """

    def __init__(self, table, identity=None, *, check=True, max_order=DEFAULT_MAX_ORDER):
        arr = np.array(table, dtype=np.intp, order="C", copy=True)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise BadDimensions(f"expected a nonempty square table, got shape {arr.shape}")
        n = arr.shape[0]
        if max_order is not None and n > max_order:
            raise OrderCapExceeded(f"order {n} exceeds the configured cap {max_order}")
        if check:
            _check_latin(arr)
        found = _find_identity(arr)
        if found is None:
            raise NoIdentity("no element acts as a two-sided identity")
        if identity is not None and identity != found:
            raise NoIdentity(f"element {identity} is not the identity")
        arr.flags.writeable = False
        self.table = arr
        self.identity = found

    @property
    def n(self):
        return self.table.shape[0]

    def __len__(self):
        return self.n

    def __eq__(self, other):
        return isinstance(other, LoopTable) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.table.tobytes())

    def __repr__(self):
        return f"LoopTable(n={self.n}, identity={self.identity})"

    # arithmetic

    def mul(self, x, y):
        return int(self.table[x, y])

    @cached_property
    def _ldiv(self):
        # _ldiv[x, y] = z with x*z = y
        out = np.empty_like(self.table)
        rows = np.arange(self.n)[:, None]
        out[rows, self.table] = np.arange(self.n)[None, :]
        out.flags.writeable = False
        return out

    @cached_property
    def _rdiv(self):
        # _rdiv[x, y] = z with z*y = x
        out = np.empty_like(self.table)
        cols = np.arange(self.n)[None, :]
        out[self.table, cols] = np.arange(self.n)[:, None]
        out.flags.writeable = False
        return out

    def ldiv(self, x, y):
        """The unique z with x*z = y."""
        return int(self._ldiv[x, y])

    def rdiv(self, x, y):
        """The unique z with z*y = x."""
        return int(self._rdiv[x, y])

    def right_translation(self, x):
        return Permutation(self.table[:, x].tolist(), check=False)

    def left_translation(self, x):
        return Permutation(self.table[x].tolist(), check=False)

    @cached_property
    def _power_cycles(self):
        # cycle of the identity under R_x, for every x
        col = self.table
        out = []
        for x in range(self.n):
            cyc = [self.identity]
            y = int(col[self.identity, x])
            while y != self.identity:
                cyc.append(y)
                y = int(col[y, x])
            out.append(tuple(cyc))
        return out

    def power(self, x, k):
        """x^k = e R_x^k, for any integer k."""
        cyc = self._power_cycles[x]
        return cyc[k % len(cyc)]

    def element_order(self, x):
        return len(self._power_cycles[x])

    def exponent(self):
        return lcm(*(len(c) for c in self._power_cycles))

    @cached_property
    def inverses(self):
        """x^-1 = x^(-1) for every x, as an array."""
        out = np.array([self.power(x, -1) for x in range(self.n)], dtype=np.intp)
        out.flags.writeable = False
        return out

    def inverse(self, x):
        return int(self.inverses[x])

    # conversion

    def rows(self, base=1):
        return (self.table + base).tolist()

    def restrict(self, members):
        """The subloop on ``members`` (must be closed), relabelled in sorted order."""
        members = sorted(int(m) for m in members)
        index = np.full(self.n, -1, dtype=np.intp)
        index[members] = np.arange(len(members))
        sub = index[self.table[np.ix_(members, members)]]
        if (sub < 0).any():
            raise ValueError("members are not closed under multiplication")
        return LoopTable(sub, check=False, max_order=None)

    def relabel(self, perm):
        """Isomorphic copy in which element x is renamed perm[x]."""
        perm = np.asarray(perm, dtype=np.intp)
        out = np.empty_like(self.table)
        out[perm[:, None], perm[None, :]] = perm[self.table]
        return LoopTable(out, check=False, max_order=None)


def _check_latin(arr):
    n = arr.shape[0]
    if arr.min() < 0 or arr.max() >= n:
        raise NotLatinSquare(f"labels must lie in 0..{n - 1}")
    target = np.arange(n)
    srt = np.sort(arr, axis=1)
    bad = np.nonzero((srt != target).any(axis=1))[0]
    if len(bad):
        raise NotLatinSquare(f"row {bad[0]} repeats a label")
    srt = np.sort(arr, axis=0)
    bad = np.nonzero((srt != target[:, None]).any(axis=0))[0]
    if len(bad):
        raise NotLatinSquare(f"column {bad[0]} repeats a label")


def _find_identity(arr):
    target = np.arange(arr.shape[0])
    for e in range(arr.shape[0]):
        if np.array_equal(arr[e], target) and np.array_equal(arr[:, e], target):
            return e
    return None


def load_table(rows, *, base=1, max_order=DEFAULT_MAX_ORDER):
    """Validate an n x n array of labels (1-based by default) as a loop."""
    rows = [list(r) for r in rows]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise BadDimensions("table must be a nonempty n x n array")
    arr = np.array(rows, dtype=np.intp) - base
    return LoopTable(arr, max_order=max_order)


def from_operation(elements, op, max_order=DEFAULT_MAX_ORDER):
    """Cayley table of ``op`` on a list of hashable elements."""
    elements = list(elements)
    index = {e: i for i, e in enumerate(elements)}
    table = [[index[op(a, b)] for b in elements] for a in elements]
    return LoopTable(table, max_order=max_order)


def direct_product(A, B):
    """A x B with (a, b) encoded as a * |B| + b."""
    nb = B.n
    a = np.repeat(np.arange(A.n), nb)
    b = np.tile(np.arange(nb), A.n)
    table = A.table[a[:, None], a[None, :]] * nb + B.table[b[:, None], b[None, :]]
    return LoopTable(table, check=False, max_order=None)


def opposite(L):
    """The loop with the transposed table (x o y = y*x)."""
    return LoopTable(L.table.T, check=False, max_order=None)


# identities

def is_right_bol(L):
    """((xy)z)y = x((yz)y) for all x, y, z."""
    return kernels.right_bol_violation(L.table) is None


def is_left_bol(L):
    """x(y(xz)) = (x(yx))z for all x, y, z."""
    return kernels.left_bol_violation(L.table) is None


def is_associative(L):
    return kernels.assoc_violation(L.table) is None


def is_commutative(L):
    return bool(np.array_equal(L.table, L.table.T))


def has_aip(L):
    """Automorphic inverse property (xy)^-1 = x^-1 y^-1."""
    inv = L.inverses
    return bool(np.array_equal(inv[L.table], L.table[inv[:, None], inv[None, :]]))


def has_aaip(L):
    """Antiautomorphic inverse property (xy)^-1 = y^-1 x^-1."""
    inv = L.inverses
    return bool(np.array_equal(inv[L.table], L.table[inv[None, :], inv[:, None]]))


def is_moufang(L):
    return has_aaip(L) and is_right_bol(L)


def is_bruck(L):
    return has_aip(L) and is_right_bol(L)


def is_power_associative(L):
    T = L.table
    for x in range(L.n):
        cyc = L._power_cycles[x]
        k = len(cyc)
        for m in range(k):
            for j in range(k):
                if T[cyc[m], cyc[j]] != cyc[(m + j) % k]:
                    return False
    return True


def is_right_power_alternative(L):
    """R_x^n = R_{x^n} for all x and n, checked for n = 0..order(x)."""
    T = L.table
    for x in range(L.n):
        cyc = L._power_cycles[x]
        col = T[:, x]
        cur = np.arange(L.n)  # R_x^0
        for j in range(len(cyc) + 1):
            if not np.array_equal(cur, T[:, cyc[j % len(cyc)]]):
                return False
            cur = col[cur]
    return True


def _squares(L):
    return np.diagonal(L.table)


def is_uniquely_2_divisible(L):
    return len(np.unique(_squares(L))) == L.n


def sqrt(L, x):
    """The unique y with y*y = x."""
    sq = _squares(L)
    if len(np.unique(sq)) != L.n:
        raise NotUniquely2Divisible("squaring is not a bijection")
    return int(np.nonzero(sq == x)[0][0])


@dataclass(frozen=True)
class PropertyFlags:
    right_bol: bool
    left_bol: bool
    moufang: bool
    bruck: bool
    aip: bool
    aaip: bool
    associative: bool
    commutative: bool
    power_associative: bool
    right_power_alternative: bool
    uniquely_2_divisible: bool
    exponent: int

    def as_dict(self):
        return asdict(self)


def property_flags(L):
    right_bol = is_right_bol(L)
    if right_bol:
        e = L.identity
        idx = np.arange(L.n)
        inv = L.inverses
        if not ((L.table[idx, inv] == e).all() and (L.table[inv, idx] == e).all()):
            raise InternalInconsistency("one-sided inverses differ in a Bol loop")
    aip, aaip = has_aip(L), has_aaip(L)
    return PropertyFlags(
        right_bol=right_bol,
        left_bol=is_left_bol(L),
        moufang=right_bol and aaip,
        bruck=right_bol and aip,
        aip=aip,
        aaip=aaip,
        associative=is_associative(L),
        commutative=is_commutative(L),
        power_associative=is_power_associative(L),
        right_power_alternative=is_right_power_alternative(L),
        uniquely_2_divisible=is_uniquely_2_divisible(L),
        exponent=L.exponent(),
    )
