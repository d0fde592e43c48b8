"""Pure-Python/numpy implementations of the hot loops.

Every function here has a twin with the same signature in ``_ckernels.pyx``.
Tables are C-contiguous ``intp`` arrays with 0-based entries.
"""
from collections import deque

import numpy as np


def _first(mask_fail, x):
    ys, zs = np.nonzero(mask_fail)
    return (int(x), int(ys[0]), int(zs[0]))


def right_bol_violation(T):
    """First (x, y, z) with ((xy)z)y != x((yz)y), or None."""
    n = T.shape[0]
    # yzy[y, z] = (yz)y
    yzy = T[T, np.arange(n)[:, None]]
    for x in range(n):
        xy = T[x]  # xy[y]
        lhs = T[T[xy[:, None], np.arange(n)[None, :]], np.arange(n)[:, None]]
        rhs = T[x][yzy]
        bad = lhs != rhs
        if bad.any():
            return _first(bad, x)
    return None


def left_bol_violation(T):
    """First (x, y, z) with x(y(xz)) != (x(yx))z, or None."""
    n = T.shape[0]
    for x in range(n):
        xz = T[x]  # xz[z]
        lhs = T[x][T[:, xz]]  # lhs[y, z] = x(y(xz))
        xyx = T[x][T[:, x]]  # xyx[y] = x(yx)
        rhs = T[xyx]  # rhs[y, z] = (x(yx))z
        bad = lhs != rhs
        if bad.any():
            return _first(bad, x)
    return None


def assoc_violation(T):
    """First (x, y, z) with (xy)z != x(yz), or None."""
    for x in range(T.shape[0]):
        lhs = T[T[x]]  # lhs[y, z] = (xy)z
        rhs = T[x][T]  # rhs[y, z] = x(yz)
        bad = lhs != rhs
        if bad.any():
            return _first(bad, x)
    return None


def closure(T, seeds, identity):
    """Sorted members of the smallest product-closed set containing seeds and identity."""
    n = T.shape[0]
    inside = [False] * n
    members = []
    queue = deque()

    def push(v):
        if not inside[v]:
            inside[v] = True
            queue.append(v)

    push(int(identity))
    for s in seeds:
        push(int(s))
    rows = T.tolist()
    while queue:
        a = queue.popleft()
        members.append(a)
        ra = rows[a]
        for b in members:
            push(ra[b])
            push(rows[b][a])
    return np.array(sorted(members), dtype=np.intp)


def pair_reach(T, inv, gens, identity):
    """Elements a such that (a, identity) is reachable from (identity, identity).

    The moves are (a, b) -> (a*x, b*inv[x]) for x in gens.
    """
    n = T.shape[0]
    rows = T.tolist()
    inv = [int(v) for v in inv]
    gens = [int(g) for g in gens]
    e = int(identity)
    seen = bytearray(n * n)
    seen[e * n + e] = 1
    queue = deque([(e, e)])
    while queue:
        a, b = queue.popleft()
        ra, rb = rows[a], rows[b]
        for x in gens:
            a2, b2 = ra[x], rb[inv[x]]
            k = a2 * n + b2
            if not seen[k]:
                seen[k] = 1
                queue.append((a2, b2))
    return np.array([a for a in range(n) if seen[a * n + e]], dtype=np.intp)


def is_homomorphism(T1, T2, phi):
    """True iff phi[x*y] == phi[x]*phi[y] for all x, y."""
    phi = np.asarray(phi, dtype=np.intp)
    return bool(np.array_equal(phi[T1], T2[phi[:, None], phi[None, :]]))


def extend_by_words(T2, left, right, gen_images, identity2):
    """Images of a word-built element list, or None if two images collide.

    Element 0 is the identity. Element k is generator ``right[k]`` when
    ``left[k] < 0``, else the product of elements ``left[k]`` and ``right[k]``
    (both earlier in the list).
    """
    m = len(left)
    rows = T2.tolist()
    img = [0] * m
    used = bytearray(T2.shape[0])
    img[0] = int(identity2)
    used[img[0]] = 1
    for k in range(1, m):
        if left[k] < 0:
            v = int(gen_images[right[k]])
        else:
            v = rows[img[left[k]]][img[right[k]]]
        if used[v]:
            return None
        used[v] = 1
        img[k] = v
    return img
