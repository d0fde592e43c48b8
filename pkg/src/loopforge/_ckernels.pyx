# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the loops in _pykernels.py (same names, same contracts)."""
import numpy as np
cimport numpy as cnp

cnp.import_array()


def right_bol_violation(const Py_ssize_t[:, ::1] T):
    cdef Py_ssize_t n = T.shape[0]
    cdef Py_ssize_t x, y, z, xy
    for x in range(n):
        for y in range(n):
            xy = T[x, y]
            for z in range(n):
                if T[T[xy, z], y] != T[x, T[T[y, z], y]]:
                    return (x, y, z)
    return None


def left_bol_violation(const Py_ssize_t[:, ::1] T):
    cdef Py_ssize_t n = T.shape[0]
    cdef Py_ssize_t x, y, z, xyx
    for x in range(n):
        for y in range(n):
            xyx = T[x, T[y, x]]
            for z in range(n):
                if T[x, T[y, T[x, z]]] != T[xyx, z]:
                    return (x, y, z)
    return None


def assoc_violation(const Py_ssize_t[:, ::1] T):
    cdef Py_ssize_t n = T.shape[0]
    cdef Py_ssize_t x, y, z, xy
    for x in range(n):
        for y in range(n):
            xy = T[x, y]
            for z in range(n):
                if T[xy, z] != T[x, T[y, z]]:
                    return (x, y, z)
    return None


def closure(const Py_ssize_t[:, ::1] T, seeds, Py_ssize_t identity):
    cdef Py_ssize_t n = T.shape[0]
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] inside = np.zeros(n, dtype=np.uint8)
    cdef cnp.ndarray[Py_ssize_t, ndim=1] members = np.empty(n, dtype=np.intp)
    cdef Py_ssize_t count = 0, head = 0, a, b, i, v, s
    members[count] = identity
    inside[identity] = 1
    count += 1
    for s in seeds:
        if not inside[s]:
            inside[s] = 1
            members[count] = s
            count += 1
    # members[:head] are processed; every product among them is already queued
    while head < count:
        a = members[head]
        head += 1
        for i in range(head):
            b = members[i]
            v = T[a, b]
            if not inside[v]:
                inside[v] = 1
                members[count] = v
                count += 1
            v = T[b, a]
            if not inside[v]:
                inside[v] = 1
                members[count] = v
                count += 1
    return np.sort(members[:count])


def pair_reach(const Py_ssize_t[:, ::1] T, inv_in, gens_in, Py_ssize_t identity):
    cdef Py_ssize_t n = T.shape[0]
    cdef const Py_ssize_t[::1] inv = np.ascontiguousarray(inv_in, dtype=np.intp)
    cdef const Py_ssize_t[::1] gens = np.ascontiguousarray(gens_in, dtype=np.intp)
    cdef Py_ssize_t ng = gens.shape[0]
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] seen = np.zeros(n * n, dtype=np.uint8)
    cdef cnp.ndarray[Py_ssize_t, ndim=1] queue = np.empty(n * n, dtype=np.intp)
    cdef Py_ssize_t head = 0, tail = 0, st, a, b, a2, b2, k, j, x
    st = identity * n + identity
    seen[st] = 1
    queue[tail] = st
    tail += 1
    while head < tail:
        st = queue[head]
        head += 1
        a = st // n
        b = st - a * n
        for j in range(ng):
            x = gens[j]
            a2 = T[a, x]
            b2 = T[b, inv[x]]
            k = a2 * n + b2
            if not seen[k]:
                seen[k] = 1
                queue[tail] = k
                tail += 1
    out = [a for a in range(n) if seen[a * n + identity]]
    return np.array(out, dtype=np.intp)


def is_homomorphism(const Py_ssize_t[:, ::1] T1, const Py_ssize_t[:, ::1] T2, phi_in):
    cdef const Py_ssize_t[::1] phi = np.ascontiguousarray(phi_in, dtype=np.intp)
    cdef Py_ssize_t n = T1.shape[0]
    cdef Py_ssize_t x, y
    for x in range(n):
        for y in range(n):
            if phi[T1[x, y]] != T2[phi[x], phi[y]]:
                return False
    return True


def extend_by_words(const Py_ssize_t[:, ::1] T2, left_in, right_in, images_in,
                    Py_ssize_t identity2):
    cdef const Py_ssize_t[::1] left = np.ascontiguousarray(left_in, dtype=np.intp)
    cdef const Py_ssize_t[::1] right = np.ascontiguousarray(right_in, dtype=np.intp)
    cdef const Py_ssize_t[::1] images = np.ascontiguousarray(images_in, dtype=np.intp)
    cdef Py_ssize_t m = left.shape[0]
    cdef Py_ssize_t n2 = T2.shape[0]
    cdef cnp.ndarray[Py_ssize_t, ndim=1] img = np.empty(m, dtype=np.intp)
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] used = np.zeros(n2, dtype=np.uint8)
    cdef Py_ssize_t k, v
    img[0] = identity2
    used[identity2] = 1
    for k in range(1, m):
        if left[k] < 0:
            v = images[right[k]]
        else:
            v = T2[img[left[k]], img[right[k]]]
        if used[v]:
            return None
        used[v] = 1
        img[k] = v
    return img.tolist()
