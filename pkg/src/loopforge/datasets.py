"""Embedded datasets: the two order-27 right Bol loops and small groups.

The two 27 x 27 tables are transcribed verbatim (1-based labels, row i
column j holds i*j).
"""
from itertools import permutations, product

from .errors import UnknownDataset
from .tableloop import LoopTable, from_operation, load_table

TABLE1 = """
 1  2  3  4  5  6  7  8  9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24 25 26 27
 2  3  1  5  6  4  8  9  7 15 13 14 18 16 17 12 10 11 22 23 24 25 26 27 19 20 21
 3  1  2  6  4  5  9  7  8 17 18 16 11 12 10 14 15 13 25 26 27 19 20 21 22 23 24
 4  5  6  7  8  9  1  2  3 14 15 13 17 18 16 11 12 10 26 27 25 20 21 19 23 24 22
 5  6  4  8  9  7  2  3  1 16 17 18 10 11 12 13 14 15 20 21 19 23 24 22 26 27 25
 6  4  5  9  7  8  3  1  2 12 10 11 15 13 14 18 16 17 23 24 22 26 27 25 20 21 19
 7  8  9  1  2  3  4  5  6 18 16 17 12 10 11 15 13 14 24 22 23 27 25 26 21 19 20
 8  9  7  2  3  1  5  6  4 11 12 10 14 15 13 17 18 16 27 25 26 21 19 20 24 22 23
 9  7  8  3  1  2  6  4  5 13 14 15 16 17 18 10 11 12 21 19 20 24 22 23 27 25 26
10 11 12 13 14 15 16 17 18 19 21 20 25 27 26 22 24 23  1  3  2  7  9  8  4  6  5
11 12 10 14 15 13 17 18 16 27 26 25 24 23 22 21 20 19  8  7  9  5  4  6  2  1  3
12 10 11 15 13 14 18 16 17 23 22 24 20 19 21 26 25 27  6  5  4  3  2  1  9  8  7
13 14 15 16 17 18 10 11 12 21 20 19 27 26 25 24 23 22  9  8  7  6  5  4  3  2  1
14 15 13 17 18 16 11 12 10 26 25 27 23 22 24 20 19 21  4  6  5  1  3  2  7  9  8
15 13 14 18 16 17 12 10 11 22 24 23 19 21 20 25 27 26  2  1  3  8  7  9  5  4  6
16 17 18 10 11 12 13 14 15 20 19 21 26 25 27 23 22 24  5  4  6  2  1  3  8  7  9
17 18 16 11 12 10 14 15 13 25 27 26 22 24 23 19 21 20  3  2  1  9  8  7  6  5  4
18 16 17 12 10 11 15 13 14 24 23 22 21 20 19 27 26 25  7  9  8  4  6  5  1  3  2
19 20 21 22 23 24 25 26 27  1  7  4  6  3  9  8  5  2 10 18 14 12 17 13 11 16 15
20 21 19 23 24 22 26 27 25  5  2  8  7  4  1  3  9  6 16 15 11 18 14 10 17 13 12
21 19 20 24 22 23 27 25 26  9  6  3  2  8  5  4  1  7 13 12 17 15 11 16 14 10 18
22 23 24 25 26 27 19 20 21  2  8  5  4  1  7  9  6  3 15 11 16 14 10 18 13 12 17
23 24 22 26 27 25 20 21 19  6  3  9  8  5  2  1  7  4 12 17 13 11 16 15 10 18 14
24 22 23 27 25 26 21 19 20  7  4  1  3  9  6  5  2  8 18 14 10 17 13 12 16 15 11
25 26 27 19 20 21 22 23 24  3  9  6  5  2  8  7  4  1 17 13 12 16 15 11 18 14 10
26 27 25 20 21 19 23 24 22  4  1  7  9  6  3  2  8  5 14 10 18 13 12 17 15 11 16
27 25 26 21 19 20 24 22 23  8  5  2  1  7  4  6  3  9 11 16 15 10 18 14 12 17 13
"""

TABLE2 = """
 1  2  3  4  5  6  7  8  9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24 25 26 27
 2  3  1  5  6  4  8  9  7 15 13 14 18 16 17 12 10 11 22 23 24 25 26 27 19 20 21
 3  1  2  6  4  5  9  7  8 17 18 16 11 12 10 14 15 13 25 26 27 19 20 21 22 23 24
 4  5  6  7  8  9  1  2  3 14 15 13 17 18 16 11 12 10 26 27 25 20 21 19 23 24 22
 5  6  4  8  9  7  2  3  1 16 17 18 10 11 12 13 14 15 20 21 19 23 24 22 26 27 25
 6  4  5  9  7  8  3  1  2 12 10 11 15 13 14 18 16 17 23 24 22 26 27 25 20 21 19
 7  8  9  1  2  3  4  5  6 18 16 17 12 10 11 15 13 14 24 22 23 27 25 26 21 19 20
 8  9  7  2  3  1  5  6  4 11 12 10 14 15 13 17 18 16 27 25 26 21 19 20 24 22 23
 9  7  8  3  1  2  6  4  5 13 14 15 16 17 18 10 11 12 21 19 20 24 22 23 27 25 26
10 14 18 11 15 16 12 13 17 19 20 21 22 23 24 25 26 27  1  4  7  8  2  5  6  9  3
11 15 16 12 13 17 10 14 18 27 25 26 21 19 20 24 22 23  8  2  5  6  9  3  1  4  7
12 13 17 10 14 18 11 15 16 23 24 22 26 27 25 20 21 19  6  9  3  1  4  7  8  2  5
13 17 12 14 18 10 15 16 11 21 19 20 24 22 23 27 25 26  9  3  6  4  7  1  2  5  8
14 18 10 15 16 11 13 17 12 26 27 25 20 21 19 23 24 22  4  7  1  2  5  8  9  3  6
15 16 11 13 17 12 14 18 10 22 23 24 25 26 27 19 20 21  2  5  8  9  3  6  4  7  1
16 11 15 17 12 13 18 10 14 20 21 19 23 24 22 26 27 25  5  8  2  3  6  9  7  1  4
17 12 13 18 10 14 16 11 15 25 26 27 19 20 21 22 23 24  3  6  9  7  1  4  5  8  2
18 10 14 16 11 15 17 12 13 24 22 23 27 25 26 21 19 20  7  1  4  5  8  2  3  6  9
19 21 20 25 27 26 22 24 23  1  2  3  4  5  6  7  8  9 10 12 11 16 18 17 13 15 14
20 19 21 26 25 27 23 22 24  5  6  4  8  9  7  2  3  1 16 18 17 13 15 14 10 12 11
21 20 19 27 26 25 24 23 22  9  7  8  3  1  2  6  4  5 13 15 14 10 12 11 16 18 17
22 24 23 19 21 20 25 27 26  2  3  1  5  6  4  8  9  7 15 14 13 12 11 10 18 17 16
23 22 24 20 19 21 26 25 27  6  4  5  9  7  8  3  1  2 12 11 10 18 17 16 15 14 13
24 23 22 21 20 19 27 26 25  7  8  9  1  2  3  4  5  6 18 17 16 15 14 13 12 11 10
25 27 26 22 24 23 19 21 20  3  1  2  6  4  5  9  7  8 17 16 18 14 13 15 11 10 12
26 25 27 23 22 24 20 19 21  4  5  6  7  8  9  1  2  3 14 13 15 11 10 12 17 16 18
27 26 25 24 23 22 21 20 19  8  9  7  2  3  1  5  6  4 11 10 12 17 16 18 14 13 15
"""


def _parse(text):
    return [[int(v) for v in line.split()] for line in text.strip().splitlines()]


def table1():
    return load_table(_parse(TABLE1))


def table2():
    return load_table(_parse(TABLE2))


def cyclic(n):
    return from_operation(range(n), lambda a, b: (a + b) % n)


def abelian(*moduli):
    """Direct product of cyclic groups Z_m1 x Z_m2 x ... ."""
    elems = list(product(*[range(m) for m in moduli]))
    return from_operation(elems, lambda a, b: tuple((x + y) % m for x, y, m in zip(a, b, moduli)))


def metacyclic(p, q, r):
    """C_p semidirect C_q with the generator of C_q acting as a -> r*a (r^q = 1 mod p)."""
    if pow(r, q, p) != 1:
        raise ValueError(f"{r} does not have order dividing {q} modulo {p}")
    elems = [(a, b) for a in range(p) for b in range(q)]
    return from_operation(elems, lambda x, y: ((x[0] + pow(r, x[1], p) * y[0]) % p, (x[1] + y[1]) % q))


def g21():
    """The nonabelian group of order 21."""
    return metacyclic(7, 3, 2)


def dihedral(n):
    """Dihedral group of order 2n as pairs (rotation, reflection flag)."""
    elems = [(k, s) for s in range(2) for k in range(n)]
    return from_operation(elems, lambda x, y: ((x[0] + (-1) ** x[1] * y[0]) % n, x[1] ^ y[1]))


def symmetric(n):
    """S_n acting on the right: (p*q)[i] = q[p[i]]."""
    elems = list(permutations(range(n)))
    return from_operation(elems, lambda p, q: tuple(q[i] for i in p))


def alternating(n):
    def even(p):
        return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j]) % 2 == 0

    elems = [p for p in permutations(range(n)) if even(p)]
    return from_operation(elems, lambda p, q: tuple(q[i] for i in p))


def quaternion():
    """Q8 as unit quaternions (sign, axis) with axis in {1, i, j, k}."""
    mult = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }

    def op(x, y):
        s, a = mult[(x[1], y[1])]
        return (x[0] * y[0] * s, a)

    elems = [(s, a) for s in (1, -1) for a in "1ijk"]
    return from_operation(elems, op)


def heisenberg(p=3):
    """Unitriangular 3x3 matrices over Z_p, order p^3."""
    elems = list(product(range(p), repeat=3))
    return from_operation(elems, lambda x, y: ((x[0] + y[0]) % p, (x[1] + y[1]) % p,
                                               (x[2] + y[2] + x[0] * y[1]) % p))


BUILTINS = {
    "table1": table1,
    "table2": table2,
    "c3": lambda: cyclic(3),
    "c5": lambda: cyclic(5),
    "c7": lambda: cyclic(7),
    "c9": lambda: cyclic(9),
    "c3xc3": lambda: abelian(3, 3),
    "g21": g21,
    "g39": lambda: metacyclic(13, 3, 3),
    "g55": lambda: metacyclic(11, 5, 3),
    "heis27": heisenberg,
    "s3": lambda: symmetric(3),
    "d4": lambda: dihedral(4),
    "q8": quaternion,
    "a4": lambda: alternating(4),
    "s4": lambda: symmetric(4),
}


def builtin(name):
    """The embedded dataset called ``name``."""
    try:
        factory = BUILTINS[name]
    except KeyError:
        raise UnknownDataset(f"unknown dataset {name!r}; known: {', '.join(sorted(BUILTINS))}") from None
    return factory()
