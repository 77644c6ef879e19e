"""Brute-force counts used to freeze expected values in the C++ tests.

Counts k-triangulations of the m-gon through the Hankel determinant of
Catalan numbers, and n-periodic k-triangulations of the 2kn-gon by
backtracking over shift orbits with naive crossing checks.
"""
import itertools
import sys
from fractions import Fraction
from math import comb


def catalan(i):
    return comb(2 * i, i) // (i + 1)


def det(mat):
    mat = [[Fraction(x) for x in row] for row in mat]
    size, out = len(mat), Fraction(1)
    for c in range(size):
        p = next((r for r in range(c, size) if mat[r][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            mat[c], mat[p] = mat[p], mat[c]
            out = -out
        out *= mat[c][c]
        for r in range(c + 1, size):
            f = mat[r][c] / mat[c][c]
            mat[r] = [a - f * b for a, b in zip(mat[r], mat[c])]
    return int(out)


def polygon_count(m, k):
    return det([[catalan(m - i - j) for j in range(1, k + 1)] for i in range(1, k + 1)])


def cross(e, f):
    (a, b), (c, d) = e, f
    return a < c < b < d or c < a < d < b


def has_crossing(edges, size, anchor=None):
    pool = list(edges)
    for combo in itertools.combinations(pool, size):
        if anchor is not None and anchor not in combo:
            continue
        if all(cross(x, y) for x, y in itertools.combinations(combo, 2)):
            return True
    return False


def periodic_count(n, k):
    m = 2 * k * n
    rel = [(a, b) for a in range(m) for b in range(a + 1, m) if min(b - a, m - b + a) > k]
    seen, orbits = set(), []
    for e in rel:
        if e in seen:
            continue
        orb = set()
        for t in range(2 * k):
            x, y = (e[0] + t * n) % m, (e[1] + t * n) % m
            orb.add((min(x, y), max(x, y)))
        seen |= orb
        orbits.append(sorted(orb))
    count = 0

    def grow(i, chosen):
        nonlocal count
        if i == len(orbits):
            for e in rel:
                if e not in chosen and not has_crossing(chosen | {e}, k + 1, e):
                    return
            count += 1
            return
        extra = set(orbits[i])
        ok = all(not has_crossing(chosen | extra, k + 1, e) for e in extra)
        if ok:
            grow(i + 1, chosen | extra)
        grow(i + 1, chosen)

    grow(0, set())
    return count


if __name__ == "__main__":
    for m, k in [(5, 1), (8, 1), (8, 2), (10, 2), (12, 2), (9, 3), (20, 2)]:
        print("polygon", m, k, polygon_count(m, k))
    for n, k in [(int(a), int(b)) for a, b in (arg.split(",") for arg in sys.argv[1:])]:
        print("periodic", n, k, periodic_count(n, k), flush=True)
