#!/usr/bin/env python3
"""Independent brute-force oracle used to freeze expected values in the C++ tests.

Shares no code with the library: bases are Python frozensets, the exchange
axiom is checked literally, determinants use Fraction cofactor expansion.
"""
from fractions import Fraction
from itertools import combinations, permutations
import sys


def is_matroid(family):
    fam = set(family)
    for I in fam:
        for J in fam:
            if I == J:
                continue
            for i in I - J:
                if not any((I - {i}) | {j} in fam for j in J - I):
                    return False
    return True


def labeled_counts(n, k):
    subsets = [frozenset(c) for c in combinations(range(1, n + 1), k)]
    m = len(subsets)
    count = 0
    for mask in range(1, 1 << m):
        fam = [subsets[t] for t in range(m) if mask >> t & 1]
        if is_matroid(fam):
            count += 1
    return count


def det(rows):
    if not rows:
        return Fraction(1)
    if len(rows) == 1:
        return rows[0][0]
    total = Fraction(0)
    for c in range(len(rows)):
        minor = [r[:c] + r[c + 1:] for r in rows[1:]]
        total += (-1) ** c * rows[0][c] * det(minor)
    return total


def moment(rows, k):
    n = len(rows)
    w = {}
    for J in combinations(range(n), k):
        p = det([rows[j] for j in J])
        w[J] = p * p
    tot = sum(w.values())
    return [sum(v for J, v in w.items() if i in J) / tot for i in range(n)], w


if __name__ == "__main__":
    what = sys.argv[1]
    if what == "counts":
        nmax = int(sys.argv[2])
        for n in range(0, nmax + 1):
            row = [labeled_counts(n, k) for k in range(n + 1)]
            print(n, row, sum(row))
    elif what == "moment":
        F = Fraction
        for rows in ([[F(1), F(0)], [F(0), F(1)], [F(1), F(1)], [F(1), F(2)]],
                     [[F(1), F(0)], [F(1), F(0)], [F(0), F(1)], [F(0), F(1)]],
                     [[F(1), F(0)], [F(0), F(1)], [F(0), F(0)], [F(0), F(0)]]):
            mu, w = moment(rows, 2)
            print([str(x) for x in mu], {"".join(str(j + 1) for j in J): str(v) for J, v in w.items()})


def rank_of(vectors):
    rows = [[Fraction(x) for x in v] for v in vectors]
    r = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c] / rows[r][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def polytope_stats(n, fam):
    """(dimension via edge-vector rank, simple?) computed from vectors only."""
    def vec(B):
        return [1 if i in B else 0 for i in range(1, n + 1)]
    fam = list(fam)
    k = len(fam[0])
    adj = {B: [C for C in fam if len(B & C) == k - 1] for B in fam}
    edge_vecs = [[a - b for a, b in zip(vec(B), vec(C))] for B in fam for C in adj[B]]
    dim = rank_of(edge_vecs) if edge_vecs else 0
    simple = all(len(adj[B]) == dim for B in fam)
    return dim, simple


def simple_counts(n, k):
    subsets = [frozenset(c) for c in combinations(range(1, n + 1), k)]
    m = len(subsets)
    total = simple = fulldim = fulldim_simple_vertices = 0
    for mask in range(1, 1 << m):
        fam = [subsets[t] for t in range(m) if mask >> t & 1]
        if not is_matroid(fam):
            continue
        total += 1
        dim, s = polytope_stats(n, fam)
        simple += s
        if dim == n - 1 and 2 <= k <= n - 2:
            fulldim += 1
    return total, simple, fulldim


if __name__ == "__main__" and sys.argv[1] == "simple":
    for n in range(1, int(sys.argv[2]) + 1):
        print(n, [simple_counts(n, k) for k in range(n + 1)])
