"""Independent brute-force oracles used to derive expected values.

Nothing here calls into the library's algorithms beyond plain data access.
"""

from __future__ import annotations

import itertools
from functools import reduce
from math import gcd


def roots_by_quadratic_form(cartan, bound: int) -> set[tuple[int, ...]]:
    """Positive v with entries <= bound and q(v) = v^T A v / 2 = 1 (simply-laced)."""
    n = len(cartan)
    out = set()
    for v in itertools.product(range(bound + 1), repeat=n):
        if not any(v):
            continue
        q2 = sum(v[i] * cartan[i][j] * v[j] for i in range(n) for j in range(n))
        if q2 == 2:
            out.add(v)
    return out


def count_paths(n: int, arrows, i: int, j: int) -> int:
    """Number of paths i -> ... -> j by depth-first search (trivial path counted)."""
    succ = {v: [b for a, b in arrows if a == v] for v in range(1, n + 1)}

    def walk(v):
        return (1 if v == j else 0) + sum(walk(w) for w in succ[v])

    return walk(i)


def euler_form_oracle(n: int, arrows, x, y) -> int:
    """<x, y> = sum x_i y_i - sum over arrows a -> b of x_a y_b."""
    return sum(x[i] * y[i] for i in range(n)) - sum(x[a - 1] * y[b - 1] for a, b in arrows)


def leibniz_det(m) -> int:
    n = len(m)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        term = -1 if inversions % 2 else 1
        for r in range(n):
            term *= m[r][perm[r]]
            if term == 0:
                break
        total += term
    return total


def invariant_factors_by_minors(m) -> list[int]:
    """d_k = D_k / D_{k-1} with D_k the gcd of all k x k minors (zeros once D_k = 0)."""
    n = len(m)
    divisors = [1]
    for k in range(1, n + 1):
        minors = [
            leibniz_det([[m[r][c] for c in cols] for r in rows])
            for rows in itertools.combinations(range(n), k)
            for cols in itertools.combinations(range(n), k)
        ]
        divisors.append(abs(reduce(gcd, minors, 0)))
    out = []
    for k in range(1, n + 1):
        out.append(0 if divisors[k] == 0 else divisors[k] // divisors[k - 1])
    return out


def tilting_sets_bruteforce(objects, ext1, n: int) -> list[frozenset]:
    """All n-subsets whose members are pairwise (and self-) Ext^1-orthogonal."""
    rigid = [x for x in objects if ext1(x, x) == 0]
    out = []
    for combo in itertools.combinations(rigid, n):
        if all(ext1(a, b) == 0 for a, b in itertools.combinations(combo, 2)):
            out.append(frozenset(combo))
    return out
