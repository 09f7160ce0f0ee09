"""Slow, independent reference computations used to pin library results.

Nothing here shares code paths with the algorithms it checks: orders come
from plain closure, subgroups from canonical generating sequences without
any conjugacy reduction, and factorization patterns from trial division.
"""

from __future__ import annotations

import itertools
import random

from .group import PermutationGroup, closure_elements
from .numtheory import primes_up_to
from .polys import deg, monic, pdivmod, trim


def closure_order(G: PermutationGroup) -> int:
    return len(closure_elements(G.generators, G.degree))


def count_subgroups(G: PermutationGroup) -> int:
    """Number of subgroups of G.

    Each subgroup K has a unique greedy generating sequence c_1, c_2, ...
    of cyclic-subgroup generators, c_k being the first cyclic subgroup (in
    a fixed order) lying in K but not in <c_1..c_(k-1)>.  A depth-first
    search over such sequences meets every subgroup exactly once.
    """
    els = sorted(closure_elements(G.generators, G.degree))
    idx = {g: i for i, g in enumerate(els)}
    T = [[idx[tuple(a[x] for x in b)] for b in els] for a in els]
    e = idx[tuple(range(G.degree))]
    cyclic: dict[frozenset, int] = {}
    for x in range(len(els)):
        s, y = {e}, x
        while y != e:
            s.add(y)
            y = T[y][x]
        cyclic.setdefault(frozenset(s), x)
    order = sorted(cyclic.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))
    gens = [c for _, c in order]
    cid = {}  # x -> first cyclic subgroup in the order containing x
    for k, (s, _) in enumerate(order):
        for x in s:
            cid.setdefault(x, k)

    def close(gs):
        S = {e}
        frontier = [e]
        while frontier:
            nxt = []
            for a in frontier:
                row = T[a]
                for s in gs:
                    c = row[s]
                    if c not in S:
                        S.add(c)
                        nxt.append(c)
            frontier = nxt
        return S

    count = 0
    stack = [(frozenset([e]), [], -1)]
    while stack:
        H, hg, last = stack.pop()
        count += 1
        for j in range(last + 1, len(gens)):
            g = gens[j]
            if g in H:
                continue
            K = close(hg + [g])
            if min(cid[x] for x in K if x not in H) != j:
                continue
            stack.append((frozenset(K), hg + [g], j))
    return count


# ---------------------------------------------------------------------------
# Factorization over F_p by trial division


def monic_polys(p: int, d: int):
    for tail in itertools.product(range(p), repeat=d):
        yield list(tail) + [1]


def irreducibles(p: int, d: int) -> dict[int, list[list[int]]]:
    """Monic irreducibles over F_p of each degree 1..d, by sieving."""
    out: dict[int, list[list[int]]] = {}
    for k in range(1, d + 1):
        out[k] = []
        for f in monic_polys(p, k):
            if all(pdivmod(f, g, p)[1] for j in range(1, k // 2 + 1) for g in out[j]):
                out[k].append(f)
    return out


def trial_division_pattern(f: list[int], p: int, table=None) -> tuple[int, ...] | None:
    """Factor degrees of f over F_p; None when f has a repeated factor."""
    f = monic(trim([c % p for c in f]), p)
    n = deg(f)
    table = table or irreducibles(p, max(n // 2, 1))
    parts = []
    for k in range(1, n // 2 + 1):
        for g in table[k]:
            if deg(f) < k:
                break
            hits = 0
            while deg(f) >= k:
                q, r = pdivmod(f, g, p)
                if r:
                    break
                f = q
                hits += 1
            if hits > 1:
                return None
            parts.extend([k] * hits)
    if deg(f) > 0:
        parts.append(deg(f))
    return tuple(sorted(parts, reverse=True))


def ddf_test_cases(max_degree: int = 8, max_prime: int = 13, exhaustive_limit: int = 5000,
                   samples: int = 100, seed: int = 7):
    """(p, polynomial) pairs: every monic polynomial when p^d is small, else a
    seeded sample of monic polynomials of that degree."""
    rng = random.Random(seed)
    for p in primes_up_to(max_prime):
        for d in range(1, max_degree + 1):
            if p**d <= exhaustive_limit:
                for f in monic_polys(p, d):
                    yield p, f
            else:
                for _ in range(samples):
                    yield p, [rng.randrange(p) for _ in range(d)] + [1]
