"""Constructors for the named groups, actions and subgroup pairs.

Point labelings:

* ``symmetric``/``alternating``/``cyclic``/``dihedral`` act on 1..n in the
  usual way (dihedral of order 2m: rotation ``(1 2 ... m)``, reflection
  ``i -> m+2-i``).
* vector and projective actions number points by the lexicographic order
  of their coordinate tuples (projective points normalized so the first
  nonzero coordinate is 1).
* regular embeddings number the points by the sorted element list (or by
  the table index for group tables).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Sequence

from .config import get_config
from .errors import SylowscopeError
from .fields import FiniteField, gf
from .group import PermutationGroup
from .numtheory import is_prime
from .perm import Permutation
from .subgroups import (Subgroup, abstract_isomorphic, coset_action, find_conjugator,
                        normalizer, subgroup_from_elements, whole)

_tnew = tuple.__new__


# ---------------------------------------------------------------------------
# Standard families


def symmetric(n: int) -> PermutationGroup:
    if n < 1:
        raise ValueError("symmetric(n) needs n >= 1")
    if n == 1:
        return PermutationGroup([], degree=1, name="S1")
    gens = [Permutation.from_cycles([(1, 2)], n)]
    if n > 2:
        gens.append(Permutation.from_cycles([tuple(range(1, n + 1))], n))
    return PermutationGroup(gens, name=f"S{n}")


def alternating(n: int) -> PermutationGroup:
    if n < 1:
        raise ValueError("alternating(n) needs n >= 1")
    gens = [Permutation.from_cycles([(1, 2, k)], n) for k in range(3, n + 1)]
    return PermutationGroup(gens, degree=n, name=f"A{n}")


def cyclic(n: int) -> PermutationGroup:
    if n < 1:
        raise ValueError("cyclic(n) needs n >= 1")
    gens = [Permutation.from_cycles([tuple(range(1, n + 1))], n)] if n > 1 else []
    return PermutationGroup(gens, degree=n, name=f"C{n}")


def dihedral(order: int) -> PermutationGroup:
    """Dihedral group of the given order (2m), acting on m points for m >= 3."""
    if order < 2 or order % 2:
        raise ValueError("dihedral order must be even and at least 2")
    m = order // 2
    if m == 1:
        return PermutationGroup([Permutation.from_cycles([(1, 2)], 2)], name="D2")
    if m == 2:
        return PermutationGroup([Permutation.from_cycles([(1, 2), (3, 4)], 4),
                                 Permutation.from_cycles([(1, 3), (2, 4)], 4)], name="D4")
    rot = Permutation.from_cycles([tuple(range(1, m + 1))], m)
    ref = Permutation.from_images([((m + 2 - i - 1) % m) + 1 for i in range(1, m + 1)])
    return PermutationGroup([rot, ref], name=f"D{order}")


def elementary_abelian(p: int, k: int) -> PermutationGroup:
    """C_p^k acting regularly on F_p^k by translations."""
    if not is_prime(p) or k < 1:
        raise ValueError("elementary_abelian needs a prime p and k >= 1")
    vecs = list(itertools.product(range(p), repeat=k))
    index = {v: i for i, v in enumerate(vecs)}
    gens = []
    for j in range(k):
        e = [0] * k
        e[j] = 1
        gens.append(_tnew(Permutation, [index[tuple((a + b) % p for a, b in zip(v, e))]
                                         for v in vecs]))
    return PermutationGroup(gens, name=f"C{p}^{k}")


def quaternion() -> PermutationGroup:
    """Q8 in its regular action on 8 points."""
    i = Permutation.from_cycles([(1, 2, 3, 4), (5, 6, 7, 8)], 8)
    j = Permutation.from_cycles([(1, 5, 3, 7), (2, 8, 4, 6)], 8)
    return PermutationGroup([i, j], name="Q8")


def direct_product(G: PermutationGroup, H: PermutationGroup) -> PermutationGroup:
    """G x H acting on the disjoint union of their point sets (G's points first)."""
    n, m = G.degree, H.degree
    gens = [_tnew(Permutation, list(g) + list(range(n, n + m))) for g in G.generators]
    gens += [_tnew(Permutation, list(range(n)) + [n + x for x in h]) for h in H.generators]
    return PermutationGroup(gens, degree=n + m, name=f"{G.name}x{H.name}")


# ---------------------------------------------------------------------------
# Group tables and regular embeddings


def heisenberg(p: int) -> list[list[int]]:
    """Multiplication table of the upper unitriangular 3x3 matrices over F_p.

    Element ``a*p^2 + b*p + c`` is [[1, a, b], [0, 1, c], [0, 0, 1]]; 0 is the
    identity.  Only odd p: for p = 2 the group has exponent 4.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        raise ValueError("heisenberg(2) has exponent 4; only odd primes are supported")

    def enc(a, b, c):
        return (a % p) * p * p + (b % p) * p + (c % p)

    elems = list(itertools.product(range(p), repeat=3))
    return [[enc(a + a2, b2 + a * c2 + b, c + c2) for (a2, b2, c2) in elems]
            for (a, b, c) in elems]


def _table_generators(table: Sequence[Sequence[int]]) -> list[int]:
    n = len(table)
    span = {0}
    gens: list[int] = []
    for x in range(n):
        if x in span:
            continue
        gens.append(x)
        span = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for y in frontier:
                for g in gens:
                    z = table[y][g]
                    if z not in span:
                        span.add(z)
                        nxt.append(z)
            frontier = nxt
        if len(span) == n:
            break
    return gens


def check_group_table(table: Sequence[Sequence[int]]) -> None:
    n = len(table)
    for a in range(n):
        if table[0][a] != a or table[a][0] != a:
            raise ValueError("element 0 must be the identity")
        if sorted(table[a]) != list(range(n)):
            raise ValueError("table rows must be permutations")
    for a in range(n):
        for b in range(n):
            ab = table[a][b]
            for c in range(n):
                if table[ab][c] != table[a][table[b][c]]:
                    raise ValueError("table is not associative")


def regular_embedding(H: PermutationGroup | Sequence[Sequence[int]],
                      name: str | None = None, cap: int = 1000) -> Subgroup:
    """Left regular representation of H inside Sym(|H|)."""
    if isinstance(H, PermutationGroup):
        if H.order() > cap:
            raise SylowscopeError(f"regular embedding of order {H.order()} exceeds cap {cap}")
        elems = H.elements()
        idx = {g: i for i, g in enumerate(elems)}
        gens = [_tnew(Permutation, [idx[h * x] for x in elems]) for h in H.generators]
        n = len(elems)
        name = name or (f"reg({H.name})" if H.name else None)
    else:
        n = len(H)
        if n > cap:
            raise SylowscopeError(f"regular embedding of order {n} exceeds cap {cap}")
        check_group_table(H)
        gens = [_tnew(Permutation, [H[h][x] for x in range(n)]) for h in _table_generators(H)]
    ambient = symmetric(n)
    sub = Subgroup(ambient, gens, name=name, check=False)
    if sub.order() != n:
        raise SylowscopeError("regular embedding has the wrong order")
    return sub


# ---------------------------------------------------------------------------
# Matrix actions


def _mat_vec(F: FiniteField, M, v) -> tuple[int, ...]:
    out = []
    for row in M:
        s = 0
        for a, b in zip(row, v):
            s = F.add(s, F.mul(a, b))
        out.append(s)
    return tuple(out)


def _vec_mat(F: FiniteField, v, M) -> tuple[int, ...]:
    d = len(M)
    out = []
    for j in range(d):
        s = 0
        for i in range(d):
            s = F.add(s, F.mul(v[i], M[i][j]))
        out.append(s)
    return tuple(out)


def _mat_inv(F: FiniteField, M):
    d = len(M)
    A = [list(row) + [1 if i == j else 0 for j in range(d)] for i, row in enumerate(M)]
    for col in range(d):
        piv = next((r for r in range(col, d) if A[r][col]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        A[col], A[piv] = A[piv], A[col]
        inv = F.inv(A[col][col])
        A[col] = [F.mul(inv, x) for x in A[col]]
        for r in range(d):
            if r != col and A[r][col]:
                c = A[r][col]
                A[r] = [F.add(x, F.neg(F.mul(c, y))) for x, y in zip(A[r], A[col])]
    return [row[d:] for row in A]


def _normalize(F: FiniteField, v) -> tuple[int, ...]:
    lead = next(x for x in v if x)
    inv = F.inv(lead)
    return tuple(F.mul(inv, x) for x in v)


def projective_points(F: FiniteField, d: int) -> list[tuple[int, ...]]:
    pts = {_normalize(F, v) for v in itertools.product(F.elements(), repeat=d) if any(v)}
    return sorted(pts)


def nonzero_vectors(F: FiniteField, d: int) -> list[tuple[int, ...]]:
    return sorted(v for v in itertools.product(F.elements(), repeat=d) if any(v))


def matrix_on_vectors(F: FiniteField, M, vecs) -> Permutation:
    index = {v: i for i, v in enumerate(vecs)}
    return _tnew(Permutation, [index[_mat_vec(F, M, v)] for v in vecs])


def matrix_on_points(F: FiniteField, M, pts) -> Permutation:
    index = {v: i for i, v in enumerate(pts)}
    return _tnew(Permutation, [index[_normalize(F, _mat_vec(F, M, v))] for v in pts])


def matrix_on_hyperplanes(F: FiniteField, M, pts) -> Permutation:
    """Hyperplane ker(phi) is labeled by the normalized row vector phi.

    g maps ker(phi) to ker(phi g^-1).
    """
    index = {v: i for i, v in enumerate(pts)}
    Mi = _mat_inv(F, M)
    return _tnew(Permutation, [index[_normalize(F, _vec_mat(F, phi, Mi))] for phi in pts])


def transvections(F: FiniteField, d: int) -> list[list[list[int]]]:
    """Elementary transvections I + a E_ij, a over an additive basis of F."""
    out = []
    for i in range(d):
        for j in range(d):
            if i == j:
                continue
            for a in F.additive_basis():
                M = [[1 if r == c else 0 for c in range(d)] for r in range(d)]
                M[i][j] = a
                out.append(M)
    return out


# ---------------------------------------------------------------------------
# Catalog entries


@dataclass
class CatalogEntry:
    id: str
    name: str
    group: PermutationGroup
    subgroups: dict[str, Subgroup]
    note: str = ""
    actions: dict[str, PermutationGroup] = field(default_factory=dict)
    data: dict = field(default_factory=dict)

    def __post_init__(self):
        for key, sub in self.subgroups.items():
            if not all(self.group.contains(g) for g in sub.generators):
                raise SylowscopeError(f"{self.id}: subgroup {key} is not inside the group")
            if sub.name is None:
                sub.name = key

    def summary(self) -> dict:
        return {
            "id": self.id,
            "name": self.name,
            "order": self.group.order(),
            "degree": self.group.degree,
            "subgroups": {k: {"order": v.order(), "gens": [str(g) for g in v.generators]}
                          for k, v in sorted(self.subgroups.items())},
        }


def _setwise_stabilizer(G: PermutationGroup, points: set[int], name: str) -> Subgroup:
    elems = [g for g in G.elements() if {g[x] for x in points} == points]
    return subgroup_from_elements(G, elems, name=name)


def _point_stabilizer(G: PermutationGroup, point: int, name: str) -> Subgroup:
    return subgroup_from_elements(G, [g for g in G.elements() if g[point] == point], name=name)


def psl(d: int, q: int) -> CatalogEntry:
    """PSL(d, q) on projective points, with the two maximal parabolic subgroups.

    U fixes the point <e1>; V stabilizes the hyperplane <e2, ..., ed>.
    """
    if d < 2:
        raise ValueError("psl needs d >= 2")
    F = gf(q)
    pts = projective_points(F, d)
    mats = transvections(F, d)
    G = PermutationGroup([matrix_on_points(F, M, pts) for M in mats], name=f"PSL({d},{q})")
    hyper = PermutationGroup([matrix_on_hyperplanes(F, M, pts) for M in mats],
                             name=f"PSL({d},{q}) on hyperplanes")
    e1 = tuple([1] + [0] * (d - 1))
    W = {i for i, v in enumerate(pts) if v[0] == 0}
    U = _point_stabilizer(G, pts.index(e1), "U")
    V = _setwise_stabilizer(G, W, "V")
    return CatalogEntry(
        id=f"psl_{d}_{q}", name=f"PSL({d},{q})", group=G, subgroups={"U": U, "V": V},
        note="U = stabilizer of the point <e1>; V = stabilizer of the hyperplane <e2..ed>",
        actions={"points": G, "hyperplanes": hyper},
    )


def _gl_matrix(F, rows):
    return [[x % F.q for x in r] for r in rows]


def gl2_3() -> CatalogEntry:
    """GL(2,3) on the 8 nonzero vectors of F_3^2 (column vectors, v -> Mv)."""
    F = gf(3)
    vecs = nonzero_vectors(F, 2)
    act = lambda rows: matrix_on_vectors(F, _gl_matrix(F, rows), vecs)  # noqa: E731
    P = act([[1, 1], [0, 1]])
    A = act([[1, 0], [0, -1]])
    B = act([[-1, 0], [0, 1]])
    G = PermutationGroup([P, A, B, act([[1, 0], [1, 1]])], name="GL(2,3)")
    sub = lambda gens, nm: Subgroup(G, gens, name=nm)  # noqa: E731
    PP = sub([P], "P")
    U = sub([P, A], "U")
    V = sub([P, B], "V")
    N = normalizer(G, PP)
    N.name = "N(P)"
    return CatalogEntry(
        id="gl2_3", name="GL(2,3)", group=G,
        subgroups={"P": PP, "A": sub([A], "A"), "B": sub([B], "B"), "U": U, "V": V, "N": N},
        note="P = [[1,1],[0,1]], A = diag(1,-1), B = diag(-1,1); U = <P,A>, V = <P,B>",
        actions={"G/U": coset_action(G, U).image, "G/V": coset_action(G, V).image},
        data={"vectors": [list(v) for v in vecs]},
    )


def psl_3_2() -> CatalogEntry:
    return psl(3, 2)


def psl_3_3() -> CatalogEntry:
    return psl(3, 3)


def psl_2_11(seed: int | None = None, attempts: int | None = None,
             target_distinct: int = 8) -> CatalogEntry:
    """PSL(2,11) on the 12 points of the projective line over F_11.

    The two A5 classes are discovered by sampling x of order 2 and y of
    order 3 from a seeded generator and keeping <x, y> when it has order 60.
    A4 comes from the same sampling (order 12, isomorphic to Alt(4)); D6 is
    the normalizer of the first cyclic subgroup of order 6.
    """
    cfg = get_config()
    seed = cfg.seed if seed is None else seed
    attempts = cfg.discovery_attempts if attempts is None else attempts
    base = psl(2, 11)
    G = base.group
    G.name = "PSL(2,11)"
    rng = random.Random(seed)
    A5, A4, D12 = alternating(5), alternating(4), dihedral(12)

    def draw(order: int) -> Permutation:
        for _ in range(1000):
            g = G.random_element(rng)
            if g.order() == order:
                return g
        raise SylowscopeError(f"no element of order {order} drawn")

    seen: set = set()
    reps: list[Subgroup] = []
    class_sizes: list[int] = []
    a4 = None
    used = 0
    for used in range(1, attempts + 1):
        x, y = draw(2), draw(3)
        H = PermutationGroup([x, y], degree=G.degree)
        if H.order() == 12 and a4 is None and abstract_isomorphic(H, A4):
            a4 = Subgroup(G, [x, y], name="A4", check=False)
        if H.order() != 60:
            continue
        key = frozenset(H.elements())
        if key in seen:
            continue
        seen.add(key)
        H = Subgroup(G, [x, y], check=False)
        for i, R in enumerate(reps):
            if find_conjugator(G, R, H)[0] is not None:
                class_sizes[i] += 1
                break
        else:
            reps.append(H)
            class_sizes.append(1)
        if len(seen) >= target_distinct and a4 is not None:
            break
    if len(reps) != 2 or a4 is None:
        raise SylowscopeError(
            f"A5 discovery found {len(reps)} classes after {used} attempts (seed {seed})")
    U, V = reps
    U.name, V.name = "U", "V"
    for R in reps:
        if not abstract_isomorphic(R, A5):
            raise SylowscopeError("order-60 subgroup not isomorphic to A5")
    z = next(g for g in G.elements() if g.order() == 6)
    D6 = normalizer(G, Subgroup(G, [z], check=False))
    D6.name = "D6"
    if D6.order() != 12 or not abstract_isomorphic(D6, D12):
        raise SylowscopeError("normalizer of an order-6 element is not dihedral of order 12")
    return CatalogEntry(
        id="psl_2_11", name="PSL(2,11)", group=G,
        subgroups={"U": U, "V": V, "A4": a4, "D6": D6,
                   "point_stabilizer": base.subgroups["U"]},
        note="U, V: representatives of the two A5 classes; A4, D6: {2,3}-Hall subgroups",
        actions={"G/U": coset_action(G, U).image, "G/V": coset_action(G, V).image},
        data={"seed": seed, "attempts_used": used, "distinct_A5_sampled": len(seen),
              "sampled_class_sizes": class_sizes},
    )


def frobenius_42() -> CatalogEntry:
    """Normalizer in Sym(7) of <(1 2 3 4 5 6 7)>."""
    S7 = symmetric(7)
    c = Permutation.from_cycles([tuple(range(1, 8))], 7)
    N = normalizer(S7, Subgroup(S7, [c], check=False))
    G = PermutationGroup(N.generators, name="F42")
    Gs = whole(G)
    stab = _point_stabilizer(G, 0, "U")
    return CatalogEntry(
        id="frobenius_42", name="F42 = C7 : C6", group=G,
        subgroups={"C7": Subgroup(G, [c], name="C7"), "U": stab, "G": Gs},
        note="affine group of F_7 on 7 points",
    )


def semidirect_instance() -> CatalogEntry:
    """C3^2 : C4 on F_3^2, C4 acting through the rotation [[0,-1],[1,0]]."""
    F = gf(3)
    vecs = sorted(itertools.product(range(3), repeat=2))
    index = {v: i for i, v in enumerate(vecs)}
    t1 = _tnew(Permutation, [index[((a + 1) % 3, b)] for a, b in vecs])
    t2 = _tnew(Permutation, [index[(a, (b + 1) % 3)] for a, b in vecs])
    M = [[0, 2], [1, 0]]
    r = _tnew(Permutation, [index[_mat_vec(F, M, v)] for v in vecs])
    G = PermutationGroup([t1, t2, r], name="C3^2:C4")
    A = Subgroup(G, [t1, t2], name="A")
    H = Subgroup(G, [r], name="H")
    lines = projective_points(F, 2)
    invariant = [list(l) for l in lines if _normalize(F, _mat_vec(F, M, l)) == l]
    return CatalogEntry(
        id="semidirect_c3sq_c4", name="C3^2 : C4", group=G, subgroups={"A": A, "H": H},
        note="A = translations (normal), H = <rotation of order 4> (a complement of A)",
        data={"matrix": M, "lines": [list(l) for l in lines], "invariant_lines": invariant},
    )


def generalized_dihedral_c3sq() -> PermutationGroup:
    """C3^2 extended by inversion, on F_3^2: translations t1, t2 and v -> -v.

    With A = <t1> (sign action of the quotient S3) the complements of A fall
    into three conjugacy classes.
    """
    vecs = sorted(itertools.product(range(3), repeat=2))
    index = {v: i for i, v in enumerate(vecs)}
    t1 = _tnew(Permutation, [index[((a + 1) % 3, b)] for a, b in vecs])
    t2 = _tnew(Permutation, [index[(a, (b + 1) % 3)] for a, b in vecs])
    neg = _tnew(Permutation, [index[((-a) % 3, (-b) % 3)] for a, b in vecs])
    return PermutationGroup([t1, t2, neg], name="Dih(C3^2)")


def s6_two_s5() -> CatalogEntry:
    """Sym(6) with a point stabilizer S5 and a transitive S5."""
    S6 = symmetric(6)
    S5 = symmetric(5)
    U = Subgroup(S6, [Permutation.from_cycles([(1, 2)], 6),
                      Permutation.from_cycles([(1, 2, 3, 4, 5)], 6)], name="U")
    c5 = Subgroup(S5, [Permutation.from_cycles([(1, 2, 3, 4, 5)], 5)], check=False)
    act = coset_action(S5, normalizer(S5, c5))
    V = Subgroup(S6, act.image.generators, name="V")
    return CatalogEntry(
        id="s6_two_s5", name="S6", group=S6, subgroups={"U": U, "V": V},
        note="U fixes a point; V = S5 acting on its six Sylow 5-subgroups",
    )


def regular_pair(p: int) -> CatalogEntry:
    """Cyclic and dihedral groups of order 2p, both regular in Sym(2p)."""
    if not is_prime(p) or p == 2:
        raise ValueError("regular_pair needs an odd prime")
    U = regular_embedding(cyclic(2 * p), name=f"C{2 * p}")
    V = regular_embedding(dihedral(2 * p), name=f"D{2 * p}")
    return CatalogEntry(
        id=f"regular_c{2 * p}_vs_d{2 * p}", name=f"Sym({2 * p})", group=U.ambient,
        subgroups={"U": U, "V": Subgroup(U.ambient, V.generators, name=V.name, check=False)},
        note="regular embeddings of C_2p and D_2p",
    )


def regular_heisenberg(p: int = 3) -> CatalogEntry:
    U = regular_embedding(elementary_abelian(p, 3), name=f"C{p}^3")
    V = regular_embedding(heisenberg(p), name=f"Heis({p})")
    return CatalogEntry(
        id=f"regular_c{p}cubed_vs_heisenberg{p}", name=f"Sym({p**3})", group=U.ambient,
        subgroups={"U": U, "V": Subgroup(U.ambient, V.generators, name=V.name, check=False)},
        note="regular embeddings of C_p^3 and the Heisenberg group of order p^3",
    )


CATALOG: dict[str, Callable[[], CatalogEntry]] = {
    "gl2_3": gl2_3,
    "psl_3_2": psl_3_2,
    "psl_3_3": psl_3_3,
    "psl_2_11": psl_2_11,
    "frobenius_42": frobenius_42,
    "semidirect_c3sq_c4": semidirect_instance,
    "s6_two_s5": s6_two_s5,
    "regular_c6_vs_d6": lambda: regular_pair(3),
    "regular_c10_vs_d10": lambda: regular_pair(5),
    "regular_c14_vs_d14": lambda: regular_pair(7),
    "regular_c3cubed_vs_heisenberg3": lambda: regular_heisenberg(3),
}


@lru_cache(maxsize=None)
def get_entry(entry_id: str) -> CatalogEntry:
    try:
        ctor = CATALOG[entry_id]
    except KeyError:
        raise KeyError(f"unknown catalog id {entry_id!r}; known: {sorted(CATALOG)}") from None
    return ctor()


def list_entries() -> list[dict]:
    out = []
    for key in CATALOG:
        e = get_entry(key)
        out.append({"id": key, "name": e.name, "order": e.group.order(),
                    "degree": e.group.degree})
    return out


def is_regular(U: PermutationGroup) -> bool:
    return U.is_transitive() and U.order() == U.degree
