"""Subgroup-level algorithms on permutation groups.

Everything here is explicit: it works with element sets, so the groups
involved must be small enough to list (see :mod:`sylowscope.config`).  The
one exception is conjugacy of subgroups of a full symmetric group, where
semiregular and cyclic subgroups are decided structurally.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import factorial
from typing import Iterable, Sequence

from .config import get_config
from .errors import (CapExceededError, InvariantViolation, NoApplicableModeError,
                     NotASubgroupError, NotNormalError)
from .group import PermutationGroup, _mul
from .numtheory import is_prime, p_part, prime_divisors
from .perm import Permutation, cycle_type, inverse

_tnew = tuple.__new__


class Subgroup(PermutationGroup):
    """A subgroup of a fixed ambient permutation group."""

    def __init__(self, ambient: PermutationGroup, generators: Iterable[Permutation],
                 name: str | None = None, elements: Iterable[Permutation] | None = None,
                 check: bool = True):
        super().__init__(generators, degree=ambient.degree, name=name)
        root = ambient.ambient if isinstance(ambient, Subgroup) else ambient
        self.ambient: PermutationGroup = root
        if check:
            for g in self.generators:
                if not root.contains(g):
                    raise NotASubgroupError(f"{g} is not in {root!r}")
        if elements is not None:
            es = frozenset(elements)
            if len(es) != self.order():
                raise InvariantViolation(
                    f"element set of size {len(es)} for subgroup of order {self.order()}")
            self._element_set = es

    def key(self) -> tuple:
        """Canonical identity: the sorted element list."""
        return tuple(self.elements())


def ambient_of(G: PermutationGroup) -> PermutationGroup:
    return G.ambient if isinstance(G, Subgroup) else G


def as_subgroup(G: PermutationGroup, name: str | None = None) -> Subgroup:
    """View a group (or subgroup) as a subgroup of its root ambient."""
    if isinstance(G, Subgroup):
        return G
    return Subgroup(G, G.generators, name=name or G.name, check=False)


def whole(G: PermutationGroup) -> Subgroup:
    """``G`` as a subgroup of itself."""
    return Subgroup(G, G.generators, name=G.name, check=False)


def trivial_subgroup(G: PermutationGroup) -> Subgroup:
    return Subgroup(ambient_of(G), [], name="1", check=False)


def _check_contained(G: PermutationGroup, U: PermutationGroup) -> None:
    if U.degree != G.degree or not all(G.contains(u) for u in U.generators):
        raise NotASubgroupError(f"{U!r} is not a subgroup of {G!r}")


def _explicit_guard(G: PermutationGroup, what: str, cap: int | None = None) -> None:
    cap = get_config().explicit_limit if cap is None else cap
    if G.order() > cap:
        raise CapExceededError(f"{what}: group order {G.order()} exceeds explicit limit {cap}")


def _span_closure(gens: Sequence[Permutation], degree: int,
                  base: set | None = None, base_list: list | None = None) -> set:
    """Element set of ``<base, gens>``; ``base`` must already be a group."""
    e = _tnew(Permutation, range(degree))
    if base is None:
        base = {e}
        base_list = [e]
    S = set(base)
    H = list(base_list)
    reps = [e]
    i = 0
    while i < len(reps):
        r = reps[i]
        i += 1
        for s in gens:
            x = _mul(r, s)
            if x not in S:
                reps.append(x)
                S.update(_mul(h, x) for h in H)
    return S


def subgroup_from_elements(ambient: PermutationGroup, elements: Iterable[Permutation],
                           name: str | None = None) -> Subgroup:
    """Subgroup with the given element set; a generating set is picked greedily."""
    elems = sorted(set(elements))
    degree = ambient.degree
    span = {_tnew(Permutation, range(degree))}
    gens: list[Permutation] = []
    # prefer elements of large order so generating sets stay short
    for x in sorted(elems, key=lambda g: (-g.order(), g)):
        if x not in span:
            span = _span_closure(gens + [x], degree, span, list(span))
            gens.append(x)
            if len(span) == len(elems):
                break
    if span != set(elems):
        raise NotASubgroupError("element set is not closed under multiplication")
    return Subgroup(ambient, gens, name=name, elements=elems, check=False)


# ---------------------------------------------------------------------------
# Sylow subgroups, cores, normalizers


def sylow_subgroup(G: PermutationGroup, p: int) -> Subgroup:
    """A Sylow p-subgroup of ``G``, grown one factor of p at a time.

    If P is a p-subgroup that is not Sylow then p divides [N(P):P], so there
    is g in N(P) \\ P with g^p in P; the first such g in sorted order is used.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    target = p_part(G.order(), p)
    amb = ambient_of(G)
    if target == 1:
        return trivial_subgroup(amb)
    elems = G.elements()
    degree = G.degree
    e = _tnew(Permutation, range(degree))
    P = {e}
    gens: list[Permutation] = []
    while len(P) < target:
        for g in elems:
            if g in P or (g ** p) not in P:
                continue
            gi = inverse(g)
            if all(_mul(_mul(gi, s), g) in P for s in gens):
                gens.append(g)
                P = _span_closure(gens, degree, P, list(P))
                break
        else:
            raise InvariantViolation("Sylow growth step found no element")
    return Subgroup(amb, gens, name=f"Sylow_{p}", elements=P, check=False)


def coset_key(x: Permutation, U_elements: Iterable[Permutation]) -> Permutation:
    """Canonical label of the left coset ``xU``: its least element."""
    return min(_mul(x, u) for u in U_elements)


@dataclass
class CosetActionResult:
    """Action of G by left multiplication on the left cosets of U.

    Point ``i`` (1-based) is the coset ``reps[i-1] U``; point 1 is U itself.
    """

    group: PermutationGroup
    subgroup: PermutationGroup
    reps: list[Permutation]
    image: PermutationGroup
    generator_images: dict[Permutation, Permutation]
    kernel: Subgroup
    _keys: dict = field(repr=False, default_factory=dict)

    def image_of(self, g: Permutation) -> Permutation:
        U = self.subgroup.element_set()
        return _tnew(Permutation, (self._keys[coset_key(_mul(g, r), U)] for r in self.reps))

    def image_of_subgroup(self, H: PermutationGroup, name: str | None = None) -> Subgroup:
        gens = [self.image_of(h) for h in H.generators]
        return Subgroup(self.image, gens, name=name, check=False)

    @property
    def degree(self) -> int:
        return len(self.reps)


def coset_action(G: PermutationGroup, U: PermutationGroup,
                 cap: int | None = None) -> CosetActionResult:
    _check_contained(G, U)
    cap = get_config().coset_degree_cap if cap is None else cap
    index = G.order() // U.order()
    if index > cap:
        raise CapExceededError(f"coset action of degree {index} exceeds cap {cap}")
    Uel = U.element_set()
    e = _tnew(Permutation, range(G.degree))
    reps = [e]
    keys = {coset_key(e, Uel): 0}
    action = {s: [0] * index for s in G.generators}
    i = 0
    while i < len(reps):
        r = reps[i]
        for s in G.generators:
            y = _mul(s, r)
            k = coset_key(y, Uel)
            j = keys.get(k)
            if j is None:
                j = keys[k] = len(reps)
                reps.append(y)
            action[s][i] = j
        i += 1
    if len(reps) != index:
        raise InvariantViolation(f"found {len(reps)} cosets, expected {index}")
    gen_images = {s: _tnew(Permutation, action[s]) for s in G.generators}
    image = PermutationGroup(list(gen_images.values()), degree=index,
                             name=f"{G.name or 'G'} on cosets of {U.name or 'U'}")
    reps_inv = [inverse(r) for r in reps]
    core_elems = [u for u in Uel if all(_mul(_mul(ri, u), r) in Uel
                                         for r, ri in zip(reps, reps_inv))]
    kernel = subgroup_from_elements(ambient_of(G), core_elems, name="core")
    return CosetActionResult(G, U, reps, image, gen_images, kernel, keys)


def core(G: PermutationGroup, U: PermutationGroup) -> Subgroup:
    """Largest normal subgroup of G inside U: the intersection of all conjugates."""
    _check_contained(G, U)
    if G.is_symmetric() and G.degree >= 5:
        # normal subgroups of Sym(n), n >= 5, are 1, Alt(n), Sym(n)
        n = G.degree
        if U.order() == factorial(n):
            return as_subgroup(U)
        if U.order() * 2 == factorial(n):
            return as_subgroup(U)
        return trivial_subgroup(G)
    return coset_action(G, U).kernel


def is_normal(G: PermutationGroup, U: PermutationGroup) -> bool:
    _check_contained(G, U)
    return all(U.contains(_mul(_mul(inverse(g), u), g))
               for g in G.generators for u in U.generators)


def index(G: PermutationGroup, U: PermutationGroup) -> int:
    _check_contained(G, U)
    return G.order() // U.order()


def intersection(U: PermutationGroup, V: PermutationGroup) -> Subgroup:
    if ambient_of(U) is not ambient_of(V) and U.degree != V.degree:
        raise NotASubgroupError("subgroups do not share an ambient group")
    common = U.element_set() & V.element_set()
    return subgroup_from_elements(ambient_of(U), common, name="intersection")


def normalizer(G: PermutationGroup, U: PermutationGroup, cap: int | None = None) -> Subgroup:
    _check_contained(G, U)
    _explicit_guard(G, "normalizer", cap)
    Uel = U.element_set()
    ugens = U.generators
    elems = [g for g in G.elements()
             if all(_mul(_mul(inverse(g), u), g) in Uel for u in ugens)]
    return subgroup_from_elements(ambient_of(G), elems, name=f"N({U.name or 'U'})")


def normal_closure(G: PermutationGroup, gens: Sequence[Permutation]) -> Subgroup:
    """Smallest normal subgroup of G containing ``gens`` (no enumeration)."""
    cur = list(gens)
    H = PermutationGroup(cur, degree=G.degree)
    changed = True
    while changed:
        changed = False
        for g in G.generators:
            gi = inverse(g)
            for h in list(H.generators):
                c = _mul(_mul(gi, h), g)
                if not H.contains(c):
                    cur.append(c)
                    H = PermutationGroup(cur, degree=G.degree)
                    changed = True
    return Subgroup(ambient_of(G), cur, check=False)


def derived_subgroup(G: PermutationGroup) -> Subgroup:
    gens = G.generators
    comms = []
    for a in gens:
        for b in gens:
            c = _mul(_mul(inverse(a), inverse(b)), _mul(a, b))
            if not c.is_identity():
                comms.append(c)
    return normal_closure(G, comms)


def is_solvable(G: PermutationGroup) -> bool:
    H: PermutationGroup = G
    while H.order() > 1:
        D = derived_subgroup(H)
        if D.order() == H.order():
            return False
        H = D
    return True


def is_nilpotent(G: PermutationGroup) -> bool:
    """Finite G is nilpotent iff every Sylow subgroup is normal."""
    return all(is_normal(G, sylow_subgroup(G, p)) for p in prime_divisors(G.order()))


def center(G: PermutationGroup) -> Subgroup:
    gens = G.generators
    elems = [z for z in G.elements() if all(_mul(z, g) == _mul(g, z) for g in gens)]
    return subgroup_from_elements(ambient_of(G), elems, name="Z")


# ---------------------------------------------------------------------------
# Conjugacy classes of elements


@dataclass(frozen=True)
class ConjugacyClass:
    representative: Permutation
    size: int
    elements: frozenset | None = None   # explicit mode
    cycle_type: tuple | None = None     # symmetric mode: the class is this cycle type

    def contains(self, g: Permutation) -> bool:
        if self.elements is not None:
            return g in self.elements
        return cycle_type(g) == self.cycle_type


def _partitions(n: int, maxpart: int | None = None):
    maxpart = n if maxpart is None else maxpart
    if n == 0:
        yield ()
        return
    for k in range(min(n, maxpart), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def _partition_perm(parts: Sequence[int], n: int) -> Permutation:
    img = list(range(n))
    start = 0
    for k in parts:
        for j in range(k):
            img[start + j] = start + (j + 1) % k
        start += k
    return _tnew(Permutation, img)


def symmetric_class_size(parts: Sequence[int]) -> int:
    n = sum(parts)
    z = 1
    for k, m in Counter(parts).items():
        z *= k**m * factorial(m)
    return factorial(n) // z


def conjugacy_classes(G: PermutationGroup, cap: int | None = None) -> list[ConjugacyClass]:
    """Classes sorted by representative (the least element of each class)."""
    if G.is_symmetric() and G.order() > (get_config().explicit_limit if cap is None else cap):
        n = G.degree
        out = [ConjugacyClass(_partition_perm(lam, n), symmetric_class_size(lam),
                              cycle_type=tuple(lam)) for lam in _partitions(n)]
        return sorted(out, key=lambda c: c.representative)
    _explicit_guard(G, "conjugacy_classes", cap)
    gens = G.generators
    ginvs = [inverse(g) for g in gens]
    seen: set = set()
    out = []
    for x in G.elements():
        if x in seen:
            continue
        cls = {x}
        stack = [x]
        while stack:
            y = stack.pop()
            for g, gi in zip(gens, ginvs):
                z = _mul(_mul(gi, y), g)
                if z not in cls:
                    cls.add(z)
                    stack.append(z)
        seen |= cls
        out.append(ConjugacyClass(x, len(cls), frozenset(cls), cycle_type(x)))
    return out


def class_index_map(classes: Sequence[ConjugacyClass]) -> dict[Permutation, int]:
    out = {}
    for i, c in enumerate(classes):
        for g in c.elements:
            out[g] = i
    return out


# ---------------------------------------------------------------------------
# Abstract isomorphism


def _small_generating_set(elems: Sequence[Permutation]) -> list[Permutation]:
    degree = len(elems[0])
    target = len(elems)
    span = {_tnew(Permutation, range(degree))}
    gens: list[Permutation] = []
    for x in sorted(elems, key=lambda g: (-g.order(), g)):
        if x not in span:
            gens.append(x)
            span = _span_closure(gens, degree)
            if len(span) == target:
                break
    return gens


def _order_histogram(elems: Iterable[Permutation]) -> Counter:
    return Counter(g.order() for g in elems)


def find_isomorphism(U: PermutationGroup, V: PermutationGroup,
                     cap: int | None = None) -> dict[Permutation, Permutation] | None:
    """An isomorphism U -> V as an element map, or None.

    Backtracks over images of a small generating set of U; candidates must
    match element orders, and each partial assignment is checked for
    consistency on the subgroup it generates.
    """
    cap = get_config().isomorphism_cap if cap is None else cap
    if max(U.order(), V.order()) > cap:
        raise CapExceededError(f"isomorphism test above order cap {cap}")
    if U.order() != V.order():
        return None
    Ue, Ve = U.elements(), V.elements()
    eu, ev = Ue[0], Ve[0]  # identity sorts first
    if U.order() == 1:
        return {eu: ev}
    if _order_histogram(Ue) != _order_histogram(Ve):
        return None
    if U.is_abelian() != V.is_abelian():
        return None
    gens = _small_generating_set(Ue)
    by_order: dict[int, list[Permutation]] = {}
    for v in Ve:
        by_order.setdefault(v.order(), []).append(v)
    candidates = [by_order.get(g.order(), []) for g in gens]

    def extend(k: int, images: list[Permutation]) -> dict | None:
        # consistent map on <gens[:k]> via breadth-first words
        phi = {eu: ev}
        queue = [eu]
        i = 0
        while i < len(queue):
            w = queue[i]
            i += 1
            pw = phi[w]
            for s, t in zip(gens[:k], images):
                x = _mul(w, s)
                y = _mul(pw, t)
                old = phi.get(x)
                if old is None:
                    phi[x] = y
                    queue.append(x)
                elif old != y:
                    return None
        if len(set(phi.values())) != len(phi):
            return None
        return phi

    def search(k: int, images: list[Permutation]):
        if k == len(gens):
            return extend(k, images)
        for c in candidates[k]:
            phi = extend(k + 1, images + [c])
            if phi is not None:
                if k + 1 == len(gens):
                    return phi
                found = search(k + 1, images + [c])
                if found is not None:
                    return found
        return None

    phi = search(0, [])
    if phi is not None and len(phi) != U.order():
        raise InvariantViolation("isomorphism search produced a partial map")
    return phi


def abstract_isomorphic(U: PermutationGroup, V: PermutationGroup,
                        cap: int | None = None) -> bool:
    return find_isomorphism(U, V, cap) is not None


# ---------------------------------------------------------------------------
# Conjugacy of subgroups


def conjugate_subgroup(U: PermutationGroup, g: Permutation) -> Subgroup:
    """``U^g = g^-1 U g``."""
    gi = inverse(g)
    return Subgroup(ambient_of(U), [_mul(_mul(gi, u), g) for u in U.generators],
                    check=False)


def _verify_conjugator(U: PermutationGroup, V: PermutationGroup, g: Permutation) -> bool:
    if U.order() != V.order():
        return False
    gi = inverse(g)
    return all(V.contains(_mul(_mul(gi, u), g)) for u in U.generators)


def is_semiregular(U: PermutationGroup) -> bool:
    return all(g.fixed_points() == 0 for g in U.elements() if not g.is_identity())


def _cyclic_generator(U: PermutationGroup) -> Permutation | None:
    n = U.order()
    for g in U.elements():
        if g.order() == n:
            return g
    return None


def _semiregular_conjugator(U, V) -> Permutation | None:
    phi = find_isomorphism(U, V)
    if phi is None:
        return None
    n = U.degree
    xs = [orb[0] - 1 for orb in U.orbits()]
    ys = [orb[0] - 1 for orb in V.orbits()]
    pi = [None] * n
    for x, y in zip(xs, ys):
        for u, v in phi.items():
            pi[u[x]] = v[y]
    # pi u pi^-1 = phi(u), so g = pi^-1 satisfies g^-1 U g = V
    return inverse(_tnew(Permutation, pi))


def _cyclic_conjugator(U, V) -> Permutation | None:
    u, v = _cyclic_generator(U), _cyclic_generator(V)
    if u is None or v is None or cycle_type(u) != cycle_type(v):
        return None
    cu = sorted(_cycles0(u), key=len)
    cv = sorted(_cycles0(v), key=len)
    pi = [None] * U.degree
    for a, b in zip(cu, cv):
        for x, y in zip(a, b):
            pi[x] = y
    return inverse(_tnew(Permutation, pi))


def _cycles0(p: Permutation) -> list[list[int]]:
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if not seen[i]:
            c = []
            j = i
            while not seen[j]:
                seen[j] = True
                c.append(j)
                j = p[j]
            out.append(c)
    return out


def _explicit_conjugator(G, U, V, cap=None) -> Permutation | None:
    _explicit_guard(G, "explicit conjugator search", cap)
    Vel = V.element_set()
    N = normalizer(G, U, cap)
    Nel = N.elements()
    ugens = U.generators
    marked: set = set()
    for g in G.elements():
        if g in marked:
            continue
        gi = inverse(g)
        if all(_mul(_mul(gi, u), g) in Vel for u in ugens):
            return g
        # the right coset N g gives the same conjugate U^g
        marked.update(_mul(n, g) for n in Nel)
    return None


CONJUGATOR_MODES = ("auto", "explicit", "semiregular", "cyclic")


def find_conjugator(G: PermutationGroup, U: PermutationGroup, V: PermutationGroup,
                    mode: str = "auto") -> tuple[Permutation | None, str]:
    """Search for g in G with ``U^g = V``; returns ``(g or None, mode used)``.

    Modes: ``explicit`` scans right cosets of N_G(U); ``semiregular`` and
    ``cyclic`` apply only when G is the full symmetric group.  Any returned
    witness has been verified.
    """
    if mode not in CONJUGATOR_MODES:
        raise ValueError(f"unknown conjugator mode {mode!r}")
    _check_contained(G, U)
    _check_contained(G, V)
    if mode == "auto":
        if U.order() != V.order():
            return None, "order"
        if Counter(map(cycle_type, U.elements())) != Counter(map(cycle_type, V.elements())):
            return None, "cycle-type"
        if G.is_symmetric():
            su, sv = is_semiregular(U), is_semiregular(V)
            if su and sv:
                mode = "semiregular"
            elif su != sv:
                return None, "semiregular"
            elif _cyclic_generator(U) is not None and _cyclic_generator(V) is not None:
                mode = "cyclic"
        if mode == "auto":
            if G.order() > get_config().explicit_limit:
                raise NoApplicableModeError(
                    f"no conjugacy mode for subgroups of orders {U.order()} in {G!r}")
            mode = "explicit"
    if mode in ("semiregular", "cyclic"):
        if not G.is_symmetric():
            raise NoApplicableModeError(f"{mode} mode needs a full symmetric ambient")
        if U.order() != V.order():
            return None, mode
        if mode == "semiregular":
            if not (is_semiregular(U) and is_semiregular(V)):
                raise NoApplicableModeError("semiregular mode on non-semiregular subgroups")
            g = _semiregular_conjugator(U, V)
        else:
            if _cyclic_generator(U) is None or _cyclic_generator(V) is None:
                raise NoApplicableModeError("cyclic mode on non-cyclic subgroups")
            g = _cyclic_conjugator(U, V)
    else:
        g = None if U.order() != V.order() else _explicit_conjugator(G, U, V)
    if g is not None and not (G.contains(g) and _verify_conjugator(U, V, g)):
        raise InvariantViolation(f"{mode} mode produced a false conjugator")
    return g, mode


def subgroup_conjugator(G: PermutationGroup, U: PermutationGroup, V: PermutationGroup,
                        mode: str = "auto") -> Permutation | None:
    return find_conjugator(G, U, V, mode)[0]


# ---------------------------------------------------------------------------
# Quotients


def quotient_group(G: PermutationGroup, N: PermutationGroup) -> CosetActionResult:
    """G/N as the left-multiplication action of G on the cosets of N."""
    if not is_normal(G, N):
        raise NotNormalError(f"{N!r} is not normal in {G!r}")
    res = coset_action(G, N)
    res.image.name = f"{G.name or 'G'}/{N.name or 'N'}"
    return res


# ---------------------------------------------------------------------------
# Subgroup lattice


class _ElementIndex:
    """Sorted element list with index lookup and a multiplication table."""

    TABLE_LIMIT = 3000

    def __init__(self, G: PermutationGroup):
        self.group = G
        self.elems = G.elements()
        self.idx = {g: i for i, g in enumerate(self.elems)}
        self.inv = [self.idx[inverse(g)] for g in self.elems]
        n = len(self.elems)
        if n <= self.TABLE_LIMIT:
            idx, elems = self.idx, self.elems
            self.table = [[idx[_mul(a, b)] for b in elems] for a in elems]
        else:
            self.table = _LazyTable(self)

    def conj_map(self, g: int) -> list[int]:
        """Index permutation x -> g^-1 x g."""
        T = self.table
        gi = self.inv[g]
        row = T[gi]
        return [T[row[x]][g] for x in range(len(self.elems))]


class _LazyTable:
    def __init__(self, index: _ElementIndex):
        self._ix = index
        self._rows: dict[int, list[int]] = {}

    def __getitem__(self, a: int) -> list[int]:
        row = self._rows.get(a)
        if row is None:
            ix = self._ix
            g = ix.elems[a]
            row = self._rows[a] = [ix.idx[_mul(g, b)] for b in ix.elems]
        return row


def _join(T, H: list[int], gens: list[int], e: int) -> frozenset:
    """Dimino's coset extension: element set of <H, gens>."""
    S = set(H)
    reps = [e]
    i = 0
    while i < len(reps):
        row = T[reps[i]]
        i += 1
        for s in gens:
            x = row[s]
            if x not in S:
                reps.append(x)
                S.update([T[h][x] for h in H])
    return frozenset(S)


class SubgroupLattice:
    """All subgroups of an enumerable group, grouped into conjugacy classes.

    Subgroups are frozensets of indices into ``index.elems`` and are sorted
    by (order, sorted element list).  ``classes[c]`` lists the members of
    class ``c``; classes are sorted by their first member.
    """

    def __init__(self, group: PermutationGroup, index: _ElementIndex, group_gens: list[int],
                 subgroups: list[frozenset], gens: dict[frozenset, list[int]]):
        self.group = group
        self.index = index
        self.group_gens = group_gens
        keyed = sorted(subgroups, key=lambda s: (len(s), sorted(s)))
        self.subgroups: list[frozenset] = keyed
        self.position = {s: i for i, s in enumerate(keyed)}
        self.gens = [gens[s] for s in keyed]
        self._classify()
        self._cache: dict[int, Subgroup] = {}
        self._sylow_cache: dict[tuple[int, int], int] = {}

    def _classify(self) -> None:
        maps = [self.index.conj_map(g) for g in self.group_gens]
        self.class_of = [-1] * len(self.subgroups)
        self.classes: list[list[int]] = []
        for i, s in enumerate(self.subgroups):
            if self.class_of[i] >= 0:
                continue
            c = len(self.classes)
            members = {i}
            stack = [s]
            while stack:
                t = stack.pop()
                for m in maps:
                    u = frozenset(m[x] for x in t)
                    j = self.position[u]
                    if j not in members:
                        members.add(j)
                        stack.append(u)
            for j in members:
                self.class_of[j] = c
            self.classes.append(sorted(members))

    def __len__(self) -> int:
        return len(self.subgroups)

    def __iter__(self):
        return (self.subgroup(i) for i in range(len(self)))

    def order_of(self, i: int) -> int:
        return len(self.subgroups[i])

    def representatives(self) -> list[int]:
        return [c[0] for c in self.classes]

    def subgroup(self, i: int) -> Subgroup:
        sub = self._cache.get(i)
        if sub is None:
            elems = self.index.elems
            amb = ambient_of(self.index.group)
            gens = [elems[j] for j in self.gens[i]]
            sub = Subgroup(amb, gens, elements=[elems[j] for j in self.subgroups[i]],
                           check=False)
            self._cache[i] = sub
        return sub

    def locate(self, U: PermutationGroup) -> int:
        idx = self.index.idx
        return self.position[frozenset(idx[g] for g in U.elements())]

    def is_normal(self, i: int) -> bool:
        return len(self.classes[self.class_of[i]]) == 1

    def core(self, i: int) -> frozenset:
        members = self.classes[self.class_of[i]]
        out = self.subgroups[members[0]]
        for j in members[1:]:
            out = out & self.subgroups[j]
        return out

    def sylow_class(self, i: int, p: int) -> int:
        """Class of a Sylow p-subgroup of subgroup ``i``."""
        key = (i, p)
        c = self._sylow_cache.get(key)
        if c is None:
            S = self.subgroups[i]
            target = p_part(len(S), p)
            for j in self.by_order().get(target, ()):
                if self.subgroups[j] <= S:
                    c = self.class_of[j]
                    break
            else:
                raise InvariantViolation(f"no Sylow {p}-subgroup inside subgroup {i}")
            self._sylow_cache[key] = c
        return c

    def sylow_signature(self, i: int) -> tuple:
        n = len(self.subgroups[i])
        return tuple((p, self.sylow_class(i, p)) for p in prime_divisors(n)) if n > 1 else ()

    def by_order(self) -> dict[int, list[int]]:
        bo = getattr(self, "_by_order", None)
        if bo is None:
            bo = {}
            for i, s in enumerate(self.subgroups):
                bo.setdefault(len(s), []).append(i)
            self._by_order = bo
        return bo

    def classes_to_json(self) -> dict:
        n = self.group.order()
        rows = []
        for members in self.classes:
            rep = self.subgroup(members[0])
            rows.append({"generators": [g.to_cycle_string() for g in rep.generators],
                         "class_size": len(members), "order": rep.order(),
                         "index": n // rep.order()})
        return {"ambient": {"name": self.group.name, "degree": self.group.degree,
                            "order": n,
                            "generators": [g.to_cycle_string() for g in self.group.generators]},
                "classes": rows}

    def restrict(self, i: int) -> "SubgroupLattice":
        """Lattice of subgroup ``i``, with conjugacy taken inside that subgroup."""
        G = self.subgroups[i]
        subs = [s for s in self.subgroups if s <= G]
        gens = {s: self.gens[self.position[s]] for s in subs}
        return SubgroupLattice(self.subgroup(i), self.index, list(self.gens[i]), subs, gens)


def all_subgroups(G: PermutationGroup, cap: int | None = None) -> SubgroupLattice:
    """Every subgroup of G, by closure extension from the cyclic subgroups.

    Only class representatives are extended: joining a representative R of
    the class of <C1..Ci> with every cyclic subgroup reaches a conjugate of
    <C1..C(i+1)>, so every class and hence every subgroup is found.
    """
    cap = get_config().subgroup_cap if cap is None else cap
    if G.order() > cap:
        raise CapExceededError(f"all_subgroups: order {G.order()} exceeds cap {cap}")
    ix = _ElementIndex(G)
    T = ix.table
    n = len(ix.elems)
    e = ix.idx[G.identity()]
    group_gens = [ix.idx[g] for g in G.generators]

    cyclic: dict[frozenset, int] = {}
    for x in range(n):
        pw = [e]
        y = x
        while y != e:
            pw.append(y)
            y = T[y][x]
        cyclic.setdefault(frozenset(pw), x)
    cyclic_list = sorted(cyclic.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))

    maps = [ix.conj_map(g) for g in group_gens]
    found: dict[frozenset, list[int]] = {}

    def register(K: frozenset, gens: list[int]) -> bool:
        if K in found:
            return False
        found[K] = gens
        stack = [(K, gens)]
        while stack:
            t, tg = stack.pop()
            for m in maps:
                u = frozenset(m[x] for x in t)
                if u not in found:
                    ug = [m[x] for x in tg]
                    found[u] = ug
                    stack.append((u, ug))
        return True

    frontier = []
    register(frozenset([e]), [])
    for K, c in cyclic_list:
        if register(K, [c]):
            frontier.append(K)
    while frontier:
        nxt = []
        for H in frontier:
            Hl = sorted(H)
            Hg = found[H]
            for C, c in cyclic_list:
                if c in H:
                    continue
                K = _join(T, Hl, Hg + [c], e)
                if register(K, Hg + [c]):
                    nxt.append(K)
        frontier = nxt
    return SubgroupLattice(G, ix, group_gens, list(found), found)


def subgroup_classes(G: PermutationGroup) -> list[list[Subgroup]]:
    lat = all_subgroups(G)
    return [[lat.subgroup(i) for i in cls] for cls in lat.classes]
