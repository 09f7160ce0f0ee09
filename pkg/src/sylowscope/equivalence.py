"""Conjugacy, Sylow-conjugacy and Gassmann equivalence of subgroup pairs."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field

from .errors import InvariantViolation
from .group import PermutationGroup
from .numtheory import prime_divisors, prime_power
from .perm import Permutation, cycle_type, format_cycle_type
from .subgroups import (SubgroupLattice, all_subgroups, conjugacy_classes,
                        core, coset_action, find_conjugator, is_solvable, sylow_subgroup,
                        _check_contained)


@dataclass
class ConjugacyVerdict:
    conjugate: bool
    witness: Permutation | None
    mode: str

    def __bool__(self) -> bool:
        return self.conjugate


@dataclass
class SylowVerdict:
    sylow_conjugate: bool
    witnesses: dict[int, Permutation] = field(default_factory=dict)
    failing_prime: int | None = None
    modes: dict[int, str] = field(default_factory=dict)
    reason: str = ""

    def __bool__(self) -> bool:
        return self.sylow_conjugate


@dataclass
class GassmannVerdict:
    gassmann: bool
    mode: str
    distinguishing_class: dict | None = None

    def __bool__(self) -> bool:
        return self.gassmann


def is_conjugate(G: PermutationGroup, U: PermutationGroup, V: PermutationGroup,
                 mode: str = "auto") -> ConjugacyVerdict:
    g, used = find_conjugator(G, U, V, mode)
    return ConjugacyVerdict(g is not None, g, used)


def is_sylow_conjugate(G: PermutationGroup, U: PermutationGroup, V: PermutationGroup,
                       mode: str = "auto") -> SylowVerdict:
    """Are U_p and V_p conjugate in G for every prime p?"""
    _check_contained(G, U)
    _check_contained(G, V)
    n = U.order()
    if n != V.order():
        return SylowVerdict(False, reason="orders differ")
    if n == 1:
        return SylowVerdict(True, reason="trivial subgroups")
    pk = prime_power(n)
    if pk is not None:
        # U is its own Sylow p-subgroup
        p = pk[0]
        g, used = find_conjugator(G, U, V, mode)
        if g is None:
            return SylowVerdict(False, failing_prime=p, modes={p: used},
                                reason="prime-power order: Sylow-conjugate iff conjugate")
        return SylowVerdict(True, {p: g}, modes={p: used},
                            reason="prime-power order: Sylow-conjugate iff conjugate")
    out = SylowVerdict(True)
    for p in prime_divisors(n):
        Up, Vp = sylow_subgroup(U, p), sylow_subgroup(V, p)
        g, used = find_conjugator(G, Up, Vp, mode)
        out.modes[p] = used
        if g is None:
            out.sylow_conjugate = False
            out.failing_prime = p
            out.witnesses = {}
            return out
        out.witnesses[p] = g
    return out


def _class_label(rep: Permutation, size: int) -> dict:
    return {"representative": rep.to_cycle_string(), "cycle_type": format_cycle_type(
        cycle_type(rep)), "size": size}


def gassmann_counts(G: PermutationGroup, U: PermutationGroup, mode: str = "explicit"):
    """|C ∩ U| per class C: a list (explicit) or a Counter over cycle types."""
    if mode == "cycle-type":
        return Counter(cycle_type(u) for u in U.elements())
    classes = conjugacy_classes(G)
    return [sum(1 for u in U.elements() if c.contains(u)) for c in classes]


def is_gassmann(G: PermutationGroup, U: PermutationGroup, V: PermutationGroup,
                mode: str = "auto") -> GassmannVerdict:
    """|C ∩ U| = |C ∩ V| for every conjugacy class C of G.

    ``cycle-type`` mode needs G to be a full symmetric group (its classes are
    the cycle types); ``explicit`` mode lists the classes of G.
    """
    _check_contained(G, U)
    _check_contained(G, V)
    if mode == "auto":
        mode = "cycle-type" if G.is_symmetric() else "explicit"
    if mode == "cycle-type":
        if not G.is_symmetric():
            raise ValueError("cycle-type mode needs a full symmetric ambient")
        cu, cv = gassmann_counts(G, U, mode), gassmann_counts(G, V, mode)
        for t in sorted(set(cu) | set(cv)):
            if cu[t] != cv[t]:
                return GassmannVerdict(False, mode, {
                    "cycle_type": format_cycle_type(t), "count_u": cu[t], "count_v": cv[t]})
        return GassmannVerdict(True, mode)
    if mode != "explicit":
        raise ValueError(f"unknown Gassmann mode {mode!r}")
    classes = conjugacy_classes(G)
    Uel, Vel = U.elements(), V.elements()
    for c in classes:
        a = sum(1 for u in Uel if c.contains(u))
        b = sum(1 for v in Vel if c.contains(v))
        if a != b:
            d = _class_label(c.representative, c.size)
            d.update(count_u=a, count_v=b)
            return GassmannVerdict(False, mode, d)
    return GassmannVerdict(True, mode)


def permutation_character(G: PermutationGroup, U: PermutationGroup,
                          method: str = "coset") -> list[int]:
    """Fixed cosets of each class representative, in conjugacy_classes(G) order.

    ``coset`` counts fixed points of the coset action directly; ``formula``
    uses fix(g) = |C_G(g)| |C ∩ U| / |U|.
    """
    classes = conjugacy_classes(G)
    if method == "coset":
        act = coset_action(G, U)
        return [act.image_of(c.representative).fixed_points() for c in classes]
    if method != "formula":
        raise ValueError(f"unknown method {method!r}")
    out = []
    n, u = G.order(), U.order()
    for c in classes:
        hits = sum(1 for x in U.elements() if c.contains(x))
        num = n * hits
        if num % (c.size * u):
            raise InvariantViolation("non-integral permutation character value")
        out.append(num // (c.size * u))
    return out


def same_subgroup(A: PermutationGroup, B: PermutationGroup) -> bool:
    return A.order() == B.order() and all(B.contains(g) for g in A.generators)


def _subgroup_dict(G, U) -> dict:
    return {"name": U.name, "gens": [g.to_cycle_string() for g in U.generators],
            "order": U.order(), "index": G.order() // U.order()}


@dataclass
class PairReport:
    ambient: str
    u: dict
    v: dict
    conjugate: bool
    conjugate_witness: Permutation | None
    sylow_conjugate: bool
    sylow_witnesses: dict[int, Permutation] | None
    sylow_failing_prime: int | None
    gassmann: bool
    gassmann_distinguishing_class: dict | None
    same_core: bool
    same_index: bool
    modes: dict

    def check_invariants(self) -> None:
        if self.conjugate and not (self.sylow_conjugate and self.gassmann
                                   and self.same_core and self.same_index):
            raise InvariantViolation(f"conjugate pair with inconsistent flags: {self}")
        if self.sylow_conjugate and not (self.same_core and self.same_index):
            raise InvariantViolation(f"Sylow-conjugate pair with different core/index: {self}")
        if self.gassmann and not self.same_index:
            raise InvariantViolation(f"Gassmann pair with different index: {self}")

    def to_json(self) -> dict:
        d = {"ambient": self.ambient, "u": self.u, "v": self.v,
             "conjugate": self.conjugate}
        if self.conjugate_witness is not None:
            d["conjugate_witness"] = self.conjugate_witness.to_cycle_string()
        d["sylow_conjugate"] = self.sylow_conjugate
        if self.sylow_witnesses is not None:
            d["sylow_witnesses"] = {str(p): g.to_cycle_string()
                                    for p, g in sorted(self.sylow_witnesses.items())}
        if self.sylow_failing_prime is not None:
            d["sylow_failing_prime"] = self.sylow_failing_prime
        d["gassmann"] = self.gassmann
        if self.gassmann_distinguishing_class is not None:
            d["gassmann_distinguishing_class"] = self.gassmann_distinguishing_class
        d["same_core"] = self.same_core
        d["same_index"] = self.same_index
        d["modes"] = self.modes
        return d


def classify_pair(G: PermutationGroup, U: PermutationGroup, V: PermutationGroup,
                  ambient_id: str | None = None) -> PairReport:
    conj = is_conjugate(G, U, V)
    syl = is_sylow_conjugate(G, U, V)
    gas = is_gassmann(G, U, V)
    rep = PairReport(
        ambient=ambient_id or G.name or "G",
        u=_subgroup_dict(G, U), v=_subgroup_dict(G, V),
        conjugate=conj.conjugate, conjugate_witness=conj.witness,
        sylow_conjugate=syl.sylow_conjugate,
        sylow_witnesses=syl.witnesses if syl.sylow_conjugate else None,
        sylow_failing_prime=syl.failing_prime,
        gassmann=gas.gassmann, gassmann_distinguishing_class=gas.distinguishing_class,
        same_core=same_subgroup(core(G, U), core(G, V)),
        same_index=U.order() == V.order(),
        modes={"conjugate": conj.mode,
               "sylow": {str(p): m for p, m in sorted(syl.modes.items())},
               "gassmann": gas.mode},
    )
    rep.check_invariants()
    return rep


# ---------------------------------------------------------------------------
# Searches


def _pair_candidates(lat: SubgroupLattice, reps: list[int]) -> list[tuple[int, int]]:
    """Pairs of class representatives with the same order and Sylow classes."""
    groups: dict[tuple, list[int]] = {}
    for i in reps:
        groups.setdefault((lat.order_of(i), lat.sylow_signature(i)), []).append(i)
    out = []
    for members in groups.values():
        out.extend(itertools.combinations(sorted(members), 2))
    return sorted(out)


def search_pairs(G: PermutationGroup, lattice: SubgroupLattice | None = None,
                 index: int | None = None, core_free: bool = False,
                 verify: bool = True) -> list[PairReport]:
    """Sylow-conjugate, nonconjugate pairs of subgroup classes of G.

    Candidates come from the lattice (distinct classes with equal Sylow
    class signatures); each is re-derived with :func:`classify_pair`.
    """
    lat = lattice or all_subgroups(G)
    n = G.order()
    reps = lat.representatives()
    if index is not None:
        reps = [i for i in reps if lat.order_of(i) * index == n]
    if core_free:
        reps = [i for i in reps if len(lat.core(i)) == 1]
    out = []
    for i, j in _pair_candidates(lat, reps):
        U, V = lat.subgroup(i), lat.subgroup(j)
        if verify:
            Gs = lat.group
            rep = classify_pair(Gs, U, V)
            if rep.conjugate or not rep.sylow_conjugate:
                raise InvariantViolation(
                    f"lattice signature and classify_pair disagree on classes {i}, {j}")
            out.append(rep)
        else:
            out.append((i, j))
    return out


def transitive_classes(lat: SubgroupLattice) -> list[int]:
    """Representatives of the classes of transitive subgroups."""
    return [i for i in lat.representatives() if lat.subgroup(i).is_transitive()]


@dataclass
class DegreeSearchResult:
    degree: int
    subgroup_count: int
    class_count: int
    transitive_groups: list[dict]
    pairs: list[dict]
    core_index_pairs_checked: int
    core_index_failures: list[dict]

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "subgroups_of_symmetric_group": self.subgroup_count,
            "subgroup_classes_of_symmetric_group": self.class_count,
            "transitive_groups": self.transitive_groups,
            "sylow_conjugate_nonconjugate_pairs": self.pairs,
            "core_index_pairs_checked": self.core_index_pairs_checked,
            "core_index_failures": self.core_index_failures,
        }


def search_degree(d: int) -> DegreeSearchResult:
    """All transitive G <= Sym(d) up to conjugacy and their faithful index-d pairs."""
    from .catalog import symmetric

    S = symmetric(d)
    lat = all_subgroups(S)
    trans = transitive_classes(lat)
    groups = []
    pairs = []
    checked = 0
    failures = []
    for t in trans:
        sub = lat.restrict(t)
        G = sub.group
        reps = sub.representatives()
        faithful = [i for i in reps if sub.order_of(i) * d == G.order()
                    and len(sub.core(i)) == 1]
        found = search_pairs(G, sub, index=d, core_free=True)
        pairs.extend(r.to_json() for r in found)
        # same core and index for every Sylow-conjugate pair of classes in G
        for i, j in _pair_candidates(sub, reps):
            checked += 1
            if sub.core(i) != sub.core(j):
                failures.append({"group": [g.to_cycle_string() for g in G.generators],
                                 "u": i, "v": j})
        groups.append({"order": G.order(),
                       "generators": [g.to_cycle_string() for g in G.generators],
                       "solvable": is_solvable(G),
                       "faithful_index_classes": len(faithful),
                       "pairs": len(found)})
    return DegreeSearchResult(d, len(lat), len(lat.classes), groups, pairs, checked, failures)
