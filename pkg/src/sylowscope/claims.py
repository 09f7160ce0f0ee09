"""Registry of named checks, each reproducing one computational statement.

A claim function receives a :class:`Checks` recorder, performs its
sub-checks through it and stores evidence.  Cap or mode errors raised inside
a claim turn it into SKIPPED; a claim with any failed sub-check is FAIL.
Evidence must be deterministic, so it never contains timings.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from math import gcd
from typing import Callable

from . import catalog as cat
from .census import census, compare_reports, cycle_type_distribution, match_census_to_group
from .config import get_config
from .equivalence import (classify_pair, is_conjugate, is_gassmann, is_sylow_conjugate,
                          permutation_character, same_subgroup, search_degree, search_pairs)
from .errors import CapExceededError, NoApplicableModeError
from .group import PermutationGroup, closure_elements
from .numtheory import is_prime, prime_power
from .oracles import closure_order, ddf_test_cases, irreducibles, trial_division_pattern
from .perm import Permutation, cycle_type, format_cycle_type
from .polys import bundled_polynomials, degree_pattern, is_squarefree_mod_p
from .subgroups import (Subgroup, all_subgroups, conjugacy_classes, core, is_nilpotent,
                        is_normal, normalizer, quotient_group)

PASS, FAIL, SKIPPED = "PASS", "FAIL", "SKIPPED"


class SkipClaim(Exception):
    """Raised by a claim body to mark itself skipped."""


@dataclass
class ClaimResult:
    id: str
    anchor: str
    status: str
    evidence: dict
    duration: float = 0.0
    reason: str = ""

    def to_json(self, with_duration: bool = True) -> dict:
        d = {"id": self.id, "anchor": self.anchor, "status": self.status,
             "evidence": self.evidence}
        if self.reason:
            d["reason"] = self.reason
        if with_duration:
            d["duration_seconds"] = round(self.duration, 3)
        return d


@dataclass
class Checks:
    """Collects named boolean sub-checks plus free-form evidence."""

    checks: list[dict] = field(default_factory=list)
    evidence: dict = field(default_factory=dict)

    def check(self, name: str, ok: bool, **detail) -> bool:
        entry = {"check": name, "ok": bool(ok)}
        if detail:
            entry["detail"] = detail
        self.checks.append(entry)
        return bool(ok)

    def equal(self, name: str, got, expected) -> bool:
        return self.check(name, got == expected, got=got, expected=expected)

    @property
    def failed(self) -> list[dict]:
        return [c for c in self.checks if not c["ok"]]


@dataclass(frozen=True)
class Claim:
    id: str
    anchor: str
    func: Callable[[Checks], None]


REGISTRY: dict[str, Claim] = {}


def claim(claim_id: str, anchor: str):
    def wrap(fn):
        REGISTRY[claim_id] = Claim(claim_id, anchor, fn)
        return fn
    return wrap


def list_claims() -> list[tuple[str, str]]:
    return [(c.id, c.anchor) for c in REGISTRY.values()]


def run_claim(claim_id: str) -> ClaimResult:
    try:
        c = REGISTRY[claim_id]
    except KeyError:
        raise KeyError(f"unknown claim {claim_id!r}") from None
    ck = Checks()
    t0 = time.perf_counter()
    try:
        c.func(ck)
    except (CapExceededError, NoApplicableModeError, SkipClaim) as exc:
        return ClaimResult(c.id, c.anchor, SKIPPED, {"checks": ck.checks, **ck.evidence},
                           time.perf_counter() - t0, reason=f"{type(exc).__name__}: {exc}")
    dt = time.perf_counter() - t0
    evidence = {"checks": ck.checks, **ck.evidence}
    if ck.failed:
        evidence["counterexample"] = ck.failed[0]
        return ClaimResult(c.id, c.anchor, FAIL, evidence, dt,
                           reason=f"{len(ck.failed)} sub-check(s) failed")
    if not ck.checks:
        return ClaimResult(c.id, c.anchor, SKIPPED, evidence, dt, reason="no checks ran")
    return ClaimResult(c.id, c.anchor, PASS, evidence, dt)


def run_all(ids: list[str] | None = None, parallel: bool = False) -> list[ClaimResult]:
    ids = list(REGISTRY) if ids is None else ids
    if parallel and len(ids) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor() as ex:
            results = list(ex.map(run_claim, ids))
    else:
        results = [run_claim(i) for i in ids]
    order = {cid: k for k, cid in enumerate(ids)}
    return sorted(results, key=lambda r: order[r.id])


# ---------------------------------------------------------------------------
# helpers


def _report(ck: Checks, key: str, G, U, V, ambient_id: str):
    rep = classify_pair(G, U, V, ambient_id)
    ck.evidence.setdefault("pair_reports", {})[key] = rep.to_json()
    return rep


def _class_sizes(G) -> list[int]:
    return sorted(c.size for c in conjugacy_classes(G))


# ---------------------------------------------------------------------------
# group-theoretic examples


@claim("gl2_3-pair",
       "GL(2,3) on 8 vectors: U = <P,A> and V = <P,B> are Sylow-conjugate but "
       "nonconjugate; |N_G(P)| = 12")
def _gl2_3_pair(ck: Checks) -> None:
    e = cat.get_entry("gl2_3")
    G = e.group
    ck.equal("order", G.order(), 48)
    ck.equal("closure order", closure_order(G), 48)
    ck.equal("|P|", e.subgroups["P"].order(), 3)
    ck.equal("|N_G(P)|", normalizer(G, e.subgroups["P"]).order(), 12)
    ck.check("action faithful and transitive on 8 vectors", G.is_transitive() and G.degree == 8)
    U, V = e.subgroups["U"], e.subgroups["V"]
    ck.equal("|U|, |V|", [U.order(), V.order()], [6, 6])
    rep = _report(ck, "U,V", G, U, V, e.id)
    ck.check("Sylow-conjugate", rep.sylow_conjugate)
    ck.check("nonconjugate", not rep.conjugate)
    ck.check("same core", rep.same_core)
    ck.check("same index", rep.same_index)
    act = e.actions["G/U"]
    ck.check("coset action G/U transitive of degree 8 and order 48",
             act.is_transitive() and act.degree == 8 and act.order() == 48)


@claim("parabolic-psl32",
       "PSL(3,2): the point and hyperplane stabilizers are Sylow-conjugate, nonconjugate"
       " and arithmetically equivalent")
def _parabolic_psl32(ck: Checks) -> None:
    e = cat.get_entry("psl_3_2")
    G = e.group
    ck.equal("order", G.order(), 168)
    ck.equal("closure order", closure_order(G), 168)
    ck.equal("class sizes", _class_sizes(G), [1, 21, 24, 24, 42, 56])
    U, V = e.subgroups["U"], e.subgroups["V"]
    rep = _report(ck, "U,V", G, U, V, e.id)
    ck.check("Sylow-conjugate", rep.sylow_conjugate)
    ck.check("nonconjugate", not rep.conjugate)
    ck.check("Gassmann", rep.gassmann)
    ck.equal("core orders", [core(G, U).order(), core(G, V).order()], [1, 1])
    ck.equal("indices", [rep.u["index"], rep.v["index"]], [7, 7])
    chi_u, chi_v = permutation_character(G, U), permutation_character(G, V)
    ck.evidence["permutation_characters"] = {"U": chi_u, "V": chi_v}
    ck.check("permutation characters equal", chi_u == chi_v)
    ck.check("permutation character via formula agrees",
             permutation_character(G, U, "formula") == chi_u
             and permutation_character(G, V, "formula") == chi_v)


@claim("psl2_11-a5",
       "PSL(2,11): two nonconjugate classes of subgroups isomorphic to A5, "
       "Sylow-conjugate")
def _psl2_11_a5(ck: Checks) -> None:
    e = cat.get_entry("psl_2_11")
    G = e.group
    ck.equal("order", G.order(), 660)
    ck.evidence["discovery"] = e.data
    ck.equal("classes among sampled A5 subgroups", len(e.data["sampled_class_sizes"]), 2)
    again = cat.psl_2_11()
    ck.check("discovery deterministic",
             [g for g in again.subgroups["U"].generators] == list(e.subgroups["U"].generators)
             and list(again.subgroups["V"].generators) == list(e.subgroups["V"].generators))
    lat = all_subgroups(G)
    a5_classes = sorted({lat.class_of[i] for i in lat.by_order().get(60, [])})
    ck.equal("conjugacy classes of order-60 subgroups (exhaustive)", len(a5_classes), 2)
    ck.equal("sizes of those classes", [len(lat.classes[c]) for c in a5_classes], [11, 11])
    U, V = e.subgroups["U"], e.subgroups["V"]
    ck.check("U, V in different lattice classes",
             lat.class_of[lat.locate(U)] != lat.class_of[lat.locate(V)])
    A5 = cat.alternating(5)
    from .subgroups import abstract_isomorphic
    ck.check("U and V isomorphic to A5", abstract_isomorphic(U, A5) and abstract_isomorphic(V, A5))
    rep = _report(ck, "U,V", G, U, V, e.id)
    ck.check("Sylow-conjugate", rep.sylow_conjugate)
    ck.check("nonconjugate", not rep.conjugate)
    ck.equal("index", rep.u["index"], 11)


@claim("psl2_11-hall",
       "PSL(2,11): the {2,3}-Hall subgroups A4 and D6 are Sylow-conjugate but "
       "nonconjugate")
def _psl2_11_hall(ck: Checks) -> None:
    from .subgroups import abstract_isomorphic
    e = cat.get_entry("psl_2_11")
    G = e.group
    A4, D6 = e.subgroups["A4"], e.subgroups["D6"]
    n = G.order()
    for nm, H in (("A4", A4), ("D6", D6)):
        ck.check(f"{nm} is a {{2,3}}-Hall subgroup",
                 H.order() == 12 and gcd(H.order(), n // H.order()) == 1)
    ck.check("A4 correct isomorphism type", abstract_isomorphic(A4, cat.alternating(4)))
    ck.check("D6 correct isomorphism type", abstract_isomorphic(D6, cat.dihedral(12)))
    ck.check("A4 and D6 nonisomorphic", not abstract_isomorphic(A4, D6))
    rep = _report(ck, "A4,D6", G, A4, D6, e.id)
    ck.check("Sylow-conjugate", rep.sylow_conjugate)
    ck.check("nonconjugate", not rep.conjugate)
    ck.check("not Gassmann", not rep.gassmann)
    inv = [sum(1 for g in H.elements() if g.order() == 2) for H in (A4, D6)]
    ck.equal("involution counts", inv, [3, 7])


def _order_2p_elements(H) -> list[str]:
    n = H.order()
    return sorted({format_cycle_type(cycle_type(g)) for g in H.elements() if g.order() == n})


@claim("regular-a",
       "regular C_2p and D_2p in Sym(2p), p = 3, 5, 7: Sylow-conjugate but not "
       "arithmetically equivalent")
def _regular_a(ck: Checks) -> None:
    for p in (3, 5, 7):
        e = cat.get_entry(f"regular_c{2 * p}_vs_d{2 * p}")
        G, U, V = e.group, e.subgroups["U"], e.subgroups["V"]
        ck.check(f"p={p}: both regular",
                 cat.is_regular(U) and cat.is_regular(V) and U.degree == 2 * p)
        rep = _report(ck, f"p={p}", G, U, V, e.id)
        ck.check(f"p={p}: Sylow-conjugate", rep.sylow_conjugate)
        ck.check(f"p={p}: nonconjugate", not rep.conjugate)
        ck.check(f"p={p}: not Gassmann", not rep.gassmann)
        cu, cv = _order_2p_elements(U), _order_2p_elements(V)
        ck.check(f"p={p}: C_2p has an element of order 2p, D_2p has none",
                 bool(cu) and not cv, cyclic=cu, dihedral=cv)
        ck.check(f"p={p}: cycle-type multisets unequal",
                 Counter(map(cycle_type, U.elements())) != Counter(map(cycle_type, V.elements())))
        inv = {format_cycle_type(cycle_type(g)) for H in (U, V) for g in H.elements()
               if g.order() == 2}
        ck.equal(f"p={p}: involutions are products of p transpositions", sorted(inv),
                 [format_cycle_type((2,) * p)])


@claim("regular-b",
       "regular C_3^3 and Heisenberg(3) in Sym(27): arithmetically equivalent but not "
       "Sylow-conjugate")
def _regular_b(ck: Checks) -> None:
    from .subgroups import abstract_isomorphic, center
    e = cat.get_entry("regular_c3cubed_vs_heisenberg3")
    G, U, V = e.group, e.subgroups["U"], e.subgroups["V"]
    ck.check("both regular of degree 27", cat.is_regular(U) and cat.is_regular(V))
    ck.check("nonisomorphic", not abstract_isomorphic(U, V))
    ck.equal("center orders", [center(U).order(), center(V).order()], [27, 3])
    types = {H.name: sorted({format_cycle_type(cycle_type(g)) for g in H.elements()
                             if not g.is_identity()}) for H in (U, V)}
    ck.check("every nontrivial element is 9 disjoint 3-cycles",
             all(t == [format_cycle_type((3,) * 9)] for t in types.values()), types=types)
    ck.check("cycle-type multisets equal",
             Counter(map(cycle_type, U.elements())) == Counter(map(cycle_type, V.elements())))
    rep = _report(ck, "U,V", G, U, V, e.id)
    ck.check("Gassmann", rep.gassmann)
    ck.check("not Sylow-conjugate", not rep.sylow_conjugate)
    ck.equal("failing prime", rep.sylow_failing_prime, 3)
    ck.check("nonconjugate", not rep.conjugate)


# ---------------------------------------------------------------------------
# minimality


SUBGROUP_COUNTS = {2: 2, 3: 6, 4: 30, 5: 156, 6: 1455}
TRANSITIVE_COUNTS = {2: 1, 3: 2, 4: 5, 5: 5, 6: 16}


@claim("degree-le-6",
       "faithful pairs of degree at most 6: Sylow-conjugate implies conjugate")
def _degree_le_6(ck: Checks) -> None:
    summary = {}
    for d in range(2, 7):
        r = search_degree(d)
        ck.equal(f"d={d}: subgroups of Sym(d)", r.subgroup_count, SUBGROUP_COUNTS[d])
        ck.equal(f"d={d}: transitive groups up to conjugacy", len(r.transitive_groups),
                 TRANSITIVE_COUNTS[d])
        ck.equal(f"d={d}: Sylow-conjugate nonconjugate faithful pairs", len(r.pairs), 0)
        ck.equal(f"d={d}: core/index failures", r.core_index_failures, [])
        summary[str(d)] = {
            "subgroups": r.subgroup_count,
            "transitive_groups": len(r.transitive_groups),
            "faithful_index_d_classes": sum(g["faithful_index_classes"]
                                            for g in r.transitive_groups),
            "pairs": len(r.pairs),
            "transitive_orders": [g["order"] for g in r.transitive_groups],
        }
    ck.evidence["per_degree"] = summary


def _order_lt_48_cases() -> list[dict]:
    cases = []
    for n in range(1, 48):
        for d in (d for d in range(7, n + 1) if n % d == 0):
            u = n // d
            pp = u == 1 or prime_power(u) is not None
            cases.append({"order": n, "degree": d, "u_order": u,
                          "resolution": "prime-power" if pp else "exhaustive"})
    return cases


@claim("order-lt-48",
       "groups of order below 48: Sylow-conjugate faithful pairs are conjugate; GL(2,3) "
       "attains 48")
def _order_lt_48(ck: Checks) -> None:
    cases = _order_lt_48_cases()
    ck.evidence["cases"] = cases
    ck.evidence["degree_le_6"] = "covered by claim degree-le-6"
    ck.evidence["abstract_group_enumeration"] = (
        "not attempted: no group database; the reduction below is exhaustive over (|G|, d)")
    ck.check("every case with d >= 7 has |U| <= 6", all(c["u_order"] <= 6 for c in cases))
    hard = [(c["order"], c["degree"]) for c in cases if c["resolution"] != "prime-power"]
    ck.equal("cases with |U| not a prime power", hard, [(42, 7)])
    # |G| = 42 on 7 points: the number of Sylow 7-subgroups divides 6 and is 1 mod 7
    n7 = [k for k in range(1, 7) if 6 % k == 0 and k % 7 == 1]
    ck.equal("Sylow 7-subgroup of a group of order 42 is normal", n7, [1])
    S7 = cat.symmetric(7)
    c7 = Subgroup(S7, [Permutation.from_cycles([tuple(range(1, 8))], 7)])
    N = normalizer(S7, c7)
    ck.equal("|N_S7(C7)|", N.order(), 42)
    e = cat.get_entry("frobenius_42")
    F = e.group
    ck.check("F42 transitive of order 42", F.order() == 42 and F.is_transitive())
    ck.check("F42 equals N_S7(C7)", same_subgroup(Subgroup(S7, F.generators), N))
    lat = all_subgroups(F)
    idx7 = [i for i in lat.representatives() if lat.order_of(i) == 6 and len(lat.core(i)) == 1]
    ck.evidence["f42_index7_core_free_classes"] = len(idx7)
    found = search_pairs(F, lat, index=7, core_free=True)
    ck.equal("F42 index-7 Sylow-conjugate nonconjugate pairs", len(found), 0)
    # every subgroup pair of F42, not only index 7
    ck.equal("F42 all Sylow-conjugate nonconjugate pairs", len(search_pairs(F, lat)), 0)
    g = cat.get_entry("gl2_3")
    rep = _report(ck, "GL(2,3)", g.group, g.subgroups["U"], g.subgroups["V"], g.id)
    ck.check("GL(2,3) pair: order 48, faithful, Sylow-conjugate, nonconjugate",
             g.group.order() == 48 and core(g.group, g.subgroups["U"]).order() == 1
             and rep.sylow_conjugate and not rep.conjugate)


# ---------------------------------------------------------------------------
# property suites


def _quotient_suite_groups() -> list[PermutationGroup]:
    return [cat.symmetric(4), cat.get_entry("gl2_3").group,
            cat.get_entry("semidirect_c3sq_c4").group, cat.get_entry("frobenius_42").group,
            cat.dihedral(12), cat.direct_product(cat.symmetric(3), cat.cyclic(3))]


@claim("lemma-2.2",
       "quotients: for N normal in G inside U and V, conjugacy and Sylow-conjugacy pass "
       "to G/N and back")
def _quotient_correspondence(ck: Checks) -> None:
    tested = 0
    for G in _quotient_suite_groups():
        lat = all_subgroups(G)
        normals = [i for i in lat.representatives() if lat.is_normal(i)
                   and 1 < lat.order_of(i) < G.order()]
        for ni in normals:
            N = lat.subgroup(ni)
            Q = quotient_group(G, N)
            Nset = lat.subgroups[ni]
            over = [i for i in range(len(lat)) if Nset <= lat.subgroups[i]]
            reps = [i for i in over if lat.classes[lat.class_of[i]][0] == i]
            pairs = []
            for a in reps:
                for b in over:
                    if lat.order_of(a) == lat.order_of(b) and (b >= a or lat.class_of[a] ==
                                                               lat.class_of[b]):
                        pairs.append((a, b))
            for a, b in pairs:
                U, V = lat.subgroup(a), lat.subgroup(b)
                UQ, VQ = Q.image_of_subgroup(U), Q.image_of_subgroup(V)
                c1 = is_conjugate(G, U, V).conjugate
                c2 = is_conjugate(Q.image, UQ, VQ).conjugate
                s1 = is_sylow_conjugate(G, U, V).sylow_conjugate
                s2 = is_sylow_conjugate(Q.image, UQ, VQ).sylow_conjugate
                tested += 1
                if c1 != c2 or s1 != s2:
                    ck.check("quotient correspondence", False, group=G.name, N=lat.order_of(ni),
                             u=a, v=b, conj=[c1, c2], sylow=[s1, s2])
    ck.check("all sampled triples respect the correspondence",
             not ck.failed, triples=tested)
    ck.evidence["triples_tested"] = tested


def _core_index_pairs():
    for key, a, b in (("gl2_3", "U", "V"), ("psl_3_2", "U", "V"), ("psl_3_3", "U", "V"),
                      ("psl_2_11", "U", "V"), ("psl_2_11", "A4", "D6")):
        e = cat.get_entry(key)
        yield f"{key}:{a},{b}", e.group, e.subgroups[a], e.subgroups[b]


@claim("lemma-2.3",
       "Sylow-conjugate subgroups have the same core and the same index")
def _core_and_index(ck: Checks) -> None:
    checked = mismatches = 0
    for name, G, U, V in _core_index_pairs():
        s = is_sylow_conjugate(G, U, V).sylow_conjugate
        ck.check(f"{name}: Sylow-conjugate", s)
        ck.check(f"{name}: same core (coset-action kernels)",
                 same_subgroup(core(G, U), core(G, V)))
        ck.check(f"{name}: same index", U.order() == V.order())
        checked += 1
    # every Sylow-conjugate pair of subgroup classes of every transitive G <= S_d, d <= 6,
    # tested with the direct predicate rather than the lattice signature
    for d in range(2, 7):
        S = cat.symmetric(d)
        lat = all_subgroups(S)
        for t in [i for i in lat.representatives() if lat.subgroup(i).is_transitive()]:
            sub = lat.restrict(t)
            G = sub.group
            reps = sub.representatives()
            for x in range(len(reps)):
                for y in range(x + 1, len(reps)):
                    i, j = reps[x], reps[y]
                    if sub.order_of(i) != sub.order_of(j):
                        continue
                    U, V = sub.subgroup(i), sub.subgroup(j)
                    if is_sylow_conjugate(G, U, V).sylow_conjugate:
                        checked += 1
                        if not same_subgroup(core(G, U), core(G, V)):
                            mismatches += 1
                            ck.check("same core", False, degree=d, u=i, v=j)
    ck.equal("core mismatches among Sylow-conjugate pairs", mismatches, 0)
    ck.evidence["sylow_conjugate_pairs_checked"] = checked
    r6 = search_degree(6)
    ck.equal("degree-6 search: core/index failures", r6.core_index_failures, [])
    ck.evidence["degree_6_signature_pairs_checked"] = r6.core_index_pairs_checked


def nilpotent_groups() -> list[PermutationGroup]:
    reg = cat.regular_embedding
    return [cat.cyclic(12), cat.dihedral(8), cat.quaternion(), cat.elementary_abelian(2, 3),
            cat.elementary_abelian(3, 2), PermutationGroup(reg(cat.heisenberg(3)).generators,
                                                           name="Heis(3)"),
            cat.direct_product(cat.dihedral(8), cat.cyclic(3)),
            cat.direct_product(cat.quaternion(), cat.cyclic(3)),
            cat.direct_product(cat.cyclic(4), cat.cyclic(2))]


def _pairs_same_order(lat):
    reps = lat.representatives()
    for x in range(len(reps)):
        for y in range(x + 1, len(reps)):
            if lat.order_of(reps[x]) == lat.order_of(reps[y]):
                yield reps[x], reps[y]


@claim("lemma-3.3",
       "nilpotent groups: Sylow-conjugate subgroups are conjugate")
def _nilpotent_suite(ck: Checks) -> None:
    pairs = 0
    per_group = {}
    for G in nilpotent_groups():
        ck.check(f"{G.name} nilpotent", is_nilpotent(G))
        lat = all_subgroups(G)
        n = 0
        for i, j in _pairs_same_order(lat):
            U, V = lat.subgroup(i), lat.subgroup(j)
            s = is_sylow_conjugate(G, U, V).sylow_conjugate
            c = is_conjugate(G, U, V).conjugate
            n += 1
            if s != c:
                ck.check(f"{G.name}: Sylow-conjugate iff conjugate", False, u=i, v=j)
        # members of one class: both predicates must hold
        for cls in lat.classes:
            if len(cls) > 1:
                U, V = lat.subgroup(cls[0]), lat.subgroup(cls[-1])
                n += 1
                if not (is_conjugate(G, U, V) and is_sylow_conjugate(G, U, V)):
                    ck.check(f"{G.name}: conjugate members", False, u=cls[0], v=cls[-1])
        pairs += n
        per_group[G.name] = {"order": G.order(), "subgroups": len(lat),
                             "classes": len(lat.classes), "pairs": n}
    ck.check("every pair agrees", not ck.failed, pairs=pairs)
    ck.evidence["groups"] = per_group


def complement_instances():
    """(name, G, A): A an abelian normal subgroup, irreducible under conjugation."""
    e = cat.get_entry("semidirect_c3sq_c4")
    S4 = cat.symmetric(4)
    A4 = cat.alternating(4)
    V4 = [Permutation.from_cycles([(1, 2), (3, 4)], 4),
          Permutation.from_cycles([(1, 3), (2, 4)], 4)]
    F = cat.get_entry("frobenius_42")
    D = cat.generalized_dihedral_c3sq()
    t1 = D.generators[0]
    return [("C3^2:C4", e.group, e.subgroups["A"]),
            ("Dih(C3^2)", D, Subgroup(D, [t1], name="A")),
            ("S4", S4, Subgroup(S4, V4, name="V4")),
            ("A4", A4, Subgroup(A4, V4, name="V4")),
            ("F42", F.group, F.subgroups["C7"])]


@claim("prop-3.4",
       "complements of an irreducible abelian normal subgroup: Sylow-conjugate implies "
       "conjugate")
def _irreducible_complements(ck: Checks) -> None:
    e = cat.get_entry("semidirect_c3sq_c4")
    ck.equal("C3^2:C4 rotation has no invariant line", e.data["invariant_lines"], [])
    summary = {}
    for name, G, A in complement_instances():
        ck.check(f"{name}: A normal and abelian", is_normal(G, A) and A.is_abelian())
        lat = all_subgroups(G)
        Aset = lat.subgroups[lat.locate(A)]
        inside = [i for i in range(len(lat)) if lat.subgroups[i] < Aset
                  and 1 < lat.order_of(i)]
        ck.check(f"{name}: A irreducible (no proper nontrivial G-invariant subgroup)",
                 not any(lat.is_normal(i) for i in inside))
        k = G.order() // A.order()
        comps = [i for i in range(len(lat)) if lat.order_of(i) == k
                 and len(lat.subgroups[i] & Aset) == 1]
        ck.check(f"{name}: complements exist", bool(comps))
        classes = sorted({lat.class_of[i] for i in comps})
        reps = [lat.classes[c][0] for c in classes]
        bad = []
        for x in range(len(reps)):
            for y in range(x + 1, len(reps)):
                U, V = lat.subgroup(reps[x]), lat.subgroup(reps[y])
                if is_sylow_conjugate(G, U, V).sylow_conjugate:
                    bad.append([reps[x], reps[y]])
        ck.equal(f"{name}: Sylow-conjugate nonconjugate complement pairs", bad, [])
        # a member of the same class as a control
        for c in classes:
            cls = lat.classes[c]
            if len(cls) > 1:
                U, V = lat.subgroup(cls[0]), lat.subgroup(cls[1])
                ck.check(f"{name}: conjugate complements are Sylow-conjugate",
                         bool(is_sylow_conjugate(G, U, V)))
                break
        summary[name] = {"order": G.order(), "complements": len(comps),
                         "complement_classes": len(classes)}
    ck.evidence["instances"] = summary


# ---------------------------------------------------------------------------
# census


def _census_pair(ck: Checks, f_name: str, g_name: str, actions: dict, label: str,
                 group_pair=None) -> None:
    cfg = get_config()
    polys = bundled_polynomials()
    f, g = polys[f_name], polys[g_name]
    rf, rg = census(f, cfg.pmax), census(g, cfg.pmax)
    cmp = compare_reports(rf, rg)
    ck.check(f"{f_name} and {g_name} have equal patterns at every common unramified prime",
             cmp.equal, **cmp.to_json())
    out = {"comparison": cmp.to_json()}
    for name, rep in ((f_name, rf), (g_name, rg)):
        dist = cycle_type_distribution(actions[name])
        m = match_census_to_group(rep, dist, cfg.tolerance)
        ck.check(f"{name} pattern frequencies match {label}", m.passed,
                 max_deviation=round(m.max_deviation, 6),
                 unsupported=[format_cycle_type(t) for t in m.unsupported])
        out[name] = {"census": rep.to_json(), "match": m.to_json()}
    if group_pair is not None:
        G, U, V = group_pair
        ck.check(f"group pair for {label} is Gassmann", bool(is_gassmann(G, U, V)))
    ck.evidence.setdefault("census", {})[f"{f_name},{g_name}"] = out


@claim("census-claim-1.2a",
       "x^7-7x+3 and x^7+14x^4-42x^2-21x+9 split alike mod p, consistent with Galois "
       "group PSL(3,2)")
def _census_p7_q7(ck: Checks) -> None:
    e = cat.get_entry("psl_3_2")
    acts = {"p7": e.actions["points"], "q7": e.actions["hyperplanes"]}
    _census_pair(ck, "p7", "q7", acts, "PSL(3,2) degree 7",
                 (e.group, e.subgroups["U"], e.subgroups["V"]))


@claim("census-claim-1.2b",
       "the two degree-8 polynomials split alike mod p, consistent with Galois group "
       "GL(2,3)")
def _census_p8_q8(ck: Checks) -> None:
    e = cat.get_entry("gl2_3")
    acts = {"p8": e.actions["G/U"], "q8": e.actions["G/V"]}
    _census_pair(ck, "p8", "q8", acts, "GL(2,3) degree 8",
                 (e.group, e.subgroups["U"], e.subgroups["V"]))


@claim("census-efm",
       "x^7-154x+99 and x^7-231x^3-462x^2+77x+66 split alike mod p, consistent with "
       "PSL(3,2)")
def _census_efm(ck: Checks) -> None:
    e = cat.get_entry("psl_3_2")
    acts = {"u7": e.actions["points"], "v7": e.actions["hyperplanes"]}
    _census_pair(ck, "u7", "v7", acts, "PSL(3,2) degree 7",
                 (e.group, e.subgroups["U"], e.subgroups["V"]))


@claim("census-psl2_11",
       "p11 and q11 split alike mod p, consistent with PSL(2,11) on 11 points; f11(2,x) "
       "likewise")
def _census_psl2_11(ck: Checks) -> None:
    e = cat.get_entry("psl_2_11")
    acts = {"p11": e.actions["G/U"], "q11": e.actions["G/V"]}
    _census_pair(ck, "p11", "q11", acts, "PSL(2,11) degree 11",
                 (e.group, e.subgroups["U"], e.subgroups["V"]))
    cfg = get_config()
    f11 = bundled_polynomials()["f11"]
    ck.check("f11(2,x) has leading coefficient 2 (prime 2 skipped)", f11.leading == 2)
    rep = census(f11, cfg.pmax)
    ck.equal("prime 2 flagged for f11", rep.skipped.get(2), "leading-drop-skipped")
    m = match_census_to_group(rep, cycle_type_distribution(e.actions["G/U"]), cfg.tolerance)
    ck.check("f11(2,x) pattern frequencies match PSL(2,11) degree 11", m.passed,
             max_deviation=round(m.max_deviation, 6))
    ck.evidence["f11"] = {"census": rep.to_json(), "match": m.to_json(),
                          "class_assignment": "consistent with both A5 classes; not matched"}


# ---------------------------------------------------------------------------
# arithmetic and oracles


PRIME_DEGREE_INSTANCES = [(13, 3, 3), (31, 5, 3), (73, 8, 3), (1772893, 11**3, 3)]


@claim("thm-3.1-instances",
       "primes p = (q^d-1)/(q-1) with d prime: 13, 31, 73, 1772893; live PSL(3,3) "
       "parabolic pair")
def _prime_degree_instances(ck: Checks) -> None:
    rows = []
    for p, q, d in PRIME_DEGREE_INSTANCES:
        val, rem = divmod(q**d - 1, q - 1)
        ok = rem == 0 and val == p and is_prime(p) and is_prime(d) and prime_power(q) is not None
        ck.check(f"{p} = ({q}^{d}-1)/({q}-1), p and d prime, q a prime power", ok)
        rows.append({"p": p, "q": q, "d": d})
    ck.evidence["instances"] = rows
    e = cat.get_entry("psl_3_3")
    G = e.group
    ck.equal("PSL(3,3) degree", G.degree, 13)
    ck.equal("PSL(3,3) order", G.order(), 5616)
    ck.check("hyperplane action transitive of degree 13",
             e.actions["hyperplanes"].is_transitive() and e.actions["hyperplanes"].degree == 13)
    rep = _report(ck, "U,V", G, e.subgroups["U"], e.subgroups["V"], e.id)
    ck.check("PSL(3,3) parabolic pair Sylow-conjugate and nonconjugate",
             rep.sylow_conjugate and not rep.conjugate)
    ck.check("PSL(3,3) parabolic pair Gassmann", rep.gassmann)


def catalog_groups_small() -> list[tuple[str, PermutationGroup]]:
    out = []
    for key in cat.CATALOG:
        G = cat.get_entry(key).group
        if G.order() <= 10**4:
            out.append((key, G))
    extra = [cat.symmetric(4), cat.symmetric(5), cat.symmetric(6), cat.alternating(5),
             cat.dihedral(12), cat.quaternion(), cat.elementary_abelian(3, 3)]
    out.extend((G.name, G) for G in extra)
    return out


@claim("kernel-oracles",
       "kernel oracles: chain orders equal closure counts; distinct-degree factorization"
       " equals trial division")
def _kernel_oracles(ck: Checks) -> None:
    orders = {}
    for name, G in catalog_groups_small():
        n = len(closure_elements(G.generators, G.degree))
        orders[name] = n
        ck.check(f"{name}: chain order equals closure count", G.order() == n,
                 chain=G.order(), closure=n)
    ck.evidence["orders"] = orders
    tables: dict[int, dict] = {}
    n = bad = 0
    for p, f in ddf_test_cases():
        if p not in tables:
            tables[p] = irreducibles(p, 4)
        td = trial_division_pattern(f, p, tables[p])
        sf = is_squarefree_mod_p(f, p)
        if (td is None) == sf:
            bad += 1
            ck.check("squarefree test agrees with trial division", False, p=p, f=f)
            continue
        if td is None:
            continue
        n += 1
        got = degree_pattern(f, p)
        if got != td:
            bad += 1
            ck.check("DDF equals trial division", False, p=p, f=f, ddf=got, trial=td)
    ck.check("DDF and trial division agree on every squarefree test polynomial", bad == 0,
             compared=n)
    ck.evidence["ddf_polynomials_compared"] = n
