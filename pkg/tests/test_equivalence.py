import random

from sylowscope import catalog
from sylowscope.catalog import cyclic, symmetric
from sylowscope.equivalence import (classify_pair, is_conjugate, is_gassmann,
                                    is_sylow_conjugate, permutation_character, search_pairs,
                                    transitive_classes)
from sylowscope.group import PermutationGroup
from sylowscope.subgroups import (all_subgroups, conjugate_subgroup,
                                  sylow_subgroup, whole)


def test_conjugate_copies():
    e = catalog.get_entry("gl2_3")
    G, U = e.group, e.subgroups["U"]
    g = G.random_element(11)
    W = conjugate_subgroup(U, g)
    v = is_conjugate(G, U, W)
    assert v.conjugate and v.witness is not None
    rep = classify_pair(G, U, W)
    assert rep.conjugate and rep.sylow_conjugate and rep.gassmann
    rep = classify_pair(G, U, U)
    assert rep.conjugate and rep.same_core and rep.same_index


def test_gl2_3_pair():
    e = catalog.get_entry("gl2_3")
    G, U, V = e.group, e.subgroups["U"], e.subgroups["V"]
    assert not is_conjugate(G, U, V)
    s = is_sylow_conjugate(G, U, V)
    assert s.sylow_conjugate and sorted(s.witnesses) == [2, 3]
    rep = classify_pair(G, U, V, "gl2_3")
    assert rep.same_core and rep.same_index and not rep.conjugate


def test_psl2_11_pairs():
    e = catalog.get_entry("psl_2_11")
    G = e.group
    assert not is_conjugate(G, e.subgroups["U"], e.subgroups["V"])
    rep = classify_pair(G, e.subgroups["A4"], e.subgroups["D6"])
    assert rep.sylow_conjugate and not rep.conjugate and not rep.gassmann
    d = rep.gassmann_distinguishing_class
    assert d["count_u"] != d["count_v"]


def test_hall_subgroups_are_sylow_conjugate():
    # {2,3}-Hall subgroups of PSL(2,11): order 12, index 55 coprime to 6
    e = catalog.get_entry("psl_2_11")
    G = e.group
    for key in ("A4", "D6"):
        H = e.subgroups[key]
        assert (G.order() // H.order()) % 2 and (G.order() // H.order()) % 3
        for p in (2, 3):
            assert sylow_subgroup(H, p).order() == sylow_subgroup(G, p).order()


def test_heisenberg_pair_fails_at_3():
    e = catalog.get_entry("regular_c3cubed_vs_heisenberg3")
    G, U, V = e.group, e.subgroups["U"], e.subgroups["V"]
    s = is_sylow_conjugate(G, U, V)
    assert not s and s.failing_prime == 3
    assert is_gassmann(G, U, V).gassmann


def test_gassmann_examples():
    e = catalog.get_entry("psl_3_2")
    assert is_gassmann(e.group, e.subgroups["U"], e.subgroups["V"])
    e = catalog.get_entry("regular_c6_vs_d6")
    v = is_gassmann(e.group, e.subgroups["U"], e.subgroups["V"])
    assert not v and v.mode == "cycle-type"


def test_permutation_character_of_whole_group():
    G = catalog.get_entry("gl2_3").group
    chi = permutation_character(G, whole(G))
    assert set(chi) == {1}


def test_permutation_character_methods_agree():
    e = catalog.get_entry("gl2_3")
    for key in ("U", "V", "P", "N"):
        H = e.subgroups[key]
        assert (permutation_character(e.group, H, "coset")
                == permutation_character(e.group, H, "formula"))


def _same_order_pairs(S):
    lat = all_subgroups(S)
    reps = lat.representatives()
    rng = random.Random(5)
    for i in reps:
        U = lat.subgroup(i)
        yield U, conjugate_subgroup(U, S.random_element(rng))
        for j in reps:
            if i < j and lat.order_of(i) == lat.order_of(j):
                yield U, lat.subgroup(j)


def test_gassmann_modes_agree_and_match_characters():
    outcomes = set()
    for n in (5, 6):
        S = symmetric(n)
        for U, V in _same_order_pairs(S):
            a = is_gassmann(S, U, V, mode="cycle-type").gassmann
            b = is_gassmann(S, U, V, mode="explicit").gassmann
            assert a == b
            assert (permutation_character(S, U, "formula")
                    == permutation_character(S, V, "formula")) == a
            outcomes.add(a)
    assert outcomes == {True, False}


def test_search_pairs():
    assert search_pairs(symmetric(4)) == []
    assert search_pairs(cyclic(12)) == []
    e = catalog.get_entry("gl2_3")
    found = search_pairs(e.group)
    assert any({r.u["order"], r.v["order"]} == {6} and r.same_index for r in found)


def test_transitive_subgroups_of_s4():
    lat = all_subgroups(symmetric(4))
    orders = sorted(lat.order_of(i) for i in transitive_classes(lat))
    assert orders == [4, 4, 8, 12, 24]


def test_report_json_keys():
    e = catalog.get_entry("gl2_3")
    d = classify_pair(e.group, e.subgroups["U"], e.subgroups["V"], "gl2_3").to_json()
    for key in ("ambient", "u", "v", "conjugate", "sylow_conjugate", "sylow_witnesses",
                "gassmann", "same_core", "same_index"):
        assert key in d


def test_prime_power_groups():
    # for a p-group pair, Sylow-conjugate is the same as conjugate
    G = PermutationGroup(symmetric(4).generators)
    lat = all_subgroups(G)
    for i in lat.by_order()[4]:
        for j in lat.by_order()[4]:
            U, V = lat.subgroup(i), lat.subgroup(j)
            assert bool(is_sylow_conjugate(G, U, V)) == bool(is_conjugate(G, U, V))


def test_solvable_prime_degree_pairs_are_conjugate():
    from sylowscope.equivalence import search_degree
    res = search_degree(5)
    solvable = [g for g in res.transitive_groups if g["solvable"]]
    assert sorted(g["order"] for g in solvable) == [5, 10, 20]
    assert all(g["pairs"] == 0 for g in solvable)
    F42 = catalog.get_entry("frobenius_42").group
    assert search_pairs(F42, index=7) == []
