import itertools

import pytest

from sylowscope import catalog
from sylowscope.catalog import (alternating, dihedral, elementary_abelian, heisenberg,
                                is_regular, regular_embedding)
from sylowscope.equivalence import permutation_character
from sylowscope.group import closure_elements
from sylowscope.perm import cycle_type
from sylowscope.subgroups import center, find_conjugator, index, normalizer

ORDERS = {
    "gl2_3": (48, 8),
    "psl_3_2": (168, 7),
    "psl_3_3": (5616, 13),
    "psl_2_11": (660, 12),
    "frobenius_42": (42, 7),
    "semidirect_c3sq_c4": (36, 9),
    "s6_two_s5": (720, 6),
}


def test_family_orders():
    assert dihedral(6).order() == 6
    assert alternating(5).order() == 60
    assert elementary_abelian(3, 3).order() == 27
    assert catalog.quaternion().order() == 8


@pytest.mark.parametrize("entry_id", sorted(ORDERS))
def test_catalog_orders_and_closure(entry_id):
    e = catalog.get_entry(entry_id)
    order, degree = ORDERS[entry_id]
    assert (e.group.order(), e.group.degree) == (order, degree)
    assert len(closure_elements(e.group.generators, e.group.degree)) == order


def test_list_entries_has_stable_ids():
    ids = [r["id"] for r in catalog.list_entries()]
    assert ids == list(catalog.CATALOG)
    with pytest.raises(KeyError):
        catalog.get_entry("nope")


def test_gl2_3_entry():
    e = catalog.get_entry("gl2_3")
    assert e.subgroups["N"].order() == 12
    assert normalizer(e.group, e.subgroups["P"]).order() == 12
    assert index(e.group, e.subgroups["U"]) == 8
    assert e.subgroups["U"].order() == e.subgroups["V"].order() == 6


@pytest.mark.parametrize("p", [3, 5, 7])
def test_regular_dihedral_cycle_types(p):
    e = catalog.regular_pair(p)
    U, V = e.subgroups["U"], e.subgroups["V"]
    assert is_regular(U) and is_regular(V)
    types_u = {cycle_type(g) for g in U.elements()}
    assert (2,) * p in types_u
    assert (p, p) in types_u
    assert (2 * p,) in types_u
    assert (2 * p,) not in {cycle_type(g) for g in V.elements()}


def test_regular_heisenberg_cycle_types():
    e = catalog.get_entry("regular_c3cubed_vs_heisenberg3")
    for key in ("U", "V"):
        H = e.subgroups[key]
        assert is_regular(H)
        types = {cycle_type(g) for g in H.elements()}
        assert types == {(1,) * 27, (3,) * 9}


def test_heisenberg():
    t = heisenberg(3)
    assert len(t) == 27
    H = regular_embedding(t)
    assert H.order() == 27 and not H.is_abelian()
    assert center(H).order() == 3
    with pytest.raises(ValueError):
        heisenberg(2)
    with pytest.raises(ValueError):
        heisenberg(9)


def test_regular_embedding_stabilizers_trivial():
    H = regular_embedding(dihedral(10))
    for g in H.elements():
        if not g.is_identity():
            assert g.fixed_points() == 0


def test_check_group_table_rejects_garbage():
    with pytest.raises(ValueError):
        catalog.check_group_table([[0, 1], [0, 1]])


@pytest.mark.parametrize("entry_id", ["psl_3_2", "psl_3_3"])
def test_points_and_hyperplanes(entry_id):
    e = catalog.get_entry(entry_id)
    G, U, V = e.group, e.subgroups["U"], e.subgroups["V"]
    assert index(G, U) == index(G, V) == G.degree
    assert permutation_character(G, U) == permutation_character(G, V)
    # isomorphic actions <=> conjugate stabilizers
    assert find_conjugator(G, U, V)[0] is None


def test_psl_3_2_actions_not_intertwined():
    # brute force: no bijection s of the 7 labels with s g = g' s for every
    # generator pair (point action g, hyperplane action g')
    e = catalog.get_entry("psl_3_2")
    pairs = list(zip(e.actions["points"].generators, e.actions["hyperplanes"].generators))
    hits = 0
    for s in itertools.permutations(range(7)):
        if all(s[g[x]] == h[s[x]] for g, h in pairs for x in range(7)):
            hits += 1
    assert hits == 0
    assert e.actions["hyperplanes"].order() == 168


def test_psl_2_11_discovery_is_deterministic():
    a = catalog.psl_2_11()
    b = catalog.psl_2_11()
    assert a.data == b.data
    for key in ("U", "V", "A4", "D6"):
        assert a.subgroups[key].generators == b.subgroups[key].generators
    assert a.subgroups["A4"].order() == 12 and a.subgroups["D6"].order() == 12


def test_psl_2_11_discovery_too_few_attempts():
    from sylowscope.errors import SylowscopeError
    with pytest.raises(SylowscopeError):
        catalog.psl_2_11(attempts=1)


def test_semidirect_instance():
    e = catalog.get_entry("semidirect_c3sq_c4")
    assert e.data["invariant_lines"] == []
    assert len(e.data["lines"]) == 4
    assert e.subgroups["H"].order() == 4
