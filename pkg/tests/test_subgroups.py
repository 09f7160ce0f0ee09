import itertools

import pytest

from sylowscope import catalog
from sylowscope.catalog import alternating, cyclic, symmetric
from sylowscope.errors import NotNormalError
from sylowscope.group import PermutationGroup
from sylowscope.oracles import count_subgroups
from sylowscope.perm import Permutation
from sylowscope.subgroups import (Subgroup, abstract_isomorphic, all_subgroups, center,
                                  conjugacy_classes, conjugate_subgroup, core, coset_action,
                                  find_conjugator, index, intersection, is_normal, normalizer,
                                  quotient_group, sylow_subgroup)


def P(text, n):
    return Permutation.parse(text, n)


def sub(G, *cycles):
    return Subgroup(G, [P(c, G.degree) for c in cycles])


def test_sylow_subgroups():
    S3, S4 = symmetric(3), symmetric(4)
    assert sylow_subgroup(S4, 2).order() == 8
    S = sylow_subgroup(S3, 3)
    assert S.order() == 3 and S.contains(P("(1 2 3)", 3))
    assert sylow_subgroup(catalog.get_entry("psl_2_11").group, 5).order() == 5


def test_sylow_count_is_one_mod_p():
    S5 = symmetric(5)
    lat = all_subgroups(S5)
    for p, size in ((2, 8), (3, 3), (5, 5)):
        n_p = len(lat.by_order()[size])
        assert n_p % p == 1


def test_core_examples():
    S3, S4 = symmetric(3), symmetric(4)
    assert core(S3, sub(S3, "(1 2)")).order() == 1
    A4 = Subgroup(S4, alternating(4).generators)
    assert core(S4, A4).order() == 12
    e = catalog.get_entry("gl2_3")
    assert core(e.group, e.subgroups["U"]).order() == 1


def test_coset_action():
    S3 = symmetric(3)
    act = coset_action(S3, sub(S3, "(1 2)"))
    assert act.degree == 3 and act.image.order() == 6
    e = catalog.get_entry("gl2_3")
    act = coset_action(e.group, e.subgroups["U"])
    assert act.degree == 8 and act.image.order() == 48 and act.image.is_transitive()


def test_coset_action_psl2_11_on_a5_is_2_transitive():
    e = catalog.get_entry("psl_2_11")
    img = coset_action(e.group, e.subgroups["U"]).image
    assert img.degree == 11 and img.order() == 660
    stab = [g for g in img.elements() if g[0] == 0]
    assert len(PermutationGroup(stab).orbit(2)) == 10


def test_normalizers():
    S3 = symmetric(3)
    assert normalizer(S3, sub(S3, "(1 2 3)")).order() == 6
    e = catalog.get_entry("gl2_3")
    assert normalizer(e.group, e.subgroups["P"]).order() == 12
    S7 = symmetric(7)
    assert normalizer(S7, sub(S7, "(1 2 3 4 5 6 7)")).order() == 42


def test_normalizer_of_7_cycle_brute_force():
    # oracle: scan S7 for elements mapping <c> to itself
    c = P("(1 2 3 4 5 6 7)", 7)
    powers = {tuple(range(7))}
    x = c
    while tuple(x) not in powers:
        powers.add(tuple(x))
        x = x * c
    hits = 0
    for t in itertools.permutations(range(7)):
        g = Permutation(t)
        if _conj(c, g) in powers:
            hits += 1
    assert hits == 42


def _conj(c, g):
    # g^-1 c g as an image tuple
    inv = [0] * len(g)
    for i, y in enumerate(g):
        inv[y] = i
    return tuple(inv[c[g[x]]] for x in range(len(g)))


def test_conjugacy_class_sizes():
    assert sorted(c.size for c in conjugacy_classes(symmetric(3))) == [1, 2, 3]
    G = catalog.get_entry("psl_3_2").group
    assert sorted(c.size for c in conjugacy_classes(G)) == [1, 21, 24, 24, 42, 56]


def test_symmetric_classes_by_cycle_type():
    classes = conjugacy_classes(symmetric(27))
    assert len(classes) == 3010
    assert all(c.cycle_type is not None for c in classes)


def test_conjugator_examples():
    S4 = symmetric(4)
    g, _ = find_conjugator(S4, sub(S4, "(1 2)", "(1 2 3)"), sub(S4, "(2 3)", "(2 3 4)"))
    assert g is not None
    e = catalog.get_entry("gl2_3")
    assert find_conjugator(e.group, e.subgroups["U"], e.subgroups["V"])[0] is None
    e = catalog.get_entry("psl_3_2")
    assert find_conjugator(e.group, e.subgroups["U"], e.subgroups["V"])[0] is None


def test_conjugator_modes_agree_in_symmetric_group():
    S6 = symmetric(6)
    U = sub(S6, "(1 2 3 4 5 6)")
    h = P("(1 4)(2 6 5)", 6)
    V = conjugate_subgroup(U, h)
    for mode in ("explicit", "semiregular", "cyclic"):
        g, used = find_conjugator(S6, U, V, mode)
        assert used == mode and g is not None
    W = sub(S6, "(1 2 3)(4 5 6)", "(1 4)(2 6)(3 5)")
    assert find_conjugator(S6, U, W, "explicit")[0] is None
    assert find_conjugator(S6, U, W, "semiregular")[0] is None


def test_unknown_conjugator_mode():
    S3 = symmetric(3)
    with pytest.raises(ValueError):
        find_conjugator(S3, S3, S3, mode="magic")


def test_quotients():
    S4 = symmetric(4)
    V4 = sub(S4, "(1 2)(3 4)", "(1 3)(2 4)")
    q = quotient_group(S4, V4)
    assert q.image.order() == 6 and q.degree == 6
    q = quotient_group(S4, sub(S4))
    assert q.image.order() == 24 and q.degree == 24
    C6 = cyclic(6)
    c = C6.generators[0]
    q = quotient_group(C6, Subgroup(C6, [c * c * c]))
    assert q.image.order() == 3
    with pytest.raises(NotNormalError):
        quotient_group(S4, sub(S4, "(1 2)"))


def test_index_and_intersection():
    S4 = symmetric(4)
    A4 = Subgroup(S4, alternating(4).generators)
    V4 = sub(S4, "(1 2)(3 4)", "(1 3)(2 4)")
    assert intersection(A4, V4).order() == 4
    assert is_normal(S4, V4)
    e = catalog.get_entry("psl_3_2")
    assert index(e.group, e.subgroups["U"]) == 7
    e = catalog.get_entry("psl_2_11")
    assert index(e.group, e.subgroups["U"]) == 11


def test_abstract_isomorphism():
    assert not abstract_isomorphic(cyclic(6), catalog.dihedral(6))
    e = catalog.get_entry("regular_c3cubed_vs_heisenberg3")
    assert not abstract_isomorphic(e.subgroups["U"], e.subgroups["V"])
    e = catalog.get_entry("psl_2_11")
    assert abstract_isomorphic(e.subgroups["U"], e.subgroups["V"])


def test_small_lattices():
    lat = all_subgroups(symmetric(3))
    assert len(lat) == 6 and len(lat.classes) == 4
    assert center(symmetric(3)).order() == 1


@pytest.mark.parametrize("n,expected", [(3, 6), (4, 30), (5, 156)])
def test_lattice_counts_against_oracle(n, expected):
    S = symmetric(n)
    assert count_subgroups(S) == expected
    assert len(all_subgroups(S)) == expected


def test_lattice_of_cyclic_and_quaternion():
    # cyclic: one subgroup per divisor; Q8: 1, <-1>, three C4, Q8
    assert len(all_subgroups(cyclic(12))) == 6
    Q = catalog.quaternion()
    assert count_subgroups(Q) == 6 == len(all_subgroups(Q))


def test_lattice_classes_json():
    d = all_subgroups(symmetric(4)).classes_to_json()
    assert d["ambient"]["order"] == 24
    assert len(d["classes"]) == 11
    assert sum(c["class_size"] for c in d["classes"]) == 30
    assert all(c["order"] * c["index"] == 24 for c in d["classes"])
