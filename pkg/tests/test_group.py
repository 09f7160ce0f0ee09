import collections
import random

import pytest

from sylowscope.catalog import (alternating, matrix_on_vectors, nonzero_vectors, symmetric,
                                transvections)
from sylowscope.errors import CapExceededError
from sylowscope.fields import FiniteField
from sylowscope.group import PermutationGroup, closure_elements
from sylowscope.perm import Permutation, conjugate, cycle_type


def P(text, n):
    return Permutation.parse(text, n)


def test_small_orders():
    assert PermutationGroup([P("(1 2)", 3), P("(1 2 3)", 3)]).order() == 6
    assert PermutationGroup([], degree=3).order() == 1
    assert PermutationGroup([P("(1 2)", 4), P("(1 2 3 4)", 4)]).order() == 24


def test_sl32_from_transvections():
    F = FiniteField(2)
    vecs = nonzero_vectors(F, 3)
    gens = [matrix_on_vectors(F, M, vecs) for M in transvections(F, 3)]
    G = PermutationGroup(gens)
    assert G.order() == 168
    assert len(closure_elements(G.generators, G.degree)) == 168
    assert G.orbit(1) == set(range(1, 8))


def test_membership_agrees_with_elements():
    A4 = alternating(4)
    assert not A4.contains(P("(1 2)", 4))
    assert A4.contains(P("(1 2)(3 4)", 4))
    S4 = symmetric(4)
    els = set(A4.elements())
    for g in S4.elements():
        assert A4.contains(g) == (g in els)


def test_elements_sorted_and_capped():
    S4 = symmetric(4)
    els = S4.elements()
    assert els == sorted(els)
    with pytest.raises(CapExceededError):
        PermutationGroup(symmetric(9).generators).elements(cap=1000)


def test_orbits():
    G = PermutationGroup([P("(1 2)", 3)])
    assert G.orbit(3) == {3}
    assert G.orbits() == [[1, 2], [3]]
    assert symmetric(6).is_transitive()


def test_random_element_uniform_on_s4():
    S4 = symmetric(4)
    rng = random.Random(1)
    n = 10**4
    counts = collections.Counter(S4.random_element(rng) for _ in range(n))
    assert len(counts) == 24
    for c in counts.values():
        assert abs(c / n - 1 / 24) < 0.01


def test_random_element_deterministic():
    G = symmetric(7)
    assert G.random_element(5) == G.random_element(5)


def test_chain_order_matches_closure_for_random_generators():
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randint(2, 7)
        gens = [Permutation(rng.sample(range(n), n)) for _ in range(rng.randint(1, 3))]
        G = PermutationGroup(gens)
        assert G.order() == len(closure_elements(gens, n))


def test_cycle_type_is_class_invariant():
    S5 = symmetric(5)
    g = P("(1 2 3)(4 5)", 5)
    assert {cycle_type(conjugate(g, h)) for h in S5.elements()} == {(3, 2)}
