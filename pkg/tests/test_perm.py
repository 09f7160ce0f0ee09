import itertools

import pytest

from sylowscope.perm import (Permutation, compose, conjugate, cycle_type, format_cycle_type,
                             identity, inverse)


def P(text, n):
    return Permutation.parse(text, n)


def test_identity_and_trivial_products():
    assert identity(3).to_cycle_string() == "()"
    assert cycle_type(identity(5)) == (1, 1, 1, 1, 1)
    p = P("(1 3 2)(4)", 4)
    assert compose(identity(4), p) == p
    assert compose(P("(1 2)", 3), P("(1 2)", 3)) == identity(3)


def test_composition_is_right_to_left():
    # apply (2 3) first: 2 -> 3 -> 3 ... then (1 2)
    ab = compose(P("(1 2)", 3), P("(2 3)", 3))
    assert ab.image(2) == 3
    assert ab.image(3) == 1
    assert ab.image(1) == 2
    assert ab == P("(1 2 3)", 3)
    assert cycle_type(ab) == (3,)


def test_products_in_s4_match_function_composition():
    els = [Permutation(t) for t in itertools.permutations(range(4))]
    for a in els:
        for b in els:
            assert list(compose(a, b)) == [a[b[x]] for x in range(4)]


def test_inverse_and_conjugation():
    g = P("(1 2 3 4)", 5)
    assert compose(g, inverse(g)) == identity(5)
    p = P("(1 5)(2 3)", 5)
    q = conjugate(p, g)
    assert q == inverse(g) * p * g
    assert cycle_type(q) == cycle_type(p)


def test_cycle_notation_round_trip():
    p = P("(1 4 2)(3 5)", 6)
    assert P(p.to_cycle_string(), 6) == p
    assert Permutation.from_images([2, 3, 1]) == P("(1 2 3)", 3)
    assert p.order() == 6
    assert p.fixed_points() == 1


def test_bad_input_rejected():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])
    with pytest.raises(ValueError):
        P("(1 2)(2 3)", 3)
    with pytest.raises(ValueError):
        P("(1 7)", 3)
    with pytest.raises(ValueError):
        P("1 2", 3)


def test_format_cycle_type():
    assert format_cycle_type((2, 2, 2)) == "{2,2,2}"
    assert format_cycle_type((4, 2, 1)) == "{1,2,4}"
