import random

import pytest

from sylowscope.numtheory import primes_up_to
from sylowscope.oracles import irreducibles, trial_division_pattern
from sylowscope.polys import (IntegerPolynomial, bundled_polynomials, degree_pattern,
                              is_squarefree_mod_p, load_polynomials, pdivmod, pmul,
                              reduce_mod_p)


def test_reduce_mod_p():
    assert reduce_mod_p([1, 0, 1], 2) == [1, 0, 1]
    p7 = bundled_polynomials()["p7"]
    assert p7.coefficients == (3, -7, 0, 0, 0, 0, 0, 1)
    assert reduce_mod_p(p7, 7) == [3, 0, 0, 0, 0, 0, 0, 1]


def test_f11_leading_coefficient_drops_mod_2():
    f11 = bundled_polynomials()["f11"]
    assert f11.degree == 11 and f11.leading == 2
    assert len(reduce_mod_p(f11, 2)) - 1 < 11


def test_bundled_data():
    polys = bundled_polynomials()
    assert {"p7", "q7", "u7", "v7", "p8", "q8", "p11", "q11", "f11"} <= set(polys)
    for name, f in polys.items():
        assert f.degree in (7, 8, 11)
        if name != "f11":
            assert f.leading == 1
    assert str(polys["p7"]) == "x^7-7x+3"


def test_squarefree():
    assert not is_squarefree_mod_p([0, 0, 1], 3)
    assert is_squarefree_mod_p([1, 0, 1], 5)


def _roots_with_multiplicity(f, p):
    out = {}
    for a in range(p):
        m, g = 0, list(f)
        while True:
            q, r = pdivmod(g, [(-a) % p, 1], p)
            if r:
                break
            g, m = q, m + 1
        if m:
            out[a] = m
    return out


def test_p7_ramified_primes_have_repeated_roots():
    # below 100 p7 has repeated factors only at its ramified primes, and those
    # repeated factors are linear; cross-check with a root-multiplicity scan
    p7 = bundled_polynomials()["p7"]
    flagged = []
    for p in primes_up_to(100):
        f = reduce_mod_p(p7, p)
        sf = is_squarefree_mod_p(f, p)
        brute = any(m > 1 for m in _roots_with_multiplicity(f, p).values())
        if not sf:
            flagged.append(p)
            assert brute
        else:
            assert not brute
    assert flagged


def test_degree_patterns_small():
    assert degree_pattern([1, 0, 1], 5) == (1, 1)
    assert degree_pattern([1, 0, 1], 3) == (2,)
    with pytest.raises(ValueError):
        degree_pattern([0, 0, 1], 3)


def test_p7_mod_5_against_trial_division():
    p7 = bundled_polynomials()["p7"]
    f = reduce_mod_p(p7, 5)
    assert degree_pattern(f, 5) == trial_division_pattern(f, 5)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_ddf_matches_trial_division_random(p):
    rng = random.Random(p)
    table = irreducibles(p, 4)
    n = 0
    while n < 60:
        d = rng.randint(1, 8)
        f = [rng.randrange(p) for _ in range(d)] + [1]
        expect = trial_division_pattern(f, p, table)
        if expect is None:
            assert not is_squarefree_mod_p(f, p)
            continue
        assert degree_pattern(f, p) == expect
        assert sum(expect) == d
        n += 1


def test_products_of_known_irreducibles():
    table = irreducibles(3, 4)
    f = pmul(pmul(table[1][0], table[2][0], 3), table[4][1], 3)
    assert degree_pattern(f, 3) == (4, 2, 1)


def test_shift_invariance():
    rng = random.Random(0)
    base = bundled_polynomials()["p8"]
    for p in (11, 13, 101):
        f = reduce_mod_p(base, p)
        if not is_squarefree_mod_p(f, p):
            continue
        shift = [p * rng.randint(-50, 50) for _ in range(8)]
        g = IntegerPolynomial("g", tuple(a + b for a, b in
                                         zip(base.coefficients, shift + [0])))
        assert degree_pattern(reduce_mod_p(g, p), p) == degree_pattern(f, p)


def test_integer_polynomial_bounds(tmp_path):
    with pytest.raises(ValueError):
        IntegerPolynomial("big", (2**63, 1))
    path = tmp_path / "f.json"
    path.write_text('{"name": "t", "coefficients": [1, 0, 1]}')
    assert load_polynomials(str(path))["t"].degree == 2
