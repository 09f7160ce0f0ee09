from fractions import Fraction

import pytest

from sylowscope import catalog
from sylowscope.census import (LEADING_DROP, RAMIFIED, census, compare_census,
                               cycle_type_distribution, match_census_to_group)
from sylowscope.polys import IntegerPolynomial, bundled_polynomials

X2_PLUS_1 = IntegerPolynomial("x^2+1", (1, 0, 1))


def test_census_of_x2_plus_1():
    rep = census(X2_PLUS_1, 100)
    assert rep.skipped == {2: RAMIFIED}
    assert rep.total == 24
    # split iff p = 1 mod 4
    for p, pat in rep.patterns.items():
        assert pat == ((1, 1) if p % 4 == 1 else (2,))
    assert rep.counts[(1, 1)] == 11 and rep.counts[(2,)] == 13


def test_empty_census():
    rep = census(X2_PLUS_1, 1)
    assert rep.total == 0 and rep.patterns == {} and rep.skipped == {}
    with pytest.raises(ValueError):
        match_census_to_group(rep, {(2,): 1})


def test_every_prime_accounted_for():
    f = bundled_polynomials()["f11"]
    rep = census(f, 500)
    assert rep.skipped[2] == LEADING_DROP
    assert not set(rep.patterns) & set(rep.skipped)
    for pat in rep.patterns.values():
        assert sum(pat) == 11


def test_compare_trivia():
    polys = bundled_polynomials()
    c = compare_census(polys["p7"], polys["p8"], 100)
    assert not c and c.first_disagreement == 2 and c.reason == "degrees differ"
    assert compare_census(polys["p7"], polys["p7"], 2000)


def test_compare_census_small_bound():
    polys = bundled_polynomials()
    assert compare_census(polys["p7"], polys["q7"], 3000)
    assert compare_census(polys["p8"], polys["q8"], 3000)
    assert not compare_census(polys["p7"], polys["u7"], 3000)


def test_cycle_type_distribution_s3():
    d = cycle_type_distribution(catalog.symmetric(3))
    assert d == {(3,): Fraction(1, 3), (2, 1): Fraction(1, 2), (1, 1, 1): Fraction(1, 6)}


def test_psl32_distribution():
    G = catalog.get_entry("psl_3_2").group
    d = cycle_type_distribution(G)
    assert d[(7,)] == Fraction(48, 168)
    assert d[(4, 2, 1)] == Fraction(42, 168)
    assert d[(3, 3, 1)] == Fraction(56, 168)
    assert d[(2, 2, 1, 1, 1)] == Fraction(21, 168)
    assert sum(d.values()) == 1


def test_match_rejects_cyclic_group():
    rep = census(bundled_polynomials()["p7"], 20000)
    v = match_census_to_group(rep, cycle_type_distribution(catalog.cyclic(7)), 0.02)
    assert not v and (2, 2, 1, 1, 1) in v.unsupported
    G = catalog.get_entry("psl_3_2").group
    assert match_census_to_group(rep, cycle_type_distribution(G), 0.05)


def test_report_json():
    rep = census(X2_PLUS_1, 30)
    d = rep.to_json(per_prime=True)
    assert d["skipped"] == {"2": RAMIFIED}
    assert d["patterns"]["5"] == [1, 1]
    assert set(d["frequencies"]) == {"{1,1}", "{2}"}


def test_p7_patterns_are_psl32_cycle_types():
    rep = census(bundled_polynomials()["p7"], 10**4)
    G = catalog.get_entry("psl_3_2").group
    assert set(rep.counts) <= set(cycle_type_distribution(G))
