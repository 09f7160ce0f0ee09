"""Splitting patterns of integer polynomials modulo primes.

At a prime p that does not divide the leading coefficient and where f stays
squarefree, the degrees of the irreducible factors of f mod p are the cycle
type of Frobenius acting on the roots.  A census collects these patterns and
compares their frequencies with the cycle-type distribution of a candidate
Galois group.  This is consistency evidence, not a determination.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .config import get_config
from .group import PermutationGroup
from .numtheory import primes_up_to
from .perm import cycle_type, format_cycle_type
from .polys import IntegerPolynomial, degree_pattern, is_squarefree_mod_p, reduce_mod_p
from .subgroups import conjugacy_classes

RAMIFIED = "ramified-skipped"
LEADING_DROP = "leading-drop-skipped"


def prime_status(f: IntegerPolynomial, p: int) -> tuple[str, tuple[int, ...] | None]:
    fbar = reduce_mod_p(f, p)
    if len(fbar) - 1 < f.degree:
        return LEADING_DROP, None
    if not is_squarefree_mod_p(fbar, p):
        return RAMIFIED, None
    return "ok", degree_pattern(fbar, p)


@dataclass
class CensusReport:
    polynomial: str
    degree: int
    pmax: int
    patterns: dict[int, tuple[int, ...]] = field(default_factory=dict)
    skipped: dict[int, str] = field(default_factory=dict)

    @property
    def counts(self) -> Counter:
        return Counter(self.patterns.values())

    @property
    def total(self) -> int:
        return len(self.patterns)

    def frequencies(self) -> dict[tuple[int, ...], float]:
        n = self.total
        return {t: c / n for t, c in self.counts.items()} if n else {}

    def to_json(self, per_prime: bool = False) -> dict:
        freq = self.frequencies()
        d = {
            "polynomial": self.polynomial,
            "degree": self.degree,
            "pmax": self.pmax,
            "unramified_primes": self.total,
            "skipped": {str(p): why for p, why in sorted(self.skipped.items())},
            "frequencies": {format_cycle_type(t): round(freq[t], 6)
                            for t in sorted(freq, reverse=True)},
            "counts": {format_cycle_type(t): c for t, c in sorted(self.counts.items(),
                                                                   reverse=True)},
            "note": "mod-p splitting statistics; consistency evidence only",
        }
        if per_prime:
            d["patterns"] = {str(p): list(t) for p, t in sorted(self.patterns.items())}
        return d


def census(f: IntegerPolynomial, pmax: int | None = None) -> CensusReport:
    pmax = get_config().pmax if pmax is None else pmax
    if pmax > 10**7:
        raise ValueError("pmax above 10^7 is not supported")
    rep = CensusReport(f.name, f.degree, pmax)
    for p in primes_up_to(pmax):
        status, pattern = prime_status(f, p)
        if pattern is None:
            rep.skipped[p] = status
        else:
            rep.patterns[p] = pattern
    return rep


@dataclass
class CensusComparison:
    equal: bool
    first_disagreement: int | None
    primes_compared: int
    reason: str = ""

    def __bool__(self) -> bool:
        return self.equal

    def to_json(self) -> dict:
        return {"equal": self.equal, "first_disagreement": self.first_disagreement,
                "primes_compared": self.primes_compared, "reason": self.reason}


def compare_reports(a: CensusReport, b: CensusReport) -> CensusComparison:
    if a.degree != b.degree:
        first = min(list(a.patterns) + list(a.skipped) + list(b.patterns) + list(b.skipped),
                    default=None)
        return CensusComparison(False, first, 0, "degrees differ")
    n = 0
    for p in sorted(set(a.patterns) & set(b.patterns)):
        n += 1
        if a.patterns[p] != b.patterns[p]:
            return CensusComparison(False, p, n, "patterns differ")
    return CensusComparison(True, None, n)


def compare_census(f: IntegerPolynomial, g: IntegerPolynomial,
                   pmax: int | None = None) -> CensusComparison:
    """Equal degree patterns at every prime where both are unramified?"""
    return compare_reports(census(f, pmax), census(g, pmax))


def cycle_type_distribution(G: PermutationGroup) -> dict[tuple[int, ...], Fraction]:
    """Proportion of elements of G (in its given action) with each cycle type."""
    out: Counter = Counter()
    for c in conjugacy_classes(G):
        out[cycle_type(c.representative)] += c.size
    n = G.order()
    return {t: Fraction(k, n) for t, k in sorted(out.items(), reverse=True)}


@dataclass
class MatchVerdict:
    passed: bool
    unsupported: list[tuple[int, ...]]
    max_deviation: float
    tolerance: float
    rows: list[dict]

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> dict:
        return {"verdict": "PASS" if self.passed else "FAIL",
                "unsupported_patterns": [format_cycle_type(t) for t in self.unsupported],
                "max_deviation": round(self.max_deviation, 6),
                "tolerance": self.tolerance, "rows": self.rows}


def match_census_to_group(report: CensusReport, dist: dict, tol: float | None = None
                          ) -> MatchVerdict:
    """PASS iff every observed pattern is a cycle type of the group and every
    observed frequency is within ``tol`` of the group proportion."""
    tol = get_config().tolerance if tol is None else tol
    if report.total == 0:
        raise ValueError("empty census report")
    freq = report.frequencies()
    unsupported = sorted((t for t in freq if t not in dist), reverse=True)
    rows = []
    worst = 0.0
    for t in sorted(set(freq) | set(dist), reverse=True):
        obs = freq.get(t, 0.0)
        exp = float(dist.get(t, 0))
        dev = abs(obs - exp)
        worst = max(worst, dev)
        rows.append({"pattern": format_cycle_type(t), "observed": round(obs, 6),
                     "expected": round(exp, 6)})
    ok = not unsupported and worst <= tol
    return MatchVerdict(ok, unsupported, worst, tol, rows)
