"""Permutation groups given by generators.

The stabilizer chain is built by the deterministic Schreier-Sims algorithm:
every Schreier generator of every level is sifted, in a fixed order, until
each level is complete.  Order, membership, element listing and uniform
sampling are all read off the chain.
"""

from __future__ import annotations

import itertools
import random
from math import factorial
from typing import Iterable, Sequence

from .config import get_config
from .errors import CapExceededError
from .perm import Permutation, identity, inverse

_tnew = tuple.__new__


def _mul(a, b):
    return _tnew(Permutation, map(a.__getitem__, b))


class _Level:
    """One level of a stabilizer chain: base point, generators, transversal."""

    __slots__ = ("base", "gens", "trans", "tinv")

    def __init__(self, base: int, degree: int, gens: list | None = None):
        self.base = base
        self.gens = gens or []
        e = _tnew(Permutation, range(degree))
        self.trans: dict[int, Permutation] = {base: e}
        self.tinv: dict[int, Permutation] = {base: e}
        self.rebuild()

    def reset(self, gens: list) -> None:
        e = self.trans[self.base]
        self.gens = gens
        self.trans = {self.base: e}
        self.tinv = {self.base: e}
        self.rebuild()

    def rebuild(self) -> None:
        """Extend the orbit and transversal to closure under ``gens``."""
        trans = self.trans
        queue = list(trans)
        i = 0
        while i < len(queue):
            pt = queue[i]
            i += 1
            u = trans[pt]
            for g in self.gens:
                q = g[pt]
                if q not in trans:
                    v = _mul(g, u)
                    trans[q] = v
                    self.tinv[q] = inverse(v)
                    queue.append(q)


class StabilizerChain:
    """Base and strong generating set with explicit transversals."""

    def __init__(self, degree: int, generators: Sequence[Permutation]):
        self.degree = degree
        self.levels: list[_Level] = []
        gens = [g for g in generators if not g.is_identity()]
        if gens:
            self._schreier_sims(gens)

    @property
    def base(self) -> list[int]:
        return [lv.base for lv in self.levels]

    @property
    def strong_generators(self) -> list[Permutation]:
        seen = {}
        for lv in self.levels:
            for g in lv.gens:
                seen.setdefault(g, None)
        return list(seen)

    def orbit_lengths(self) -> list[int]:
        return [len(lv.trans) for lv in self.levels]

    def order(self) -> int:
        o = 1
        for lv in self.levels:
            o *= len(lv.trans)
        return o

    def strip(self, g: Permutation, start: int = 0) -> tuple[Permutation, int]:
        """Sift ``g`` from level ``start``; return the residue and the stopping level."""
        levels = self.levels
        for k in range(start, len(levels)):
            lv = levels[k]
            x = g[lv.base]
            t = lv.tinv.get(x)
            if t is None:
                return g, k
            g = _mul(t, g)
        return g, len(levels)

    def contains(self, g: Permutation) -> bool:
        if len(g) != self.degree:
            return False
        h, k = self.strip(g)
        return k == len(self.levels) and h.is_identity()

    def _schreier_sims(self, gens: list[Permutation]) -> None:
        n = self.degree
        levels = self.levels
        for g in gens:
            if not any(g[b] != b for b in self.base):
                b = next(i for i in range(n) if g[i] != i)
                levels.append(_Level(b, n))
        # generators fixing base[:i] belong to level i
        for i, lv in enumerate(levels):
            prefix = [l.base for l in levels[:i]]
            lv.reset([g for g in gens if all(g[b] == b for b in prefix)])

        i = len(levels) - 1
        while i >= 0:
            lv = levels[i]
            jumped = False
            for beta in list(lv.trans):
                u_beta = lv.trans[beta]
                for s in list(lv.gens):
                    gb = s[beta]
                    sg = _mul(lv.tinv[gb], _mul(s, u_beta))
                    h, j = self.strip(sg, i + 1)
                    if j < len(levels) or not h.is_identity():
                        if j == len(levels):
                            b = next(x for x in range(n) if h[x] != x)
                            levels.append(_Level(b, n))
                        for l in range(i + 1, j + 1):
                            levels[l].gens.append(h)
                            levels[l].rebuild()
                        i = j
                        jumped = True
                        break
                if jumped:
                    break
            if not jumped:
                i -= 1

    def iter_elements(self):
        """Every element once, as products of transversal elements (unsorted)."""
        if not self.levels:
            yield _tnew(Permutation, range(self.degree))
            return
        reps = [list(lv.trans.values()) for lv in self.levels]
        for combo in itertools.product(*reps):
            g = combo[-1]
            for u in reversed(combo[:-1]):
                g = _mul(u, g)
            yield g

    def random_element(self, rng: random.Random) -> Permutation:
        g = _tnew(Permutation, range(self.degree))
        for lv in self.levels:
            pts = sorted(lv.trans)
            g = _mul(g, lv.trans[pts[rng.randrange(len(pts))]])
        return g


class PermutationGroup:
    """A group of permutations of {1..n} given by generators.

    Immutable after construction; the chain is built eagerly, caches of the
    element list are filled on first request.
    """

    def __init__(self, generators: Iterable[Permutation], degree: int | None = None,
                 name: str | None = None):
        gens = [g if isinstance(g, Permutation) else Permutation(g) for g in generators]
        if degree is None:
            if not gens:
                raise ValueError("degree required when there are no generators")
            degree = len(gens[0])
        if degree < 1:
            raise ValueError("degree must be at least 1")
        for g in gens:
            if len(g) != degree:
                raise ValueError(f"generator {g} has degree {len(g)}, expected {degree}")
        self.degree = degree
        self.generators: tuple[Permutation, ...] = tuple(gens)
        self.name = name
        self.chain = StabilizerChain(degree, self.generators)
        self._order = self.chain.order()
        self._elements: list[Permutation] | None = None
        self._element_set: frozenset | None = None

    def __repr__(self) -> str:
        label = self.name or "PermutationGroup"
        return f"<{label}: degree {self.degree}, order {self._order}>"

    def order(self) -> int:
        return self._order

    def identity(self) -> Permutation:
        return identity(self.degree)

    def contains(self, g: Permutation) -> bool:
        return self.chain.contains(g)

    def __contains__(self, g) -> bool:
        return self.contains(g)

    def elements(self, cap: int | None = None) -> list[Permutation]:
        """All elements in image-array lexicographic order."""
        if self._elements is None:
            cap = get_config().enumeration_cap if cap is None else cap
            if self._order > cap:
                raise CapExceededError(
                    f"group of order {self._order} exceeds enumeration cap {cap}")
            self._elements = sorted(self.chain.iter_elements())
        return self._elements

    def element_set(self, cap: int | None = None) -> frozenset:
        if self._element_set is None:
            self._element_set = frozenset(self.elements(cap))
        return self._element_set

    def orbit(self, point: int) -> set[int]:
        """Orbit of a 1-based point, as a set of 1-based points."""
        if not 1 <= point <= self.degree:
            raise ValueError(f"point {point} outside 1..{self.degree}")
        return {x + 1 for x in _orbit0(self.generators, point - 1)}

    def orbits(self) -> list[list[int]]:
        seen: set[int] = set()
        out = []
        for i in range(self.degree):
            if i not in seen:
                orb = _orbit0(self.generators, i)
                seen |= orb
                out.append(sorted(x + 1 for x in orb))
        return out

    def is_transitive(self) -> bool:
        return len(_orbit0(self.generators, 0)) == self.degree

    def is_symmetric(self) -> bool:
        return self._order == factorial(self.degree)

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(_mul(a, b) == _mul(b, a) for a in gens for b in gens)

    def random_element(self, seed: int | random.Random | None = None) -> Permutation:
        """Uniform random element; deterministic for a fixed integer seed."""
        rng = seed if isinstance(seed, random.Random) else random.Random(seed)
        return self.chain.random_element(rng)

    def is_subgroup_of(self, other: "PermutationGroup") -> bool:
        return self.degree == other.degree and all(other.contains(g) for g in self.generators)


def _orbit0(gens: Sequence[Permutation], point: int) -> set[int]:
    orb = {point}
    stack = [point]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y not in orb:
                orb.add(y)
                stack.append(y)
    return orb


def group_from_generators(gens: Sequence[Permutation], degree: int | None = None,
                          name: str | None = None) -> PermutationGroup:
    return PermutationGroup(gens, degree=degree, name=name)


def closure_elements(gens: Sequence[Permutation], degree: int) -> set[Permutation]:
    """Plain breadth-first closure; the reference oracle for chain orders."""
    e = identity(degree)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = _mul(g, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen
