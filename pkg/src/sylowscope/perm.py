"""Permutations of {1, ..., n}.

A :class:`Permutation` is an immutable tuple of 0-based images; the public
text forms (cycle notation, :meth:`Permutation.images`) are 1-based.

Composition is right-to-left: ``a * b`` is the map ``x -> a(b(x))``.
Conjugation follows the exponent convention ``U^g = g^-1 U g``.
"""

from __future__ import annotations

import re
from collections import Counter
from math import gcd
from typing import Iterable, Sequence

_tnew = tuple.__new__

CycleType = tuple  # sorted (descending) tuple of cycle lengths, fixed points included


class Permutation(tuple):
    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        p = _tnew(cls, images)
        if sorted(p) != list(range(len(p))):
            raise ValueError(f"not a permutation of 0..{len(p) - 1}: {list(p)}")
        return p

    @classmethod
    def _raw(cls, images: Iterable[int]) -> "Permutation":
        return _tnew(cls, images)

    @classmethod
    def from_images(cls, images: Sequence[int]) -> "Permutation":
        """Build from 1-based images, ``images[i-1] = p(i)``."""
        return cls(x - 1 for x in images)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        """Build from 1-based cycles, e.g. ``[(1, 2, 3), (4, 5)]``."""
        img = list(range(degree))
        seen = set()
        for cyc in cycles:
            for a in cyc:
                if not 1 <= a <= degree:
                    raise ValueError(f"point {a} outside 1..{degree}")
                if a in seen:
                    raise ValueError(f"point {a} repeated in cycles")
                seen.add(a)
            for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
                img[a - 1] = b - 1
        return cls._raw(img)

    @classmethod
    def parse(cls, text: str, degree: int) -> "Permutation":
        """Parse cycle notation such as ``"(1 2 3)(4 5)"`` or ``"()"``."""
        text = text.strip()
        if not re.fullmatch(r"\s*(\([\d\s,]*\)\s*)*", text):
            raise ValueError(f"bad cycle notation: {text!r}")
        cycles = []
        for body in re.findall(r"\(([^)]*)\)", text):
            pts = [int(t) for t in re.split(r"[\s,]+", body.strip()) if t]
            if len(pts) > 1:
                cycles.append(pts)
        return cls.from_cycles(cycles, degree)

    @property
    def degree(self) -> int:
        return len(self)

    def image(self, point: int) -> int:
        """1-based image of a 1-based point."""
        return self[point - 1] + 1

    def images(self) -> list[int]:
        return [x + 1 for x in self]

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(other) != len(self):
            raise ValueError(f"degree mismatch: {len(self)} vs {len(other)}")
        return _tnew(Permutation, map(self.__getitem__, other))

    def __invert__(self) -> "Permutation":
        return inverse(self)

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return inverse(self) ** (-k)
        result = identity(len(self))
        base = self
        while k:
            if k & 1:
                result = base * result
            base = base * base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, 1-based, each starting at its smallest point."""
        seen = [False] * len(self)
        out = []
        for i in range(len(self)):
            if seen[i] or self[i] == i:
                continue
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j + 1)
                j = self[j]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> CycleType:
        return cycle_type(self)

    def order(self) -> int:
        o = 1
        for c in cycle_type(self):
            o = o * c // gcd(o, c)
        return o

    def fixed_points(self) -> int:
        return sum(1 for i, x in enumerate(self) if i == x)

    def to_cycle_string(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __str__(self) -> str:
        return self.to_cycle_string()

    def __repr__(self) -> str:
        return f"Permutation.parse({self.to_cycle_string()!r}, {len(self)})"


def identity(n: int) -> Permutation:
    if n < 1:
        raise ValueError("degree must be at least 1")
    return _tnew(Permutation, range(n))


def compose(a: Permutation, b: Permutation) -> Permutation:
    """``a∘b``: apply ``b`` first, then ``a``."""
    return a * b


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return _tnew(Permutation, inv)


def conjugate(p: Permutation, g: Permutation) -> Permutation:
    """``p^g = g^-1 p g``."""
    return inverse(g) * p * g


def cycle_type(p: Sequence[int]) -> CycleType:
    n = len(p)
    seen = bytearray(n)
    parts = []
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = 1
            j = p[j]
            length += 1
        parts.append(length)
    parts.sort(reverse=True)
    return tuple(parts)


def cycle_type_counter(elements: Iterable[Sequence[int]]) -> Counter:
    return Counter(cycle_type(g) for g in elements)


def format_cycle_type(ct: CycleType) -> str:
    return "{" + ",".join(map(str, sorted(ct))) + "}"
