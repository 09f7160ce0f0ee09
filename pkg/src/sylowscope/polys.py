"""Integer polynomials and dense polynomial arithmetic over F_p.

Polynomials are lists of coefficients, constant term first.  Over F_p the
coefficients live in ``range(p)`` and the list carries no trailing zeros
(the zero polynomial is ``[]``).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from typing import Sequence

INT64_MAX = 2**63 - 1


# ---------------------------------------------------------------------------
# F_p[x]


def trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def deg(a: Sequence[int]) -> int:
    return len(a) - 1


def padd(a, b, p):
    n = max(len(a), len(b))
    return trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
                 for i in range(n)])


def psub(a, b, p):
    n = max(len(a), len(b))
    return trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
                 for i in range(n)])


def pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim([c % p for c in out])


def pdivmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - db, 0)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] % p
        if c:
            c = c * inv % p
            q[k - db] = c
            for i in range(db + 1):
                a[k - db + i] -= c * b[i]
    return trim(q), trim([x % p for x in a[:db]])


def pmod(a, b, p):
    """Remainder of a modulo a monic b (fast path) or any nonzero b."""
    if b[-1] != 1:
        return pdivmod(a, b, p)[1]
    a = list(a)
    db = len(b) - 1
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] % p
        if c:
            off = k - db
            for i in range(db):
                a[off + i] -= c * b[i]
    return trim([x % p for x in a[:db]])


def monic(a, p):
    if not a:
        return []
    inv = pow(a[-1], p - 2, p)
    return [x * inv % p for x in a]


def pgcd(a, b, p):
    a, b = trim(list(a)), trim(list(b))
    while b:
        a, b = b, pdivmod(a, b, p)[1]
    return monic(a, p)


def derivative(a, p):
    return trim([(i * a[i]) % p for i in range(1, len(a))])


def powmod(base, e: int, f, p):
    result = [1]
    b = pmod(base, f, p)
    while e:
        if e & 1:
            result = pmod(pmul(result, b, p), f, p)
        e >>= 1
        if e:
            b = pmod(pmul(b, b, p), f, p)
    return result


def is_squarefree_mod_p(a: Sequence[int], p: int) -> bool:
    if not a:
        raise ValueError("zero polynomial")
    return deg(pgcd(a, derivative(a, p), p)) == 0


def _frobenius_matrix(f, p):
    """Rows x^(i p) mod f for i < deg f."""
    n = len(f) - 1
    xp = powmod([0, 1], p, f, p)
    rows = [[1]]
    for _ in range(1, n):
        rows.append(pmod(pmul(rows[-1], xp, p), f, p))
    return rows


def _apply_frobenius(h, rows, n, p):
    out = [0] * n
    for c, row in zip(h, rows):
        if c:
            for j, r in enumerate(row):
                out[j] += c * r
    return trim([x % p for x in out])


def degree_pattern(a: Sequence[int], p: int) -> tuple[int, ...]:
    """Irreducible factor degrees (descending) of a squarefree polynomial over F_p.

    Distinct-degree factorization: the degree-d part of g is
    gcd(g, x^(p^d) - x), with x^(p^d) mod f obtained by applying the
    Frobenius matrix to x^(p^(d-1)).
    """
    f = monic(trim(list(a)), p)
    n = len(f) - 1
    if n < 1:
        return ()
    if not is_squarefree_mod_p(f, p):
        raise ValueError("degree_pattern needs a squarefree polynomial")
    rows = _frobenius_matrix(f, p)
    parts: list[int] = []
    g = f
    h = [0, 1]
    d = 0
    while deg(g) >= 2 * (d + 1):
        d += 1
        h = _apply_frobenius(h, rows, n, p)
        c = pgcd(g, psub(h, [0, 1], p), p)
        k = deg(c)
        if k > 0:
            parts.extend([d] * (k // d))
            g = pdivmod(g, c, p)[0]
    if deg(g) > 0:
        parts.append(deg(g))
    return tuple(sorted(parts, reverse=True))


# ---------------------------------------------------------------------------
# Integer polynomials


@dataclass(frozen=True)
class IntegerPolynomial:
    name: str
    coefficients: tuple[int, ...]

    def __post_init__(self):
        cs = tuple(int(c) for c in self.coefficients)
        while cs and cs[-1] == 0:
            cs = cs[:-1]
        if not cs:
            raise ValueError("zero polynomial")
        for c in cs:
            if abs(c) > INT64_MAX:
                raise ValueError(f"{self.name}: coefficient {c} is not 64-bit representable")
        object.__setattr__(self, "coefficients", cs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> int:
        return self.coefficients[-1]

    def __str__(self) -> str:
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            mag = abs(c)
            body = f"{mag}{mono}" if (mag != 1 or i == 0) else mono
            terms.append(("-" if c < 0 else "+") + body)
        s = "".join(terms)
        return s[1:] if s.startswith("+") else s

    def to_json(self) -> dict:
        return {"name": self.name, "coefficients": list(self.coefficients)}


def reduce_mod_p(f: IntegerPolynomial | Sequence[int], p: int) -> list[int]:
    cs = f.coefficients if isinstance(f, IntegerPolynomial) else f
    return trim([c % p for c in cs])


def _int_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def specialize_family(spec: dict) -> list[int]:
    """constant_part + value * scale * prod(factor^power), exactly."""
    prod = [1]
    for fac in spec["parameter_part"]["factors"]:
        for _ in range(fac["power"]):
            prod = _int_mul(prod, fac["coefficients"])
    k = spec["value"] * spec["parameter_part"]["scale"]
    base = list(spec["constant_part"])
    n = max(len(base), len(prod))
    base += [0] * (n - len(base))
    for i, c in enumerate(prod):
        base[i] += k * c
    return base


def parse_polynomial_records(records: list[dict]) -> dict[str, IntegerPolynomial]:
    out = {}
    for rec in records:
        name = rec["name"]
        if "coefficients" in rec:
            cs = rec["coefficients"]
        elif "family" in rec:
            cs = specialize_family(rec["family"])
        else:
            raise ValueError(f"polynomial record {name!r} has no coefficients")
        out[name] = IntegerPolynomial(name, tuple(cs))
    return out


def bundled_polynomials() -> dict[str, IntegerPolynomial]:
    text = resources.files("sylowscope").joinpath("data/polynomials.json").read_text()
    return parse_polynomial_records(json.loads(text))


def load_polynomials(path: str) -> dict[str, IntegerPolynomial]:
    with open(path) as fh:
        data = json.load(fh)
    if isinstance(data, dict):
        data = [data]
    return parse_polynomial_records(data)


def get_polynomial(spec: str) -> IntegerPolynomial:
    """A bundled name (e.g. ``p7``) or a path to a JSON polynomial file."""
    bundled = bundled_polynomials()
    if spec in bundled:
        return bundled[spec]
    polys = load_polynomials(spec)
    if len(polys) != 1:
        raise ValueError(f"{spec} holds {len(polys)} polynomials; expected one")
    return next(iter(polys.values()))
