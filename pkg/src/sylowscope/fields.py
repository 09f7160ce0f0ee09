"""Table-built finite fields of order at most 16.

Elements are the integers ``0..q-1``; for q = p^k an element encodes the
polynomial ``sum c_i x^i`` with base-p digits ``c_i``.
"""

from __future__ import annotations

from functools import lru_cache

from .numtheory import is_prime, prime_power

# modulus polynomials, constant term first
_MODULI = {
    4: (2, [1, 1, 1]),        # x^2 + x + 1
    8: (2, [1, 1, 0, 1]),     # x^3 + x + 1
    9: (3, [1, 0, 1]),        # x^2 + 1
    16: (2, [1, 1, 0, 0, 1]),  # x^4 + x + 1
}


class FiniteField:
    def __init__(self, q: int):
        if q > 16 or prime_power(q) is None:
            raise ValueError(f"unsupported field order {q}")
        self.q = q
        p, k = prime_power(q)
        self.p, self.k = p, k
        if k == 1:
            self.add_table = [[(a + b) % p for b in range(q)] for a in range(q)]
            self.mul_table = [[(a * b) % p for b in range(q)] for a in range(q)]
        else:
            if q not in _MODULI:
                raise ValueError(f"no modulus recorded for q={q}")
            self.add_table, self.mul_table = _extension_tables(p, k, _MODULI[q][1])
        self.neg_table = [self.add_table[a].index(0) for a in range(q)]
        self.inv_table = [None] + [self.mul_table[a].index(1) for a in range(1, q)]
        self.primitive = self._find_primitive()
        self._check_axioms()

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.inv_table[a]

    def elements(self) -> range:
        return range(self.q)

    def additive_basis(self) -> list[int]:
        """``1, x, ..., x^(k-1)``: generates the additive group."""
        return [self.p**i for i in range(self.k)]

    def _find_primitive(self) -> int:
        for a in range(1, self.q):
            x, n = a, 1
            while x != 1:
                x = self.mul_table[x][a]
                n += 1
            if n == self.q - 1:
                return a
        raise ArithmeticError("no primitive element")  # unreachable for a field

    def _check_axioms(self) -> None:
        A, M, q = self.add_table, self.mul_table, self.q
        for a in range(q):
            if A[a][0] != a or M[a][1] != a:
                raise ArithmeticError("identity law fails")
            for b in range(q):
                if A[a][b] != A[b][a] or M[a][b] != M[b][a]:
                    raise ArithmeticError("commutativity fails")
                for c in range(q):
                    if A[A[a][b]][c] != A[a][A[b][c]]:
                        raise ArithmeticError("additive associativity fails")
                    if M[M[a][b]][c] != M[a][M[b][c]]:
                        raise ArithmeticError("multiplicative associativity fails")
                    if M[a][A[b][c]] != A[M[a][b]][M[a][c]]:
                        raise ArithmeticError("distributivity fails")
        if any(self.inv_table[a] is None for a in range(1, q)):
            raise ArithmeticError("nonzero element without inverse")

    def __repr__(self) -> str:
        return f"GF({self.q})"


def _digits(a: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        out.append(a % p)
        a //= p
    return out


def _undigits(ds: list[int], p: int) -> int:
    return sum(d * p**i for i, d in enumerate(ds))


def _extension_tables(p: int, k: int, modulus: list[int]):
    q = p**k
    add = [[_undigits([(x + y) % p for x, y in zip(_digits(a, p, k), _digits(b, p, k))], p)
            for b in range(q)] for a in range(q)]
    mul = [[0] * q for _ in range(q)]
    for a in range(q):
        da = _digits(a, p, k)
        for b in range(q):
            db = _digits(b, p, k)
            prod = [0] * (2 * k - 1)
            for i, x in enumerate(da):
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
            for d in range(2 * k - 2, k - 1, -1):
                c = prod[d]
                if c:
                    for i, m in enumerate(modulus):
                        prod[d - k + i] = (prod[d - k + i] - c * m) % p
            mul[a][b] = _undigits(prod[:k], p)
    return add, mul


@lru_cache(maxsize=None)
def gf(q: int) -> FiniteField:
    return FiniteField(q)


def is_field_order(q: int) -> bool:
    return q <= 16 and (is_prime(q) or q in _MODULI)
