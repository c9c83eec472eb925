"""Arithmetic in GF(p^k) using a polynomial basis.

Elements are encoded as integers: the polynomial c_0 + c_1 x + ... + c_{k-1} x^{k-1}
corresponds to c_0 + c_1 p + ... + c_{k-1} p^{k-1}.  Integer order of the encoding is
the "coefficient-lex" order used whenever a smallest element is required.

Multiplication goes through exponent/logarithm tables built from the smallest
primitive element, so all operations are O(1) after construction.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

MAX_ORDER = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, k) with q = p**k, or None if q is not a prime power."""
    if q < 2:
        return None
    p = prime_factors(q)
    if len(p) != 1:
        return None
    p = p[0]
    k = 0
    while q > 1:
        q //= p
        k += 1
    return p, k


# -- polynomials over Z_p as low-to-high coefficient lists ------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _monic(degree: int, low: int, p: int) -> list[int]:
    """Monic polynomial of the given degree whose lower coefficients encode `low`."""
    coeffs = []
    for _ in range(degree):
        low, c = divmod(low, p)
        coeffs.append(c)
    return coeffs + [1]


def is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    k = len(poly) - 1
    if k < 1:
        return False
    for d in range(1, k // 2 + 1):
        for low in range(p ** d):
            if not _poly_mod(poly, _monic(d, low, p), p):
                return False
    return True


def smallest_irreducible(p: int, k: int) -> list[int]:
    for low in range(p ** k):
        cand = _monic(k, low, p)
        if is_irreducible(cand, p):
            return cand
    raise RuntimeError(f"no monic irreducible of degree {k} over GF({p})")


class Field:
    """The finite field GF(p**k).  Use :func:`make_field` to construct."""

    def __init__(self, p: int, k: int, modulus: list[int]):
        self.p = p
        self.k = k
        self.order = p ** k
        self.modulus = tuple(modulus)
        self._modlist = list(modulus)
        self._primitive = self._find_primitive()
        self._exp = [0] * (2 * (self.order - 1))
        self._log = [0] * self.order
        x = 1
        for e in range(self.order - 1):
            self._exp[e] = x
            self._log[x] = e
            x = self._slow_mul(x, self._primitive)
        for e in range(self.order - 1, 2 * (self.order - 1)):
            self._exp[e] = self._exp[e - (self.order - 1)]

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, Field) and (self.p, self.k, self.modulus) == (
            other.p, other.k, other.modulus)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    # encoding
    def coeffs(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.k):
            a, c = divmod(a, self.p)
            out.append(c)
        return tuple(out)

    def encode(self, coeffs) -> int:
        v = 0
        for c in reversed(list(coeffs)):
            v = v * self.p + c % self.p
        return v

    def elements(self) -> range:
        return range(self.order)

    def element(self, a: int) -> FieldElement:
        if not 0 <= a < self.order:
            raise ValueError(f"{a} is not an element of {self!r}")
        return FieldElement(self, a)

    # arithmetic on integer encodings
    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        return self.encode(x + y for x, y in zip(self.coeffs(a), self.coeffs(b)))

    def neg(self, a: int) -> int:
        if self.k == 1:
            return -a % self.p
        return self.encode(-x for x in self.coeffs(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.order - 1)]

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        n = self.order - 1
        order = n
        for q in prime_factors(n):
            while order % q == 0 and self.pow(a, order // q) == 1:
                order //= q
        return order

    def is_square(self, a: int) -> bool:
        """Euler's criterion; zero is excluded."""
        if a == 0 or self.p == 2:
            return a != 0
        return self._log[a] % 2 == 0

    # construction-time helpers (no tables yet)
    def _slow_mul(self, a: int, b: int) -> int:
        prod = _poly_mul(list(self.coeffs(a)), list(self.coeffs(b)), self.p)
        return self.encode(_poly_mod(prod, self._modlist, self.p))

    def _slow_pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._slow_mul(result, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return result

    def _find_primitive(self) -> int:
        n = self.order - 1
        qs = prime_factors(n)
        for a in range(1, self.order):
            if self._slow_pow(a, n) == 1 and all(self._slow_pow(a, n // q) != 1 for q in qs):
                return a
        raise RuntimeError("multiplicative group has no generator")


@dataclass(frozen=True)
class FieldElement:
    field: Field
    value: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.value)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other.value
        if isinstance(other, int):
            return other % self.field.p if self.field.k == 1 else self.field.element(other).value
        return NotImplemented

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self.field.inv(self._other(other))))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value}@{self.field!r}"


@dataclass(frozen=True)
class SquarePartition:
    squares: frozenset[int]
    nonsquares: frozenset[int]


@functools.lru_cache(maxsize=None)
def make_field(p: int, k: int = 1) -> Field:
    """Return GF(p**k) with the lexicographically smallest monic irreducible modulus."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError("extension degree must be at least 1")
    if p ** k > MAX_ORDER:
        raise ValueError(f"field order {p ** k} exceeds {MAX_ORDER}")
    return Field(p, k, smallest_irreducible(p, k))


def field_of_order(q: int) -> Field:
    pk = prime_power(q)
    if pk is None:
        raise ValueError(f"{q} is not a prime power")
    return make_field(*pk)


def square_partition(field: Field) -> SquarePartition:
    if field.p == 2:
        raise ValueError("even characteristic: every element is a square, no partition")
    squares = frozenset(field.mul(y, y) for y in range(1, field.order))
    nonsquares = frozenset(range(1, field.order)) - squares
    return SquarePartition(squares, nonsquares)


def primitive_element(field: Field) -> FieldElement:
    """Smallest element (integer encoding) of multiplicative order t-1."""
    return FieldElement(field, field._primitive)
