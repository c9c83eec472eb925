"""Exact rational matrices: generalized inverses, projectors, rank, Schur complements.

Everything is done over :class:`fractions.Fraction`.  Elimination-heavy routines scale
to a common integer denominator and use fraction-free (Bareiss) elimination, which
keeps the information-matrix computations fast enough for sampling studies.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

MAX_DIM = 512


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, float):
        raise TypeError("floating point entries are not accepted")
    return Fraction(x)


class RationalMatrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, entries: Iterable[Iterable], cols: int | None = None):
        e = tuple(tuple(_frac(x) for x in row) for row in entries)
        if cols is None:
            cols = len(e[0]) if e else 0
        if any(len(r) != cols for r in e):
            raise ValueError("ragged matrix")
        if len(e) > MAX_DIM or cols > MAX_DIM:
            raise ValueError(f"matrix dimension exceeds {MAX_DIM}")
        self.rows = len(e)
        self.cols = cols
        self._e = e

    # constructors
    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, r: int, c: int) -> RationalMatrix:
        return cls([[0] * c for _ in range(r)], c)

    @classmethod
    def ones(cls, r: int, c: int | None = None) -> RationalMatrix:
        c = r if c is None else c
        return cls([[1] * c for _ in range(r)], c)

    @classmethod
    def column(cls, values: Sequence) -> RationalMatrix:
        return cls([[v] for v in values], 1)

    @classmethod
    def diag(cls, values: Sequence) -> RationalMatrix:
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], n)

    # access
    def __getitem__(self, ij):
        i, j = ij
        return self._e[i][j]

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._e]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._e[i]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def T(self) -> RationalMatrix:
        return RationalMatrix(zip(*self._e), self.rows) if self.rows else RationalMatrix([], 0)

    def __eq__(self, other):
        if isinstance(other, RationalMatrix):
            return self.shape == other.shape and self._e == other._e
        return NotImplemented

    def __hash__(self):
        return hash(self._e)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self._e)
        return f"RationalMatrix([{body}])"

    # arithmetic
    def _check_same(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: RationalMatrix) -> RationalMatrix:
        self._check_same(other)
        return RationalMatrix(([a + b for a, b in zip(r, s)] for r, s in zip(self._e, other._e)), self.cols)

    def __sub__(self, other: RationalMatrix) -> RationalMatrix:
        self._check_same(other)
        return RationalMatrix(([a - b for a, b in zip(r, s)] for r, s in zip(self._e, other._e)), self.cols)

    def __neg__(self):
        return RationalMatrix(([-a for a in r] for r in self._e), self.cols)

    def __mul__(self, c) -> RationalMatrix:
        c = _frac(c)
        return RationalMatrix(([c * a for a in r] for r in self._e), self.cols)

    __rmul__ = __mul__

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        ocols = list(zip(*other._e)) if other.rows else [()] * other.cols
        out = []
        for r in self._e:
            nz = [(k, a) for k, a in enumerate(r) if a]
            out.append([sum((a * col[k] for k, a in nz), Fraction(0)) for col in ocols])
        return RationalMatrix(out, other.cols)

    def hstack(self, *others: RationalMatrix) -> RationalMatrix:
        mats = (self,) + others
        if len({m.rows for m in mats}) != 1:
            raise ValueError("row counts differ")
        rows = [sum((m._e[i] for m in mats), ()) for i in range(self.rows)]
        return RationalMatrix(rows, sum(m.cols for m in mats))

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        return sum((self._e[i][i] for i in range(self.rows)), Fraction(0))

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self._e[i][j] == self._e[j][i] for i in range(self.rows) for j in range(i))

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._e for x in r)

    def row_sums(self) -> list[Fraction]:
        return [sum(r, Fraction(0)) for r in self._e]

    def col_sums(self) -> list[Fraction]:
        return self.T.row_sums()

    def to_json(self) -> list[list[str]]:
        return [[f"{x.numerator}/{x.denominator}" for x in r] for r in self._e]

    @classmethod
    def from_json(cls, data) -> RationalMatrix:
        return cls([[Fraction(x) for x in r] for r in data])


def as_matrix(m) -> RationalMatrix:
    return m if isinstance(m, RationalMatrix) else RationalMatrix(m)


def _scaled_integer_rows(m: RationalMatrix) -> tuple[list[list[int]], int]:
    den = 1
    for r in m._e:
        for x in r:
            if x.denominator != 1:
                den = lcm(den, x.denominator)
    return [[int(x * den) for x in r] for r in m._e], den


def rref(m: RationalMatrix) -> tuple[RationalMatrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    a = m.tolist()
    piv_cols = []
    r = 0
    for c in range(m.cols):
        p = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        piv_cols.append(c)
        r += 1
        if r == m.rows:
            break
    return RationalMatrix(a, m.cols), piv_cols


def rank(m) -> int:
    """Exact rank by fraction-free elimination."""
    m = as_matrix(m)
    a, _ = _scaled_integer_rows(m)
    rows, cols = m.rows, m.cols
    r = 0
    prev = 1
    for c in range(cols):
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        for i in range(r + 1, rows):
            ai = a[i]
            f = ai[c]
            ar = a[r]
            for j in range(c + 1, cols):
                ai[j] = (piv * ai[j] - f * ar[j]) // prev
            ai[c] = 0
        prev = piv
        r += 1
        if r == rows:
            break
    return r


def inverse(m: RationalMatrix) -> RationalMatrix:
    n = m.rows
    if n != m.cols:
        raise ValueError("inverse of a non-square matrix")
    aug = m.hstack(RationalMatrix.identity(n))
    red, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return RationalMatrix((r[n:] for r in red.tolist()), n)


def moore_penrose(m: RationalMatrix) -> RationalMatrix:
    """Moore-Penrose inverse via the full-rank factorization M = B C."""
    red, piv = rref(m)
    r = len(piv)
    if r == 0:
        return RationalMatrix.zeros(m.cols, m.rows)
    c = RationalMatrix(red.tolist()[:r], m.cols)
    b = RationalMatrix(([row[j] for j in piv] for row in m.tolist()), r)
    return c.T @ inverse(c @ c.T) @ inverse(b.T @ b) @ b.T


def generalized_inverse(m) -> RationalMatrix:
    """Reflexive g-inverse G of a symmetric matrix (MGM = M and GMG = G)."""
    m = as_matrix(m)
    if not m.is_symmetric():
        raise ValueError("generalized_inverse expects a symmetric matrix")
    return moore_penrose(m)


def projector(m) -> RationalMatrix:
    """Orthogonal projector onto the column space of M."""
    m = as_matrix(m)
    if m.cols == 0:
        return RationalMatrix.zeros(m.rows, m.rows)
    return m @ generalized_inverse(m.T @ m) @ m.T


def orth_projector(m) -> RationalMatrix:
    """Projector onto the orthocomplement of the column space of M."""
    m = as_matrix(m)
    return RationalMatrix.identity(m.rows) - projector(m)


@dataclass(frozen=True)
class SymmetryReport:
    is_completely_symmetric: bool
    diagonal_value: Fraction | None = None
    offdiagonal_value: Fraction | None = None


def complete_symmetry(m) -> SymmetryReport:
    if not isinstance(m, RationalMatrix):
        m = RationalMatrix(m)
    n = m.rows
    if n != m.cols:
        raise ValueError("complete symmetry is defined for square matrices")
    if n == 0:
        return SymmetryReport(True, Fraction(0), Fraction(0))
    d = m[0, 0]
    off = m[0, 1] if n > 1 else Fraction(0)
    for i in range(n):
        for j in range(n):
            if m[i, j] != (d if i == j else off):
                return SymmetryReport(False)
    return SymmetryReport(True, d, off)


def is_nonneg_definite(m) -> bool:
    """Certify x'Mx >= 0 for all x via pivoted symmetric (LDL') elimination."""
    m = as_matrix(m)
    if not m.is_symmetric():
        return False
    a, _ = _scaled_integer_rows(m)
    n = m.rows
    alive = list(range(n))
    prev = 1
    while alive:
        p = next((i for i in alive if a[i][i] != 0), None)
        if p is None:
            # all remaining diagonal entries vanish: only the zero block is PSD
            return all(a[i][j] == 0 for i in alive for j in alive)
        piv = a[p][p]
        # every pivot is a ratio of consecutive principal minors, sign carries over
        if (piv > 0) != (prev > 0):
            return False
        alive.remove(p)
        ap = a[p]
        for i in alive:
            ai = a[i]
            f = ai[p]
            for j in alive:
                ai[j] = (piv * ai[j] - f * ap[j]) // prev
        prev = piv
    return True


def schur_complement(m, k: int) -> RationalMatrix:
    """Schur complement of the leading k x k block of a symmetric nonneg-definite M.

    Returns M22 - M21 M11^- M12, which is independent of the g-inverse chosen
    when M is nonneg-definite.  Elimination is fraction-free with diagonal pivoting;
    a vanishing diagonal pivot implies a vanishing row, so it is skipped.
    """
    m = as_matrix(m)
    a, den = _scaled_integer_rows(m)
    return schur_complement_scaled(a, k, den)


def schur_complement_scaled(a: list[list[int]], k: int, den: int = 1) -> RationalMatrix:
    """Schur complement of M = a / den for an integer matrix a (modified in place)."""
    n = len(a)
    alive = list(range(n))
    prev = 1
    for _ in range(k):
        p = next((i for i in alive if i < k and a[i][i] != 0), None)
        if p is None:
            break
        piv = a[p][p]
        alive.remove(p)
        ap = a[p]
        for i in alive:
            ai = a[i]
            f = ai[p]
            if f == 0:
                for j in alive:
                    ai[j] = piv * ai[j] // prev
            else:
                for j in alive:
                    ai[j] = (piv * ai[j] - f * ap[j]) // prev
        prev = piv
    tail = range(k, n)
    scale = prev * den
    return RationalMatrix(([Fraction(a[i][j], scale) for j in tail] for i in tail), n - k)


def schur_complement_integer(a: Sequence[Sequence[int]], k: int) -> RationalMatrix:
    """:func:`schur_complement` for an integer matrix given as nested lists."""
    return schur_complement_scaled([list(r) for r in a], k)
