"""Explicit CWBD constructions and the adjacency matrices behind them.

Column-order conventions (so that constructed designs match the published tables
cell for cell): prime multiplier designs list subjects by ascending multiplier;
belle expansions list s ascending, then translate i ascending.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd, isqrt

from .design import Design
from .finite_field import (Field, FieldElement, field_of_order, is_prime, make_field,
                           prime_factors, primitive_element, square_partition)


class SearchBudgetExceeded(RuntimeError):
    """A bounded search hit its node cap before finishing."""

    def __init__(self, nodes: int, what: str = "search"):
        super().__init__(f"{what} exceeded budget of {nodes} nodes")
        self.nodes = nodes


DEFAULT_BUDGET = 10 ** 9


def _require_type1_prime(t: int):
    if not is_prime(t):
        raise ValueError(f"t must be prime (got {t})")
    if t % 4 != 3:
        raise ValueError(f"t must be congruent to 3 mod 4 (got {t})")
    if t == 3:
        raise ValueError("t = 3 gives n = 1, which is disconnected")


def construct_type1(t: int) -> Design:
    """d(j, s) = j*s mod t, one subject per non-zero square s."""
    _require_type1_prime(t)
    squares = sorted(square_partition(make_field(t)).squares)
    return Design.from_columns(t, [[j * s % t for j in range(t)] for s in squares])


# -- belle sequences ---------------------------------------------------------

@dataclass(frozen=True)
class BelleSequence:
    field: Field
    seq: tuple[int, ...]
    delta: tuple[int, ...]
    fS: int
    fN: int

    @property
    def is_belle(self) -> bool:
        t = self.field.order
        return len(set(self.seq)) == t == len(self.seq) and abs(self.fS - self.fN) == 1


def belle_sequence(field: Field, seq) -> BelleSequence:
    """Wrap a sequence of field elements with its circular differences and counts."""
    seq = tuple(int(x) for x in seq)
    delta = tuple(field.sub(seq[(i + 1) % len(seq)], seq[i]) for i in range(len(seq)))
    part = square_partition(field)
    return BelleSequence(field, seq, delta,
                         sum(x in part.squares for x in delta),
                         sum(x in part.nonsquares for x in delta))


def belle_from_primitive(field: Field, x: FieldElement | int | None = None) -> BelleSequence:
    """(1, x, x^2, ..., x^(t-2)) with the leading (1, x) replaced by (x, 1, 0)."""
    t = field.order
    if t % 4 != 3:
        raise ValueError(f"field order must be congruent to 3 mod 4 (got {t})")
    if t == 3:
        raise ValueError("no belle substitution for t = 3")
    x = primitive_element(field).value if x is None else int(x)
    if x == 0 or field.multiplicative_order(x) != t - 1:
        raise ValueError(f"{x} is not a primitive element of {field!r}")
    psi = [field.pow(x, e) for e in range(t - 1)]
    b = belle_sequence(field, [x, 1, 0] + psi[2:])
    assert b.is_belle
    return b


def expand_belle(b: BelleSequence) -> Design:
    """Subjects s*phi + i for s in the squares (ascending) and i in GF(t) (ascending)."""
    if not b.is_belle:
        raise ValueError("sequence is not belle")
    f = b.field
    cols = []
    for s in sorted(square_partition(f).squares):
        base = [f.mul(s, v) for v in b.seq]
        for i in range(f.order):
            cols.append([f.add(v, i) for v in base])
    return Design.from_columns(f.order, cols)


# -- difference sets ---------------------------------------------------------

@dataclass(frozen=True)
class DifferenceSet:
    t: int
    elements: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.elements)

    @property
    def lambda_ds(self) -> int:
        return self.k * (self.k - 1) // (self.t - 1)

    def differences(self) -> list[int]:
        c = [0] * self.t
        for x in self.elements:
            for y in self.elements:
                if x != y:
                    c[(x - y) % self.t] += 1
        return c

    def is_valid(self) -> bool:
        c = self.differences()
        return len(set(c[1:])) <= 1 and len(set(self.elements)) == self.k

    def translate(self, i: int) -> DifferenceSet:
        return DifferenceSet(self.t, tuple(sorted((x + i) % self.t for x in self.elements)))

    def complement(self) -> DifferenceSet:
        s = set(self.elements)
        return DifferenceSet(self.t, tuple(x for x in range(self.t) if x not in s))

    def canonical(self) -> DifferenceSet:
        """Lexicographically smallest translate."""
        return min((self.translate(i) for i in range(self.t)), key=lambda d: d.elements)

    def zero_free(self) -> DifferenceSet:
        """Smallest translate avoiding 0 whose elements are all coprime to t, else avoiding 0."""
        cands = [self.translate(i) for i in range(self.t)]
        cands = sorted((c for c in cands if 0 not in c.elements), key=lambda d: d.elements)
        coprime = [c for c in cands if all(gcd(x, self.t) == 1 for x in c.elements)]
        return (coprime or cands)[0]


def construct_type2_ds(t: int, P) -> Design:
    """d(i, j) = i*j mod t, one subject per element j of the difference set."""
    elems = sorted(int(x) % t for x in (P.elements if isinstance(P, DifferenceSet) else P))
    if 0 in elems:
        raise ValueError("difference set must not contain 0")
    bad = [x for x in elems if gcd(x, t) != 1]
    if bad:
        raise ValueError(f"elements {bad} are not coprime to t={t}")
    if not DifferenceSet(t, tuple(elems)).is_valid():
        raise ValueError(f"{elems} is not a difference set in Z_{t}")
    return Design.from_columns(t, [[i * j % t for i in range(t)] for j in elems])


def _ds_branch(t: int, k: int, lam: int, prefix: tuple[int, ...], budget: int):
    """All k-subsets of Z_t starting with `prefix` (sorted) with every difference <= lam."""
    counts = [0] * t
    chosen = list(prefix)
    for a in range(len(chosen)):
        for b in range(a):
            x, y = chosen[a], chosen[b]
            counts[(x - y) % t] += 1
            counts[(y - x) % t] += 1
            if counts[(x - y) % t] > lam or counts[(y - x) % t] > lam:
                return [], 0
    found = []
    nodes = 0

    def rec(start):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded(budget, "difference-set search")
        if len(chosen) == k:
            found.append(tuple(chosen))
            return
        for x in range(start, t - (k - len(chosen)) + 1):
            touched = []
            ok = True
            for y in chosen:
                for dd in ((x - y) % t, (y - x) % t):
                    counts[dd] += 1
                    touched.append(dd)
                    if counts[dd] > lam:
                        ok = False
                if not ok:
                    break
            if ok:
                chosen.append(x)
                rec(x + 1)
                chosen.pop()
            for dd in touched:
                counts[dd] -= 1

    rec(chosen[-1] + 1)
    return found, nodes


def find_difference_sets(t: int, k: int, budget: int = DEFAULT_BUDGET,
                         workers: int = 1) -> list[DifferenceSet]:
    """Every difference set of size k in Z_t, one canonical representative per translation orbit.

    Exhaustive: each orbit has a translate containing 0, so only sets containing 0 are
    enumerated.  For k > t/2 the complementary size is searched and complemented.
    """
    if t < 2 or not 1 <= k <= t:
        raise ValueError(f"invalid parameters t={t}, k={k}")
    if (k * (k - 1)) % (t - 1):
        raise ValueError(f"t-1 = {t - 1} does not divide k(k-1) = {k * (k - 1)}")
    if 2 * k > t:
        return sorted({d.complement().canonical() for d in find_difference_sets(t, t - k, budget, workers)},
                      key=lambda d: d.elements)
    if k <= 1:
        return [DifferenceSet(t, tuple(range(k)))]
    lam = k * (k - 1) // (t - 1)
    prefixes = [(0, x) for x in range(1, t - k + 2)]
    jobs = [(t, k, lam, p, budget) for p in prefixes]
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            results = list(ex.map(_ds_job, jobs))
    else:
        results = [_ds_job(j) for j in jobs]
    if sum(n for _, n in results) > budget:
        raise SearchBudgetExceeded(budget, "difference-set search")
    orbits = {DifferenceSet(t, s).canonical() for found, _ in results for s in found}
    return sorted(orbits, key=lambda d: d.elements)


def _ds_job(args):
    return _ds_branch(*args)


# -- Bruck-Ryser-Chowla --------------------------------------------------------

FEASIBLE_EVEN = "feasible_even_case"
INFEASIBLE = "infeasible"
PASSES = "passes"


@dataclass(frozen=True)
class BRCResult:
    status: str
    lambda_ds: int
    reason: str

    def __str__(self):
        return f"{self.status} ({self.reason})"


def squarefree_part(n: int) -> int:
    sign = -1 if n < 0 else 1
    n = abs(n)
    out = 1
    for p in prime_factors(n):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e % 2:
            out *= p
    return sign * out


def _is_qr_mod(a: int, m: int) -> bool:
    """Whether x^2 = a (mod m) has a solution, for squarefree m >= 1."""
    m = abs(m)
    if m == 1:
        return True
    for p in prime_factors(m):
        r = a % p
        if r and p > 2 and pow(r, (p - 1) // 2, p) != 1:
            return False
    return True


def legendre_solvable(a: int, b: int, c: int) -> bool:
    """Nontrivial integer solution of a x^2 + b y^2 + c z^2 = 0 (a, b, c non-zero)?"""
    if 0 in (a, b, c):
        raise ValueError("coefficients must be non-zero")
    v = [squarefree_part(a), squarefree_part(b), squarefree_part(c)]
    # a common factor g of two coefficients moves onto the third: the product strictly drops
    changed = True
    while changed:
        changed = False
        for i, j, l in ((0, 1, 2), (1, 2, 0), (0, 2, 1)):
            g = gcd(v[i], v[j])
            if g > 1:
                v[i] //= g
                v[j] //= g
                v[l] = squarefree_part(v[l] * g)
                changed = True
    a, b, c = v
    if (a > 0) == (b > 0) == (c > 0):
        return False
    return _is_qr_mod(-b * c, a) and _is_qr_mod(-c * a, b) and _is_qr_mod(-a * b, c)


def brc_check(t: int, k: int) -> BRCResult:
    """Bruck-Ryser-Chowla test for a symmetric (t, k, lambda) design."""
    if t < 3 or not 1 <= k < t:
        raise ValueError(f"need t >= 3 and 1 <= k < t (got t={t}, k={k})")
    if (k * (k - 1)) % (t - 1):
        raise ValueError(f"t-1 = {t - 1} does not divide k(k-1) = {k * (k - 1)}")
    lam = k * (k - 1) // (t - 1)
    order = k - lam
    if t % 2 == 0:
        if isqrt(order) ** 2 == order:
            return BRCResult(FEASIBLE_EVEN, lam, f"k−λ={order} is a square")
        return BRCResult(INFEASIBLE, lam, f"k−λ={order} not a square")
    if lam == 0:
        return BRCResult(PASSES, lam, "λ=0, trivial solution with y free")
    sign = -1 if ((t - 1) // 2) % 2 else 1
    # z^2 = order x^2 + sign*lam y^2  <=>  order x^2 + sign*lam y^2 - z^2 = 0
    if legendre_solvable(order, sign * lam, -1):
        return BRCResult(PASSES, lam, f"z²=({order})x²+({sign * lam})y² solvable")
    return BRCResult(INFEASIBLE, lam, f"z²=({order})x²+({sign * lam})y² has no nontrivial solution")


# -- tournaments and related matrices -----------------------------------------

def _mat(rows):
    return tuple(tuple(int(x) for x in r) for r in rows)


def _check_drt(A1):
    from .graphs import Digraph, drt_check
    ok, _ = drt_check(Digraph(_mat(A1)))
    if not ok:
        raise ValueError("input is not a doubly regular tournament")
    return _mat(A1)


def double_tournament(A1) -> tuple[tuple[int, ...], ...]:
    """Doubly regular tournament on 2r+1 vertices ordered 0..r-1, inf, 0'..(r-1)'."""
    A1 = _check_drt(A1)
    r = len(A1)
    At = [[A1[j][i] for j in range(r)] for i in range(r)]
    rows = []
    for i in range(r):
        rows.append(At[i] + [0] + [A1[i][j] + int(i == j) for j in range(r)])
    rows.append([1] * r + [0] + [0] * r)
    for i in range(r):
        rows.append(list(A1[i]) + [1] + list(A1[i]))
    return _mat(rows)


@dataclass(frozen=True)
class SkewHadamard:
    H: tuple[tuple[int, ...], ...]
    valid: bool


def skew_hadamard_embed(A) -> SkewHadamard:
    """Border J - 2A to order t+1; valid iff H + H' = 2I and H H' = (t+1) I."""
    A = _mat(A)
    t = len(A)
    H = [[1] + [1] * t] + [[-1] + [1 - 2 * A[i][j] for j in range(t)] for i in range(t)]
    m = t + 1
    ok = all(H[i][j] + H[j][i] == 2 * int(i == j) for i in range(m) for j in range(m))
    ok = ok and all(sum(H[i][l] * H[j][l] for l in range(m)) == m * int(i == j)
                    for i in range(m) for j in range(m))
    return SkewHadamard(_mat(H), ok)


@dataclass(frozen=True)
class BlockMatrix:
    """Adjacency matrix A meant as A_d of a CWBD, with its design parameters."""
    A: tuple[tuple[int, ...], ...]
    t: int
    lam: int
    k: int
    n: int

    def to_json(self) -> dict:
        return {"t": self.t, "lambda": self.lam, "k": self.k, "n": self.n,
                "adjacency": [list(r) for r in self.A]}


def type3_block(A1, m: int) -> BlockMatrix:
    """J_m (x) (I_r + A1) - I_t for a doubly regular tournament A1 on r = 4q+3 vertices."""
    A1 = _check_drt(A1)
    if m < 2:
        raise ValueError("multiplicity m must be at least 2")
    r = len(A1)
    q = (r - 3) // 4
    t = m * r
    A = [[A1[i % r][j % r] + int(i % r == j % r) - int(i == j) for j in range(t)] for i in range(t)]
    lam = m * (q + 1)
    return BlockMatrix(_mat(A), t, lam, 2 * m * (q + 1) - 1, m * m * r * (q + 1) - m * (3 * q + 2))


def sdigraph_double(A1) -> BlockMatrix:
    """S-digraph on 2r+2 vertices from a doubly regular tournament on r = 4q+3 vertices."""
    A1 = _check_drt(A1)
    r = len(A1)
    q = (r - 3) // 4
    At = [[A1[j][i] for j in range(r)] for i in range(r)]
    rows = [[0] + [1] * r + [0] + [0] * r]
    for i in range(r):
        rows.append([0] + list(A1[i]) + [1] + At[i])
    rows.append([0] + [0] * r + [0] + [1] * r)
    for i in range(r):
        rows.append([1] + At[i] + [0] + list(A1[i]))
    return BlockMatrix(_mat(rows), 8 * (q + 1), 2 * (q + 1), 4 * q + 3, 16 * q * q + 26 * q + 10)


# -- other designs -----------------------------------------------------------

def construct_cbd(t: int) -> Design:
    """CBD on t-1 subjects: subject s has sequence (0, s, 2s, ..., (t-1)s) mod t."""
    if not is_prime(t):
        raise ValueError(f"t must be prime (got {t})")
    return Design.from_columns(t, [[j * s % t for j in range(t)] for s in range(1, t)])


def t3_special() -> Design:
    return Design.from_columns(3, [(0, 1, 2), (0, 1, 2), (0, 2, 1)])


def reference_design(t: int, n: int) -> Design:
    """A known CWBD for (t, n) when one of the field constructions applies."""
    if t % 4 == 3 and t > 3:
        if 2 * n == t * (t - 1):
            return expand_belle(belle_from_primitive(field_of_order(t)))
        if 2 * n == t - 1 and is_prime(t):
            return construct_type1(t)
    raise ValueError(f"no reference CWBD construction for t={t}, n={n}")
