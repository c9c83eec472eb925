"""Circular repeated-measurements designs and their neighbour structure.

A design with t treatments on n subjects in t periods is stored period-major:
``periods[i][j]`` is the treatment applied to subject j in period i (both 0-based).
Designs are circular: the left neighbour of period 0 is period t-1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exact_linalg import RationalMatrix, complete_symmetry, rank

CSBD = "CSBD"
CBD = "CBD"
CWBD = "CWBD"
NONE = "none"


@dataclass(frozen=True)
class Design:
    t: int
    n: int
    periods: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        periods = tuple(tuple(int(x) for x in row) for row in self.periods)
        object.__setattr__(self, "periods", periods)
        if self.t < 2:
            raise ValueError("a design needs at least 2 treatments")
        if self.n < 0:
            raise ValueError("number of subjects must be non-negative")
        if len(periods) != self.t:
            raise ValueError(f"expected {self.t} periods, got {len(periods)}")
        for i, row in enumerate(periods):
            if len(row) != self.n:
                raise ValueError(f"period {i} has {len(row)} subjects, expected {self.n}")
            for j, x in enumerate(row):
                if not 0 <= x < self.t:
                    raise ValueError(f"cell (period {i}, subject {j}) = {x} outside [0, {self.t - 1}]")

    @classmethod
    def from_columns(cls, t: int, columns: Sequence[Sequence[int]]) -> Design:
        """Build a design from one treatment sequence per subject."""
        cols = [tuple(c) for c in columns]
        for c in cols:
            if len(c) != t:
                raise ValueError(f"subject sequence {c} does not have length {t}")
        rows = tuple(tuple(c[i] for c in cols) for i in range(t))
        return cls(t, len(cols), rows)

    @classmethod
    def empty(cls, t: int) -> Design:
        return cls(t, 0, tuple(() for _ in range(t)))

    def columns(self) -> list[tuple[int, ...]]:
        return [tuple(self.periods[i][j] for i in range(self.t)) for j in range(self.n)]

    def cell(self, i: int, j: int) -> int:
        """Treatment in period i (0-based; circular) on subject j."""
        return self.periods[i % self.t][j]


@dataclass(frozen=True)
class DesignMatrices:
    T: RationalMatrix
    F: RationalMatrix
    P: RationalMatrix
    U: RationalMatrix


def build_matrices(d: Design) -> DesignMatrices:
    """Incidence matrices of model (responses ordered period-fastest within subject)."""
    t, n = d.t, d.n
    T, F, P, U = [], [], [], []
    for j in range(n):
        for i in range(t):
            T.append([int(d.cell(i, j) == a) for a in range(t)])
            F.append([int(d.cell(i - 1, j) == a) for a in range(t)])
            P.append([int(i == a) for a in range(t)])
            U.append([int(j == u) for u in range(n)])
    return DesignMatrices(RationalMatrix(T, t), RationalMatrix(F, t),
                          RationalMatrix(P, t), RationalMatrix(U, n))


def shift_circulant(t: int) -> RationalMatrix:
    """Cyclic shift H_t with (H_t T)_i = T_{i-1}, row 0 wrapping to row t-1."""
    return RationalMatrix([[int(j == (i - 1) % t) for j in range(t)] for i in range(t)], t)


def left_neighbour_counts(d: Design) -> list[list[int]]:
    """S[i][j] = number of times treatment i is immediately preceded by treatment j."""
    S = [[0] * d.t for _ in range(d.t)]
    for i in range(d.t):
        cur, prev = d.periods[i], d.periods[i - 1]
        for j in range(d.n):
            S[cur[j]][prev[j]] += 1
    return S


def replications(d: Design) -> list[int]:
    r = [0] * d.t
    for row in d.periods:
        for x in row:
            r[x] += 1
    return r


def subject_counts(d: Design) -> list[list[int]]:
    """N[i][u] = number of times treatment i appears on subject u."""
    N = [[0] * d.n for _ in range(d.t)]
    for row in d.periods:
        for u, x in enumerate(row):
            N[x][u] += 1
    return N


def period_counts(d: Design) -> list[list[int]]:
    """Q[i][a] = number of times treatment a appears in period i."""
    Q = [[0] * d.t for _ in range(d.t)]
    for i, row in enumerate(d.periods):
        for x in row:
            Q[i][x] += 1
    return Q


def k_lambda(t: int, n: int) -> tuple[int, int]:
    """(lambda, k) with lambda = ceil(n/(t-1)) and k = n - (lambda-1)(t-1)."""
    if t < 2 or n < 1:
        raise ValueError("need t >= 2 and n >= 1")
    lam = -(-n // (t - 1))
    return lam, n - (lam - 1) * (t - 1)


@dataclass(frozen=True)
class NeighbourMatrix:
    S: tuple[tuple[int, ...], ...]
    lam: int
    k: int
    A: tuple[tuple[int, ...], ...]

    def SSt(self) -> list[list[int]]:
        return _mul(self.S, _transpose(self.S))

    def StS(self) -> list[list[int]]:
        return _mul(_transpose(self.S), self.S)


def _transpose(m):
    return [list(c) for c in zip(*m)]


def _mul(a, b):
    bt = _transpose(b)
    return [[sum(x * y for x, y in zip(r, c)) for c in bt] for r in a]


def neighbour_matrix(d: Design) -> NeighbourMatrix:
    S = left_neighbour_counts(d)
    t = d.t
    if d.n == 0:
        lam, k = 1, 0
    else:
        lam, k = k_lambda(t, d.n)
    A = [[S[j][i] - (lam - 1) * int(i != j) for j in range(t)] for i in range(t)]
    return NeighbourMatrix(tuple(map(tuple, S)), lam, k, tuple(map(tuple, A)))


def is_uniform_on_subjects(d: Design) -> bool:
    full = set(range(d.t))
    return all(set(c) == full for c in d.columns())


def is_uniform_on_periods(d: Design) -> bool:
    if d.n % d.t:
        return False
    want = d.n // d.t
    return all(all(c == want for c in row) for row in period_counts(d))


def aa_condition(A, lam: int) -> bool:
    """A'A - (lam-1)(A + A') completely symmetric."""
    At = _transpose(A)
    AtA = _mul(At, A)
    t = len(A)
    M = [[AtA[i][j] - (lam - 1) * (A[i][j] + A[j][i]) for j in range(t)] for i in range(t)]
    return complete_symmetry(M).is_completely_symmetric


@dataclass(frozen=True)
class Classification:
    kind: str
    cwbd_type: str | None
    uniform_subjects: bool
    uniform_periods: bool
    uniform: bool
    self_neighbour_free: bool
    connected: bool
    lam: int
    k: int

    def summary(self) -> str:
        kind = self.kind if self.cwbd_type is None else f"{self.kind} Type {self.cwbd_type}"
        if self.uniform:
            uni = "uniform"
        elif self.uniform_subjects:
            uni = "uniform on subjects"
        elif self.uniform_periods:
            uni = "uniform on periods"
        else:
            uni = "not uniform"
        conn = "connected" if self.connected else "disconnected"
        return f"{kind}, {uni}, λ={self.lam}, k={self.k}, {conn}"

    def to_json(self) -> dict:
        return {
            "kind": self.kind, "cwbd_type": self.cwbd_type,
            "uniform_subjects": self.uniform_subjects, "uniform_periods": self.uniform_periods,
            "uniform": self.uniform, "self_neighbour_free": self.self_neighbour_free,
            "connected": self.connected, "lambda": self.lam, "k": self.k,
        }


def neighbour_kind(d: Design, nm: NeighbourMatrix | None = None) -> str:
    """CSBD / CBD / CWBD / none from the left-neighbouring matrix alone."""
    nm = nm or neighbour_matrix(d)
    t, n, S = d.t, d.n, nm.S
    if n == 0:
        return NONE
    if n % t == 0 and all(x == n // t for r in S for x in r):
        return CSBD
    if n % (t - 1) == 0 and all(S[i][j] == (0 if i == j else n // (t - 1))
                               for i in range(t) for j in range(t)):
        return CBD
    lam = nm.lam
    if any(sum(r) != n for r in S) or any(sum(c) != n for c in zip(*S)):
        return NONE
    for i in range(t):
        for j in range(t):
            if i == j:
                if S[i][i]:
                    return NONE
            elif S[i][j] not in (lam - 1, lam):
                return NONE
    if not complete_symmetry(nm.SSt()).is_completely_symmetric:
        return NONE
    return CWBD


def cwbd_type(nm: NeighbourMatrix) -> str:
    A = nm.A
    t = len(A)
    if all(A[i][j] + A[j][i] == int(i != j) for i in range(t) for j in range(t)):
        return "I"
    return "II" if nm.lam == 1 else "III"


def classify(d: Design) -> Classification:
    nm = neighbour_matrix(d)
    kind = neighbour_kind(d, nm)
    us = is_uniform_on_subjects(d)
    up = is_uniform_on_periods(d)
    snf = all(nm.S[i][i] == 0 for i in range(d.t))
    return Classification(
        kind=kind,
        cwbd_type=cwbd_type(nm) if kind == CWBD else None,
        uniform_subjects=us,
        uniform_periods=up,
        uniform=us and up,
        self_neighbour_free=snf,
        connected=connectivity(d),
        lam=nm.lam,
        k=nm.k,
    )


def connectivity(d: Design) -> bool:
    """All direct-effect contrasts estimable under the model without period effects."""
    if d.n == 0:
        return False
    from .optimality import SUBJECTS_ONLY, info_matrix
    return rank(info_matrix(d, SUBJECTS_ONLY, "direct")) == d.t - 1


@dataclass(frozen=True)
class Feasibility:
    t: int
    n: int
    lam: int
    k: int
    divisibility: bool
    cbd_parameters: bool
    type3_bound: str | None = None
    type3_feasible: bool | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def feasible(self) -> bool:
        return self.divisibility or self.cbd_parameters


def existence_check(t: int, n: int) -> Feasibility:
    """Necessary conditions for a CWBD with t treatments on n subjects."""
    lam, k = k_lambda(t, n)
    cbd = k == t - 1
    div = (k * (k - 2 * lam + 1)) % (t - 1) == 0
    notes = []
    if cbd:
        notes.append("CBD parameters: (t-1) divides n")
    if not div:
        notes.append(f"divisibility condition fails: t-1 = {t - 1} does not divide "
                     f"k(k-2λ+1) = {k * (k - 2 * lam + 1)}")
    bound = ok = None
    if lam > 1 and not cbd:
        two_k = 2 * k
        if two_k == t - 1:
            bound, ok = "lambda <= (k+1)/2", 2 * lam <= k + 1
        elif two_k < t - 1:
            bound, ok = "lambda <= k", lam <= k
        else:
            bound, ok = "lambda <= t-k", lam <= t - k
        if not ok:
            notes.append(f"Type III infeasible: requires {bound}")
    return Feasibility(t, n, lam, k, div, cbd, bound, ok, notes)


def juxtapose(d: Design, d2: Design) -> Design:
    if d.t != d2.t:
        raise ValueError(f"cannot juxtapose designs on {d.t} and {d2.t} treatments")
    rows = tuple(a + b for a, b in zip(d.periods, d2.periods))
    return Design(d.t, d.n + d2.n, rows)


def a_d(d: Design) -> int:
    """Total excess of treatment-on-subject multiplicities above one."""
    return sum(max(x - 1, 0) for row in subject_counts(d) for x in row)


def cwbd_phi_xi(t: int, n: int) -> tuple[Fraction, Fraction]:
    """Coefficients of S S' = phi I + xi J for a CWBD with these parameters."""
    lam, _ = k_lambda(t, n)
    extra = Fraction(n * (n - 2 * lam + 1), t - 1)
    return n * (2 * lam - 1) - lam * (lam - 1) * t - extra, lam * (lam - 1) + extra
