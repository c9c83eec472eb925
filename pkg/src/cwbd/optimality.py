"""Information matrices, trace bounds and universal-optimality verdicts.

Information matrices are Schur complements of the normal-equation (Gram) matrix of
the model columns: for direct effects under the full model,
C = T'T - T'X (X'X)^- X'T with X = (P : U : F).  The Gram blocks are assembled
from count tables of the design rather than from the nt x (2t+n+t) incidence
matrices, so no nt-sized matrix is ever formed.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

import numpy as np

from .design import (CBD, CWBD, Design, a_d, classify, left_neighbour_counts, period_counts,
                     replications, subject_counts)
from .exact_linalg import (RationalMatrix, complete_symmetry,
                           is_nonneg_definite, schur_complement_integer, schur_complement_scaled)

FULL = "full"
SUBJECTS_ONLY = "subjects"
PERIODS_ONLY = "periods"
MODELS = (FULL, SUBJECTS_ONLY, PERIODS_ONLY)

DIRECT = "direct"
CARRYOVER = "carryover"

ALL_DESIGNS = "all_designs"
EQUIREPLICATED_LAMBDA = "equireplicated_no_self_neighbours"
LAMBDA = "no_self_neighbours"
NOT_ESTABLISHED = "not_established"

_NUISANCE = {FULL: ("P", "U"), SUBJECTS_ONLY: ("U",), PERIODS_ONLY: ("P",)}


def model_id(name: str) -> str:
    aliases = {"2": FULL, "3": SUBJECTS_ONLY, "4": PERIODS_ONLY, "interference": SUBJECTS_ONLY}
    name = aliases.get(str(name), str(name))
    if name not in MODELS:
        raise ValueError(f"unknown model {name!r}; expected one of {MODELS}")
    return name


def gram_blocks(d: Design) -> dict[tuple[str, str], list[list[int]]]:
    """Cross-product blocks X'Y for X, Y in {P, U, T, F}."""
    t, n = d.t, d.n
    Q = period_counts(d)
    N = subject_counts(d)
    S = left_neighbour_counts(d)
    r = replications(d)
    eye = lambda m, c: [[c * int(i == j) for j in range(m)] for i in range(m)]
    Nt = [list(c) for c in zip(*N)] if n else []
    b = {
        ("P", "P"): eye(t, n),
        ("P", "U"): [[1] * n for _ in range(t)],
        ("P", "T"): Q,
        ("P", "F"): [Q[i - 1] for i in range(t)],
        ("U", "U"): eye(n, t),
        ("U", "T"): Nt,
        ("U", "F"): Nt,
        ("T", "T"): [[r[i] if i == j else 0 for j in range(t)] for i in range(t)],
        ("F", "F"): [[r[i] if i == j else 0 for j in range(t)] for i in range(t)],
        ("T", "F"): S,
    }
    for (x, y), m in list(b.items()):
        if x != y:
            b[(y, x)] = [list(c) for c in zip(*m)] if m else [[] for _ in range(_size(y, t, n))]
    return b


def _size(name: str, t: int, n: int) -> int:
    return n if name == "U" else t


def _assemble(blocks, names, t, n) -> list[list[int]]:
    rows = []
    for x in names:
        for i in range(_size(x, t, n)):
            row = []
            for y in names:
                row.extend(blocks[(x, y)][i])
            rows.append(row)
    return rows


def info_matrix(d: Design, model: str = FULL, effect: str = DIRECT) -> RationalMatrix:
    """Exact information matrix for direct (C_d) or carry-over (C~_d) effects."""
    model = model_id(model)
    if effect not in (DIRECT, CARRYOVER):
        raise ValueError(f"unknown effect {effect!r}")
    target, other = ("T", "F") if effect == DIRECT else ("F", "T")
    nuisance = _NUISANCE[model] + (other,)
    blocks = gram_blocks(d)
    k = sum(_size(x, d.t, d.n) for x in nuisance)
    if "U" not in nuisance or d.n == 0:
        M = _assemble(blocks, nuisance + (target,), d.t, d.n)
        return schur_complement_integer(M, k)
    # U'U = t I, so the subject block is eliminated in closed form:
    # t * (G_RR - G_RU G_UR / t) = t G_RR - G_RU G_UR stays integral.
    rest = tuple(x for x in nuisance if x != "U") + (target,)
    G = _assemble(blocks, rest, d.t, d.n)
    B = [sum((blocks[("U", x)][u] for x in rest), []) for u in range(d.n)]
    m = len(G)
    M = [[d.t * G[i][j] for j in range(m)] for i in range(m)]
    for row in B:
        nz = [(i, x) for i, x in enumerate(row) if x]
        for i, x in nz:
            Mi = M[i]
            for j, y in nz:
                Mi[j] -= x * y
    return schur_complement_scaled(M, k - d.n, d.t)


def residual_cross(d: Design, left: str, proj: str, right: str) -> RationalMatrix:
    """left' w_perp(proj) right for single incidence blocks."""
    b = gram_blocks(d)
    t, n = d.t, d.n
    # every single-factor Gram block is diagonal, so its Moore-Penrose inverse is too
    diag = [b[(proj, proj)][i][i] for i in range(_size(proj, t, n))]
    den = lcm(*[x for x in diag if x]) if any(diag) else 1
    w = [den // x if x else 0 for x in diag]
    LR, LP, PR = b[(left, right)], b[(left, proj)], b[(proj, right)]
    rows, cols = _size(left, t, n), _size(right, t, n)
    out = []
    for i in range(rows):
        terms = [(p, LP[i][p] * w[p]) for p in range(len(diag)) if LP[i][p] and w[p]]
        out.append([Fraction(den * LR[i][j] - sum(c * PR[p][j] for p, c in terms), den) for j in range(cols)])
    return RationalMatrix(out, cols)


@dataclass(frozen=True)
class EqualityConditions:
    direct_subjects: bool
    direct_periods: bool
    carryover_subjects: bool
    carryover_periods: bool

    def as_tuple(self) -> tuple[bool, bool, bool, bool]:
        return (self.direct_subjects, self.direct_periods,
                self.carryover_subjects, self.carryover_periods)


def equality_conditions(d: Design) -> EqualityConditions:
    """Flags for T'w(F)U = 0, T'w(F)P = 0, F'w(T)U = 0, F'w(T)P = 0 (w = orth. complement)."""
    return EqualityConditions(
        residual_cross(d, "T", "F", "U").is_zero(),
        residual_cross(d, "T", "F", "P").is_zero(),
        residual_cross(d, "F", "T", "U").is_zero(),
        residual_cross(d, "F", "T", "P").is_zero(),
    )


def kunert_trace_bound(d: Design) -> Fraction:
    """Upper bound on tr C_d under the full model and the model without periods."""
    t = d.t
    N = subject_counts(d)
    S = left_neighbour_counts(d)
    r = replications(d)
    bound = Fraction(sum(r)) - Fraction(sum(x * x for row in N for x in row), t)
    nn = [[sum(a * b for a, b in zip(N[i], N[j])) for j in range(t)] for i in range(t)]
    for j in range(t):
        if r[j] == 0:
            continue
        pen = sum((Fraction(t * S[i][j] - nn[i][j], t) ** 2 for i in range(t)), Fraction(0))
        bound -= pen / r[j]
    return bound


def simple_bound(t: int, n: int, ad: int) -> Fraction:
    return n * (t - 1 - Fraction(1, t - 1)) - Fraction(2 * ad, t)


def sharp_bound(t: int, n: int, ad: int) -> Fraction:
    if 2 * ad > t - 1:
        raise ValueError(f"sharp bound requires a_d <= (t-1)/2, got a_d={ad} for t={t}")
    return simple_bound(t, n, ad) - (t - 2 * ad) * (Fraction(t - 1, 4 * n) - Fraction(2 * ad, n * t))


def main_theorem_hypotheses(t: int, n: int) -> list[str]:
    """Unmet hypotheses for extending optimality to all designs without self-neighbours."""
    unmet = []
    if t < 5:
        unmet.append("t >= 5")
    if t % 2 == 0:
        unmet.append("t odd")
    else:
        h = (t - 1) // 2
        if n % h or (n // h) % 2 == 0:
            unmet.append("n an odd multiple of (t-1)/2")
    if 2 * n < t * (t - 1):
        unmet.append("n >= t(t-1)/2")
    return unmet


@dataclass
class OptimalityReport:
    model: str
    effect: str
    info_matrix: RationalMatrix
    trace: Fraction
    kunert_bound: Fraction
    simple_bound: Fraction
    sharp_bound: Fraction | None
    a_d: int
    completely_symmetric: bool
    nonneg_definite: bool
    equality_conditions: EqualityConditions
    verdict: str
    unmet: list[str] = field(default_factory=list)

    @property
    def optimal(self) -> bool:
        return self.verdict != NOT_ESTABLISHED

    def to_json(self) -> dict:
        q = lambda x: None if x is None else f"{x.numerator}/{x.denominator}"
        return {
            "model": self.model,
            "effect": self.effect,
            "info_matrix": self.info_matrix.to_json(),
            "trace": q(self.trace),
            "kunert_bound": q(self.kunert_bound),
            "simple_bound": q(self.simple_bound),
            "sharp_bound": q(self.sharp_bound),
            "a_d": self.a_d,
            "completely_symmetric": self.completely_symmetric,
            "nonneg_definite": self.nonneg_definite,
            "equality_conditions": list(self.equality_conditions.as_tuple()),
            "verdict": self.verdict,
            "conditions_not_met": list(self.unmet),
        }


def _verdict(d: Design, model: str, symmetric: bool) -> tuple[str, list[str]]:
    c = classify(d)
    t, n = d.t, d.n
    unmet = []
    if c.kind not in (CWBD, CBD):
        unmet.append("design is a CWBD")
    if not c.connected:
        unmet.append("design is connected")
    if not symmetric:
        unmet.append("information matrix completely symmetric")
    scope = None
    if model == SUBJECTS_ONLY:
        if not c.uniform_subjects:
            unmet.append("uniform on subjects")
        elif n <= t - 1:
            scope = ALL_DESIGNS
        else:
            scope = LAMBDA if not main_theorem_hypotheses(t, n) else EQUIREPLICATED_LAMBDA
    elif model == PERIODS_ONLY:
        for ok, what in ((c.uniform_periods, "uniform on periods"), (t > 2, "t > 2"),
                         (n > t - 1, "n > t-1"), (c.self_neighbour_free, "no self-neighbours")):
            if not ok:
                unmet.append(what)
        scope = EQUIREPLICATED_LAMBDA
    else:
        if not c.uniform:
            unmet.append("uniform")
        if not c.self_neighbour_free:
            unmet.append("no self-neighbours")
        hyp = main_theorem_hypotheses(t, n)
        unmet.extend(hyp)
        scope = LAMBDA
    if unmet or scope is None:
        return NOT_ESTABLISHED, unmet
    return scope, []


def optimality_verdict(d: Design, model: str = FULL, effect: str = DIRECT) -> OptimalityReport:
    model = model_id(model)
    C = info_matrix(d, model, effect)
    sym = complete_symmetry(C).is_completely_symmetric
    ad = a_d(d)
    verdict, unmet = _verdict(d, model, sym)
    return OptimalityReport(
        model=model,
        effect=effect,
        info_matrix=C,
        trace=C.trace(),
        kunert_bound=kunert_trace_bound(d),
        simple_bound=simple_bound(d.t, d.n, ad),
        sharp_bound=sharp_bound(d.t, d.n, ad) if 2 * ad <= d.t - 1 else None,
        a_d=ad,
        completely_symmetric=sym,
        nonneg_definite=is_nonneg_definite(C),
        equality_conditions=equality_conditions(d),
        verdict=verdict,
        unmet=unmet,
    )


# -- random competitors ------------------------------------------------------

def random_lambda_design(t: int, n: int, rng: np.random.Generator) -> Design:
    """Uniform cell fill, resampling any subject whose sequence has a self-neighbour."""
    cols = []
    while len(cols) < n:
        c = [int(x) for x in rng.integers(0, t, size=t)]
        if all(c[i] != c[i - 1] for i in range(t)):
            cols.append(c)
    return Design.from_columns(t, cols)


@dataclass(frozen=True)
class TrialRecord:
    trial: int
    trace: Fraction
    kunert_bound: Fraction
    simple_bound: Fraction
    sharp_bound: Fraction | None
    a_d: int


@dataclass
class DominanceReport:
    t: int
    n: int
    model: str
    seed: int
    reference_trace: Fraction | None
    records: list[TrialRecord]

    @property
    def max_trace(self) -> Fraction | None:
        return max((r.trace for r in self.records), default=None)

    @property
    def dominated(self) -> bool:
        return all(r.trace <= self.reference_trace for r in self.records)

    def to_json(self) -> dict:
        q = lambda x: None if x is None else f"{x.numerator}/{x.denominator}"
        return {
            "t": self.t, "n": self.n, "model": self.model, "seed": self.seed,
            "trials": len(self.records),
            "reference_trace": q(self.reference_trace),
            "max_trace": q(self.max_trace),
            "dominated": self.dominated,
        }


def _trial(args) -> TrialRecord:
    t, n, model, seq, idx = args
    rng = np.random.default_rng(seq)
    d = random_lambda_design(t, n, rng)
    ad = a_d(d)
    return TrialRecord(
        trial=idx,
        trace=info_matrix(d, model, DIRECT).trace(),
        kunert_bound=kunert_trace_bound(d),
        simple_bound=simple_bound(t, n, ad),
        sharp_bound=sharp_bound(t, n, ad) if 2 * ad <= t - 1 else None,
        a_d=ad,
    )


def dominance_sample_test(t: int, n: int, trials: int, seed: int = 0, model: str = FULL,
                          reference: Design | None = None, workers: int = 1) -> DominanceReport:
    """Compare the reference CWBD's trace against random designs without self-neighbours.

    Each trial draws from its own child of ``SeedSequence(seed)``, so results do not
    depend on the number of workers.
    """
    model = model_id(model)
    if trials == 0:
        return DominanceReport(t, n, model, seed, None, [])
    if reference is None:
        from .constructions import reference_design
        reference = reference_design(t, n)
    ref_trace = info_matrix(reference, model, DIRECT).trace()
    seqs = np.random.SeedSequence(seed).spawn(trials)
    jobs = [(t, n, model, s, i) for i, s in enumerate(seqs)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            records = list(ex.map(_trial, jobs, chunksize=max(1, trials // (4 * workers))))
    else:
        records = [_trial(j) for j in jobs]
    return DominanceReport(t, n, model, seed, ref_trace, records)
