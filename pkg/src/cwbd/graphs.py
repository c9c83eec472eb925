"""Tournaments, common-neighbour graphs and Hamiltonian cycle searches.

The searches are plain depth-first backtracking in ascending vertex order.  Invariant
cycle searches take a permutation group acting on the vertices and only accept
cycles that share no arc (edge) with any of their non-trivial images; an arc is
refused as soon as it lies in the orbit of an arc already on the path.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .constructions import DEFAULT_BUDGET, SearchBudgetExceeded
from .design import Design
from .finite_field import Field, make_field, square_partition

Matrix = tuple[tuple[int, ...], ...]


class NotFound(LookupError):
    """An exhaustive search finished without a solution."""


def _mat(rows) -> Matrix:
    return tuple(tuple(int(x) for x in r) for r in rows)


@dataclass(frozen=True)
class Digraph:
    adjacency: Matrix

    def __post_init__(self):
        object.__setattr__(self, "adjacency", _mat(self.adjacency))
        a = self.adjacency
        if any(len(r) != len(a) for r in a):
            raise ValueError("adjacency matrix must be square")
        if any(a[i][i] for i in range(len(a))):
            raise ValueError("self-loops are not allowed")

    @property
    def order(self) -> int:
        return len(self.adjacency)

    def out_neighbours(self, v: int) -> list[int]:
        return [w for w, x in enumerate(self.adjacency[v]) if x]

    def reverse(self) -> Digraph:
        return Digraph(tuple(zip(*self.adjacency)))


@dataclass(frozen=True)
class Graph:
    adjacency: Matrix

    def __post_init__(self):
        object.__setattr__(self, "adjacency", _mat(self.adjacency))
        a = self.adjacency
        n = len(a)
        if any(len(r) != n for r in a):
            raise ValueError("adjacency matrix must be square")
        if any(a[i][i] for i in range(n)) or any(a[i][j] != a[j][i] for i in range(n) for j in range(i)):
            raise ValueError("graph adjacency must be symmetric with zero diagonal")

    @property
    def order(self) -> int:
        return len(self.adjacency)

    def neighbours(self, v: int) -> list[int]:
        return [w for w, x in enumerate(self.adjacency[v]) if x]

    def degrees(self) -> list[int]:
        return [sum(r) for r in self.adjacency]

    def edges(self) -> list[tuple[int, int]]:
        n = self.order
        return [(i, j) for i in range(n) for j in range(i + 1, n) if self.adjacency[i][j]]

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph in which vertex v is renamed perm[v]."""
        n = self.order
        a = [[0] * n for _ in range(n)]
        for i, j in self.edges():
            a[perm[i]][perm[j]] = a[perm[j]][perm[i]] = 1
        return Graph(a)


@dataclass(frozen=True)
class CycleSet:
    cycles: tuple[tuple[int, ...], ...]
    directed: bool

    def __len__(self):
        return len(self.cycles)

    def to_json(self) -> list[list[int]]:
        return [list(c) for c in self.cycles]


# -- tournaments -------------------------------------------------------------

def paley_tournament(field: Field) -> Digraph:
    """Arc i -> j iff j - i is a non-zero square."""
    if field.order % 4 != 3:
        raise ValueError(f"field order must be congruent to 3 mod 4 (got {field.order})")
    sq = square_partition(field).squares
    t = field.order
    return Digraph([[int(field.sub(j, i) in sq) for j in range(t)] for i in range(t)])


def paley(t: int) -> Digraph:
    from .finite_field import field_of_order
    return paley_tournament(field_of_order(t))


def drt_check(D: Digraph | Sequence[Sequence[int]]) -> tuple[bool, tuple | None]:
    """Doubly regular tournament test: A + A' = J - I and A'A = phi I + xi J."""
    a = D.adjacency if isinstance(D, Digraph) else _mat(D)
    t = len(a)
    if any(a[i][j] + a[j][i] != int(i != j) for i in range(t) for j in range(t)):
        return False, None
    if (t + 1) % 4:
        return False, None
    phi, xi = (t + 1) // 4, (t - 3) // 4
    for i in range(t):
        for j in range(t):
            v = sum(a[l][i] * a[l][j] for l in range(t))
            if v != phi * int(i == j) + xi:
                return False, None
    return True, (phi, xi)


# -- common-neighbour graphs ---------------------------------------------------

def lattice_graph_L2_4() -> Graph:
    """4x4 rook's graph, vertex 4*row + col (printed labels are vertex + 1)."""
    n = 16
    return Graph([[int(i != j and (i // 4 == j // 4 or i % 4 == j % 4)) for j in range(n)]
                  for i in range(n)])


def shrikhande_graph() -> Graph:
    """Cayley graph on Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}; vertex 4a + b."""
    conn = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}
    n = 16
    return Graph([[int(((i // 4 - j // 4) % 4, (i % 4 - j % 4) % 4) in conn) for j in range(n)]
                  for i in range(n)])


def clebsch_vertices() -> list[tuple[int, ...]]:
    """Even-weight vectors of length 5 indexed by 8x1 + 4x2 + 2x3 + x4."""
    out = []
    for v in range(16):
        x = [(v >> 3) & 1, (v >> 2) & 1, (v >> 1) & 1, v & 1]
        out.append(tuple(x + [sum(x) % 2]))
    return out


def clebsch_graph() -> Graph:
    vs = clebsch_vertices()
    return Graph([[int(sum(a != b for a, b in zip(u, w)) == 2) for w in vs] for u in vs])


def clebsch_rotation() -> tuple[int, ...]:
    """(x1..x5) -> (x2..x5, x1) as a vertex permutation."""
    vs = clebsch_vertices()
    index = {v: i for i, v in enumerate(vs)}
    return tuple(index[v[1:] + v[:1]] for v in vs)


def l24_automorphism() -> tuple[int, ...]:
    """(2,3,4)(5,9,13)(6,11,16)(7,12,14)(8,10,15) on labels 1..16, as a 0-based map."""
    return perm_from_cycles(16, [(2, 3, 4), (5, 9, 13), (6, 11, 16), (7, 12, 14), (8, 10, 15)], base=1)


def shrikhande_automorphism() -> tuple[int, ...]:
    """Order-3 linear map (a, b) -> (-b, a - b) on Z4 x Z4; it permutes the connection set."""
    return tuple(4 * ((-(v % 4)) % 4) + ((v // 4 - v % 4) % 4) for v in range(16))


def perm_from_cycles(n: int, cycles, base: int = 0) -> tuple[int, ...]:
    p = list(range(n))
    for c in cycles:
        c = [x - base for x in c]
        for a, b in zip(c, c[1:] + c[:1]):
            p[a] = b
    return tuple(p)


def common_neighbour_check(G: Graph) -> tuple[bool, int | None]:
    a = G.adjacency
    n = len(a)
    counts = {sum(a[i][l] * a[j][l] for l in range(n)) for i in range(n) for j in range(n) if i != j}
    if len(counts) == 1:
        return True, counts.pop()
    return False, None


def _triangle_profile(G: Graph) -> list[int]:
    a = G.adjacency
    out = []
    for v in range(G.order):
        nb = G.neighbours(v)
        out.append(sum(a[x][y] for i, x in enumerate(nb) for y in nb[i + 1:]))
    return out


def is_isomorphic(G: Graph, H: Graph) -> bool:
    """Backtracking isomorphism test with vertex-invariant pruning (fine up to ~20 vertices)."""
    if G.order != H.order or sorted(G.degrees()) != sorted(H.degrees()):
        return False
    inv_g = list(zip(G.degrees(), _triangle_profile(G)))
    inv_h = list(zip(H.degrees(), _triangle_profile(H)))
    if sorted(inv_g) != sorted(inv_h):
        return False
    n = G.order
    ga, ha = G.adjacency, H.adjacency
    order = sorted(range(n), key=lambda v: (-ga[v].count(1), v))
    mapping = [-1] * n
    used = [False] * n

    def rec(pos):
        if pos == n:
            return True
        v = order[pos]
        for w in range(n):
            if used[w] or inv_g[v] != inv_h[w]:
                continue
            if all(ga[v][u] == ha[w][mapping[u]] for u in order[:pos]):
                mapping[v] = w
                used[w] = True
                if rec(pos + 1):
                    return True
                used[w] = False
        mapping[v] = -1
        return False

    return rec(0)


# -- cycle searches ------------------------------------------------------------

def group_closure(generators: Sequence[Sequence[int]], n: int) -> list[tuple[int, ...]]:
    """All elements of the permutation group generated, identity first."""
    ident = tuple(range(n))
    elems = [ident]
    seen = {ident}
    frontier = [ident]
    gens = [tuple(g) for g in generators]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(g[p[i]] for i in range(n))
                if q not in seen:
                    seen.add(q)
                    elems.append(q)
                    nxt.append(q)
        frontier = nxt
    return elems


class _CycleSearch:
    def __init__(self, adj: Matrix, group, directed: bool, budget: int):
        self.adj = adj
        self.n = len(adj)
        self.nbrs = [[w for w, x in enumerate(r) if x] for r in adj]
        self.group = [g for g in group if any(g[i] != i for i in range(self.n))]
        self.directed = directed
        self.budget = budget
        self.nodes = 0

    def key(self, u, v):
        return (u, v) if self.directed or u < v else (v, u)

    def images(self, u, v):
        """Images of arc (u, v) under non-identity elements, or None if one fixes it."""
        a = self.key(u, v)
        out = []
        for g in self.group:
            b = self.key(g[u], g[v])
            if b == a:
                return None
            out.append(b)
        return out

    def run(self, prefix: Sequence[int], limit: int | None = None, close_check=None):
        n = self.n
        path = list(prefix)
        on_path = [False] * n
        for v in path:
            on_path[v] = True
        blocked: dict = {}
        used: set = set()
        found: list = []

        def add(u, v):
            a = self.key(u, v)
            if a in used or blocked.get(a):
                return None
            imgs = self.images(u, v)
            if imgs is None:
                return None
            used.add(a)
            for b in imgs:
                blocked[b] = blocked.get(b, 0) + 1
            return a, imgs

        def remove(rec):
            a, imgs = rec
            used.discard(a)
            for b in imgs:
                blocked[b] -= 1

        stack = []
        for u, v in zip(path, path[1:]):
            if not self.adj[u][v]:
                return []
            r = add(u, v)
            if r is None:
                return []
            stack.append(r)

        def rec():
            self.nodes += 1
            if self.nodes > self.budget:
                raise SearchBudgetExceeded(self.budget, "cycle search")
            u = path[-1]
            if len(path) == n:
                if self.adj[u][path[0]]:
                    r = add(u, path[0])
                    if r is not None:
                        cyc = tuple(path)
                        if close_check is None or close_check(cyc):
                            found.append(cyc)
                        remove(r)
                return limit is not None and len(found) >= limit
            for w in self.nbrs[u]:
                if on_path[w]:
                    continue
                r = add(u, w)
                if r is None:
                    continue
                path.append(w)
                on_path[w] = True
                stop = rec()
                on_path[w] = False
                path.pop()
                remove(r)
                if stop:
                    return True
            return False

        rec()
        return found


def _invariant_job(args):
    adj, group, directed, prefix, budget = args
    s = _CycleSearch(adj, group, directed, budget)
    return s.run(prefix), s.nodes


def find_invariant_cycles(D: Digraph, action: Sequence[Sequence[int]] = (), anchor: Sequence[int] = (0,),
                          budget: int = DEFAULT_BUDGET, workers: int = 1) -> CycleSet:
    """Directed Hamiltonian cycles starting with `anchor`, arc-disjoint from all their images.

    `action` lists permutations generating the group (identity may be omitted).
    """
    n = D.order
    group = group_closure(action, n) if action else [tuple(range(n))]
    anchor = tuple(anchor)
    last = anchor[-1]
    branches = [anchor + (w,) for w in D.out_neighbours(last) if w not in anchor] if len(anchor) < n else [anchor]
    jobs = [(D.adjacency, group, True, b, budget) for b in branches]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(workers) as ex:
            results = list(ex.map(_invariant_job, jobs))
    else:
        results = [_invariant_job(j) for j in jobs]
    if sum(nodes for _, nodes in results) > budget:
        raise SearchBudgetExceeded(budget, "cycle search")
    cycles = [c for found, _ in results for c in found]
    return CycleSet(tuple(cycles), True)


def canonical_cycle(c: Sequence[int], directed: bool = True) -> tuple[int, ...]:
    """Rotate the smallest vertex first; undirected cycles also take the smaller direction."""
    c = list(c)
    i = c.index(min(c))
    fwd = tuple(c[i:] + c[:i])
    if directed:
        return fwd
    rev = tuple([fwd[0]] + list(reversed(fwd[1:])))
    return min(fwd, rev)


def apply_perm(perm: Sequence[int], c: Sequence[int]) -> tuple[int, ...]:
    return tuple(perm[v] for v in c)


def gamma2() -> Digraph:
    """The doubled tournament on 15 vertices: 0..6, inf = 7, 0'..6' = 8..14."""
    from .constructions import double_tournament
    return Digraph(double_tournament(paley(7).adjacency))


def gf7_doubled_translation(i: int) -> tuple[int, ...]:
    """x -> x+i, inf fixed, x' -> (x+i)' on the 15 vertices of :func:`gamma2`."""
    return tuple([(x + i) % 7 for x in range(7)] + [7] + [8 + (x + i) % 7 for x in range(7)])


def gf7_doubled_multiplier(s: int) -> tuple[int, ...]:
    return tuple([(x * s) % 7 for x in range(7)] + [7] + [8 + (x * s) % 7 for x in range(7)])


def gamma2_invariant_cycles(budget: int = DEFAULT_BUDGET, workers: int = 1) -> CycleSet:
    return find_invariant_cycles(gamma2(), [gf7_doubled_translation(1)], anchor=(7, 0),
                                 budget=budget, workers=workers)


def cycles_to_design(C: CycleSet | Sequence[Sequence[int]], action: Sequence[Sequence[int]] | None = None,
                     both_directions: bool = False) -> Design:
    """One subject per cycle image (group orbit order), or per direction of each cycle."""
    cycles = [tuple(c) for c in (C.cycles if isinstance(C, CycleSet) else C)]
    if not cycles:
        raise ValueError("no cycles given")
    t = len(cycles[0])
    cols = []
    if both_directions:
        cols = cycles + [tuple(reversed(c)) for c in cycles]
    elif action:
        group = group_closure(action, t)
        for c in cycles:
            cols.extend(apply_perm(g, c) for g in group)
    else:
        cols = cycles
    return Design.from_columns(t, cols)


def is_hamiltonian_decomposition(G: Graph | Digraph, cycles: Sequence[Sequence[int]]) -> bool:
    directed = isinstance(G, Digraph)
    n = G.order
    seen = set()
    for c in cycles:
        if sorted(c) != list(range(n)):
            return False
        for u, v in zip(c, tuple(c[1:]) + tuple(c[:1])):
            if not G.adjacency[u][v]:
                return False
            e = (u, v) if directed else (min(u, v), max(u, v))
            if e in seen:
                return False
            seen.add(e)
    total = sum(map(sum, G.adjacency)) // (1 if directed else 2)
    return len(seen) == total


def _cyclic_group(perm: Sequence[int]) -> list[tuple[int, ...]]:
    return group_closure([tuple(perm)], len(perm))


def hamiltonian_decomposition(G: Graph, invariance: Sequence[int] | None = None,
                              budget: int = DEFAULT_BUDGET) -> CycleSet:
    """Edge-disjoint Hamiltonian cycles covering every edge of a regular graph of even valency.

    With `invariance` (an automorphism), search for one cycle disjoint from all its
    images under the powers of the automorphism and return that orbit.
    """
    degs = set(G.degrees())
    if len(degs) != 1 or degs.pop() % 2:
        raise ValueError("graph must be regular of even valency")
    c = G.degrees()[0] // 2
    n = G.order
    if invariance is not None:
        inv = tuple(invariance)
        if any(G.adjacency[i][j] != G.adjacency[inv[i]][inv[j]] for i in range(n) for j in range(n)):
            raise ValueError("permutation is not an automorphism")
        group = _cyclic_group(inv)
        if len(group) != c:
            raise ValueError(f"automorphism order {len(group)} differs from number of cycles {c}")
        s = _CycleSearch(G.adjacency, group, False, budget)
        found = s.run((0,), limit=1)
        if not found:
            raise NotFound("no invariant Hamiltonian decomposition exists for this automorphism")
        base = found[0]
        cycles = [apply_perm(g, base) for g in group]
        return CycleSet(tuple(cycles), False)
    # plain backtracking: peel off one Hamiltonian cycle at a time
    nodes = [0]

    def peel(adj, left):
        if left == 0:
            return []
        s = _CycleSearch(adj, [tuple(range(n))], False, budget - nodes[0])
        if left == 1:
            found = s.run((0,), limit=1)
            nodes[0] += s.nodes
            return [found[0]] if found else None
        result = None

        def try_rest(cyc):
            nonlocal result
            sub = [list(r) for r in adj]
            for u, v in zip(cyc, cyc[1:] + cyc[:1]):
                sub[u][v] = sub[v][u] = 0
            rest = peel(_mat(sub), left - 1)
            if rest is not None:
                result = [cyc] + rest
                return True
            return False

        s.run((0,), limit=1, close_check=try_rest)
        nodes[0] += s.nodes
        return result

    cycles = peel(G.adjacency, c)
    if cycles is None:
        raise NotFound("no Hamiltonian decomposition exists")
    return CycleSet(tuple(cycles), False)


def cycle_graph(n: int) -> Graph:
    return Graph([[int((i - j) % n in (1, n - 1)) for j in range(n)] for i in range(n)])
