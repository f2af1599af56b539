"""Brute-force reference implementations and the small-graph sweep.

Nothing here reuses the optimized routines it checks: adjacency is rebuilt
as Python sets from the public edge list, connectivity is a plain DFS,
cliques and cycles come from subset enumeration, and abelian invariants come
from an alternating row/column Hermite elimination instead of the pivoting
Smith normal form.
"""

import math
import random
import time
from dataclasses import dataclass, field
from itertools import combinations

from .errors import SizeLimitExceeded
from .graph import Clique, SimplicialGraph


def _adjacency(g):
    adj = {v: set() for v in g.vertices}
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def _dfs_connected(adj, keep):
    keep = set(keep)
    if not keep:
        return True
    start = next(iter(keep))
    seen = {start}
    todo = [start]
    while todo:
        x = todo.pop()
        for y in adj[x]:
            if y in keep and y not in seen:
                seen.add(y)
                todo.append(y)
    return len(seen) == len(keep)


def _is_clique(adj, subset):
    return all(b in adj[a] for a, b in combinations(subset, 2))


def brute_cliques(g, limit=16):
    if g.n > limit:
        raise SizeLimitExceeded(f"brute force limited to {limit} vertices")
    adj = _adjacency(g)
    out = []
    for r in range(1, g.n + 1):
        out.extend(Clique(s) for s in combinations(g.vertices, r) if _is_clique(adj, s))
    return out


def brute_cut_vertices(g):
    adj = _adjacency(g)
    return [v for v in g.vertices if not _dfs_connected(adj, set(g.vertices) - {v})]


def brute_separating_cliques(g, limit=16):
    """Every clique whose removal leaves a nonempty disconnected remainder."""
    if g.n > limit:
        raise SizeLimitExceeded(f"brute force limited to {limit} vertices")
    adj = _adjacency(g)
    everything = set(g.vertices)
    out = []
    for r in range(1, g.n):
        for s in combinations(g.vertices, r):
            if _is_clique(adj, s) and not _dfs_connected(adj, everything - set(s)):
                out.append(Clique(s))
    return out


def brute_induced_long_cycle(g, limit=12):
    """The first vertex subset (by size, then position) inducing a cycle of length >= 4."""
    if g.n > limit:
        raise SizeLimitExceeded(f"brute force limited to {limit} vertices")
    adj = _adjacency(g)
    for r in range(4, g.n + 1):
        for s in combinations(g.vertices, r):
            members = set(s)
            if all(len(adj[v] & members) == 2 for v in s) and _dfs_connected(adj, members):
                cycle = [s[0]]
                prev = None
                while len(cycle) < r:
                    nxt = [w for w in sorted(adj[cycle[-1]] & members, key=s.index) if w != prev]
                    prev = cycle[-1]
                    cycle.append(nxt[0])
                return tuple(cycle)
    return None


def is_chordless_cycle(g, cycle):
    """True iff ``cycle`` is a cycle of length >= 4 in ``g`` with no chords."""
    adj = _adjacency(g)
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    for a in range(k):
        for b in range(a + 1, k):
            consecutive = b == a + 1 or (a == 0 and b == k - 1)
            if (cycle[b] in adj[cycle[a]]) != consecutive:
                return False
    return True


# abelian invariants by alternating Hermite elimination


def _echelon(rows):
    rows = [r[:] for r in rows if any(r)]
    if not rows:
        return rows
    width = len(rows[0])
    top = 0
    for col in range(width):
        while True:
            live = [i for i in range(top, len(rows)) if rows[i][col]]
            if len(live) <= 1:
                break
            best = min(live, key=lambda i: abs(rows[i][col]))
            for i in live:
                if i != best:
                    q = rows[i][col] // rows[best][col]
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[best])]
        live = [i for i in range(top, len(rows)) if rows[i][col]]
        if live:
            i = live[0]
            rows[top], rows[i] = rows[i], rows[top]
            top += 1
            if top == len(rows):
                break
    return [r for r in rows if any(r)]


def _transpose(rows, width):
    if not rows:
        return []
    return [list(c) for c in zip(*rows)] if rows else [[] for _ in range(width)]


def _diagonal(rows):
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            if x and i != j:
                return False
    return True


def brute_abelianization(p, limit=64):
    """Abelian invariants of a presentation, computed without the Smith normal form routine."""
    ngen = len(p.generators)
    if ngen > limit or len(p.relators) > limit:
        raise SizeLimitExceeded(f"matrix dimensions limited to {limit}")
    rows = []
    for word in p.relators:
        row = [0] * ngen
        for gen, exp in word:
            row[gen] += exp
        rows.append(row)
    mat = _echelon(rows)
    while mat and not _diagonal(mat):
        cols = _echelon(_transpose(mat, len(mat[0])))
        mat = _echelon(_transpose(cols, len(cols[0])))
    diag = [abs(mat[i][i]) for i in range(len(mat))]
    # enforce the divisibility chain: (a, b) -> (gcd, lcm)
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            a, b = diag[i], diag[j]
            gcd = math.gcd(a, b)
            diag[i], diag[j] = gcd, a * b // gcd
    return ngen - len(diag), [d for d in diag if d > 1]


# the sweep


def _masks_to_adj(mask, n, tri):
    adj = [0] * n
    for j in range(1, n):
        low = (mask >> tri[j]) & ((1 << j) - 1)
        adj[j] = low
        i = 0
        while low:
            if low & 1:
                adj[i] |= 1 << j
            low >>= 1
            i += 1
    return adj


def _flood_connected(adj, n):
    if n == 0:
        return True
    seen = 1
    frontier = 1
    full = (1 << n) - 1
    while frontier:
        reach = 0
        i = 0
        f = frontier
        while f:
            if f & 1:
                reach |= adj[i]
            f >>= 1
            i += 1
        frontier = reach & ~seen
        seen |= frontier
    return seen == full


def _vertex_names(n):
    return [str(i) for i in range(n)]


def graphs_with_n_vertices(n, sample=None, rng=None):
    """Yield ``(mask, adjacency list)`` for every labelled graph on n vertices, or a seeded sample."""
    tri = [j * (j - 1) // 2 for j in range(n + 1)]
    total = 1 << tri[n]
    if sample is None or sample >= total:
        masks = range(total)
    else:
        masks = sorted(rng.sample(range(total), sample))
    for mask in masks:
        yield mask, _masks_to_adj(mask, n, tri)


@dataclass
class SweepReport:
    seed: int
    max_n: int
    min_n: int
    graph_filter: str
    checks: tuple
    visited: dict = field(default_factory=dict)
    applied: dict = field(default_factory=dict)
    failures: dict = field(default_factory=dict)
    examples: dict = field(default_factory=dict)
    seconds: dict = field(default_factory=dict)
    max_examples: int = 10

    @property
    def ok(self):
        return not any(self.failures.values())

    def merge(self, other):
        for n, c in other.visited.items():
            self.visited[n] = self.visited.get(n, 0) + c
        for name in self.checks:
            self.applied[name] = self.applied.get(name, 0) + other.applied.get(name, 0)
            self.failures[name] = self.failures.get(name, 0) + other.failures.get(name, 0)
            room = self.max_examples - len(self.examples.setdefault(name, []))
            self.examples[name].extend(other.examples.get(name, [])[:max(room, 0)])
            self.seconds[name] = self.seconds.get(name, 0.0) + other.seconds.get(name, 0.0)

    def to_dict(self):
        return {
            "seed": self.seed,
            "min_n": self.min_n,
            "max_n": self.max_n,
            "filter": self.graph_filter,
            "graphs_visited": {str(n): c for n, c in sorted(self.visited.items())},
            "checks": {
                name: {
                    "applied": self.applied.get(name, 0),
                    "counterexamples": self.failures.get(name, 0),
                    "examples": self.examples.get(name, []),
                }
                for name in self.checks
            },
            "ok": self.ok,
        }


FILTERS = ("connected", "chordal")
DEFAULT_LARGE_SAMPLE = 20000


def _run_chunk(args):
    n, masks, checks, graph_filter, seed, max_examples = args
    from .checks import CHECKS
    from .graph import chordality_mask

    report = SweepReport(seed, n, n, graph_filter, tuple(checks), max_examples=max_examples)
    names = _vertex_names(n)
    tri = [j * (j - 1) // 2 for j in range(n + 1)]
    funcs = [(name, CHECKS[name]) for name in checks]
    clock = time.perf_counter
    visited = 0
    for mask in masks:
        adj = _masks_to_adj(mask, n, tri)
        if not _flood_connected(adj, n):
            continue
        chordal = chordality_mask(adj)[0]
        if graph_filter == "chordal" and not chordal:
            continue
        visited += 1
        g = SimplicialGraph.from_masks(names, adj)
        for name, check in funcs:
            if check.needs_chordal and not chordal:
                continue
            t0 = clock()
            try:
                problem = check(g)
            except Exception as exc:  # a crash is a counterexample too
                problem = f"raised {type(exc).__name__}: {exc}"
            report.seconds[name] = report.seconds.get(name, 0.0) + clock() - t0
            report.applied[name] = report.applied.get(name, 0) + 1
            if problem:
                report.failures[name] = report.failures.get(name, 0) + 1
                bucket = report.examples.setdefault(name, [])
                if len(bucket) < max_examples:
                    bucket.append({"graph": g.to_dict(), "problem": problem})
    report.visited[n] = visited
    return report


def sweep_small_graphs(max_n, checks, seed=0, min_n=1, graph_filter="chordal", sample=None,
                       threads=1, max_examples=10):
    """Run registered cross-checks over small connected graphs.

    Every labelled graph on ``min_n..max_n`` vertices is generated from its
    adjacency bitmask (or, when ``sample`` is given or ``n >= 8``, a seeded
    uniform sample of masks). Disconnected graphs are skipped, and with
    ``graph_filter="chordal"`` so are graphs failing the chordality test.
    The report is identical for any ``threads`` value.
    """
    from .checks import CHECKS

    if max_n > 8:
        raise ValueError("max_n is limited to 8")
    if graph_filter not in FILTERS:
        raise ValueError(f"graph_filter must be one of {FILTERS}")
    checks = tuple(checks)
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise ValueError(f"unknown checks {unknown}; known: {sorted(CHECKS)}")
    rng = random.Random(seed)
    jobs = []
    for n in range(min_n, max_n + 1):
        total = 1 << (n * (n - 1) // 2)
        size = sample if sample is not None else (DEFAULT_LARGE_SAMPLE if n >= 8 else None)
        if size is None or size >= total:
            masks = range(total)
        else:
            masks = sorted(rng.sample(range(total), size))
        step = max(1, len(masks) // max(1, 4 * threads)) if threads > 1 else len(masks) or 1
        for start in range(0, len(masks), step):
            jobs.append((n, masks[start:start + step], checks, graph_filter, seed, max_examples))
    report = SweepReport(seed, max_n, min_n, graph_filter, checks, max_examples=max_examples)
    if threads > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(threads) as pool:
            parts = list(pool.map(_run_chunk, jobs))
    else:
        parts = [_run_chunk(job) for job in jobs]
    for part in parts:
        report.merge(part)
    return report
