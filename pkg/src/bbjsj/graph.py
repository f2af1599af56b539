"""Finite simplicial graphs with canonical vertex order.

Vertices are string names. A graph stores them sorted by a natural sort key
(``"2" < "10"``) and keeps adjacency as one integer bitmask per vertex, bit
``i`` standing for the ``i``-th vertex in that order. Every enumeration in the
package walks vertices in this order, so outputs are reproducible.
"""

import json
import re
from collections import deque
from dataclasses import dataclass

from .errors import (
    DisconnectedInput,
    InternalError,
    ParseError,
    SimplicialityError,
    SizeLimitExceeded,
    UnknownEdge,
    UnknownVertex,
)

NAME_RE = re.compile(r"[A-Za-z0-9_]+")
_DIGITS = re.compile(r"(\d+)")

DEFAULT_CLIQUE_CAP = 10**6


def vertex_sort_key(name):
    parts = _DIGITS.split(name)
    return tuple(int(p) if i % 2 else p for i, p in enumerate(parts)), name


def _bit_positions(mask):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


_TABLE_BITS = 12
_BIT_TABLE = tuple(_bit_positions(m) for m in range(1 << _TABLE_BITS))
_TABLE_LIMIT = 1 << _TABLE_BITS


def bit_tuple(mask):
    """Indices of the set bits of ``mask`` in increasing order."""
    if mask < _TABLE_LIMIT:
        return _BIT_TABLE[mask]
    return _bit_positions(mask)


iter_bits = bit_tuple


class SimplicialGraph:
    """An immutable finite simple graph.

    >>> g = SimplicialGraph("abc", [("a", "b"), ("b", "c")])
    >>> g.vertices, g.edges
    (('a', 'b', 'c'), (('a', 'b'), ('b', 'c')))
    """

    __slots__ = ("names", "adj", "_index", "_hash", "_chordal")

    def __init__(self, vertices=(), edges=()):
        edges = [(str(u), str(v)) for u, v in edges]
        names = {str(v) for v in vertices}
        for u, v in edges:
            names.add(u)
            names.add(v)
        names = tuple(sorted(names, key=vertex_sort_key))
        index = {name: i for i, name in enumerate(names)}
        adj = [0] * len(names)
        for u, v in edges:
            if u == v:
                raise SimplicialityError(f"self-loop at {u!r}")
            i, j = index[u], index[v]
            if adj[i] >> j & 1:
                raise SimplicialityError(f"duplicate edge {u!r}-{v!r}")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        self._init(names, tuple(adj), index)

    def _init(self, names, adj, index=None):
        self.names = names
        self.adj = adj
        self._index = index if index is not None else {n: i for i, n in enumerate(names)}
        self._hash = None
        self._chordal = None

    @classmethod
    def from_masks(cls, names, adj):
        """Build from already canonical names and symmetric bitmasks (unchecked)."""
        g = cls.__new__(cls)
        g._init(tuple(names), tuple(adj))
        return g

    # basic accessors

    @property
    def vertices(self):
        return self.names

    @property
    def n(self):
        return len(self.names)

    def __len__(self):
        return len(self.names)

    @property
    def full_mask(self):
        return (1 << len(self.names)) - 1

    @property
    def edges(self):
        names, adj = self.names, self.adj
        return tuple(
            (names[i], names[j]) for i in range(len(names)) for j in iter_bits(adj[i] >> (i + 1) << (i + 1))
        )

    def edge_indices(self):
        adj = self.adj
        return [(i, j) for i in range(len(adj)) for j in iter_bits(adj[i] >> (i + 1) << (i + 1))]

    @property
    def num_edges(self):
        return sum(m.bit_count() for m in self.adj) // 2

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {name!r}") from None

    def __contains__(self, name):
        return name in self._index

    def mask_of(self, names):
        m = 0
        for name in names:
            m |= 1 << self.index(name)
        return m

    def names_of(self, mask):
        names = self.names
        return tuple(names[i] for i in iter_bits(mask))

    def neighbors(self, name):
        return self.names_of(self.adj[self.index(name)])

    def degree(self, name):
        return self.adj[self.index(name)].bit_count()

    def has_edge(self, u, v):
        return bool(self.adj[self.index(u)] >> self.index(v) & 1)

    def is_clique_mask(self, mask):
        for i in iter_bits(mask):
            if mask & ~self.adj[i] & ~(1 << i):
                return False
        return True

    def is_complete(self):
        return self.is_clique_mask(self.full_mask)

    def __eq__(self, other):
        if not isinstance(other, SimplicialGraph):
            return NotImplemented
        return self.names == other.names and self.adj == other.adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.names, self.adj))
        return self._hash

    def __repr__(self):
        return f"SimplicialGraph(vertices={list(self.names)!r}, edges={[list(e) for e in self.edges]!r})"

    def to_dict(self):
        return {"vertices": list(self.names), "edges": [list(e) for e in self.edges]}

    def relabel(self, mapping):
        """Return a copy with every vertex ``v`` renamed to ``mapping[v]``."""
        return SimplicialGraph((mapping[v] for v in self.names), ((mapping[u], mapping[v]) for u, v in self.edges))


@dataclass(frozen=True)
class Clique:
    """A set of pairwise adjacent vertices, stored in canonical order."""

    members: tuple

    @property
    def size(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __str__(self):
        return "{" + ",".join(self.members) + "}"


@dataclass(frozen=True)
class ChordalityCertificate:
    """Exactly one of ``peo`` (perfect elimination ordering) or ``witness_cycle``."""

    peo: tuple = None
    witness_cycle: tuple = None

    def __post_init__(self):
        if (self.peo is None) == (self.witness_cycle is None):
            raise ValueError("exactly one of peo / witness_cycle must be given")

    @property
    def is_chordal(self):
        return self.peo is not None

    def __bool__(self):
        return self.is_chordal


# parsing


def parse_graph(text):
    """Parse the edge-list format (or its JSON alternative) into a graph.

    Edge-list lines are ``u v`` for an edge or ``vertex u`` for a vertex;
    ``#`` starts a comment. JSON input is ``{"vertices": [...], "edges": [[u, v], ...]}``.
    """
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    vertices, edges, seen = [], [], set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(lineno, f"expected two tokens, got {len(parts)}")
        a, b = parts
        if a == "vertex":
            if not NAME_RE.fullmatch(b):
                raise ParseError(lineno, f"bad vertex name {b!r}")
            vertices.append(b)
            continue
        for name in parts:
            if not NAME_RE.fullmatch(name):
                raise ParseError(lineno, f"bad vertex name {name!r}")
        if a == b:
            raise SimplicialityError(f"line {lineno}: self-loop at {a!r}")
        key = frozenset(parts)
        if key in seen:
            raise SimplicialityError(f"line {lineno}: duplicate edge {a!r}-{b!r}")
        seen.add(key)
        edges.append((a, b))
    return SimplicialGraph(vertices, edges)


def _parse_json(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.lineno, exc.msg) from None
    if not isinstance(data, dict):
        raise ParseError(1, "JSON graph must be an object")
    vertices = data.get("vertices", [])
    edges = data.get("edges", [])
    if not isinstance(vertices, list) or not isinstance(edges, list):
        raise ParseError(1, "'vertices' and 'edges' must be lists")
    names = []
    for v in vertices:
        if not isinstance(v, (str, int)) or not NAME_RE.fullmatch(str(v)):
            raise ParseError(1, f"bad vertex name {v!r}")
        names.append(str(v))
    pairs = []
    for e in edges:
        if not isinstance(e, list) or len(e) != 2:
            raise ParseError(1, f"bad edge {e!r}")
        u, v = (str(x) for x in e)
        if not (NAME_RE.fullmatch(u) and NAME_RE.fullmatch(v)):
            raise ParseError(1, f"bad edge {e!r}")
        pairs.append((u, v))
    return SimplicialGraph(names, pairs)


def load_graph(path):
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def format_graph(g):
    """Inverse of :func:`parse_graph` for the edge-list format."""
    lines = [f"{u} {v}" for u, v in g.edges]
    for i, name in enumerate(g.names):
        if not g.adj[i]:
            lines.append(f"vertex {name}")
    return "\n".join(lines) + "\n"


# bitmask kernels


def components_mask(adj, mask):
    """Connected components of the subgraph induced on ``mask``, ordered by lowest vertex."""
    comps = []
    while mask:
        comp = frontier = mask & -mask
        while frontier:
            reach = 0
            for i in iter_bits(frontier):
                reach |= adj[i]
            frontier = reach & mask & ~comp
            comp |= frontier
        comps.append(comp)
        mask &= ~comp
    return comps


def connected_mask(adj, mask):
    if not mask:
        return True
    comp = frontier = mask & -mask
    while frontier:
        reach = 0
        for i in iter_bits(frontier):
            reach |= adj[i]
        frontier = reach & mask & ~comp
        comp |= frontier
    return comp == mask


def maximal_cliques_mask(adj, mask):
    """Bron-Kerbosch with Tomita pivoting, restricted to ``mask``."""
    out = []

    def expand(r, p, x):
        if not p:
            if not x:
                out.append(r)
            return
        pivot_pool = p | x
        best, best_count = -1, -1
        for u in iter_bits(pivot_pool):
            c = (p & adj[u]).bit_count()
            if c > best_count:
                best, best_count = u, c
        for v in iter_bits(p & ~adj[best]):
            bit = 1 << v
            expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    if mask:
        expand(0, mask, 0)
    return out


def clique_sort_key(mask):
    return mask.bit_count(), bit_tuple(mask)


def all_cliques_mask(adj, mask, cap=DEFAULT_CLIQUE_CAP):
    """Every nonempty clique inside ``mask`` as bitmasks sorted by (size, members)."""
    seen = set()
    for m in maximal_cliques_mask(adj, mask):
        if m in seen:
            continue
        sub = m
        while sub:
            if sub not in seen:
                seen.add(sub)
                if len(seen) > cap:
                    raise SizeLimitExceeded(f"more than {cap} cliques")
            sub = (sub - 1) & m
    return sorted(seen, key=clique_sort_key)


# public operations


def induced_subgraph(g, vertices):
    mask = g.mask_of(vertices)
    return induced_subgraph_mask(g, mask)


def induced_subgraph_mask(g, mask):
    idx = bit_tuple(mask)
    pos = {old: new for new, old in enumerate(idx)}
    adj = []
    for old in idx:
        m = 0
        for j in iter_bits(g.adj[old] & mask):
            m |= 1 << pos[j]
        adj.append(m)
    return SimplicialGraph.from_masks([g.names[i] for i in idx], adj)


def is_connected(g):
    """True iff ``g`` has at most one component (the empty graph counts as connected)."""
    return connected_mask(g.adj, g.full_mask)


def connected_components(g):
    return [g.names_of(c) for c in components_mask(g.adj, g.full_mask)]


def _require_connected(g):
    if not is_connected(g):
        raise DisconnectedInput(f"graph has components {connected_components(g)}")


def _blocks_and_cuts(adj):
    """Hopcroft-Tarjan biconnected components. Returns (block masks, cut-vertex mask)."""
    n = len(adj)
    disc = [-1] * n
    low = [0] * n
    blocks = []
    cuts = 0
    clock = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        if not adj[root]:
            blocks.append(1 << root)
            continue
        root_children = 0
        edge_stack = []
        stack = [(root, -1, iter(bit_tuple(adj[root])))]
        while stack:
            v, parent, it = stack[-1]
            pushed = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = clock
                    clock += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(bit_tuple(adj[w]))))
                    pushed = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if pushed:
                continue
            stack.pop()
            if parent == -1:
                continue
            if low[v] < low[parent]:
                low[parent] = low[v]
            if low[v] >= disc[parent]:
                block = 0
                while True:
                    a, b = edge_stack.pop()
                    block |= 1 << a | 1 << b
                    if a == parent and b == v:
                        break
                blocks.append(block)
                if parent != root:
                    cuts |= 1 << parent
        if root_children > 1:
            cuts |= 1 << root
    blocks.sort(key=clique_sort_key)
    return blocks, cuts


def cut_vertices(g):
    """Vertices whose removal disconnects the connected graph ``g``."""
    _require_connected(g)
    return list(g.names_of(_blocks_and_cuts(g.adj)[1]))


def biconnected_blocks(g):
    """Maximal 2-connected subgraphs and bridges, as sorted vertex tuples."""
    return [g.names_of(b) for b in _blocks_and_cuts(g.adj)[0]]


def link_of_vertex(g, v):
    return induced_subgraph_mask(g, g.adj[g.index(v)])


def star_of_vertex(g, v):
    i = g.index(v)
    return induced_subgraph_mask(g, g.adj[i] | 1 << i)


def _edge_ends(g, e):
    u, v = tuple(e)
    i, j = g.index(u), g.index(v)
    if not g.adj[i] >> j & 1:
        raise UnknownEdge(f"{u!r}-{v!r} is not an edge")
    return i, j


def link_of_edge(g, e):
    """Subgraph induced on the common neighbours of both endpoints of ``e``."""
    i, j = _edge_ends(g, e)
    return induced_subgraph_mask(g, g.adj[i] & g.adj[j])


def star_of_edge(g, e):
    i, j = _edge_ends(g, e)
    return induced_subgraph_mask(g, g.adj[i] & g.adj[j] | 1 << i | 1 << j)


def enumerate_cliques(g, cap=DEFAULT_CLIQUE_CAP):
    return [Clique(g.names_of(m)) for m in all_cliques_mask(g.adj, g.full_mask, cap)]


def lex_bfs(adj):
    """Lexicographic breadth-first search; ties go to the smallest index."""
    n = len(adj)
    labels = [[] for _ in range(n)]
    order = []
    remaining = (1 << n) - 1
    for step in range(n):
        best = -1
        for i in iter_bits(remaining):
            if best < 0 or labels[i] > labels[best]:
                best = i
        order.append(best)
        remaining &= ~(1 << best)
        for w in iter_bits(adj[best] & remaining):
            labels[w].append(n - step)
    return order


def _peo_violation(adj, peo):
    pos = [0] * len(adj)
    for k, v in enumerate(peo):
        pos[v] = k
    for k, v in enumerate(peo):
        later = [w for w in iter_bits(adj[v]) if pos[w] > k]
        if len(later) < 2:
            continue
        u = min(later, key=pos.__getitem__)
        for w in later:
            if w != u and not adj[u] >> w & 1:
                return v, u, w
    return None


def _path_avoiding(adj, start, goal, allowed):
    parent = {start: None}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        if x == goal:
            path = []
            while x is not None:
                path.append(x)
                x = parent[x]
            return path[::-1]
        for y in iter_bits(adj[x] & allowed):
            if y not in parent:
                parent[y] = x
                queue.append(y)
    return None


def _chordless_cycle_at(adj, v, u, w):
    n = len(adj)
    allowed = ((1 << n) - 1) & ~adj[v] & ~(1 << v) | 1 << u | 1 << w
    path = _path_avoiding(adj, u, w, allowed)
    return None if path is None else [v] + path


def _canonical_cycle(cycle):
    k = cycle.index(min(cycle))
    rot = cycle[k:] + cycle[:k]
    if rot[-1] < rot[1]:
        rot = [rot[0]] + rot[1:][::-1]
    return rot


def find_chordless_cycle(adj, hint=None):
    """Some induced cycle of length >= 4, or None. ``hint`` is a (v, u, w) triple to try first."""
    if hint is not None:
        cyc = _chordless_cycle_at(adj, *hint)
        if cyc is not None:
            return _canonical_cycle(cyc)
    for v in range(len(adj)):
        nbrs = bit_tuple(adj[v])
        for a, u in enumerate(nbrs):
            for w in nbrs[a + 1:]:
                if adj[u] >> w & 1:
                    continue
                cyc = _chordless_cycle_at(adj, v, u, w)
                if cyc is not None:
                    return _canonical_cycle(cyc)
    return None


def chordality_mask(adj):
    """Return ``(True, peo)`` or ``(False, cycle)`` on index level."""
    peo = lex_bfs(adj)[::-1]
    bad = _peo_violation(adj, peo)
    if bad is None:
        return True, peo
    cyc = find_chordless_cycle(adj, bad)
    if cyc is None:
        raise InternalError("PEO check failed but no chordless cycle was found")
    return False, cyc


def is_chordal(g):
    """Lex-BFS chordality test with a certificate either way (cached on the graph)."""
    if g._chordal is None:
        ok, seq = chordality_mask(g.adj)
        names = tuple(g.names[i] for i in seq)
        g._chordal = ChordalityCertificate(peo=names) if ok else ChordalityCertificate(witness_cycle=names)
    return g._chordal


def spanning_tree(g):
    """BFS spanning tree from the first vertex, as sorted canonical edge pairs."""
    _require_connected(g)
    if not g.n:
        return []
    adj = g.adj
    seen = 1
    queue = deque([0])
    edges = []
    while queue:
        x = queue.popleft()
        for y in iter_bits(adj[x] & ~seen):
            seen |= 1 << y
            edges.append((x, y) if x < y else (y, x))
            queue.append(y)
    edges.sort()
    return [(g.names[i], g.names[j]) for i, j in edges]
