"""Abelian JSJ-decompositions as explicit graphs of groups.

The decomposition is built by repeated cutting. A piece (initially the whole
graph) with a separating clique of size >= 2 is cut along the first clique
of least size: each component C of ``piece - K`` gives a new piece ``C + K``,
the new pieces are joined in a star through the first of them by edges
labelled K, and tree edges that touched the old piece move to the first new
piece containing their clique. Pieces without separating cliques are final.

For a right-angled Artin group (``flavor="raag"``) a piece or clique on m
vertices carries Z^m; for the Bestvina-Brady group (``flavor="bbg"``) it
carries Z^(m-1). Both flavours share pieces and tree.

Graphs with cut vertices are outside the cutting procedure proper;
:func:`jsj_report` first splits them into blocks, decomposes each block, and
joins blocks at their cut vertices (edge group Z for the Artin group, trivial
for the Bestvina-Brady group, i.e. a free product).
"""

from collections import deque
from dataclasses import dataclass, field

from .errors import HypothesisViolation
from .graph import (
    _blocks_and_cuts,
    bit_tuple,
    components_mask,
    connected_mask,
    induced_subgraph_mask,
)
from .presentation import GroupDescriptor, check_finitely_presented, special_descriptor
from .splitting import separating_clique_masks

FLAVORS = ("raag", "bbg")


@dataclass(frozen=True)
class GoGVertex:
    id: int
    piece: tuple
    group: GroupDescriptor


@dataclass(frozen=True)
class GoGEdge:
    source: int
    target: int
    clique: tuple
    group: GroupDescriptor


@dataclass(frozen=True)
class GraphOfGroups:
    flavor: str
    vertices: tuple
    edges: tuple

    def to_dict(self):
        return {
            "flavor": self.flavor,
            "vertices": [
                {"id": v.id, "piece": list(v.piece), "group": v.group.to_dict()} for v in self.vertices
            ],
            "edges": [
                {"from": e.source, "to": e.target, "clique": list(e.clique), "group": e.group.to_dict()}
                for e in self.edges
            ],
        }

    def neighbors(self, vid):
        out = []
        for e in self.edges:
            if e.source == vid:
                out.append(e.target)
            elif e.target == vid:
                out.append(e.source)
        return sorted(out)


def _check_flavor(flavor):
    if flavor not in FLAVORS:
        raise ValueError(f"flavor must be one of {FLAVORS}, got {flavor!r}")


def clique_group(size, flavor):
    return GroupDescriptor.free_abelian(size if flavor == "raag" else size - 1)


def piece_group(g, mask, flavor):
    if g.is_clique_mask(mask):
        return clique_group(mask.bit_count(), flavor)
    sub = induced_subgraph_mask(g, mask)
    m = sub.n
    if flavor == "bbg":
        if sub.num_edges == m - 1:
            return GroupDescriptor.free(m - 1)
        return GroupDescriptor.bbg(sub)
    return GroupDescriptor.raag(sub)


def _is_clique(adj, mask):
    # cliques never contain a separating clique, so they need no search
    for v in bit_tuple(mask):
        if mask & ~adj[v] != 1 << v:
            return False
    return True


def _cut_pieces(adj, root):
    """Cut ``root`` along minimal separating cliques until no piece has one.

    Returns ``(pieces, edges)`` with pieces as bitmasks and edges as
    ``[i, j, clique_mask]`` lists indexing into ``pieces``.
    """
    pieces = [root]
    edges = []
    queue = deque([0])
    while queue:
        p = queue.popleft()
        if _is_clique(adj, pieces[p]):
            continue
        seps = separating_clique_masks(adj, pieces[p], floor=2, first=True)
        if not seps:
            continue
        k = seps[0]
        new = [c | k for c in components_mask(adj, pieces[p] & ~k)]
        ids = [p] + list(range(len(pieces), len(pieces) + len(new) - 1))
        pieces[p] = new[0]
        pieces.extend(new[1:])
        for e in edges:
            for side in (0, 1):
                if e[side] == p:
                    e[side] = next(i for i in ids if pieces[i] & e[2] == e[2])
        edges.extend([ids[0], i, k] for i in ids[1:])
        queue.extend(ids)
    return pieces, edges


def _assemble(g, flavor, pieces, edges):
    order = sorted(range(len(pieces)), key=lambda i: bit_tuple(pieces[i]))
    new_id = {old: new for new, old in enumerate(order)}
    vertices = tuple(
        GoGVertex(new_id[old], g.names_of(pieces[old]), piece_group(g, pieces[old], flavor)) for old in order
    )
    out = []
    for a, b, k in edges:
        a, b = sorted((new_id[a], new_id[b]))
        out.append(GoGEdge(a, b, g.names_of(k), clique_group(k.bit_count(), flavor)))
    out.sort(key=lambda e: (e.source, e.target, bit_tuple(g.mask_of(e.clique))))
    return GraphOfGroups(flavor, vertices, tuple(out))


def jsj_decomposition(g, flavor):
    """Vertex-elliptic (``raag``) or edge-elliptic (``bbg``) abelian JSJ-decomposition.

    ``g`` must be connected, chordal, free of cut vertices and not complete.
    """
    _check_flavor(flavor)
    check_finitely_presented(g)
    _, cuts = _blocks_and_cuts(g.adj)
    if cuts:
        raise HypothesisViolation("has_cut_vertex", g.names_of(cuts))
    if g.is_complete():
        raise HypothesisViolation("complete", g.vertices)
    pieces, edges = _cut_pieces(g.adj, g.full_mask)
    return _assemble(g, flavor, pieces, edges)


@dataclass(frozen=True)
class JSJReport:
    """Front-door result: the decomposition plus how it was obtained.

    ``kind`` is ``"complete"`` (one vertex), ``"jsj"`` (the cutting procedure
    on a graph without cut vertices) or ``"blocks"`` (blocks joined at cut
    vertices, each block decomposed separately).
    """

    flavor: str
    kind: str
    group: GroupDescriptor
    decomposition: GraphOfGroups
    cut_vertices: tuple = ()
    blocks: tuple = ()
    notes: tuple = field(default=())

    @property
    def combination(self):
        if self.kind != "blocks":
            return None
        return "free_product" if self.flavor == "bbg" else "amalgam_over_Z"

    def to_dict(self):
        d = self.decomposition.to_dict()
        d["kind"] = self.kind
        d["group"] = self.group.to_dict()
        d["cut_vertices"] = list(self.cut_vertices)
        d["blocks"] = [list(b) for b in self.blocks]
        d["combination"] = self.combination
        d["notes"] = list(self.notes)
        return d


def jsj_report(g, flavor):
    _check_flavor(flavor)
    check_finitely_presented(g)
    n = g.n
    if flavor == "bbg":
        whole = special_descriptor(g)
    else:
        whole = GroupDescriptor.free_abelian(n) if g.is_complete() else GroupDescriptor.raag(g)

    if g.is_complete():
        d = _assemble(g, flavor, [g.full_mask], [])
        return JSJReport(flavor, "complete", whole, d)

    blocks, cuts = _blocks_and_cuts(g.adj)
    if not cuts:
        pieces, edges = _cut_pieces(g.adj, g.full_mask)
        return JSJReport(flavor, "jsj", whole, _assemble(g, flavor, pieces, edges))

    pieces, edges, owner = [], [], []
    for b, block in enumerate(blocks):
        if g.is_clique_mask(block):
            bp, be = [block], []
        else:
            bp, be = _cut_pieces(g.adj, block)
        offset = len(pieces)
        pieces.extend(bp)
        owner.extend([b] * len(bp))
        edges.extend([i + offset, j + offset, k] for i, j, k in be)
    canon = sorted(range(len(pieces)), key=lambda i: bit_tuple(pieces[i]))
    for v in bit_tuple(cuts):
        bit = 1 << v
        hosts, used = [], set()
        for i in canon:
            if pieces[i] & bit and owner[i] not in used:
                used.add(owner[i])
                hosts.append(i)
        edges.extend([hosts[0], h, bit] for h in hosts[1:])
    note = "cut vertices handled by block decomposition before cutting along cliques"
    return JSJReport(
        flavor,
        "blocks",
        whole,
        _assemble(g, flavor, pieces, edges),
        cut_vertices=g.names_of(cuts),
        blocks=tuple(g.names_of(b) for b in blocks),
        notes=(note,),
    )


def verify_decomposition(d, g):
    """List every violated structural invariant of ``d`` as a decomposition of ``g``.

    An empty list means the decomposition passes. Each entry starts with the
    violation kind, e.g. ``"TreeViolation: ..."``.
    """
    problems = []
    ids = [v.id for v in d.vertices]
    if sorted(ids) != list(range(len(ids))):
        problems.append(f"IdViolation: vertex ids {ids} are not 0..{len(ids) - 1}")
        return problems
    try:
        piece = {v.id: g.mask_of(v.piece) for v in d.vertices}
        clique = [g.mask_of(e.clique) for e in d.edges]
    except KeyError as exc:
        return [f"UnknownVertex: {exc}"]
    adj = g.adj

    # tree
    parent = list(range(len(ids)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    cyclic = False
    for e in d.edges:
        if e.source not in piece or e.target not in piece:
            problems.append(f"TreeViolation: edge {e.source}-{e.target} has an unknown endpoint")
            cyclic = True
            continue
        ra, rb = find(e.source), find(e.target)
        if ra == rb:
            cyclic = True
        parent[ra] = rb
    if not ids:
        problems.append("TreeViolation: no vertices")
    elif cyclic or len(d.edges) != len(ids) - 1 or len({find(i) for i in ids}) != 1:
        problems.append(f"TreeViolation: {len(ids)} vertices and {len(d.edges)} edges do not form a tree")

    cover = 0
    for m in piece.values():
        cover |= m
    if cover != g.full_mask:
        problems.append(f"CoverViolation: pieces miss {list(g.names_of(g.full_mask & ~cover))}")

    for e, k in zip(d.edges, clique):
        tag = f"edge {e.source}-{e.target}"
        if not g.is_clique_mask(k) or not k:
            problems.append(f"CliqueViolation: {tag} label {list(e.clique)} is not a clique")
        rest = g.full_mask & ~k
        if not rest or connected_mask(adj, rest):
            problems.append(f"SeparationViolation: {tag} clique {list(e.clique)} does not separate the graph")
        if e.source in piece and e.target in piece:
            a, b = piece[e.source], piece[e.target]
            if a & k != k or b & k != k:
                problems.append(f"SubsetViolation: {tag} clique is not inside both endpoint pieces")
            elif a & b != k:
                problems.append(f"IntersectionViolation: {tag} pieces meet in {list(g.names_of(a & b))}")
        want = clique_group(len(e.clique), d.flavor)
        if e.group != want:
            problems.append(f"RankViolation: {tag} carries {e.group.label()}, expected {want.label()}")

    for v in d.vertices:
        m = piece[v.id]
        if not m or not connected_mask(adj, m):
            problems.append(f"PieceViolation: piece {v.id} is empty or disconnected")
            continue
        seps = [] if _is_clique(adj, m) else separating_clique_masks(adj, m, first=True)
        if seps:
            problems.append(
                f"PieceViolation: piece {v.id} has separating clique {list(g.names_of(seps[0]))}"
            )
        want = piece_group(g, m, d.flavor)
        if v.group != want:
            problems.append(f"LabelViolation: piece {v.id} carries {v.group.label()}, expected {want.label()}")
    return problems


def _dot_quote(s):
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(d):
    lines = [f"graph {d.flavor}_jsj {{"]
    for v in d.vertices:
        lines.append(f"  n{v.id} [label={_dot_quote(v.group.label())}, piece={_dot_quote(' '.join(v.piece))}];")
    for e in d.edges:
        lines.append(
            f"  n{e.source} -- n{e.target} [label={_dot_quote(e.group.label())}, "
            f"clique={_dot_quote(' '.join(e.clique))}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(d):
    import json

    return json.dumps(d.to_dict(), indent=2) + "\n"


def to_text(d):
    nv, ne = len(d.vertices), len(d.edges)
    lines = [f"{d.flavor} decomposition: {nv} vertex group{'s' * (nv != 1)}, {ne} edge group{'s' * (ne != 1)}"]
    for v in d.vertices:
        lines.append(f"  v{v.id} {v.group.label():<6} piece {' '.join(v.piece)}")
    for e in d.edges:
        lines.append(f"  v{e.source} -- v{e.target} {e.group.label():<6} clique {' '.join(e.clique)}")
    return "\n".join(lines) + "\n"
