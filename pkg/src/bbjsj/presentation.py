"""Dicks-Leary presentations of Bestvina-Brady groups.

Generators are the edges of the graph, each oriented from its smaller to its
larger endpoint; the edge ``(v, w)`` stands for ``v w^-1`` inside the
right-angled Artin group. A word is a tuple of ``(generator index, +1/-1)``
pairs.

For a triangle ``u < v < w`` put ``a = e_uv``, ``b = e_vw``, ``c = e_uw``.
Both ``a b`` and ``b a`` equal ``c``, giving the relators ``a b c^-1`` and
``b a c^-1``.
"""

from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import HypothesisViolation, InternalError
from .graph import SimplicialGraph, is_connected, iter_bits, spanning_tree, connected_components
from .intmat import smith_invariants
from .topology import is_flag_simply_connected


class DirectedEdge(NamedTuple):
    tail: str
    head: str

    def reversed(self):
        return DirectedEdge(self.head, self.tail)


# words


def invert(word):
    return tuple((g, -e) for g, e in reversed(word))


def free_reduce(word):
    out = []
    for letter in word:
        if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def cyclic_reduce(word):
    word = free_reduce(word)
    i, j = 0, len(word) - 1
    while i < j and word[i][0] == word[j][0] and word[i][1] == -word[j][1]:
        i += 1
        j -= 1
    return word[i:j + 1]


def commutator(x, y):
    """Cyclically reduced form of ``x y x^-1 y^-1``."""
    return cyclic_reduce(x + y + invert(x) + invert(y))


def is_commutator(word):
    """Decide whether ``word`` is a commutator in the free group.

    Uses Wicks' criterion: a cyclically reduced word is a commutator iff some
    cyclic permutation of it reads ``X Y Z X^-1 Y^-1 Z^-1``.
    """
    w = cyclic_reduce(word)
    n = len(w)
    if n == 0:
        return True
    if n % 2:
        return False
    sums = {}
    for g, e in w:
        sums[g] = sums.get(g, 0) + e
    if any(sums.values()):
        return False
    h = n // 2
    for r in range(h):
        rot = w[r:] + w[:r]
        p, r_inv = rot[:h], invert(rot[h:])
        # need p = X Y Z and r_inv = Z Y X
        for x in range(h + 1):
            if p[:x] != r_inv[h - x:]:
                continue
            for z in range(h - x + 1):
                if p[h - z:] == r_inv[:z] and p[x:h - z] == r_inv[z:h - x]:
                    return True
    return False


@dataclass(frozen=True)
class GroupPresentation:
    """Generators are directed edges; relators are freely and cyclically reduced words.

    ``commutator_pairs`` is filled in by :func:`reduced_presentation`: entry
    ``k`` is a pair ``(x, y)`` with ``relators[k] == commutator(x, y)``.
    """

    generators: tuple
    relators: tuple
    commutator_pairs: tuple = field(default=None, compare=False)

    @property
    def num_generators(self):
        return len(self.generators)

    def generator_names(self):
        plain = all(len(t) == 1 and len(h) == 1 for t, h in self.generators)
        sep = "" if plain else "_"
        return [f"e_{t}{sep}{h}" for t, h in self.generators]

    def format_word(self, word):
        names = self.generator_names()
        return " ".join(names[g] if e == 1 else f"{names[g]}^-1" for g, e in word)

    def exponent_matrix(self):
        rows = []
        for word in self.relators:
            row = [0] * len(self.generators)
            for g, e in word:
                row[g] += e
            rows.append(row)
        return rows

    def to_text(self):
        lines = ["gen " + ", ".join(self.generator_names())]
        lines += ["rel " + self.format_word(w) if w else "rel 1" for w in self.relators]
        return "\n".join(lines) + "\n"

    def to_dict(self):
        return {
            "generators": [list(e) for e in self.generators],
            "generator_names": self.generator_names(),
            "relators": [[[g, e] for g, e in w] for w in self.relators],
            "relators_text": [self.format_word(w) for w in self.relators],
        }


@dataclass(frozen=True)
class GroupDescriptor:
    """Symbolic name of a group: ``free_abelian``/``free`` with a rank, or ``bbg``/``raag`` on a graph."""

    kind: str
    rank: int = None
    graph: SimplicialGraph = field(default=None, compare=False)
    vertices: tuple = None

    @classmethod
    def free_abelian(cls, rank):
        return cls("free_abelian", rank)

    @classmethod
    def free(cls, rank):
        return cls("free", rank)

    @classmethod
    def bbg(cls, graph):
        return cls("bbg", graph=graph, vertices=graph.vertices)

    @classmethod
    def raag(cls, graph):
        return cls("raag", graph=graph, vertices=graph.vertices)

    def label(self):
        if self.kind == "free_abelian":
            return {0: "1", 1: "Z"}.get(self.rank, f"Z^{self.rank}")
        if self.kind == "free":
            return {0: "1", 1: "Z"}.get(self.rank, f"F_{self.rank}")
        letter = "H" if self.kind == "bbg" else "A"
        return f"{letter}_{{{' '.join(self.vertices)}}}"

    def to_dict(self):
        if self.kind in ("free_abelian", "free"):
            return {"kind": self.kind, "rank": self.rank}
        return {"kind": self.kind, "vertices": list(self.graph.vertices), "edges": [list(e) for e in self.graph.edges]}


def check_finitely_presented(g):
    """Raise HypothesisViolation unless ``g`` is nonempty, connected and chordal."""
    if not g.n:
        raise HypothesisViolation("empty", message="graph has no vertices")
    if not is_connected(g):
        raise HypothesisViolation("not_connected", connected_components(g))
    verdict = is_flag_simply_connected(g)
    if not verdict:
        raise HypothesisViolation("flag_not_simply_connected", verdict.witness)
    return verdict


def _triangles(g):
    adj = g.adj
    out = []
    for u in range(g.n):
        higher = adj[u] >> (u + 1) << (u + 1)
        for v in iter_bits(higher):
            for w in iter_bits(higher & adj[v] >> (v + 1) << (v + 1)):
                out.append((u, v, w))
    return out


def _edge_numbering(g):
    return {e: k for k, e in enumerate(g.edge_indices())}


def dicks_leary_presentation(g):
    check_finitely_presented(g)
    num = _edge_numbering(g)
    relators = []
    for u, v, w in _triangles(g):
        a, b, c = num[u, v], num[v, w], num[u, w]
        relators.append(((a, 1), (b, 1), (c, -1)))
        relators.append(((b, 1), (a, 1), (c, -1)))
    gens = tuple(DirectedEdge(*e) for e in g.edges)
    return GroupPresentation(gens, tuple(relators))


def reduced_presentation(g):
    """Tietze-reduce the Dicks-Leary presentation onto a BFS spanning tree.

    Each non-tree generator is solved from the relator ``a b c^-1`` of a
    triangle whose other two edges are already expressed in tree generators.
    Every substituted word then freely equals the tree path between the
    endpoints, so ``a b c^-1`` collapses and ``b a c^-1`` becomes the
    commutator ``[b, a]`` of tree words.
    """
    check_finitely_presented(g)
    num = _edge_numbering(g)
    tree = [(g.index(u), g.index(v)) for u, v in spanning_tree(g)]
    new_index = {num[e]: k for k, e in enumerate(tree)}
    subst = {old: ((k, 1),) for old, k in new_index.items()}
    pending = set(num.values()) - set(subst)
    triangles = [(num[u, v], num[v, w], num[u, w]) for u, v, w in _triangles(g)]

    passes = 0
    limit = g.num_edges
    while pending:
        passes += 1
        if passes > limit:
            raise InternalError("non-tree generator elimination did not terminate")
        progress = False
        for a, b, c in triangles:
            unknown = [x for x in (a, b, c) if x in pending]
            if len(unknown) != 1:
                continue
            x = unknown[0]
            if x == c:
                word = subst[a] + subst[b]
            elif x == a:
                word = subst[c] + invert(subst[b])
            else:
                word = invert(subst[a]) + subst[c]
            subst[x] = free_reduce(word)
            pending.discard(x)
            progress = True
        if not progress:
            raise InternalError(f"stuck eliminating generators {sorted(pending)}")

    relators, pairs, seen = [], [], set()
    for a, b, c in triangles:
        if free_reduce(subst[a] + subst[b] + invert(subst[c])):
            raise InternalError("triangle relator did not collapse after substitution")
        x, y = subst[b], subst[a]
        word = commutator(x, y)
        if word and word not in seen:
            seen.add(word)
            relators.append(word)
            pairs.append((x, y))
    gens = tuple(DirectedEdge(g.names[i], g.names[j]) for i, j in tree)
    return GroupPresentation(gens, tuple(relators), tuple(pairs))


def abelianization(p):
    """Abelian invariants ``(rank, torsion)`` from the relator exponent-sum matrix."""
    inv = smith_invariants(p.exponent_matrix()) if p.relators else []
    return p.num_generators - len(inv), [d for d in inv if d > 1]


def recognize_special(g):
    """Identify H_g as Z^(n-1) for complete graphs, F_(n-1) for trees, else leave it symbolic.

    Complete graphs win the tie on one and two vertices, where both labels
    name the same group.
    """
    check_finitely_presented(g)
    return special_descriptor(g)


def special_descriptor(g):
    n = g.n
    if g.is_complete():
        return GroupDescriptor.free_abelian(n - 1)
    if g.num_edges == n - 1:
        return GroupDescriptor.free(n - 1)
    return GroupDescriptor.bbg(g)
