"""Abelian splittings of right-angled Artin groups and Bestvina-Brady groups.

The Bestvina-Brady group H_g (g connected, chordal) splits over an abelian
subgroup iff g has a cut vertex, is complete, or has a separating clique on
at least two vertices. The right-angled Artin group A_g splits over an
abelian subgroup iff g is disconnected, complete, or has a separating clique
of any size. A separating n-clique gives edge groups Z^n for A_g and
Z^(n-1) for H_g.
"""

from dataclasses import dataclass

from .errors import DisconnectedInput, NotSeparating, TooSmall
from .graph import (
    Clique,
    _blocks_and_cuts,
    all_cliques_mask,
    components_mask,
    connected_components,
    connected_mask,
    is_connected,
    star_of_edge,
)
from .presentation import check_finitely_presented


@dataclass(frozen=True)
class SplittingVerdict:
    """Decision plus witness for one group flavour (``group`` is ``"bbg"`` or ``"raag"``).

    ``case`` is one of ``cut_vertex``, ``complete``, ``separating_clique``,
    ``disconnected`` or ``none``. ``witness`` is respectively the cut vertex
    name, the vertex count, the :class:`Clique`, the tuple of components, or
    None. ``decomposition_hint`` lists the components left after removing the
    witness, when there is one.
    """

    group: str
    splits: bool
    case: str
    witness: object = None
    edge_group_rank_raag: int = None
    edge_group_rank_bbg: int = None
    decomposition_hint: tuple = ()

    def to_dict(self):
        w = self.witness
        if isinstance(w, Clique):
            w = list(w.members)
        elif isinstance(w, tuple):
            w = [list(c) for c in w]
        return {
            "group": self.group,
            "splits": self.splits,
            "case": self.case,
            "witness": w,
            "edge_group_rank_raag": self.edge_group_rank_raag,
            "edge_group_rank_bbg": self.edge_group_rank_bbg,
            "decomposition_hint": [list(c) for c in self.decomposition_hint],
        }

    def to_text(self):
        name = "H" if self.group == "bbg" else "A"
        if not self.splits:
            return f"{name}_Gamma does not split over an abelian subgroup\n"
        rank = self.edge_group_rank_bbg if self.group == "bbg" else self.edge_group_rank_raag
        if self.case == "cut_vertex":
            head = f"cut vertex {self.witness}"
        elif self.case == "complete":
            head = f"complete graph on {self.witness} vertices"
        elif self.case == "separating_clique":
            head = f"separating clique {self.witness}"
        else:
            head = "disconnected graph"
        if rank == 0:
            how = "free product"
        else:
            how = "over Z" if rank == 1 else f"over Z^{rank}"
        lines = [f"{name}_Gamma splits ({how}): {head}"]
        for comp in self.decomposition_hint:
            lines.append("  component " + " ".join(comp))
        return "\n".join(lines) + "\n"


def separating_clique_masks(adj, mask, floor=1, first=False):
    """Cliques inside ``mask`` whose removal leaves at least two components there.

    Only cliques with at least ``floor`` vertices are tested; ``first`` stops
    at the first hit in canonical order.
    """
    out = []
    for k in all_cliques_mask(adj, mask):
        if k.bit_count() < floor:
            continue
        rest = mask & ~k
        if rest and not connected_mask(adj, rest):
            out.append(k)
            if first:
                break
    return out


def _require_connected(g):
    if not is_connected(g):
        raise DisconnectedInput(f"graph has components {connected_components(g)}")


def separating_cliques(g):
    """All separating cliques sorted by (size, members); the size-1 ones are the cut vertices."""
    _require_connected(g)
    return [Clique(g.names_of(k)) for k in separating_clique_masks(g.adj, g.full_mask)]


def minimal_separating_cliques(g, floor=2):
    """Separating cliques of the least size that is at least ``floor``."""
    _require_connected(g)
    seps = separating_clique_masks(g.adj, g.full_mask, floor=floor)
    if not seps:
        return []
    k0 = seps[0].bit_count()
    return [Clique(g.names_of(k)) for k in seps if k.bit_count() == k0]


def _hint(g, kmask):
    return tuple(g.names_of(c) for c in components_mask(g.adj, g.full_mask & ~kmask))


def bbg_splitting_verdict(g):
    """Decide whether H_g splits over an abelian subgroup.

    Cases are tried in the order cut vertex, complete, separating clique of
    size >= 2; the first witness in canonical order is reported.
    """
    check_finitely_presented(g)
    _, cuts = _blocks_and_cuts(g.adj)
    if cuts:
        low = cuts & -cuts
        return SplittingVerdict(
            "bbg", True, "cut_vertex", g.names_of(low)[0], 1, 0, _hint(g, low)
        )
    n = g.n
    if g.is_complete():
        return SplittingVerdict("bbg", True, "complete", n, n, n - 1)
    seps = separating_clique_masks(g.adj, g.full_mask, floor=2, first=True)
    if seps:
        k = seps[0]
        size = k.bit_count()
        return SplittingVerdict(
            "bbg", True, "separating_clique", Clique(g.names_of(k)), size, size - 1, _hint(g, k)
        )
    return SplittingVerdict("bbg", False, "none")


def raag_splitting_verdict(g):
    """Decide whether A_g splits over an abelian subgroup (no hypotheses on g)."""
    n = g.n
    if not n:
        return SplittingVerdict("raag", False, "none")
    comps = components_mask(g.adj, g.full_mask)
    if len(comps) > 1:
        return SplittingVerdict(
            "raag", True, "disconnected", tuple(g.names_of(c) for c in comps), 0, None,
            tuple(g.names_of(c) for c in comps),
        )
    if g.is_complete():
        return SplittingVerdict("raag", True, "complete", n, n, n - 1)
    seps = separating_clique_masks(g.adj, g.full_mask, first=True)
    if seps:
        k = seps[0]
        size = k.bit_count()
        return SplittingVerdict(
            "raag", True, "separating_clique", Clique(g.names_of(k)), size, size - 1, _hint(g, k)
        )
    return SplittingVerdict("raag", False, "none")


def splitting_ranks(g, clique):
    """Ranks ``(|K|, |K| - 1)`` of the edge groups a separating clique K gives A_g and H_g."""
    kmask = g.mask_of(clique)
    size = kmask.bit_count()
    if size < 2:
        raise TooSmall(f"clique {sorted(clique)} has fewer than two vertices")
    if not g.is_clique_mask(kmask):
        raise NotSeparating(f"{g.names_of(kmask)} is not a clique")
    rest = g.full_mask & ~kmask
    if not rest or connected_mask(g.adj, rest):
        raise NotSeparating(f"{g.names_of(kmask)} does not separate the graph")
    return size, size - 1


def star_clique_check(g, edge):
    """True iff the star of ``edge`` is a complete graph."""
    return star_of_edge(g, edge).is_complete()
