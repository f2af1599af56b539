"""Named cross-checks run by :func:`bbjsj.oracle.sweep_small_graphs`.

Each check takes a connected graph and returns ``None`` when it passes or a
short description of the mismatch. Checks flagged ``needs_chordal`` only run
on chordal graphs.
"""

from itertools import combinations

from .graph import cut_vertices, enumerate_cliques, induced_subgraph, is_chordal
from .jsj import FLAVORS, jsj_report, verify_decomposition
from .oracle import (
    brute_abelianization,
    brute_cliques,
    brute_cut_vertices,
    brute_induced_long_cycle,
    brute_separating_cliques,
    is_chordless_cycle,
)
from .presentation import (
    abelianization,
    commutator,
    dicks_leary_presentation,
    is_commutator,
    recognize_special,
    reduced_presentation,
)
from .splitting import bbg_splitting_verdict, raag_splitting_verdict, separating_cliques
from .topology import flag_complex, h1_summary, is_flag_simply_connected
from .intmat import matmul

CHECKS = {}

# relators are also run through the (cubic) Wicks test up to this size
WICKS_MAX_N = 5
BRUTE_MATRIX_LIMIT = 64


def register(name, needs_chordal=True):
    def deco(fn):
        fn.needs_chordal = needs_chordal
        fn.check_name = name
        CHECKS[name] = fn
        return fn

    return deco


@register("raag_bbg_agree")
def raag_bbg_agree(g):
    bbg = bbg_splitting_verdict(g)
    raag = raag_splitting_verdict(g)
    if bbg.splits != raag.splits:
        return f"bbg splits={bbg.splits} ({bbg.case}) but raag splits={raag.splits} ({raag.case})"
    if bbg.case == "complete":
        desc = recognize_special(g)
        if desc.kind != "free_abelian" or desc.rank != bbg.edge_group_rank_bbg:
            return f"complete graph: verdict rank {bbg.edge_group_rank_bbg} vs group {desc.label()}"
    return None


@register("separating_oracle", needs_chordal=False)
def separating_oracle(g):
    fast = separating_cliques(g)
    slow = brute_separating_cliques(g)
    if fast != slow:
        return f"separating cliques {[c.members for c in fast]} != brute {[c.members for c in slow]}"
    return None


@register("chordal_oracle", needs_chordal=False)
def chordal_oracle(g):
    cert = is_chordal(g)
    cycle = brute_induced_long_cycle(g)
    if cert.is_chordal != (cycle is None):
        return f"is_chordal={cert.is_chordal} but brute force cycle={cycle}"
    if cert.is_chordal:
        pos = {v: i for i, v in enumerate(cert.peo)}
        for v in cert.peo:
            later = [w for w in g.neighbors(v) if pos[w] > pos[v]]
            if any(not g.has_edge(a, b) for a, b in combinations(later, 2)):
                return f"peo {cert.peo} fails at {v}"
    elif not is_chordless_cycle(g, cert.witness_cycle):
        return f"witness {cert.witness_cycle} is not a chordless cycle"
    return None


@register("cut_vertex_oracle", needs_chordal=False)
def cut_vertex_oracle(g):
    fast, slow = cut_vertices(g), brute_cut_vertices(g)
    return None if fast == slow else f"cut vertices {fast} != brute {slow}"


@register("clique_oracle", needs_chordal=False)
def clique_oracle(g):
    fast, slow = enumerate_cliques(g), brute_cliques(g)
    return None if fast == slow else f"{len(fast)} cliques vs {len(slow)} by brute force"


@register("presentation")
def presentation_check(g):
    n = g.n
    triangles = sum(
        1 for a, b, c in combinations(g.vertices, 3) if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
    )
    full = dicks_leary_presentation(g)
    if full.num_generators != g.num_edges or len(full.relators) != 2 * triangles:
        return f"Dicks-Leary sizes {full.num_generators}/{len(full.relators)}"
    red = reduced_presentation(g)
    if red.num_generators != n - 1:
        return f"reduced presentation has {red.num_generators} generators"
    for word, (x, y) in zip(red.relators, red.commutator_pairs):
        if commutator(x, y) != word:
            return f"relator {red.format_word(word)} is not the recorded commutator"
        if n <= WICKS_MAX_N and not is_commutator(word):
            return f"relator {red.format_word(word)} fails the Wicks test"
    expected = (n - 1, [])
    for label, p in (("full", full), ("reduced", red)):
        got = abelianization(p)
        # the brute-force routine caps matrix size; K_7 has 70 full relators
        fits = max(p.num_generators, len(p.relators)) <= BRUTE_MATRIX_LIMIT
        brute = brute_abelianization(p) if fits or label == "reduced" else expected
        if got != expected or brute != expected:
            return f"{label} abelianization {got} / brute {brute}, expected {expected}"
    desc = recognize_special(g)
    complete = 2 * g.num_edges == n * (n - 1)
    if complete:
        want = ("free_abelian", n - 1)
    elif g.num_edges == n - 1:
        want = ("free", n - 1)
    else:
        want = ("bbg", None)
    if (desc.kind, desc.rank) != want:
        return f"recognized {desc.label()}, expected {want}"
    return None


@register("jsj")
def jsj_check(g):
    reports = {f: jsj_report(g, f) for f in FLAVORS}
    for f, rep in reports.items():
        d = rep.decomposition
        problems = verify_decomposition(d, g)
        if problems:
            return f"{f}: {problems[0]}"
        if len(d.edges) != len(d.vertices) - 1:
            return f"{f}: {len(d.vertices)} vertices but {len(d.edges)} edges"
    raag, bbg = reports["raag"].decomposition, reports["bbg"].decomposition
    for v in raag.vertices:
        sub = induced_subgraph(g, v.piece)
        if brute_separating_cliques(sub):
            return f"piece {v.piece} has a separating clique by brute force"
    if [v.piece for v in raag.vertices] != [v.piece for v in bbg.vertices]:
        return "raag and bbg pieces differ"
    if [(e.source, e.target, e.clique) for e in raag.edges] != [(e.source, e.target, e.clique) for e in bbg.edges]:
        return "raag and bbg trees differ"
    for a, b in zip(list(raag.vertices) + list(raag.edges), list(bbg.vertices) + list(bbg.edges)):
        if a.group.kind != "free_abelian" or b.group.kind != "free_abelian" or a.group.rank != b.group.rank + 1:
            return f"rank offset broken: {a.group.label()} vs {b.group.label()}"
    return None


@register("topology")
def topology_check(g):
    if not is_flag_simply_connected(g):
        return "chordal graph judged not simply connected"
    x = flag_complex(g)
    d1, d2 = x.boundary_matrix(1), x.boundary_matrix(2)
    if d1 and d2 and d2[0] and any(any(row) for row in matmul(d1, d2)):
        return "boundary of boundary is nonzero"
    h = h1_summary(x)
    if h.h1_rank or h.h1_torsion or h.euler_characteristic != 1:
        return f"H1 rank {h.h1_rank} torsion {list(h.h1_torsion)} euler {h.euler_characteristic}"
    return None
