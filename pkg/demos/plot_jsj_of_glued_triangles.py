"""
JSJ-decomposition of four triangles glued along edges
=====================================================

Six vertices, nine edges and four triangles. The edges 23, 25 and 35 each
separate the graph, so the Artin group and the Bestvina-Brady group both
split along them. Cutting along all three leaves the four triangles.
"""

from bbjsj import export_dot, jsj_report, parse_graph, separating_cliques, verify_decomposition

g = parse_graph("""
1 2
1 3
2 3
2 5
3 5
2 4
4 5
3 6
5 6
""")

# the separating cliques, smallest first
for k in separating_cliques(g):
    print("separating", k)

###############################################################################
# Artin group: every triangle carries Z^3 and every glueing edge Z^2.

raag = jsj_report(g, "raag").decomposition
for v in raag.vertices:
    print(v.id, v.group.label(), v.piece)
for e in raag.edges:
    print(f"{e.source} -- {e.target}", e.group.label(), e.clique)

###############################################################################
# Bestvina-Brady group: the same tree, every rank one lower.

bbg = jsj_report(g, "bbg").decomposition
print(export_dot(bbg))

# both trees pass every structural check
assert verify_decomposition(raag, g) == [] and verify_decomposition(bbg, g) == []
