"""
Which groups split over an abelian subgroup
===========================================

A Bestvina-Brady group on a connected chordal graph splits over an abelian
subgroup when the graph has a cut vertex, is complete, or has a separating
clique with at least two vertices. The Artin group on the same graph splits
in exactly the same cases, only the edge groups are one rank larger.
"""

from bbjsj import bbg_splitting_verdict, parse_graph, raag_splitting_verdict

graphs = {
    "path": "a b\nb c\nc d",
    "triangle": "a b\nb c\na c",
    "diamond": "u v\nu x\nv x\nu y\nv y",
    "two tetrahedra on a triangle": "a b\na c\nb c\na d\nb d\nc d\na e\nb e\nc e",
    "fan": "h a\nh b\nh c\nh d\na b\nb c\nc d",
}

for name, text in graphs.items():
    g = parse_graph(text)
    bbg, raag = bbg_splitting_verdict(g), raag_splitting_verdict(g)
    print(f"{name:30} bbg: {bbg.case:18} rank {bbg.edge_group_rank_bbg}"
          f"   raag: {raag.case:18} rank {raag.edge_group_rank_raag}")

###############################################################################
# A cut vertex is the one place where the two groups behave differently: the
# Artin group is an amalgam over Z, the Bestvina-Brady group a free product.

print(bbg_splitting_verdict(parse_graph(graphs["path"])).to_text())
print(raag_splitting_verdict(parse_graph(graphs["path"])).to_text())
