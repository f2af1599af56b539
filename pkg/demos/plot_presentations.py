"""
Presentations on edges
======================

The Bestvina-Brady group of a graph with simply connected flag complex has a
finite presentation with one generator per edge and two relators per
triangle. Solving the triangle relators for the edges outside a spanning
tree leaves one generator per tree edge, and every remaining relator is a
commutator.
"""

from bbjsj import abelianization, dicks_leary_presentation, parse_graph, recognize_special, reduced_presentation

k4 = parse_graph("a b\na c\na d\nb c\nb d\nc d")
print(dicks_leary_presentation(k4).to_text())

###############################################################################
# After reduction only the three edges at ``a`` remain, and the relators
# make them commute: the group is Z^3.

red = reduced_presentation(k4)
print(red.to_text())
print("abelianization", abelianization(red), "recognized as", recognize_special(k4).label())

###############################################################################
# Trees give free groups: no triangles, so no relators at all.

star = parse_graph("o a\no b\no c")
print(reduced_presentation(star).to_text() + recognize_special(star).label())
