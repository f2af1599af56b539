"""Hypothesis strategies for small labelled graphs."""

from itertools import combinations

from hypothesis import strategies as st

from bbjsj import SimplicialGraph


@st.composite
def graphs(draw, min_n=0, max_n=7, names=None):
    n = draw(st.integers(min_n, max_n))
    labels = names or [f"x{i}" for i in range(n)]
    labels = labels[:n]
    pairs = list(combinations(labels, 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return SimplicialGraph(labels, [p for p, k in zip(pairs, keep) if k])


@st.composite
def chordal_graphs(draw, min_n=1, max_n=7):
    """Connected chordal graphs grown by attaching each new vertex to a clique."""
    n = draw(st.integers(min_n, max_n))
    labels = [f"c{i}" for i in range(n)]
    edges = set()
    cliques = [(labels[0],)]
    for i in range(1, n):
        base = draw(st.sampled_from(cliques))
        size = draw(st.integers(1, len(base)))
        part = base[:size]
        for u in part:
            edges.add((u, labels[i]))
        cliques.append(part + (labels[i],))
    return SimplicialGraph(labels, sorted(edges))
