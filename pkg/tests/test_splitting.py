import pytest
from hypothesis import given, settings

from bbjsj import (
    Clique,
    DisconnectedInput,
    HypothesisViolation,
    NotSeparating,
    TooSmall,
    UnknownEdge,
    bbg_splitting_verdict,
    brute_separating_cliques,
    cut_vertices,
    minimal_separating_cliques,
    parse_graph,
    raag_splitting_verdict,
    separating_cliques,
    splitting_ranks,
    star_clique_check,
)

from conftest import complete, cycle, path
from strategies import chordal_graphs, graphs

DIAMOND = "u v\nu x\nv x\nu y\nv y"
# two tetrahedra glued along the triangle a b c
GLUED_K4 = "a b\na c\nb c\na d\nb d\nc d\na e\nb e\nc e"


def test_separating_clique_examples(glued_triangles):
    seps = separating_cliques(glued_triangles)
    assert [c.members for c in seps if c.size == 2] == [("2", "3"), ("2", "5"), ("3", "5")]
    assert separating_cliques(complete(5)) == []
    assert separating_cliques(parse_graph("a b\nb c")) == [Clique(("b",))]
    with pytest.raises(DisconnectedInput):
        separating_cliques(parse_graph("a b\nc d"))


def test_minimal_separating_cliques(glued_triangles):
    assert [c.members for c in minimal_separating_cliques(glued_triangles)] == [("2", "3"), ("2", "5"), ("3", "5")]
    assert minimal_separating_cliques(complete(4)) == []
    assert minimal_separating_cliques(parse_graph(DIAMOND)) == [Clique(("u", "v"))]
    assert minimal_separating_cliques(parse_graph(GLUED_K4)) == [Clique(("a", "b", "c"))]


def test_bbg_verdicts(glued_triangles):
    v = bbg_splitting_verdict(glued_triangles)
    assert (v.splits, v.case, v.witness) == (True, "separating_clique", Clique(("2", "3")))
    assert (v.edge_group_rank_raag, v.edge_group_rank_bbg) == (2, 1)
    assert v.decomposition_hint == (("1",), ("4", "5", "6"))
    v = bbg_splitting_verdict(complete(5))
    assert (v.case, v.witness, v.edge_group_rank_bbg) == ("complete", 5, 4)
    with pytest.raises(HypothesisViolation) as info:
        bbg_splitting_verdict(cycle(4))
    assert info.value.hypothesis == "flag_not_simply_connected"


def test_bbg_cut_vertex_is_a_free_product():
    v = bbg_splitting_verdict(path(4))
    assert (v.case, v.witness, v.edge_group_rank_bbg, v.edge_group_rank_raag) == ("cut_vertex", "p1", 0, 1)
    assert "free product" in v.to_text()


def test_raag_verdicts(glued_triangles):
    v = raag_splitting_verdict(parse_graph("vertex a\nvertex b"))
    assert (v.splits, v.case) == (True, "disconnected")
    v = raag_splitting_verdict(glued_triangles)
    assert (v.case, v.witness, v.edge_group_rank_raag) == ("separating_clique", Clique(("2", "3")), 2)
    v = raag_splitting_verdict(complete(3))
    assert (v.case, v.witness) == ("complete", 3)
    # no flag hypothesis on the RAAG side, and no clique of C_5 separates it
    assert not raag_splitting_verdict(cycle(5)).splits
    v = raag_splitting_verdict(path(3))
    assert (v.case, v.witness, v.edge_group_rank_raag) == ("separating_clique", Clique(("p1",)), 1)


def test_splitting_ranks(glued_triangles):
    assert splitting_ranks(glued_triangles, ["2", "3"]) == (2, 1)
    assert splitting_ranks(parse_graph(GLUED_K4), ["a", "b", "c"]) == (3, 2)
    with pytest.raises(NotSeparating):
        splitting_ranks(glued_triangles, ["1", "2"])
    with pytest.raises(NotSeparating):
        splitting_ranks(glued_triangles, ["1", "5"])
    with pytest.raises(TooSmall):
        splitting_ranks(path(3), ["p1"])


def test_star_clique_check(kite):
    assert star_clique_check(complete(4), ("0", "1"))
    assert not star_clique_check(kite, ("a", "c"))
    assert star_clique_check(kite, ("b", "c"))
    with pytest.raises(UnknownEdge):
        star_clique_check(kite, ("b", "d"))


def test_verdict_json(glued_triangles):
    d = bbg_splitting_verdict(glued_triangles).to_dict()
    assert d["witness"] == ["2", "3"] and d["edge_group_rank_bbg"] == 1


@settings(max_examples=200)
@given(graphs(min_n=1))
def test_separating_cliques_match_brute_force(g):
    try:
        fast = separating_cliques(g)
    except DisconnectedInput:
        return
    assert fast == brute_separating_cliques(g)
    assert [c.members[0] for c in fast if c.size == 1] == cut_vertices(g)


@settings(max_examples=200)
@given(chordal_graphs())
def test_raag_and_bbg_agree(g):
    bbg, raag = bbg_splitting_verdict(g), raag_splitting_verdict(g)
    assert bbg.splits == raag.splits
    if bbg.case == "separating_clique":
        k = bbg.witness
        assert k.size >= 2
        assert (bbg.edge_group_rank_raag, bbg.edge_group_rank_bbg) == (k.size, k.size - 1)
