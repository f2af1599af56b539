import pytest

from bbjsj import (
    Clique,
    brute_abelianization,
    brute_induced_long_cycle,
    brute_separating_cliques,
    parse_graph,
    reduced_presentation,
    separating_cliques,
    sweep_small_graphs,
)
from bbjsj.checks import CHECKS
from bbjsj.errors import SizeLimitExceeded
from bbjsj.oracle import graphs_with_n_vertices

from conftest import complete, cycle


def test_brute_separating_examples(glued_triangles):
    assert brute_separating_cliques(glued_triangles) == separating_cliques(glued_triangles)
    assert brute_separating_cliques(complete(5)) == []
    assert brute_separating_cliques(parse_graph("a b\nb c")) == [Clique(("b",))]


def test_brute_cycle_examples(glued_triangles):
    assert brute_induced_long_cycle(cycle(4)) == ("v0", "v1", "v2", "v3")
    assert brute_induced_long_cycle(cycle(5)) == ("v0", "v1", "v2", "v3", "v4")
    assert brute_induced_long_cycle(glued_triangles) is None


def test_brute_abelianization_of_glued_triangles(glued_triangles):
    assert brute_abelianization(reduced_presentation(glued_triangles)) == (5, [])


def test_limits():
    with pytest.raises(SizeLimitExceeded):
        brute_induced_long_cycle(cycle(13))
    with pytest.raises(SizeLimitExceeded):
        brute_separating_cliques(cycle(17))


def test_mask_enumeration_counts():
    assert sum(1 for _ in graphs_with_n_vertices(4)) == 64
    # connected labelled graphs on 4 vertices
    report = sweep_small_graphs(4, [], min_n=4, graph_filter="connected")
    assert report.visited == {4: 38}
    # connected chordal labelled graphs on 1..6 vertices
    report = sweep_small_graphs(6, [], graph_filter="chordal")
    assert report.visited == {1: 1, 2: 1, 3: 4, 4: 35, 5: 541, 6: 13302}


def test_separating_oracle_up_to_six():
    report = sweep_small_graphs(6, ["separating_oracle"], graph_filter="connected")
    assert report.ok and report.applied["separating_oracle"] == 1 + 1 + 4 + 38 + 728 + 26704


def test_chordal_oracle_on_all_connected_graphs_up_to_six():
    report = sweep_small_graphs(6, ["chordal_oracle", "cut_vertex_oracle", "clique_oracle"], graph_filter="connected")
    assert report.ok


def test_eight_vertex_topology_sample():
    report = sweep_small_graphs(8, ["topology"], min_n=8, sample=3000, seed=11)
    assert report.ok and report.applied["topology"] > 0
    assert report.to_dict()["seed"] == 11


def test_sweep_is_reproducible_and_thread_independent():
    a = sweep_small_graphs(5, sorted(CHECKS), seed=3, sample=200)
    b = sweep_small_graphs(5, sorted(CHECKS), seed=3, sample=200, threads=3)
    assert a.to_dict() == b.to_dict()


def test_sweep_argument_errors():
    with pytest.raises(ValueError):
        sweep_small_graphs(9, ["topology"])
    with pytest.raises(ValueError):
        sweep_small_graphs(4, ["no_such_check"])
    with pytest.raises(ValueError):
        sweep_small_graphs(4, ["topology"], graph_filter="planar")


def test_failures_are_reported():
    def always_fails(g):
        return "boom"

    always_fails.needs_chordal = False
    CHECKS["always_fails"] = always_fails
    try:
        report = sweep_small_graphs(3, ["always_fails"], max_examples=2)
    finally:
        del CHECKS["always_fails"]
    d = report.to_dict()
    assert not d["ok"]
    assert d["checks"]["always_fails"]["counterexamples"] == 6
    assert len(d["checks"]["always_fails"]["examples"]) == 2
