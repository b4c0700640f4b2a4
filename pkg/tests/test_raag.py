import random
from itertools import combinations

import pytest

from bredim.errors import InputError, OutOfRangeError, ParseError
from bredim.homology import cohomology, homology
from bredim.oracles import binomial, clique_counts_bitmask, max_clique_bitmask
from bredim.raag import (
    CliqueTable,
    SimpleGraph,
    cd_raag,
    clique_number,
    cliques,
    complete_graph,
    embedded_torus_rank,
    gd_fk_raag,
    parse_dimacs,
    parse_graph,
    path_graph,
    read_graph,
    salvetti_complex,
    write_graph,
)


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return SimpleGraph.from_edges(10, outer + inner + spokes)


def diamond():
    # complete graph on 4 vertices minus one edge
    return SimpleGraph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------


def test_parse_path():
    graph = parse_graph("3 2\n0 1\n1 2\n")
    assert graph.vertex_count == 3
    assert sorted(graph.edges) == [(0, 1), (1, 2)]


def test_parse_complete():
    text = "4 6\n" + "\n".join(f"{u} {v}" for u, v in combinations(range(4), 2)) + "\n"
    assert parse_graph(text) == complete_graph(4)


def test_parse_loop_rejected():
    with pytest.raises(ParseError) as err:
        parse_graph("2 1\n0 0\n")
    assert err.value.line_number == 2


def test_parse_duplicate_rejected():
    with pytest.raises(ParseError):
        parse_graph("3 2\n0 1\n1 0\n")


def test_parse_out_of_range_rejected():
    with pytest.raises(ParseError):
        parse_graph("2 1\n0 5\n")


def test_parse_count_mismatch():
    with pytest.raises(ParseError):
        parse_graph("3 2\n0 1\n")


def test_parse_dimacs():
    text = "c comment\np edge 3 2\ne 1 2\ne 2 3\n"
    assert parse_dimacs(text) == parse_graph("3 2\n0 1\n1 2\n")
    # duplicate edge lines are tolerated in this format
    assert parse_dimacs("p edge 2 2\ne 1 2\ne 2 1\n").edges == frozenset({(0, 1)})
    with pytest.raises(ParseError):
        parse_dimacs("p edge 2 1\ne 1 1\n")


def test_read_graph_autodetects():
    assert read_graph("p edge 2 1\ne 1 2\n") == read_graph("2 1\n0 1\n")


def test_write_graph_roundtrip():
    graph = petersen()
    assert parse_graph(write_graph(graph)) == graph


def test_loop_construction_rejected():
    with pytest.raises(InputError):
        SimpleGraph(3, frozenset({(1, 1)}))


# ---------------------------------------------------------------------------
# cliques
# ---------------------------------------------------------------------------


def test_cliques_triangle():
    table = cliques(complete_graph(3))
    assert table.counts == (1, 3, 3, 1)
    assert table.by_size[0] == ((),)
    assert table.by_size[2] == ((0, 1), (0, 2), (1, 2))


def test_cliques_edgeless():
    assert cliques(SimpleGraph.from_edges(5, [])).counts == (1, 5)


def test_cliques_petersen():
    table = cliques(petersen())
    assert table.counts == (1, 10, 15)
    assert table.clique_number == 2


def test_cliques_diamond():
    assert cliques(diamond()).counts == (1, 4, 5, 2)


def test_clique_number_examples():
    assert clique_number(complete_graph(6)) == 6
    assert clique_number(path_graph(3)) == 2
    assert clique_number(SimpleGraph.from_edges(0, [])) == 0
    assert clique_number(SimpleGraph.from_edges(4, [])) == 1


def test_clique_number_matches_subset_oracle():
    rng = random.Random(59)
    for _ in range(60):
        n = rng.randint(0, 12)
        edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < 0.5]
        graph = SimpleGraph.from_edges(n, edges)
        assert clique_number(graph) == max_clique_bitmask(n, edges)


def test_clique_number_matches_subset_oracle_at_fifteen_vertices():
    rng = random.Random(71)
    for n in (13, 14, 15):
        for density in (0.3, 0.6, 0.85):
            edges = [
                (u, v) for u, v in combinations(range(n), 2) if rng.random() < density
            ]
            graph = SimpleGraph.from_edges(n, edges)
            assert clique_number(graph) == max_clique_bitmask(n, edges)


def test_clique_counts_match_subset_oracle():
    rng = random.Random(61)
    for _ in range(40):
        n = rng.randint(0, 10)
        edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < 0.6]
        graph = SimpleGraph.from_edges(n, edges)
        assert list(cliques(graph).counts) == clique_counts_bitmask(n, edges)


def test_clique_table_validation():
    with pytest.raises(InputError):
        CliqueTable((((0,),),))
    with pytest.raises(InputError):
        CliqueTable((((),), ((1,), (1,))))


def test_listed_cliques_are_pairwise_adjacent_and_complete():
    rng = random.Random(73)
    for _ in range(20):
        n = rng.randint(0, 9)
        edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < 0.5]
        graph = SimpleGraph.from_edges(n, edges)
        table = cliques(graph)
        listed = set()
        for size, group in enumerate(table.by_size):
            for members in group:
                assert len(members) == size
                assert all(graph.has_edge(u, v) for u, v in combinations(members, 2))
                listed.add(members)
        # completeness: every pairwise-adjacent subset appears
        for size in range(n + 1):
            for subset in combinations(range(n), size):
                if all(graph.has_edge(u, v) for u, v in combinations(subset, 2)):
                    assert subset in listed
        assert salvetti_complex(graph).top_degree == clique_number(graph)


# ---------------------------------------------------------------------------
# cube complex and dimensions
# ---------------------------------------------------------------------------


def test_salvetti_single_vertex_is_circle():
    complex_ = salvetti_complex(complete_graph(1))
    assert complex_.cell_counts == (1, 1)


def test_salvetti_complete_graph_is_torus():
    for n in range(1, 6):
        complex_ = salvetti_complex(complete_graph(n))
        assert complex_.cell_counts == tuple(binomial(n, k) for k in range(n + 1))
        assert all(bd.is_zero() for bd in complex_.boundaries)


def test_salvetti_diamond_counts():
    assert salvetti_complex(diamond()).cell_counts == (1, 4, 5, 2)


def test_salvetti_cohomology_counts_cliques():
    rng = random.Random(67)
    for _ in range(25):
        n = rng.randint(0, 9)
        edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < 0.5]
        graph = SimpleGraph.from_edges(n, edges)
        complex_ = salvetti_complex(graph)
        counts = cliques(graph).counts
        for k in range(complex_.top_degree + 1):
            assert cohomology(complex_, k).betti == counts[k]
            assert cohomology(complex_, k).torsion == ()
            assert homology(complex_, k).betti == counts[k]


def test_cd_examples():
    assert cd_raag(complete_graph(4)) == 4
    assert cd_raag(path_graph(3)) == 2
    assert cd_raag(SimpleGraph.from_edges(3, [])) == 1
    assert cd_raag(SimpleGraph.from_edges(0, [])) == 0


def test_gd_examples():
    assert gd_fk_raag(complete_graph(3), 1) == 4
    assert gd_fk_raag(path_graph(3), 0) == 2
    assert gd_fk_raag(path_graph(3), 1) == 3


def test_gd_is_affine_in_k():
    graph = petersen()
    cd = cd_raag(graph)
    values = [gd_fk_raag(graph, k) for k in range(cd)]
    assert values == [cd + k for k in range(cd)]


def test_gd_out_of_range():
    with pytest.raises(OutOfRangeError):
        gd_fk_raag(complete_graph(3), 3)
    with pytest.raises(OutOfRangeError):
        gd_fk_raag(complete_graph(3), -1)
    with pytest.raises(OutOfRangeError):
        gd_fk_raag(SimpleGraph.from_edges(0, []), 0)


def test_torus_rank_examples():
    assert embedded_torus_rank(complete_graph(5)) == 5
    assert embedded_torus_rank(SimpleGraph.from_edges(2, [])) == 1
    assert embedded_torus_rank(petersen()) == 2
    assert embedded_torus_rank(petersen()) == cd_raag(petersen())
