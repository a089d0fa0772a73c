import json
from itertools import combinations

import pytest

from hamchain import GeneratingSequence, Graph, enumerate_sequences
from hamchain.graph import (
    chain_degree_profile,
    degree_profile,
    export,
    materialize,
    to_dot,
    to_edgelist,
    to_json,
)


def seq(*runs):
    return GeneratingSequence(tuple(runs))


def test_threshold_of_single_level_is_complete_split():
    k3 = materialize(seq((1, 2)), "threshold")
    assert k3.n == 3 and k3.edge_count == 3


def test_chain_of_2_2_is_c4():
    c4 = materialize(seq((2, 2)), "chain")
    assert c4.n == 4
    assert list(c4.edges()) == [(0, 2), (0, 3), (1, 2), (1, 3)]


def test_nine_vertex_threshold_clique_and_coclique():
    g = materialize(seq((2, 2), (2, 3)), "threshold")
    assert g.n == 9
    ones = {2, 3, 6, 7, 8}
    clique = ones | {0}  # lowest level-1 zero joins the maximal clique
    assert all(g.has_edge(u, v) for u, v in combinations(sorted(clique), 2))
    coclique = set(range(9)) - clique
    assert len(coclique) == 3
    assert not any(g.has_edge(u, v) for u, v in combinations(sorted(coclique), 2))


def test_cells_record_insertion_ranges():
    g = materialize(seq((2, 2), (2, 3)), "chain")
    assert [tuple(map(list, cell)) for cell in g.cells] == [
        [[0, 1], [2, 3]],
        [[4, 5], [6, 7, 8]],
    ]


def test_chain_equals_threshold_minus_clique_on_ones():
    for n in range(2, 11):
        for s in enumerate_sequences(n):
            thr = materialize(s, "threshold")
            ch = materialize(s, "chain")
            ones = {v for _, v_cell in thr.cells for v in v_cell}
            expected = {
                e for e in thr.edges() if not (e[0] in ones and e[1] in ones)
            }
            assert set(ch.edges()) == expected


def test_chain_edge_count_formula():
    for n in range(2, 13):
        for s in enumerate_sequences(n):
            g = materialize(s, "chain")
            ss = s.one_runs
            expected = sum(t * sum(ss[i:]) for i, (t, _) in enumerate(s.runs))
            assert g.edge_count == expected


def _induced_four_pattern(g, quad):
    edges = [(u, v) for u, v in combinations(quad, 2) if g.has_edge(u, v)]
    degs = sorted(sum(v in e for e in edges) for v in quad)
    return len(edges), degs


def test_threshold_graphs_avoid_2k2_p4_c4():
    forbidden = {(2, [1, 1, 1, 1]), (3, [1, 1, 2, 2]), (4, [2, 2, 2, 2])}
    for n in range(4, 11):
        for s in enumerate_sequences(n):
            g = materialize(s, "threshold")
            for quad in combinations(range(n), 4):
                assert _induced_four_pattern(g, quad) not in forbidden


def test_degree_profile_two_level_example():
    p = degree_profile(seq((2, 2), (2, 3)))
    assert p.d == (3, 3, 5)
    assert p.e == (0, 1, 1, 3, 3, 3)
    assert (p.r, p.s, p.T, p.S, p.t1_is_one) == (3, 6, 4, 5, False)


def test_degree_profile_complete_graph_case():
    p = degree_profile(seq((1, 4)))
    assert p.d == ()
    assert p.e == (0, 0, 0, 0, 0)
    assert (p.r, p.s) == (0, 5)
    assert p.t1_is_one


def test_degree_profile_large_example_sizes():
    p = degree_profile(seq((3, 4), (10, 6), (5, 11), (3, 8)))
    assert (p.r, p.s) == (20, 30)


def test_degree_profile_matches_counting_both_branches():
    # count degrees on the materialized graph after deleting the edges of
    # the maximal clique (the ones plus the lowest level-1 zero)
    for n in range(2, 11):
        for s in enumerate_sequences(n):
            g = materialize(s, "threshold")
            ones = {v for _, v_cell in g.cells for v in v_cell}
            clique = ones | {0}
            d_counted = sorted(g.degree(v) for v in range(n) if v not in clique)
            e_counted = sorted(
                len(set(g.adj[v]) - clique) for v in sorted(clique)
            )
            p = degree_profile(s)
            assert list(p.d) == d_counted
            assert list(p.e) == e_counted
            assert p.r == n - len(clique) and p.s == len(clique)


def test_chain_degree_profile():
    p = chain_degree_profile(seq((2, 2)))
    assert p.d == (2, 2) and p.e == (2, 2) and (p.r, p.s) == (2, 2)
    p4 = chain_degree_profile(seq((1, 1), (1, 1)))
    assert p4.d == (1, 2) and p4.e == (1, 2)


def test_edgelist_export():
    c4 = materialize(seq((2, 2)), "chain")
    text = to_edgelist(c4)
    assert text.splitlines() == ["0 2", "0 3", "1 2", "1 3"]


def test_dot_export_has_all_nodes_and_rank_groups():
    g = materialize(seq((2, 2), (2, 3)), "threshold")
    dot = to_dot(g)
    assert dot.startswith("graph {") and dot.rstrip().endswith("}")
    assert dot.count("rank=same") == 4
    mentioned = {
        int(tok.rstrip(";"))
        for line in dot.splitlines()
        for tok in line.replace("--", " ").replace("{", " ").replace("}", " ").split()
        if tok.rstrip(";").isdigit()
    }
    assert mentioned == set(range(9))


def test_dot_export_lists_isolated_vertices():
    g = Graph.from_edges(3, [(0, 1)], "chain")
    assert "  2;" in to_dot(g).splitlines()


def test_json_roundtrip():
    g = materialize(seq((2, 2), (2, 3)), "threshold")
    payload = json.loads(to_json(g))
    assert payload["n"] == 9 and payload["kind"] == "threshold"
    assert payload["runs"] == [[2, 2], [2, 3]]
    back = Graph.from_json(to_json(g))
    assert set(back.edges()) == set(g.edges())
    assert back.runs == g.runs


def test_export_dispatch():
    g = materialize(seq((2, 2)), "chain")
    assert export(g, "edgelist") == to_edgelist(g)
    assert export(g, "dot") == to_dot(g)
    assert export(g, "json") == to_json(g)
    with pytest.raises(ValueError):
        export(g, "graphml")


def test_exports_are_deterministic():
    a = materialize(seq((2, 1), (1, 2)), "chain")
    b = materialize(seq((2, 1), (1, 2)), "chain")
    for fmt in ("dot", "edgelist", "json"):
        assert export(a, fmt) == export(b, fmt)


def test_from_edges_validation():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)], "chain")
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)], "chain")
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 1)], "mixed")
