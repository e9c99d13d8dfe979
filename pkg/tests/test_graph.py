import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from glsclique.generators import all_labeled_graphs, complete, disjoint_union, named
from glsclique.graph import Graph, GraphError, format_graph, parse_graph, read_graph


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edge_list(n, chosen)


def test_from_edge_list_triangle():
    g = Graph.from_edge_list(3, [(0, 1), (1, 2), (0, 2)])
    assert g == complete(3)
    assert g.edge_count == 3


def test_from_edge_list_empty_and_duplicates():
    g = Graph.from_edge_list(4, [])
    assert g.n == 4 and g.edge_count == 0
    assert Graph.from_edge_list(2, [(0, 1), (1, 0), (0, 1)]).edge_count == 1


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 2)], [(-1, 0)]])
def test_from_edge_list_rejects(edges):
    with pytest.raises(GraphError):
        Graph.from_edge_list(2, edges)


def test_degree():
    assert complete(4).degree(0) == 3
    assert Graph.from_edge_list(4, []).degree(2) == 0
    assert named("path_4").degree(1) == 2
    with pytest.raises(GraphError):
        complete(4).degree(4)


def test_max_degree():
    assert complete(4).max_degree() == 3
    assert named("star_5").max_degree() == 5
    assert Graph.from_edge_list(0, []).max_degree() == 0


def test_closed_neighborhood():
    assert complete(4).closed_neighborhood(2) == (0, 1, 2, 3)
    assert Graph.from_edge_list(3, []).closed_neighborhood(1) == (1,)
    assert named("path_3").closed_neighborhood(1) == (0, 1, 2)
    with pytest.raises(GraphError):
        complete(3).closed_neighborhood(-1)


def test_induced_subgraph():
    h, mapping = complete(4).induced_subgraph((0, 1, 2))
    assert h == complete(3) and mapping == {0: 0, 1: 1, 2: 2}
    h, mapping = complete(4).induced_subgraph(())
    assert h.n == 0 and mapping == {}
    h, mapping = named("cycle_5").induced_subgraph((0, 1, 3))
    assert h.edges() == [(0, 1)]
    assert mapping == {0: 0, 1: 1, 3: 2}
    with pytest.raises(GraphError):
        complete(3).induced_subgraph((0, 3))


def test_remove_closed_neighborhood():
    h, _ = complete(4).remove_closed_neighborhood(0)
    assert h.n == 0
    two_triangles = disjoint_union(complete(3), complete(3))
    h, mapping = two_triangles.remove_closed_neighborhood(1)
    assert h == complete(3) and mapping == {3: 0, 4: 1, 5: 2}
    star = named("star_3")
    h, mapping = star.remove_closed_neighborhood(2)
    assert h.n == 2 and h.edge_count == 0 and set(mapping) == {1, 3}


def test_is_connected_induced():
    assert complete(4).is_connected_induced((0, 1, 2, 3))
    assert not disjoint_union(complete(3), complete(3)).is_connected_induced((0, 3))
    assert not named("path_3").is_connected_induced((0, 2))
    with pytest.raises(GraphError):
        complete(2).is_connected_induced(())


def test_invariants_exhaustive_small():
    for n in range(6):
        for g in all_labeled_graphs(n):
            for u in range(n):
                assert u not in g.adj[u]
                for v in g.adj[u]:
                    assert u in g.adj[v] and 0 <= v < n


@given(graphs())
def test_closed_neighborhood_size(g):
    for v in range(g.n):
        assert g.degree(v) + 1 == len(g.closed_neighborhood(v))


@given(graphs(), st.data())
def test_removal_drops_whole_neighborhood(g, data):
    if g.n == 0:
        return
    v = data.draw(st.integers(0, g.n - 1))
    h, mapping = g.remove_closed_neighborhood(v)
    assert h.n == g.n - g.degree(v) - 1
    assert v not in mapping and not set(mapping) & g.adj[v]
    inv = {new: old for old, new in mapping.items()}
    for a, b in itertools.combinations(range(h.n), 2):
        assert h.has_edge(a, b) == g.has_edge(inv[a], inv[b])


@given(graphs())
def test_induced_on_everything_is_identity(g):
    h, mapping = g.induced_subgraph(range(g.n))
    assert h == g and all(k == v for k, v in mapping.items())


@given(graphs())
def test_text_round_trip(g):
    assert parse_graph(format_graph(g, comment="round trip")) == g


def test_parse_crlf_comments_and_blank_lines(tmp_path):
    text = "# a triangle\r\n\r\n3\r\n0 1\r\n  1 2\r\n# edge\r\n2 0\r\n"
    assert parse_graph(text) == complete(3)
    path = tmp_path / "g.txt"
    path.write_bytes(text.encode())
    assert read_graph(path) == complete(3)


@pytest.mark.parametrize(
    "text",
    ["", "# only comments\n", "3 4\n", "3\n0\n", "3\n0 1 2\n", "3\n0 x\n", "3\n0 3\n", "3\n1 1\n"],
)
def test_parse_rejects(text):
    with pytest.raises(GraphError):
        parse_graph(text)
