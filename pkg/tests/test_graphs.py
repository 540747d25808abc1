import networkx as nx
import pytest

from errors import DomainError, GraphParseError
from graphs import (
    Graph,
    complement_decomposition,
    complete_graph,
    complete_multipartite,
    format_edge_list,
    parse_edge_list,
    read_edge_list,
)


def test_complete_graph():
    g = complete_graph(4)
    assert g.edge_count == 6
    assert complete_graph(1).edge_count == 0
    with pytest.raises(DomainError):
        complete_graph(0)


def test_complete_multipartite_edges():
    g = complete_multipartite((2, 1))
    assert g.n == 3
    assert g.sorted_edges() == [(0, 2), (1, 2)]


@pytest.mark.parametrize("parts", [(1, 1, 1), (2, 2, 1), (3, 2, 2), (4, 1), (2, 2, 2, 1)])
def test_complete_multipartite_edge_count(parts):
    n = sum(parts)
    assert complete_multipartite(parts).edge_count == (n * n - sum(p * p for p in parts)) // 2


def test_complete_multipartite_rejects_empty_part():
    with pytest.raises(DomainError):
        complete_multipartite((2, 0, 1))


def test_complement_decomposition():
    parts = (3, 2, 2)
    full, cliques = complement_decomposition(parts)
    removed = Graph(full.n)
    for clique in cliques:
        removed = removed.union(clique)
    assert full.difference(removed) == complete_multipartite(parts)
    assert sum(c.edge_count for c in cliques) == 3 + 1 + 1


def test_graph_normalizes_and_validates():
    g = Graph(3, frozenset({(2, 0)}))
    assert g.sorted_edges() == [(0, 2)]
    with pytest.raises(DomainError):
        Graph(2, frozenset({(1, 1)}))
    with pytest.raises(DomainError):
        Graph(2, frozenset({(0, 2)}))


def test_parse_edge_list_with_comments():
    text = "# triangle\n3 3\n0 1\n1 2\n\n0 2\n"
    g = parse_edge_list(text)
    assert g == complete_graph(3)


def test_format_edge_list_is_parseable():
    g = complete_multipartite((2, 1, 1))
    text = format_edge_list(g)
    assert text.splitlines()[0] == "4 5"
    assert parse_edge_list(text) == g


@pytest.mark.parametrize("text, line", [
    ("4 1\n0 5\n", 2),
    ("2 1\n0 0\n", 2),
    ("3 2\n0 1\n1 0\n", 3),
    ("3 2\n0 1\n", 2),
    ("3 1\n0 1\n1 2\n", 3),
    ("3\n0 1\n", 1),
    ("3 1\n0 x\n", 2),
    ("", 1),
])
def test_parse_edge_list_errors(text, line):
    with pytest.raises(GraphParseError) as info:
        parse_edge_list(text)
    assert info.value.line_number == line


def test_read_edge_list(edge_file):
    path = edge_file("2 1\n0 1\n")
    g = read_edge_list(path)
    assert g.n == 2 and g.edge_count == 1


@pytest.mark.parametrize("seed", range(8))
def test_random_graph_edge_list_round_trip(seed):
    G = nx.gnp_random_graph(6 + seed % 4, 0.4, seed=seed)
    g = Graph.from_networkx(G)
    assert g.edge_count == G.number_of_edges()
    assert parse_edge_list(format_edge_list(g)) == g


def test_networkx_conversion():
    g = complete_multipartite((3, 3, 2))
    G = g.to_networkx()
    assert G.number_of_nodes() == 8
    assert nx.is_isomorphic(G, nx.complete_multipartite_graph(3, 3, 2))
    assert Graph.from_networkx(G) == g
    with pytest.raises(DomainError):
        Graph.from_networkx(nx.path_graph([1, 2, 3]))
