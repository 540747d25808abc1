"""
graphs.py
그래프 값과 생성자 (solver 는 파트 크기, oracle 은 edge 집합 사용) + edge-list 텍스트 형식
생성자는 networkx 그래프를 만든 뒤 Graph 값으로 고정
"""

from dataclasses import dataclass

import networkx as nx

from errors import DomainError, GraphParseError


def _normalize_edge(i, j):
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Graph:
    """정점 수 n 과 무방향 edge 집합 (0-indexed, i < j 로 정규화)"""
    n: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise DomainError(f"vertex count must be nonnegative, got {self.n}")
        normalized = set()
        for i, j in self.edges:
            if i == j:
                raise DomainError(f"self-loop at vertex {i}")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise DomainError(f"edge ({i}, {j}) out of range for n={self.n}")
            normalized.add(_normalize_edge(i, j))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_networkx(cls, G):
        """정점이 0..n-1 인 networkx 그래프 → Graph"""
        n = G.number_of_nodes()
        if set(G.nodes) != set(range(n)):
            raise DomainError("networkx graph nodes must be 0..n-1")
        return cls(n, frozenset(G.edges))

    def to_networkx(self):
        G = nx.Graph()
        G.add_nodes_from(range(self.n))
        G.add_edges_from(self.edges)
        return G

    @property
    def edge_count(self):
        return len(self.edges)

    def sorted_edges(self):
        return sorted(self.edges)

    def union(self, other):
        if other.n != self.n:
            raise DomainError("graphs must share the vertex set")
        return Graph.from_networkx(nx.compose(self.to_networkx(), other.to_networkx()))

    def difference(self, other):
        if other.n != self.n:
            raise DomainError("graphs must share the vertex set")
        return Graph.from_networkx(nx.difference(self.to_networkx(), other.to_networkx()))


def complete_graph(n):
    """K_n: C(n, 2) 개 edge 전부"""
    if n < 1:
        raise DomainError(f"complete graph needs n >= 1, got {n}")
    return Graph.from_networkx(nx.complete_graph(n))


def part_blocks(parts):
    """각 파트의 연속 정점 구간 (range 목록, 주어진 순서대로)"""
    blocks = []
    start = 0
    for size in parts:
        if size < 1:
            raise DomainError(f"part sizes must be >= 1: {list(parts)}")
        blocks.append(range(start, start + size))
        start += size
    return blocks


def complete_multipartite(parts):
    """
    완전 다분 그래프: 서로 다른 파트의 정점끼리만 연결

    Args:
        parts: 파트 크기 목록 (정점은 파트 순서대로 연속 배치)

    Returns:
        Graph: edge 수 = (n² − Σ parts²) / 2
    """
    part_blocks(parts)
    return Graph.from_networkx(nx.complete_multipartite_graph(*parts))


def complement_decomposition(parts):
    """
    (K_n, [각 파트 블록 위의 clique]) 반환

    다분 그래프 edge = K_n edge − clique edge 들의 합집합 (clique 끼리는 서로소)
    """
    n = sum(parts)
    cliques = []
    for block in part_blocks(parts):
        G = nx.complete_graph(block)
        G.add_nodes_from(range(n))
        cliques.append(Graph.from_networkx(G))
    return complete_graph(n), cliques


def format_edge_list(graph):
    """edge-list 텍스트: 첫 줄 'n m', 이어서 'i j' 한 줄씩"""
    lines = [f"{graph.n} {graph.edge_count}"]
    lines.extend(f"{i} {j}" for i, j in graph.sorted_edges())
    return "\n".join(lines) + "\n"


def _parse_ints(line, line_number, expected):
    tokens = line.split()
    if len(tokens) != expected:
        raise GraphParseError(f"expected {expected} integers, got {line!r}", line_number)
    try:
        return [int(token) for token in tokens]
    except ValueError:
        raise GraphParseError(f"non-integer token in {line!r}", line_number) from None


def parse_edge_list(text):
    """
    edge-list 텍스트 파싱 ('#' 로 시작하는 줄 무시)

    Raises:
        GraphParseError: 헤더 오류, 중복 edge, self-loop, 범위 밖 정점, edge 수 불일치
    """
    header = None
    edges = set()
    expected = 0
    last_line = 0
    for line_number, raw in enumerate(text.splitlines(), start=1):
        last_line = line_number
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            n, expected = _parse_ints(line, line_number, 2)
            if n < 0 or expected < 0:
                raise GraphParseError(f"malformed header {line!r}", line_number)
            header = n
            continue
        i, j = _parse_ints(line, line_number, 2)
        if i == j:
            raise GraphParseError(f"self-loop at vertex {i}", line_number)
        if not (0 <= i < header and 0 <= j < header):
            raise GraphParseError(f"edge ({i}, {j}) out of range for n={header}", line_number)
        edge = _normalize_edge(i, j)
        if edge in edges:
            raise GraphParseError(f"duplicate edge ({i}, {j})", line_number)
        if len(edges) >= expected:
            raise GraphParseError(f"more than {expected} edges", line_number)
        edges.add(edge)
    if header is None:
        raise GraphParseError("missing header 'n m'", max(1, last_line))
    if len(edges) != expected:
        raise GraphParseError(f"header declares {expected} edges, found {len(edges)}", max(1, last_line))
    return Graph(header, frozenset(edges))


def read_edge_list(path):
    """파일에서 edge-list 읽기"""
    with open(path, "r", encoding="utf-8") as handle:
        return parse_edge_list(handle.read())
