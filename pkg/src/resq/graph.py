"""Simple undirected graphs: construction, parsing, generators, BFS metrics.

Vertices are 0-indexed integers. Graphs are immutable; every operation in
this module is a pure function, so values can be shared freely across
threads.
"""

from __future__ import annotations

import heapq
import random
from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import (
    Disconnected,
    DuplicateEdge,
    InvalidFamilyParams,
    MalformedLine,
    SelfLoop,
    VertexOutOfRange,
)

Edge = tuple[int, int]

FAMILY_KINDS = ("complete", "bipartite", "cycle", "path")


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Edges are stored as (u, v) pairs with u < v. Build instances through
    :meth:`from_edges`, which validates and normalizes the edge set.
    """

    n: int
    edges: frozenset[Edge]

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        """Validate and normalize an iterable of vertex pairs into a Graph.

        Raises SelfLoop, VertexOutOfRange or DuplicateEdge when the input
        violates the simple-graph invariants.
        """
        if n < 1:
            raise VertexOutOfRange(f"vertex count must be >= 1, got {n}")
        normalized: set[Edge] = set()
        for u, v in edges:
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(f"edge ({u}, {v}) outside [0, {n})")
            key = (u, v) if u < v else (v, u)
            if key in normalized:
                raise DuplicateEdge(f"edge ({key[0]}, {key[1]}) listed twice")
            normalized.add(key)
        return cls(n=n, edges=frozenset(normalized))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        """Edges in lexicographic order, for deterministic output."""
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def neighbor_lists(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.sorted_edges():
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degrees(self) -> np.ndarray:
        deg = np.zeros(self.n, dtype=int)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg


@dataclass(frozen=True)
class FamilySpec:
    """Tagged description of a graph family instance.

    kind is one of "complete", "bipartite", "cycle", "path"; params holds
    (n,) for the single-parameter families and (p, q) for bipartite.
    """

    kind: str
    params: tuple[int, ...]

    @classmethod
    def complete(cls, n: int) -> "FamilySpec":
        return cls("complete", (n,))

    @classmethod
    def bipartite(cls, p: int, q: int) -> "FamilySpec":
        return cls("bipartite", (p, q))

    @classmethod
    def cycle(cls, n: int) -> "FamilySpec":
        return cls("cycle", (n,))

    @classmethod
    def path(cls, n: int) -> "FamilySpec":
        return cls("path", (n,))

    def validate(self) -> None:
        if self.kind not in FAMILY_KINDS:
            raise InvalidFamilyParams(f"unknown family kind {self.kind!r}")
        if not all(isinstance(p, int) and p >= 1 for p in self.params):
            raise InvalidFamilyParams(
                f"{self.kind} parameters must be positive integers, got {self.params}"
            )
        if self.kind == "bipartite":
            if len(self.params) != 2:
                raise InvalidFamilyParams("bipartite takes exactly two parameters p, q")
        elif len(self.params) != 1:
            raise InvalidFamilyParams(f"{self.kind} takes exactly one parameter n")
        if self.kind == "cycle" and self.params[0] < 3:
            raise InvalidFamilyParams(f"cycle needs n >= 3, got {self.params[0]}")

    @property
    def order(self) -> int:
        return sum(self.params)

    def label(self) -> str:
        if self.kind == "complete":
            return f"K{self.params[0]}"
        if self.kind == "bipartite":
            return "K_{%d,%d}" % self.params
        if self.kind == "cycle":
            return f"C{self.params[0]}"
        return f"P{self.params[0]}"


def parse_edge_list(text: str) -> Graph:
    """Parse edge-list text into a Graph.

    Format: the first non-comment line is the vertex count; each following
    line is "u v". Lines starting with '#' are comments; blank lines are
    ignored; LF and CRLF both accepted. Errors name the offending line.
    """
    n: int | None = None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise MalformedLine(
                    f"line {lineno}: expected vertex count, got {raw!r}"
                ) from None
            if n < 1:
                raise MalformedLine(f"line {lineno}: vertex count must be >= 1, got {n}")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise MalformedLine(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedLine(
                f"line {lineno}: endpoints must be integers, got {raw!r}"
            ) from None
        if u == v:
            raise SelfLoop(f"line {lineno}: self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"line {lineno}: edge ({u}, {v}) outside [0, {n})")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"line {lineno}: duplicate edge ({u}, {v})")
        seen.add(key)
        edges.append(key)
    if n is None:
        raise MalformedLine("missing vertex count line")
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    """Render a Graph in the edge-list text format accepted by parse_edge_list."""
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def generate(spec: FamilySpec) -> Graph:
    """Build the graph described by a FamilySpec.

    Bipartite parts are {0..p-1} and {p..p+q-1}; cycles use edges
    {i, (i+1) mod n}; paths use {i, i+1}.
    """
    spec.validate()
    if spec.kind == "complete":
        (n,) = spec.params
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
        return Graph.from_edges(n, edges)
    if spec.kind == "bipartite":
        p, q = spec.params
        edges = [(u, p + v) for u in range(p) for v in range(q)]
        return Graph.from_edges(p + q, edges)
    if spec.kind == "cycle":
        (n,) = spec.params
        edges = [(i, (i + 1) % n) for i in range(n)]
        return Graph.from_edges(n, edges)
    (n,) = spec.params
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def is_connected(g: Graph) -> bool:
    """True iff a BFS from vertex 0 reaches all n vertices (n=1 is connected)."""
    if g.n == 1:
        return True
    adj = g.neighbor_lists()
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    return count == g.n


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges:
        a[u, v] = 1.0
        a[v, u] = 1.0
    return a


def laplacian(g: Graph) -> np.ndarray:
    """Combinatorial Laplacian Diag(deg) - A; rows sum to zero."""
    a = adjacency_matrix(g)
    return np.diag(a.sum(axis=1)) - a


def classical_distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs shortest-path lengths by BFS from every vertex.

    Raises Disconnected when some pair is unreachable.
    """
    adj = g.neighbor_lists()
    dist = np.full((g.n, g.n), -1.0)
    for src in range(g.n):
        dist[src, src] = 0.0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if dist[src, w] < 0:
                    dist[src, w] = dist[src, u] + 1.0
                    queue.append(w)
    if (dist < 0).any():
        raise Disconnected("graph is disconnected; distances undefined")
    return dist


def add_edge(g: Graph, u: int, v: int) -> Graph:
    """Return a copy of g with the extra edge {u, v}."""
    return Graph.from_edges(g.n, set(g.edges) | {(min(u, v), max(u, v))})


def non_edges(g: Graph) -> list[Edge]:
    """Unordered vertex pairs not joined by an edge, in lexicographic order."""
    return [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if (u, v) not in g.edges
    ]


def random_connected_graph(
    n: int, edge_prob: float, seed: int, max_resample: int = 100
) -> Graph:
    """Erdos-Renyi draw, resampled until connected; deterministic per seed.

    After max_resample failed draws, a random spanning tree is overlaid on
    the last draw so the result is always connected.
    """
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges: list[Edge] = []
    for _ in range(max_resample):
        edges = [e for e in pairs if rng.random() < edge_prob]
        g = Graph.from_edges(n, edges)
        if is_connected(g):
            return g
    order = list(range(n))
    rng.shuffle(order)
    tree: set[Edge] = set()
    for i in range(1, n):
        a, b = order[i], order[rng.randrange(i)]
        tree.add((min(a, b), max(a, b)))
    return Graph.from_edges(n, set(edges) | tree)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree on n vertices (Prufer decode)."""
    if n == 1:
        return Graph.from_edges(1, [])
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for s in seq:
        degree[s] += 1
    leaves = [i for i in range(n) if degree[i] == 1]
    heapq.heapify(leaves)
    edges: list[Edge] = []
    for s in seq:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, s), max(leaf, s)))
        degree[s] -= 1
        if degree[s] == 1:
            heapq.heappush(leaves, s)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((min(u, v), max(u, v)))
    return Graph.from_edges(n, edges)
