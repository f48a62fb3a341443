"""Graph representation, named-family generators, and graph surgery.

Vertices are 0-indexed. Family generators use fixed canonical labelings so
every downstream computation is reproducible bit-for-bit:

* path / cycle: vertices 0..n-1 in order
* star: center 0
* complete bipartite: parts {0..m-1} and {m..m+n-1}
* friendship: center 0, triangle i on {2i-1, 2i}
* dutch4: center 0, 4-cycle i through {3i-2, 3i-1, 3i}
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .errors import DomainError, EdgeNotFoundError, UnsupportedFamilyError

PATH = "path"
CYCLE = "cycle"
STAR = "star"
COMPLETE = "complete"
COMPLETE_BIPARTITE = "complete_bipartite"
FRIENDSHIP = "friendship"
DUTCH4 = "dutch4"

FAMILIES = frozenset(
    {PATH, CYCLE, STAR, COMPLETE, COMPLETE_BIPARTITE, FRIENDSHIP, DUTCH4}
)

# Smallest n each family generator accepts (complete_bipartite also needs m >= 1).
_MIN_N = {
    PATH: 1,
    CYCLE: 3,
    STAR: 2,
    COMPLETE: 1,
    COMPLETE_BIPARTITE: 1,
    FRIENDSHIP: 1,
    DUTCH4: 1,
}


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count plus a set of sorted vertex pairs."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop ({u},{v}) not allowed")
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, normalizing each pair to (min, max)."""
        normalized = frozenset((u, v) if u < v else (v, u) for u, v in edges)
        return cls(n, normalized)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        degs = [0] * self.n
        for u, v in self.edges:
            degs[u] += 1
            degs[v] += 1
        return tuple(degs)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Neighbor lists, each sorted ascending."""
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in nbrs)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={sorted(self.edges)})"


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family instance, optionally with its canonical edge deleted.

    ``m`` is meaningful only for complete_bipartite (part sizes m and n).
    """

    family: str
    n: int
    m: Optional[int] = None
    minus_edge: bool = False

    def label(self) -> str:
        base = f"{self.family}({self.m},{self.n})" if self.m is not None else f"{self.family}({self.n})"
        return base + "-e" if self.minus_edge else base


def _validate_spec(spec: FamilySpec) -> None:
    if spec.family not in FAMILIES:
        raise DomainError(f"unknown family {spec.family!r}")
    if spec.family == COMPLETE_BIPARTITE:
        if spec.m is None:
            raise DomainError("complete_bipartite requires the m parameter")
        if spec.m < 1 or spec.n < 1:
            raise DomainError("complete_bipartite requires m >= 1 and n >= 1")
    else:
        if spec.m is not None:
            raise DomainError(f"m parameter is only valid for complete_bipartite, not {spec.family}")
        if spec.n < _MIN_N[spec.family]:
            raise DomainError(f"{spec.family} requires n >= {_MIN_N[spec.family]} (got n={spec.n})")
    if spec.minus_edge:
        if spec.family in (FRIENDSHIP, DUTCH4):
            raise UnsupportedFamilyError(f"minus_edge is not supported for {spec.family}")
        if spec.family in (PATH, COMPLETE) and spec.n < 2:
            raise DomainError(f"{spec.family} with minus_edge requires n >= 2 (needs an edge)")


def generate(spec: FamilySpec) -> Graph:
    """Build the canonical labeled graph for a family spec.

    When ``minus_edge`` is set, the canonical edge is removed: (0,1) for
    path/cycle/star/complete and (0,m) for complete_bipartite.
    """
    _validate_spec(spec)
    fam, n = spec.family, spec.n
    edges: list[tuple[int, int]]
    if fam == PATH:
        order = n
        edges = [(i, i + 1) for i in range(n - 1)]
    elif fam == CYCLE:
        order = n
        edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    elif fam == STAR:
        order = n
        edges = [(0, i) for i in range(1, n)]
    elif fam == COMPLETE:
        order = n
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    elif fam == COMPLETE_BIPARTITE:
        m = spec.m
        order = m + n
        edges = [(i, m + j) for i in range(m) for j in range(n)]
    elif fam == FRIENDSHIP:
        order = 2 * n + 1
        edges = []
        for i in range(1, n + 1):
            a, b = 2 * i - 1, 2 * i
            edges += [(0, a), (0, b), (a, b)]
    else:  # DUTCH4
        order = 3 * n + 1
        edges = []
        for i in range(1, n + 1):
            a, b, c = 3 * i - 2, 3 * i - 1, 3 * i
            edges += [(0, a), (a, b), (b, c), (0, c)]
    g = Graph.from_edges(order, edges)
    if spec.minus_edge:
        u, v = (0, spec.m) if fam == COMPLETE_BIPARTITE else (0, 1)
        g = delete_edge(g, u, v)
    return g


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    """Remove one edge; the vertex set is unchanged (may isolate vertices)."""
    key = (min(u, v), max(u, v))
    if key not in g.edges:
        raise EdgeNotFoundError(f"edge ({u},{v}) not in graph")
    return Graph(g.n, g.edges - {key})


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Union with g2's vertices relabeled by offset g1.n."""
    off = g1.n
    edges = set(g1.edges)
    edges.update((u + off, v + off) for u, v in g2.edges)
    return Graph(g1.n + g2.n, frozenset(edges))


def permute_vertices(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel vertex v to perm[v]; perm must be a permutation of range(n)."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm is not a permutation of the vertex set")
    return Graph.from_edges(g.n, ((perm[u], perm[v]) for u, v in g.edges))


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    return count == g.n


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    adj = g.adjacency
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def format_edge_list(g: Graph) -> str:
    """Serialize as the plain text edge-list format: "n m" then one "u v" per edge."""
    lines = [f"{g.n} {len(g.edges)}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format; blank lines and lines starting with '#' are ignored."""
    rows = [ln.strip() for ln in text.splitlines()]
    rows = [ln for ln in rows if ln and not ln.startswith("#")]
    if not rows:
        raise ValueError("empty edge-list input")
    head = rows[0].split()
    if len(head) != 2:
        raise ValueError(f"header must be 'n m', got {rows[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(rows) - 1 != m:
        raise ValueError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges: set[tuple[int, int]] = set()
    for ln in rows[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"edge line must be 'u v', got {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise ValueError(f"self-loop {ln!r} not allowed")
        key = (min(u, v), max(u, v))
        if key in edges:
            raise ValueError(f"duplicate edge {ln!r}")
        edges.add(key)
    return Graph.from_edges(n, edges)
