"""Simple undirected graphs on vertices 0..n-1, vertex sets, edge-list I/O."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

from . import kernels


class GraphError(ValueError):
    """Malformed graph input or an invalid structural request."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class VertexSet:
    """A subset of ``range(n)`` stored as a bitmask."""

    mask: int
    n: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.n:
            raise GraphError("vertex_out_of_range", f"mask {self.mask:#x} exceeds {self.n} vertices")

    @classmethod
    def of(cls, vertices: Iterable[int], n: int) -> "VertexSet":
        mask = 0
        for v in vertices:
            if not 0 <= v < n:
                raise GraphError("vertex_out_of_range", f"vertex {v} not in 0..{n - 1}")
            mask |= 1 << v
        return cls(mask, n)

    @classmethod
    def empty(cls, n: int) -> "VertexSet":
        return cls(0, n)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls((1 << n) - 1, n)

    def __iter__(self) -> Iterator[int]:
        m = self.mask
        while m:
            b = m & -m
            yield b.bit_length() - 1
            m ^= b

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.mask >> v & 1)

    def _other(self, other: "VertexSet") -> int:
        if other.n != self.n:
            raise GraphError("size_mismatch", "vertex sets belong to graphs of different order")
        return other.mask

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask | self._other(other), self.n)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask & self._other(other), self.n)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask & ~self._other(other), self.n)

    def __le__(self, other: "VertexSet") -> bool:
        return self.mask & ~self._other(other) == 0

    def to_list(self) -> list[int]:
        return list(self)

    def sort_key(self) -> tuple[int, ...]:
        return tuple(self)

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()})"


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. ``edges`` holds sorted pairs ``(u, v)`` with u < v."""

    n: int
    edges: tuple[tuple[int, int], ...]
    neighbors: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    masks: tuple[int, ...] = field(init=False, repr=False, compare=False)
    adj: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("bad_order", "vertex count must be nonnegative")
        norm = []
        for u, v in self.edges:
            if u == v:
                raise GraphError("self_loop", f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError("vertex_out_of_range", f"edge ({u}, {v}) outside 0..{self.n - 1}")
            norm.append((min(u, v), max(u, v)))
        norm.sort()
        for a, b in zip(norm, norm[1:]):
            if a == b:
                raise GraphError("duplicate_edge", f"duplicate edge {a}")
        masks = [0] * self.n
        for u, v in norm:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        nbrs = tuple(tuple(VertexSet(m, self.n)) for m in masks)
        object.__setattr__(self, "edges", tuple(norm))
        object.__setattr__(self, "masks", tuple(masks))
        object.__setattr__(self, "neighbors", nbrs)
        if self.n <= kernels.MAX_VERTICES:
            arr = np.array(masks, dtype=np.int64) if masks else np.zeros(0, np.int64)
        else:
            arr = np.zeros(0, np.int64)
        arr.setflags(write=False)
        object.__setattr__(self, "adj", arr)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], strict: bool = True) -> "Graph":
        edges = [tuple(e) for e in edges]
        if not strict:
            edges = sorted({(min(u, v), max(u, v)) for u, v in edges})
        return cls(n, tuple(edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def min_degree(self) -> int:
        return min((len(nb) for nb in self.neighbors), default=0)

    def max_degree(self) -> int:
        return max((len(nb) for nb in self.neighbors), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def vertex_set(self, vertices: Iterable[int] | VertexSet) -> VertexSet:
        if isinstance(vertices, VertexSet):
            if vertices.n != self.n:
                raise GraphError("size_mismatch", "vertex set belongs to a graph of different order")
            return vertices
        return VertexSet.of(vertices, self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def require_kernel_size(self) -> None:
        if self.n > kernels.MAX_VERTICES:
            raise GraphError("too_large", f"exact routines support at most {kernels.MAX_VERTICES} vertices")

    def is_connected(self) -> bool:
        return self.n > 0 and component_count_mask(self, self.full_mask) == 1

    def is_path(self) -> bool:
        return self.is_connected() and self.m == self.n - 1 and self.max_degree() <= 2

    def is_tree(self) -> bool:
        return self.is_connected() and self.m == self.n - 1

    def has_isolated_vertex(self) -> bool:
        return any(len(nb) == 0 for nb in self.neighbors)

    def induced(self, vertices: Iterable[int] | VertexSet) -> tuple["Graph", list[int]]:
        """Induced subgraph relabeled to 0..k-1, with the old labels in order."""
        keep = self.vertex_set(vertices).to_list()
        pos = {v: i for i, v in enumerate(keep)}
        edges = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return Graph(len(keep), tuple(edges)), keep


def component_count_mask(G: Graph, s: int) -> int:
    count = 0
    rest = s
    masks = G.masks
    while rest:
        reach = rest & -rest
        frontier = reach
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                nxt |= masks[b.bit_length() - 1]
                f ^= b
            nxt &= rest & ~reach
            reach |= nxt
            frontier = nxt
        rest &= ~reach
        count += 1
    return count


def boundary(G: Graph, S: Iterable[int] | VertexSet) -> VertexSet:
    """Vertices outside ``S`` adjacent to some vertex of ``S``."""
    S = G.vertex_set(S)
    nbr = 0
    for v in S:
        nbr |= G.masks[v]
    return VertexSet(nbr & ~S.mask, G.n)


@dataclass(frozen=True)
class ConnectivityReport:
    is_connected: bool
    component_count: int
    component_assignment: dict[int, int]
    cut_vertices: VertexSet


def connectivity_report(G: Graph) -> ConnectivityReport:
    """Components of ``G`` and, for connected ``G``, its cut vertices."""
    assign: dict[int, int] = {}
    rest = G.full_mask
    label = 0
    while rest:
        reach = rest & -rest
        frontier = reach
        while frontier:
            nxt = 0
            for v in VertexSet(frontier, G.n):
                nxt |= G.masks[v]
            nxt &= rest & ~reach
            reach |= nxt
            frontier = nxt
        for v in VertexSet(reach, G.n):
            assign[v] = label
        rest &= ~reach
        label += 1
    cuts = 0
    if label == 1:
        for v in range(G.n):
            if component_count_mask(G, G.full_mask & ~(1 << v)) > 1:
                cuts |= 1 << v
    return ConnectivityReport(label == 1, label, assign, VertexSet(cuts, G.n))


def parse_graph(text: str, strict: bool = True) -> Graph:
    """Parse an edge-list document: header ``n m`` then ``m`` lines ``u v``.

    Lines starting with ``#`` and blank lines are ignored. With
    ``strict=False`` repeated edges collapse instead of raising.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError("malformed_line", f"line {lineno}: expected two integers, got {raw!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError("malformed_line", f"line {lineno}: expected two integers, got {raw!r}") from None
        rows.append((lineno, a, b))
    if not rows:
        raise GraphError("malformed_line", "missing 'n m' header")
    _, n, m = rows[0]
    if n < 0 or m < 0:
        raise GraphError("malformed_line", "header values must be nonnegative")
    body = rows[1:]
    if len(body) != m:
        raise GraphError("malformed_line", f"header declares {m} edges but {len(body)} follow")
    seen = set()
    edges = []
    for lineno, u, v in body:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError("vertex_out_of_range", f"line {lineno}: vertex index outside 0..{n - 1}")
        if u == v:
            raise GraphError("self_loop", f"line {lineno}: self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            if strict:
                raise GraphError("duplicate_edge", f"line {lineno}: duplicate edge {key}")
            continue
        seen.add(key)
        edges.append(key)
    return Graph(n, tuple(edges))


def render_graph(G: Graph) -> str:
    """Canonical edge list: header then edges in lexicographic order."""
    lines = [f"{G.n} {G.m}"] + [f"{u} {v}" for u, v in G.edges]
    return "\n".join(lines) + "\n"


def to_dot(G: Graph, highlight: Iterable[int] = (), name: str = "G") -> str:
    marked = set(highlight)
    out = [f"graph {name} {{"]
    for v in range(G.n):
        style = ' [style=filled, fillcolor="#4a7bd0"]' if v in marked else ""
        out.append(f"  {v}{style};")
    out += [f"  {u} -- {v};" for u, v in G.edges]
    out.append("}")
    return "\n".join(out) + "\n"
