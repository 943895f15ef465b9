"""Cartesian product, join and corona."""

from __future__ import annotations

from .graph import Graph, GraphError


def _nonempty(*graphs: Graph) -> None:
    if any(G.n == 0 for G in graphs):
        raise GraphError("empty_graph", "operation requires nonempty graphs")


def cartesian_product(G: Graph, H: Graph) -> Graph:
    """G □ H with vertex (g, h) at index g * n(H) + h."""
    _nonempty(G, H)
    k = H.n
    edges = [(g * k + a, g * k + b) for g in range(G.n) for a, b in H.edges]
    edges += [(a * k + h, b * k + h) for a, b in G.edges for h in range(k)]
    return Graph(G.n * k, tuple(edges))


def join(G: Graph, H: Graph) -> Graph:
    """G ∨ H; vertices of H are shifted by n(G)."""
    _nonempty(G, H)
    s = G.n
    edges = list(G.edges) + [(a + s, b + s) for a, b in H.edges]
    edges += [(g, s + h) for g in range(G.n) for h in range(H.n)]
    return Graph(G.n + H.n, tuple(edges))


def corona(G: Graph, H: Graph) -> Graph:
    """G ∘ H; vertex i of G keeps index i and its copy of H occupies the block
    starting at n(G) + i * n(H)."""
    _nonempty(G)
    q, r = G.n, H.n
    edges = list(G.edges)
    for i in range(q):
        base = q + i * r
        edges += [(base + a, base + b) for a, b in H.edges]
        edges += [(i, base + h) for h in range(r)]
    return Graph(q * (1 + r), tuple(edges))


def corona_blocks(G: Graph, H: Graph) -> list[range]:
    """Index ranges of the copies of H inside ``corona(G, H)``."""
    q, r = G.n, H.n
    return [range(q + i * r, q + (i + 1) * r) for i in range(q)]
