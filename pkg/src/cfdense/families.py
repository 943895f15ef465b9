"""Named graph families with fixed vertex labelings.

Labelings:
  path, cycle: 0..n-1 in order / around the cycle
  complete: 0..n-1
  star: center 0, leaves 1..n-1
  complete_multipartite: parts occupy consecutive blocks in the given order
  wheel: center 0, rim 1..n-1 around the cycle
  hypercube: vertex index is its binary coordinate vector
  diamond_necklace: diamond i (0-based) occupies 4i..4i+3 as (a, b, c, d);
      a_i b_i is the missing edge and b_i links to a_{i+1} (cyclically)
  spider: center 0, legs in consecutive blocks listed base-first
  tree_from_pruefer: standard Prüfer decoding (smallest leaf first)
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from . import kernels
from .graph import Graph, GraphError

KINDS = (
    "path",
    "cycle",
    "complete",
    "star",
    "complete_multipartite",
    "wheel",
    "hypercube",
    "diamond_necklace",
    "spider",
    "tree_from_pruefer",
)


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int | None = None
    k: int | None = None
    parts: tuple[int, ...] = field(default_factory=tuple)

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse ``kind:args`` shorthand, e.g. ``wheel:6``, ``spider:2,2,3``."""
        kind, _, arg = text.partition(":")
        kind = ALIASES.get(kind, kind)
        if kind not in KINDS:
            raise GraphError("bad_family", f"unknown family {kind!r}")
        try:
            return cls._parse_args(kind, arg)
        except ValueError as e:
            if isinstance(e, GraphError):
                raise
            raise GraphError("bad_family", f"bad parameters {arg!r} for family {kind!r}") from None

    @classmethod
    def _parse_args(cls, kind: str, arg: str) -> "FamilySpec":
        if kind in ("complete_multipartite", "spider", "tree_from_pruefer"):
            values = tuple(int(x) for x in arg.split(",") if x.strip()) if arg else ()
            return cls(kind, parts=values)
        if not arg:
            raise GraphError("bad_family", f"family {kind!r} needs a size parameter")
        if kind in ("hypercube", "diamond_necklace"):
            return cls(kind, k=int(arg))
        return cls(kind, n=int(arg))


ALIASES = {
    "necklace": "diamond_necklace",
    "multipartite": "complete_multipartite",
    "tree": "tree_from_pruefer",
    "pruefer": "tree_from_pruefer",
    "prufer": "tree_from_pruefer",
}


def _need(value, name: str, kind: str) -> int:
    if value is None:
        raise GraphError("bad_family", f"family {kind!r} requires parameter {name}")
    return value


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("bad_family", "path needs n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("bad_family", "cycle needs n >= 3")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("bad_family", "complete graph needs n >= 1")
    return Graph(n, tuple(itertools.combinations(range(n), 2)))


def star(n: int) -> Graph:
    """S_n = K_{1,n-1} with center 0."""
    if n < 1:
        raise GraphError("bad_family", "star needs n >= 1")
    return Graph(n, tuple((0, i) for i in range(1, n)))


def complete_multipartite(parts: Sequence[int]) -> Graph:
    if len(parts) < 2 or any(p < 1 for p in parts):
        raise GraphError("bad_family", "complete multipartite needs >= 2 parts of size >= 1")
    block = []
    for i, p in enumerate(parts):
        block += [i] * p
    n = len(block)
    edges = tuple((u, v) for u, v in itertools.combinations(range(n), 2) if block[u] != block[v])
    return Graph(n, edges)


def wheel(n: int) -> Graph:
    if n < 4:
        raise GraphError("bad_family", "wheel needs n >= 4")
    rim = n - 1
    edges = [(0, i) for i in range(1, n)]
    edges += [(1 + i, 1 + (i + 1) % rim) for i in range(rim)]
    return Graph(n, tuple(edges))


def hypercube(k: int) -> Graph:
    if k < 1:
        raise GraphError("bad_family", "hypercube needs k >= 1")
    n = 1 << k
    edges = tuple((v, v | 1 << b) for v in range(n) for b in range(k) if not v >> b & 1)
    return Graph(n, edges)


def diamond_necklace(k: int) -> Graph:
    if k < 2:
        raise GraphError("bad_family", "diamond necklace needs k >= 2")
    edges = []
    for i in range(k):
        a, b, c, d = 4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3
        edges += [(a, c), (a, d), (b, c), (b, d), (c, d)]
        edges.append((b, 4 * ((i + 1) % k)))
    return Graph(4 * k, tuple(edges))


def spider(legs: Sequence[int]) -> Graph:
    if len(legs) < 3 or any(b < 1 for b in legs):
        raise GraphError("bad_family", "spider needs >= 3 legs of length >= 1")
    edges = []
    nxt = 1
    for b in legs:
        prev = 0
        for _ in range(b):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, tuple(edges))


def tree_from_pruefer(seq: Sequence[int]) -> Graph:
    n = len(seq) + 2
    if any(not 0 <= x < n for x in seq):
        raise GraphError("bad_family", f"Prüfer entries must lie in 0..{n - 1}")
    adj = np.zeros(n, np.int64)
    kernels.prufer_decode(np.asarray(seq, dtype=np.int64), n, adj)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if int(adj[u]) >> v & 1]
    return Graph(n, tuple(edges))


def all_pruefer_trees(n: int) -> Iterator[Graph]:
    """Every labeled tree on ``n`` vertices (n^(n-2) of them)."""
    if n == 1:
        yield path(1)
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield tree_from_pruefer(seq)


def random_tree(n: int, rng: random.Random) -> Graph:
    if n <= 2:
        return path(n)
    return tree_from_pruefer([rng.randrange(n) for _ in range(n - 2)])


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = tuple(e for e in itertools.combinations(range(n), 2) if rng.random() < p)
    return Graph(n, edges)


def random_connected_graph(n: int, p: float, rng: random.Random) -> Graph:
    while True:
        G = random_graph(n, p, rng)
        if G.is_connected():
            return G


def generate_family(spec: FamilySpec) -> Graph:
    kind = spec.kind
    if kind == "path":
        return path(_need(spec.n, "n", kind))
    if kind == "cycle":
        return cycle(_need(spec.n, "n", kind))
    if kind == "complete":
        return complete(_need(spec.n, "n", kind))
    if kind == "star":
        return star(_need(spec.n, "n", kind))
    if kind == "complete_multipartite":
        return complete_multipartite(spec.parts)
    if kind == "wheel":
        return wheel(_need(spec.n, "n", kind))
    if kind == "hypercube":
        return hypercube(_need(spec.k, "k", kind))
    if kind == "diamond_necklace":
        return diamond_necklace(_need(spec.k, "k", kind))
    if kind == "spider":
        return spider(spec.parts)
    if kind == "tree_from_pruefer":
        return tree_from_pruefer(spec.parts)
    raise GraphError("bad_family", f"unknown family {kind!r}")
