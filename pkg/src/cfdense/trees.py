"""Pendant paths, M-sets and closed-form connected forcing counts for trees."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from . import kernels
from .graph import Graph, GraphError, VertexSet, component_count_mask


@dataclass(frozen=True)
class PendantPath:
    vertices: tuple[int, ...]  # base first
    attachment: int

    @property
    def base(self) -> int:
        return self.vertices[0]

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class PendantDecomposition:
    """Pendant paths of a connected non-path graph and the derived vertex classes.

    ``groups`` lists, for each vertex carrying two or more pendant paths (in
    ascending vertex order), the indices of its paths in ``pendant_paths``;
    ``tail_group`` pools the paths of vertices carrying exactly one.
    """

    n: int
    pendant_paths: tuple[PendantPath, ...]
    p_of: dict[int, int]
    R1: VertexSet
    R2: VertexSet
    R3: VertexSet
    R3_1: VertexSet
    R3_2: VertexSet
    groups: tuple[tuple[int, ...], ...]
    tail_group: tuple[int, ...]
    mandatory_size: int
    group_vertices: tuple[VertexSet, ...] = field(default=())

    @property
    def q(self) -> int:
        return len(self.groups)

    def path_lengths(self, group: Sequence[int]) -> list[int]:
        return [len(self.pendant_paths[i]) for i in group]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "pendant_paths": [
                {"vertices": list(p.vertices), "attachment": p.attachment} for p in self.pendant_paths
            ],
            "p_of": {str(v): c for v, c in sorted(self.p_of.items())},
            "R1": self.R1.to_list(),
            "R2": self.R2.to_list(),
            "R3": self.R3.to_list(),
            "R3_1": self.R3_1.to_list(),
            "R3_2": self.R3_2.to_list(),
            "groups": [list(g) for g in self.groups],
            "tail_group": list(self.tail_group),
            "group_vertices": [s.to_list() for s in self.group_vertices],
            "mandatory_size": self.mandatory_size,
        }


def _components(G: Graph, s: int) -> list[int]:
    comps = []
    rest = s
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
        comps.append(reach)
        rest &= ~reach
    return comps


def _hanging_path(G: Graph, v: int, comp: int) -> tuple[int, ...] | None:
    """Vertices of ``comp`` ordered from v's neighbor, if ``comp`` induces a
    path touching ``v`` at exactly one of its endpoints."""
    touch = G.masks[v] & comp
    if touch & (touch - 1):
        return None
    size = comp.bit_count()
    inner_edges = sum((G.masks[u] & comp).bit_count() for u in VertexSet(comp, G.n)) // 2
    if inner_edges != size - 1:
        return None
    if any((G.masks[u] & comp).bit_count() > 2 for u in VertexSet(comp, G.n)):
        return None
    base = touch.bit_length() - 1
    if (G.masks[base] & comp).bit_count() > 1:
        return None
    order = [base]
    prev, cur = -1, base
    while True:
        step = G.masks[cur] & comp & ~(1 << cur)
        if prev >= 0:
            step &= ~(1 << prev)
        if not step:
            break
        prev, cur = cur, step.bit_length() - 1
        order.append(cur)
    return tuple(order)


def pendant_decomposition(G: Graph) -> PendantDecomposition:
    if not G.is_connected() or G.is_path():
        raise GraphError("decomposition_undefined", "pendant decomposition needs a connected non-path graph")
    full = G.full_mask
    paths: list[PendantPath] = []
    p_of: dict[int, int] = {}
    R1 = R2 = R3 = 0
    for v in range(G.n):
        comps = _components(G, full & ~(1 << v))
        hanging = [h for h in (_hanging_path(G, v, c) for c in comps) if h is not None]
        # p(v) also counts hanging paths at degree-2 vertices inside pendant
        # paths, which places them in R1 rather than R2
        p_of[v] = len(hanging)
        if G.degree(v) >= 3:
            paths += [PendantPath(h, v) for h in sorted(hanging)]
        if len(comps) >= 3:
            R3 |= 1 << v
        elif len(comps) == 2:
            if len(hanging) == 1:
                R1 |= 1 << v
            elif len(hanging) == 0:
                R2 |= 1 << v
    by_vertex: dict[int, list[int]] = {}
    for i, p in enumerate(paths):
        by_vertex.setdefault(p.attachment, []).append(i)
    groups = tuple(tuple(ix) for v, ix in sorted(by_vertex.items()) if len(ix) >= 2)
    tail = tuple(i for v, ix in sorted(by_vertex.items()) if len(ix) == 1 for i in ix)
    r3_1 = sum(1 << v for v in VertexSet(R3, G.n) if p_of[v] == 1)
    r3_2 = sum(1 << v for v in VertexSet(R3, G.n) if p_of[v] >= 2)
    mandatory = (R2 | R3).bit_count() + sum(len(g) - 1 for g in groups)

    def union(ix):
        return VertexSet.of((u for i in ix for u in paths[i].vertices), G.n)

    dec = PendantDecomposition(
        n=G.n,
        pendant_paths=tuple(paths),
        p_of=p_of,
        R1=VertexSet(R1, G.n),
        R2=VertexSet(R2, G.n),
        R3=VertexSet(R3, G.n),
        R3_1=VertexSet(r3_1, G.n),
        R3_2=VertexSet(r3_2, G.n),
        groups=groups,
        tail_group=tail,
        mandatory_size=mandatory,
        group_vertices=tuple(union(g) for g in groups) + (union(tail),),
    )
    if G.is_tree() and not groups:
        raise AssertionError("a non-path tree must have a vertex with two pendant paths")
    return dec


def _require_nonpath_tree(T: Graph) -> None:
    if not T.is_tree():
        raise GraphError("not_a_tree", "input is not a tree")
    if T.is_path():
        raise GraphError("path_input", "input is a path; use path_count / Z_c(P_n) = 1")


def enumerate_m_sets(T: Graph) -> list[VertexSet]:
    """All M-sets of a non-path tree, in lexicographic order."""
    _require_nonpath_tree(T)
    dec = pendant_decomposition(T)
    core = (dec.R2 | dec.R3).mask
    bases = [[dec.pendant_paths[i].base for i in g] for g in dec.groups]
    out = []
    for omitted in itertools.product(*bases):
        m = core
        for g, skip in zip(bases, omitted):
            for b in g:
                if b != skip:
                    m |= 1 << b
        out.append(VertexSet(m, T.n))
    return sorted(out, key=VertexSet.sort_key)


def tree_zc(T: Graph) -> int:
    _require_nonpath_tree(T)
    return pendant_decomposition(T).mandatory_size


def is_cf_dense_tree(T: Graph) -> bool:
    """Every vertex lies in a minimum connected forcing set.

    True for P1 and P2; false for every longer path; otherwise true exactly
    when each support vertex is adjacent to at least two leaves.
    """
    if not T.is_tree():
        raise GraphError("not_a_tree", "input is not a tree")
    T.require_kernel_size()
    return bool(kernels.strong_support_rule(T.adj, T.n))


@dataclass(frozen=True)
class CappedCompositionSpec:
    total: int
    caps: tuple[int, ...]
    allow_zero: bool = False


def _compositions(a: int, caps: tuple[int, ...], lo: int) -> Iterator[tuple[int, ...]]:
    if not caps:
        if a == 0:
            yield ()
        return
    first, rest = caps[0], caps[1:]
    rest_min = lo * len(rest)
    rest_max = sum(rest)
    for x in range(lo, min(first, a) + 1):
        r = a - x
        if rest_min <= r <= rest_max:
            for tail in _compositions(r, rest, lo):
                yield (x,) + tail


def capped_compositions(spec: CappedCompositionSpec) -> list[tuple[int, ...]]:
    """Tuples summing to ``spec.total`` with entries in [1, cap] (or [0, cap]),
    in lexicographic order."""
    if spec.total < 0:
        return []
    return list(_compositions(spec.total, tuple(spec.caps), 0 if spec.allow_zero else 1))


@lru_cache(maxsize=None)
def _count(a: int, caps: tuple[int, ...], lo: int) -> int:
    if a < 0:
        return 0
    ways = [1] + [0] * a
    for cap in caps:
        nxt = [0] * (a + 1)
        for s, w in enumerate(ways):
            if w:
                for x in range(lo, min(cap, a - s) + 1):
                    nxt[s + x] += w
        ways = nxt
    return ways[a]


def composition_count(spec: CappedCompositionSpec) -> int:
    return _count(spec.total, tuple(spec.caps), 0 if spec.allow_zero else 1)


def s_count(a: int, caps: Sequence[int]) -> int:
    return _count(a, tuple(caps), 1)


def s_prime_count(a: int, caps: Sequence[int]) -> int:
    return _count(a, tuple(caps), 0)


def all_but_one_count(a: int, caps: Sequence[int]) -> int:
    """Ways to put ``a`` vertices on paths of the given lengths with at most
    one path left empty."""
    caps = tuple(caps)
    if not caps:
        raise ValueError("caps must be nonempty")
    total = s_count(a, caps)
    for i in range(len(caps)):
        total += s_count(a, caps[:i] + caps[i + 1:])
    return total


def path_count(n: int, i: int) -> int:
    """Number of connected forcing sets of size ``i`` in P_n."""
    if n < 1 or not 1 <= i <= n:
        raise GraphError("size_out_of_range", f"need 1 <= i <= n, got n={n}, i={i}")
    if n == 1:
        return 1
    return 2 if i == 1 else n - i + 1


def spider_count(legs: Sequence[int], j: int) -> int:
    if len(legs) < 3 or any(b < 1 for b in legs):
        raise GraphError("bad_family", "spider needs >= 3 legs of length >= 1")
    if not 1 <= j <= 1 + sum(legs):
        raise GraphError("size_out_of_range", f"j={j} outside 1..{1 + sum(legs)}")
    return all_but_one_count(j - 1, legs)


def tree_count(T: Graph, d: int, dec: PendantDecomposition | None = None) -> int:
    """Number of connected forcing sets of size ``d`` in a non-path tree.

    The ``d - |M|`` vertices beyond an M-set are split among the pendant
    path groups; within a multi-path group at most one path may stay empty,
    the single-path group is unconstrained, and each path receives a prefix
    starting at its base.
    """
    _require_nonpath_tree(T)
    if not 1 <= d <= T.n:
        raise GraphError("size_out_of_range", f"d={d} outside 1..{T.n}")
    dec = dec or pendant_decomposition(T)
    extra = d - dec.mandatory_size
    if extra < 0:
        return 0
    group_lengths = [dec.path_lengths(g) for g in dec.groups]
    tail_lengths = dec.path_lengths(dec.tail_group)
    outer = [sum(ls) - len(ls) + 1 for ls in group_lengths] + [sum(tail_lengths)]
    total = 0
    for t in capped_compositions(CappedCompositionSpec(extra, tuple(outer), allow_zero=True)):
        term = s_prime_count(t[-1], tail_lengths)
        for ls, tj in zip(group_lengths, t):
            if not term:
                break
            term *= all_but_one_count(len(ls) - 1 + tj, ls)
        total += term
    return total


def contains_m_set(T: Graph, S: VertexSet, dec: PendantDecomposition | None = None) -> bool:
    dec = dec or pendant_decomposition(T)
    core = (dec.R2 | dec.R3).mask
    if S.mask & core != core:
        return False
    for g in dec.groups:
        missing = sum(1 for i in g if dec.pendant_paths[i].base not in S)
        if missing > 1:
            return False
    return True


def component_count(G: Graph, S: VertexSet) -> int:
    return component_count_mask(G, S.mask)
