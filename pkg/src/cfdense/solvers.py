"""Exact Z / Z_t / Z_c, minimum-set enumeration, connected forcing counts,
density with witnesses, extremal closed forms and the uniqueness scan."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import kernels, trees
from .graph import Graph, GraphError, VertexSet

VARIANTS = ("Z", "Zt", "Zc")
DENSITY_VARIANTS = {"ZF": "Z", "TF": "Zt", "CF": "Zc"}
_KERNEL_CODE = {"Z": kernels.Z, "Zt": kernels.ZT, "Zc": kernels.ZC}


class SolverError(ValueError):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


class UniquenessViolation(AssertionError):
    """A size other than Z_c(G) or n has exactly one connected forcing set."""

    def __init__(self, sizes: list[int], zc: int, n: int):
        super().__init__(f"unique connected forcing sets at sizes {sizes}, allowed only {{{zc}, {n}}}")
        self.sizes = sizes
        self.zc = zc
        self.n = n


def normalize_variant(variant: str) -> str:
    v = {"z": "Z", "zt": "Zt", "zc": "Zc", "zf": "Z", "tf": "Zt", "cf": "Zc"}.get(variant.lower())
    if v is None:
        raise SolverError("bad_variant", f"unknown variant {variant!r}")
    return v


def check_preconditions(G: Graph, variant: str) -> None:
    if G.n == 0:
        raise SolverError("empty_graph", "graph has no vertices")
    try:
        G.require_kernel_size()
    except GraphError as e:
        raise SolverError(e.code, str(e)) from None
    if variant == "Zc" and not G.is_connected():
        raise SolverError("cf_undefined", "connected forcing is undefined on a disconnected graph")
    if variant == "Zt" and G.has_isolated_vertex():
        raise SolverError("no_total_forcing_set", "no total forcing set exists (graph has an isolated vertex)")


def lower_bound(G: Graph, variant: str) -> int:
    if variant == "Zc" and G.is_tree() and not G.is_path():
        return trees.tree_zc(G)
    if G.is_connected() and not G.is_path():
        return max(1, G.min_degree())
    return 1


def _search(G: Graph, variant: str, k: int, stop_first: bool, store: bool):
    if variant == "Zc":
        return kernels.search_connected(G.adj, G.n, k, stop_first, store)
    return kernels.search_subsets(G.adj, G.n, k, _KERNEL_CODE[variant], stop_first, store)


@dataclass(frozen=True)
class SolveResult:
    variant: str
    value: int
    one_minimum_set: VertexSet
    lower_bound_used: int
    nodes_explored: int

    def to_dict(self) -> dict:
        return {
            "variant": self.variant,
            "value": self.value,
            "one_minimum_set": self.one_minimum_set.to_list(),
            "lower_bound_used": self.lower_bound_used,
            "nodes_explored": self.nodes_explored,
        }


def forcing_number(G: Graph, variant: str = "Zc") -> SolveResult:
    """Exact minimum forcing set size, scanning sizes upward from a lower bound."""
    variant = normalize_variant(variant)
    check_preconditions(G, variant)
    lb = lower_bound(G, variant)
    nodes = 0
    for k in range(lb, G.n + 1):
        masks, cnt, visited = _search(G, variant, k, True, True)
        nodes += int(visited)
        if cnt:
            return SolveResult(variant, k, VertexSet(int(masks[0]), G.n), lb, nodes)
    raise AssertionError("the full vertex set always qualifies")


def sets_of_size(G: Graph, variant: str, k: int) -> list[VertexSet]:
    """All forcing sets of the variant with exactly ``k`` vertices, sorted."""
    variant = normalize_variant(variant)
    check_preconditions(G, variant)
    masks, _, _ = _search(G, variant, k, False, True)
    return sorted((VertexSet(int(m), G.n) for m in masks), key=VertexSet.sort_key)


def enumerate_minimum_sets(G: Graph, variant: str = "Zc") -> list[VertexSet]:
    res = forcing_number(G, variant)
    return sets_of_size(G, res.variant, res.value)


def _check_size(G: Graph, i: int) -> None:
    if not 1 <= i <= G.n:
        raise SolverError("size_out_of_range", f"size {i} outside 1..{G.n}")


def count_cf_sets(G: Graph, i: int) -> int:
    """z_c(G; i) by enumerating connected i-subsets and testing each."""
    check_preconditions(G, "Zc")
    _check_size(G, i)
    _, cnt, _ = kernels.search_connected(G.adj, G.n, i, False, False)
    return int(cnt)


def connected_forcing_sets(G: Graph, i: int) -> list[VertexSet]:
    _check_size(G, i)
    return sets_of_size(G, "Zc", i)


@dataclass(frozen=True)
class CountProfile:
    n: int
    values: dict[int, int]
    methods: dict[int, str]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "entries": [{"size": i, "count": self.values[i], "method": self.methods[i]} for i in sorted(self.values)],
        }

    def to_csv(self) -> str:
        rows = ["d,count,method"] + [f"{i},{self.values[i]},{self.methods[i]}" for i in sorted(self.values)]
        return "\n".join(rows) + "\n"


def count_profile(G: Graph, closed_form: bool = True) -> CountProfile:
    """z_c(G; i) for every i.

    With ``closed_form`` the path and tree formulas (and the extremal sizes on
    other graphs) supply entries where they apply; everything else comes
    from one pass over all connected subsets.
    """
    check_preconditions(G, "Zc")
    n = G.n
    values: dict[int, int] = {}
    methods: dict[int, str] = {}
    if closed_form and G.is_path():
        for i in range(1, n + 1):
            values[i], methods[i] = trees.path_count(n, i), "closed_form"
        return CountProfile(n, values, methods)
    if closed_form and G.is_tree():
        dec = trees.pendant_decomposition(G)
        for i in range(1, n + 1):
            values[i], methods[i] = trees.tree_count(G, i, dec), "closed_form"
        return CountProfile(n, values, methods)
    hist, _, _ = kernels.connected_forcing_profile(G.adj, n)
    for i in range(1, n + 1):
        values[i], methods[i] = int(hist[i]), "brute_force"
    if closed_form:
        for i, v in extremal_cf_counts(G).by_size().items():
            values[i], methods[i] = v, "closed_form"
    return CountProfile(n, values, methods)


@dataclass(frozen=True)
class DensityReport:
    variant: str
    dense: bool
    value: int
    witness: dict[int, VertexSet]
    uncovered: VertexSet
    minimum_set_count: int

    def to_dict(self) -> dict:
        label = {v: k for k, v in DENSITY_VARIANTS.items()}[self.variant]
        return {
            "variant": label,
            "dense": self.dense,
            "value": self.value,
            "minimum_set_count": self.minimum_set_count,
            "witness": {str(v): s.to_list() for v, s in sorted(self.witness.items())},
            "uncovered": self.uncovered.to_list(),
        }


def density(G: Graph, variant: str = "CF") -> DensityReport:
    """Is every vertex in some minimum set? Each covered vertex gets the
    lexicographically first minimum set containing it."""
    variant = normalize_variant(variant)
    sets = enumerate_minimum_sets(G, variant)
    witness: dict[int, VertexSet] = {}
    for s in sets:
        for v in s:
            witness.setdefault(v, s)
    covered = VertexSet.of(witness, G.n)
    uncovered = VertexSet.full(G.n) - covered
    return DensityReport(variant, len(uncovered) == 0, len(sets[0]), witness, uncovered, len(sets))


@dataclass(frozen=True)
class ExtremalCounts:
    """Closed-form z_c(G; i) at i = 1, n-2, n-1, n (absent where i < 1)."""

    n: int
    one: int
    n_minus_2: int | None
    n_minus_1: int | None
    full: int = 1

    def by_size(self) -> dict[int, int]:
        out = {1: self.one}
        for i, v in ((self.n - 2, self.n_minus_2), (self.n - 1, self.n_minus_1), (self.n, self.full)):
            if v is None:
                continue
            if i in out and out[i] != v:
                raise AssertionError(f"closed forms disagree at size {i}: {out[i]} vs {v}")
            out[i] = v
        return out

    def to_dict(self) -> dict:
        labelled = (("1", 1, self.one), ("n-2", self.n - 2, self.n_minus_2),
                    ("n-1", self.n - 1, self.n_minus_1), ("n", self.n, self.full))
        return {
            "n": self.n,
            "entries": [{"label": lab, "size": i, "count": v} for lab, i, v in labelled if v is not None],
        }


def extremal_cf_counts(G: Graph) -> ExtremalCounts:
    check_preconditions(G, "Zc")
    c1, cn2, cn1, cn = (int(x) for x in kernels.extremal_counts(G.adj, G.n))
    return ExtremalCounts(G.n, c1, cn2 if cn2 >= 0 else None, cn1 if cn1 >= 0 else None, cn)


@dataclass(frozen=True)
class UniquenessReport:
    zc: int
    n: int
    unique_sizes: list[int] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return set(self.unique_sizes) <= {self.zc, self.n}


def uniqueness_report(G: Graph) -> UniquenessReport:
    check_preconditions(G, "Zc")
    hist, best, _ = kernels.connected_forcing_profile(G.adj, G.n)
    return UniquenessReport(int(best), G.n, [i for i in range(1, G.n + 1) if hist[i] == 1])


def uniqueness_scan(G: Graph) -> list[int]:
    """Sizes i with exactly one connected forcing set of size i.

    Raises ``UniquenessViolation`` if such a size is neither Z_c(G) nor n.
    """
    rep = uniqueness_report(G)
    if not rep.consistent:
        raise UniquenessViolation([i for i in rep.unique_sizes if i not in (rep.zc, rep.n)], rep.zc, rep.n)
    return rep.unique_sizes
