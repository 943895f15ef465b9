"""Color change rule, closures with chronologies, forcing-set predicates."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from . import kernels
from .graph import Graph, VertexSet, component_count_mask


class ForcingError(ValueError):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class Force:
    t: int
    forcer: int
    forced: int


@dataclass(frozen=True)
class Chronology:
    initial: VertexSet
    steps: tuple[Force, ...]

    def forcer_of(self) -> dict[int, int]:
        return {f.forced: f.forcer for f in self.steps}

    def to_jsonl(self) -> str:
        return "".join(json.dumps({"t": f.t, "forcer": f.forcer, "forced": f.forced}) + "\n" for f in self.steps)

    @classmethod
    def from_jsonl(cls, text: str, initial: VertexSet) -> "Chronology":
        steps = []
        for line in text.splitlines():
            if line.strip():
                d = json.loads(line)
                steps.append(Force(int(d["t"]), int(d["forcer"]), int(d["forced"])))
        return cls(initial, tuple(steps))

    def replay(self, G: Graph) -> VertexSet:
        """Re-run the recorded forces, checking each one against the rule.

        Forces sharing a timestep are validated against the coloring left by
        the previous timestep.
        """
        blue = self.initial.mask
        i = 0
        steps = self.steps
        last_t = 0
        while i < len(steps):
            t = steps[i].t
            if t < last_t:
                raise ForcingError("bad_chronology", "timesteps decrease")
            newly = 0
            while i < len(steps) and steps[i].t == t:
                f = steps[i]
                if not blue >> f.forcer & 1:
                    raise ForcingError("bad_chronology", f"forcer {f.forcer} is white at step {t}")
                white = G.masks[f.forcer] & ~blue
                if white != 1 << f.forced:
                    raise ForcingError("bad_chronology", f"{f.forced} is not the unique white neighbor of {f.forcer}")
                if newly >> f.forced & 1:
                    raise ForcingError("bad_chronology", f"{f.forced} forced twice")
                newly |= 1 << f.forced
                i += 1
            blue |= newly
            last_t = t
        return VertexSet(blue, G.n)


def _mask(G: Graph, S: Iterable[int] | VertexSet) -> int:
    G.require_kernel_size()
    return G.vertex_set(S).mask


def closure_mask(G: Graph, s: int) -> int:
    return int(kernels.closure(G.adj, G.n, s))


def forcing_closure(G: Graph, S: Iterable[int] | VertexSet) -> tuple[VertexSet, Chronology]:
    """Closure of ``S`` under the color change rule and its synchronous chronology."""
    s = _mask(G, S)
    blue, forcer, when = kernels.chronology(G.adj, G.n, s)
    steps = sorted(
        (Force(int(when[w]), int(forcer[w]), w) for w in range(G.n) if forcer[w] >= 0),
        key=lambda f: (f.t, f.forcer),
    )
    return VertexSet(int(blue), G.n), Chronology(VertexSet(s, G.n), tuple(steps))


def is_zero_forcing(G: Graph, S: Iterable[int] | VertexSet) -> bool:
    return closure_mask(G, _mask(G, S)) == G.full_mask


@dataclass(frozen=True)
class SetClassification:
    is_zero_forcing: bool
    induces_isolate_free: bool
    induces_connected: bool
    is_total_forcing: bool
    is_connected_forcing: bool
    closure: VertexSet


def classify_set(G: Graph, S: Iterable[int] | VertexSet) -> SetClassification:
    s = _mask(G, S)
    closed = closure_mask(G, s)
    zf = closed == G.full_mask
    iso_free = all(G.masks[v] & s for v in VertexSet(s, G.n))
    connected = s != 0 and component_count_mask(G, s) == 1
    return SetClassification(
        is_zero_forcing=zf,
        induces_isolate_free=iso_free,
        induces_connected=connected,
        is_total_forcing=zf and iso_free,
        is_connected_forcing=zf and connected,
        closure=VertexSet(closed, G.n),
    )


def reverse_chronology(G: Graph, S: Iterable[int] | VertexSet) -> VertexSet:
    """Replace each forcing chain's origin by its terminal vertex.

    Chains follow the synchronous chronology of ``S``; members of ``S`` that
    never force are their own terminals.
    """
    s = _mask(G, S)
    r = int(kernels.reversal(G.adj, G.n, s))
    if r < 0:
        raise ForcingError("not_zero_forcing", "set is not a zero forcing set")
    return VertexSet(r, G.n)


def forcing_chains(chrono: Chronology) -> list[list[int]]:
    nxt = {f.forcer: f.forced for f in chrono.steps}
    chains = []
    for v in chrono.initial:
        chain = [v]
        while chain[-1] in nxt:
            chain.append(nxt[chain[-1]])
        chains.append(chain)
    return chains

