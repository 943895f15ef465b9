"""Predicted forcing numbers of Cartesian products, joins and coronas, and
sufficient conditions for those operations to preserve density.

Hypotheses are evaluated by exact solves on the operands (and, for the
Cartesian conditions, on the product). A density conclusion is reported as
``guaranteed`` only with the satisfied hypotheses that imply it; anything
else is ``not_implied``, which says nothing about whether the product is
dense.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from . import solvers
from .graph import Graph
from .operations import cartesian_product, corona, join

OPERATIONS = ("cartesian", "join", "corona")
EXACT, BOUND, NA = "exact", "upper_bound", "not_applicable"
GUARANTEED, NOT_IMPLIED = "guaranteed", "not_implied"


@dataclass(frozen=True)
class PredictedValue:
    kind: str
    value: int | None = None
    basis: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {"kind": self.kind, "value": self.value, "basis": list(self.basis)}


@dataclass(frozen=True)
class DensityConclusion:
    status: str
    justification: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {"status": self.status, "justification": list(self.justification)}


@dataclass
class OperationPrediction:
    operation: str
    predicted: dict[str, PredictedValue]
    hypotheses_checked: list[tuple[str, bool]] = field(default_factory=list)
    conclusion_density: dict[str, DensityConclusion] = field(default_factory=dict)
    verified: dict | None = None

    def to_dict(self) -> dict:
        return {
            "operation": self.operation,
            "predicted": {k: v.to_dict() for k, v in self.predicted.items()},
            "hypotheses_checked": [{"name": n, "holds": h} for n, h in self.hypotheses_checked],
            "conclusion_density": {k: v.to_dict() for k, v in self.conclusion_density.items()},
            "verified": self.verified,
        }


class Operand:
    """Lazily computed forcing data of one graph."""

    def __init__(self, G: Graph, name: str):
        self.G = G
        self.name = name

    @property
    def n(self) -> int:
        return self.G.n

    @cached_property
    def connected(self) -> bool:
        return self.G.is_connected()

    @cached_property
    def isolate_free(self) -> bool:
        return not self.G.has_isolated_vertex()

    @cached_property
    def Z(self) -> int:
        return solvers.forcing_number(self.G, "Z").value

    @cached_property
    def Zt(self) -> int | None:
        return solvers.forcing_number(self.G, "Zt").value if self.isolate_free else None

    @cached_property
    def Zc(self) -> int | None:
        return solvers.forcing_number(self.G, "Zc").value if self.connected else None

    def dense(self, variant: str) -> bool:
        key = "_dense_" + variant
        if key not in self.__dict__:
            if variant == "TF" and not self.isolate_free or variant == "CF" and not self.connected:
                self.__dict__[key] = False
            else:
                self.__dict__[key] = solvers.density(self.G, variant).dense
        return self.__dict__[key]


class _Ledger:
    def __init__(self):
        self.checked: list[tuple[str, bool]] = []

    def __call__(self, name: str, holds: bool) -> bool:
        if (name, holds) not in self.checked:
            self.checked.append((name, holds))
        return holds

    def all(self, *conds: tuple[str, object]) -> tuple[str, ...] | None:
        """Check conditions in order, stopping at the first failure. Each
        condition is a name and a zero-argument callable."""
        names = []
        for name, test in conds:
            if not self(name, bool(test())):
                return None
            names.append(name)
        return tuple(names)


def build(G: Graph, H: Graph, operation: str) -> Graph:
    if operation == "cartesian":
        return cartesian_product(G, H)
    if operation == "join":
        return join(G, H)
    if operation == "corona":
        return corona(G, H)
    raise ValueError(f"unknown operation {operation!r}")


NONTRIVIAL_JOIN = "n(G) + n(H) >= 3"


def _conn_or_iso(X: Operand) -> tuple[str, object]:
    return f"{X.name} connected or isolate-free", lambda: X.connected or X.isolate_free


def _predict(g: Operand, h: Operand, operation: str, led: _Ledger) -> dict[str, PredictedValue]:
    out: dict[str, PredictedValue] = {}
    if operation == "join":
        basis = led.all(_conn_or_iso(g), _conn_or_iso(h))
        value = min(g.Z + h.n, h.Z + g.n)
        out["Zt"] = PredictedValue(EXACT, value, basis) if basis else PredictedValue(NA)
        # K1 v K1 = K2 has Z = Zc = 1 while the min-formula gives 2
        if basis and led(NONTRIVIAL_JOIN, g.n + h.n >= 3):
            basis += (NONTRIVIAL_JOIN,)
        else:
            basis = None
        for v in ("Z", "Zc"):
            out[v] = PredictedValue(EXACT, value, basis) if basis else PredictedValue(NA)
        return {v: out[v] for v in ("Z", "Zt", "Zc")}

    if operation == "corona":
        q = g.n
        iso = ("H isolate-free", lambda: h.isolate_free)
        big = ("n(H) >= 2", lambda: h.n >= 2)
        basis = led.all(iso, big)
        out["Z"] = PredictedValue(EXACT, q * h.Z + g.Z, basis) if basis else PredictedValue(NA)
        basis = led.all(iso)
        if basis is None:
            out["Zt"] = PredictedValue(NA)
        elif led("Zt(H) = Z(H)", h.Zt == h.Z):
            out["Zt"] = PredictedValue(EXACT, q * h.Z + g.Z, basis + ("Zt(H) = Z(H)",))
        else:
            led("Zt(H) > Z(H)", True)
            out["Zt"] = PredictedValue(EXACT, q * h.Z + q, basis + ("Zt(H) > Z(H)",))
        basis = led.all(("G connected", lambda: g.connected), iso)
        out["Zc"] = PredictedValue(EXACT, q * h.Z + q, basis) if basis else PredictedValue(NA)
        return out

    if operation == "cartesian":
        out["Z"] = PredictedValue(BOUND, min(g.Z * h.n, h.Z * g.n))
        terms, basis = [], []
        if led("H isolate-free", h.isolate_free):
            terms.append(g.Z * h.n)
            basis.append("H isolate-free")
        if led("G isolate-free", g.isolate_free):
            terms.append(h.Z * g.n)
            basis.append("G isolate-free")
        out["Zt"] = PredictedValue(BOUND, min(terms), tuple(basis)) if terms else PredictedValue(NA)
        basis = led.all(("G connected", lambda: g.connected), ("H connected", lambda: h.connected))
        if basis:
            out["Zc"] = PredictedValue(BOUND, min(g.Zc * h.n, h.Zc * g.n), basis)
        else:
            out["Zc"] = PredictedValue(NA)
        return out
    raise ValueError(f"unknown operation {operation!r}")


def predict_operation(G: Graph, H: Graph, operation: str) -> OperationPrediction:
    """Predicted Z, Zt, Zc of the operation's result; exact values for join
    and corona, upper bounds for the Cartesian product."""
    led = _Ledger()
    pred = _predict(Operand(G, "G"), Operand(H, "H"), operation, led)
    return OperationPrediction(operation, pred, led.checked)


def _density_conditions(g: Operand, h: Operand, product: Operand, operation: str, led: _Ledger):
    found: dict[str, tuple[str, ...]] = {}

    def record(variants, basis):
        if basis:
            for v in variants:
                found.setdefault(v, basis)

    if operation == "cartesian":
        for a, b in ((g, h), (h, g)):
            A, B = a.name, b.name
            record(["ZF"], led.all(
                (f"{A} ZF-dense", lambda: a.dense("ZF")),
                (f"Z(GxH) = Z({A})*n({B})", lambda: product.Z == a.Z * b.n),
            ))
            record(["TF"], led.all(
                (f"{A} ZF-dense", lambda: a.dense("ZF")),
                (f"{B} isolate-free", lambda: b.isolate_free),
                (f"Zt(GxH) = Z({A})*n({B})", lambda: product.Zt == a.Z * b.n),
            ))
            record(["CF"], led.all(
                ("G connected", lambda: g.connected),
                ("H connected", lambda: h.connected),
                (f"{A} CF-dense", lambda: a.dense("CF")),
                (f"Zc(GxH) = Zc({A})*n({B})", lambda: product.Zc == a.Zc * b.n),
            ))
    elif operation == "join":
        for a, b in ((g, h), (h, g)):
            A, B = a.name, b.name
            record(["ZF", "TF", "CF"], led.all(
                _conn_or_iso(g),
                _conn_or_iso(h),
                (f"{A} ZF-dense", lambda: a.dense("ZF")),
                (f"n({B}) - Z({B}) <= n({A}) - Z({A})", lambda: b.n - b.Z <= a.n - a.Z),
            ))
    elif operation == "corona":
        iso = ("H isolate-free", lambda: h.isolate_free)
        gz = ("G ZF-dense", lambda: g.dense("ZF"))
        record(["ZF"], led.all(iso, gz, ("H ZF-dense", lambda: h.dense("ZF"))))
        record(["TF"], led.all(
            iso, gz, ("H TF-dense", lambda: h.dense("TF")), ("Zt(H) = Z(H)", lambda: h.Zt == h.Z),
        ))
        record(["TF"], led.all(
            iso, gz, ("H ZF-dense", lambda: h.dense("ZF")), ("Zt(H) > Z(H)", lambda: h.Zt > h.Z),
        ))
        # minimum connected forcing sets of the corona meet each copy of H in
        # Z(H) vertices, so a minimum connected forcing set of H only helps
        # when it is also a minimum zero forcing set
        record(["CF"], led.all(
            ("G connected", lambda: g.connected),
            ("H connected", lambda: h.connected),
            ("n(H) >= 2", lambda: h.n >= 2),
            ("H CF-dense", lambda: h.dense("CF")),
            ("Zc(H) = Z(H)", lambda: h.Zc == h.Z),
        ))
    else:
        raise ValueError(f"unknown operation {operation!r}")
    return {
        v: DensityConclusion(GUARANTEED, found[v]) if v in found else DensityConclusion(NOT_IMPLIED)
        for v in ("ZF", "TF", "CF")
    }


def _verify(pred: OperationPrediction, product: Operand) -> dict:
    out: dict = {"values": {}, "density": {}}
    for v, p in pred.predicted.items():
        if p.kind == NA:
            continue
        computed = getattr(product, v)
        ok = computed == p.value if p.kind == EXACT else computed <= p.value
        out["values"][v] = {"computed": computed, "consistent": ok}
    for v, c in pred.conclusion_density.items():
        if c.status == GUARANTEED:
            out["density"][v] = {"dense": product.dense(v)}
    out["consistent"] = all(e["consistent"] for e in out["values"].values()) and all(
        e["dense"] for e in out["density"].values()
    )
    return out


def check_density_preservation(G: Graph, H: Graph, operation: str, verify: bool = False) -> OperationPrediction:
    """Predicted values plus the density conclusions the operation's
    sufficient conditions imply. With ``verify`` the product is solved
    directly and compared with every prediction and guarantee."""
    g, h = Operand(G, "G"), Operand(H, "H")
    product = Operand(build(G, H, operation), "GxH")
    led = _Ledger()
    pred = OperationPrediction(operation, _predict(g, h, operation, led))
    pred.conclusion_density = _density_conditions(g, h, product, operation, led)
    pred.hypotheses_checked = led.checked
    if verify:
        pred.verified = _verify(pred, product)
    return pred


def verify_prediction(G: Graph, H: Graph, operation: str) -> OperationPrediction:
    pred = predict_operation(G, H, operation)
    pred.verified = _verify(pred, Operand(build(G, H, operation), "GxH"))
    return pred
