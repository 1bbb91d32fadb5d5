"""Full analysis of one ring, family sweeps, and JSON/DOT export."""

from __future__ import annotations

import json
import re
import time
from dataclasses import asdict, dataclass, field
from itertools import combinations_with_replacement
from os import PathLike
from typing import Sequence

from . import formulas
from .clique import max_clique
from .formulas import FormulaPrediction, Quantity, Status
from .graph import DISCONNECTED, all_pairs_distances, diameter, reduce_by_closed_neighborhoods
from .pis import PisGraph, build_pis, is_disconnected_case
from .rings import ClassTag, RingClass, RingSpec, as_ring_spec, classify
from .sdim import (
    DEFAULT_BRUTEFORCE_CAP,
    Method,
    SdimResult,
    is_strong_resolving_set,
    sdim_bruteforce,
    sdim_via_reduction,
    sdim_via_vertex_cover,
)

SWEEP_VERTEX_LIMIT = 1000

DISCONNECTED_REASON = (
    "disconnected: product of two fields "
    "(PIS(R) is disconnected exactly when R is a direct product of two fields)"
)


class DisconnectedCaseError(ValueError):
    """Raised for a product of two fields, whose PIS graph is disconnected."""


@dataclass
class MethodReport:
    value: int | None
    witness: list[str] | None
    applicable: bool = True
    reason: str = ""


@dataclass
class PredictionRow:
    formula_id: str
    quantity: str
    value: int | None
    computed: int | None
    status: str

    @classmethod
    def from_prediction(cls, p: FormulaPrediction) -> "PredictionRow":
        return cls(p.formula_id, p.quantity.value, p.predicted, p.computed, p.status.value)


@dataclass
class AnalysisReport:
    spec: str
    factors: list[int]
    ring_class: dict
    vertices: int
    edges: int
    diameter: int | str
    clique_size: int
    clique_witness: list[str]
    reduced_classes: int
    sdim: dict[str, MethodReport]
    predictions: list[PredictionRow]
    notes: list[str] = field(default_factory=list)
    timings_ms: dict[str, float] | None = None

    def sdim_values(self) -> dict[str, int]:
        return {k: r.value for k, r in self.sdim.items() if r.applicable}

    @property
    def methods_agree(self) -> bool:
        return len(set(self.sdim_values().values())) <= 1

    def to_dict(self) -> dict:
        out = {
            "spec": self.spec,
            "factors": list(self.factors),
            "class": dict(self.ring_class),
            "vertices": self.vertices,
            "edges": self.edges,
            "diameter": self.diameter,
            "clique": {"size": self.clique_size, "witness": list(self.clique_witness)},
            "reduced_classes": self.reduced_classes,
            "sdim": {k: r.value for k, r in self.sdim.items()},
            "sdim_witness": {k: r.witness for k, r in self.sdim.items()},
            "sdim_applicable": {
                k: {"applicable": r.applicable, "reason": r.reason} for k, r in self.sdim.items()
            },
            "predictions": [asdict(p) for p in self.predictions],
            "notes": list(self.notes),
        }
        if self.timings_ms is not None:
            out["timings_ms"] = dict(self.timings_ms)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "AnalysisReport":
        sdim = {
            k: MethodReport(
                v,
                data["sdim_witness"][k],
                data["sdim_applicable"][k]["applicable"],
                data["sdim_applicable"][k]["reason"],
            )
            for k, v in data["sdim"].items()
        }
        return cls(
            spec=data["spec"],
            factors=list(data["factors"]),
            ring_class=dict(data["class"]),
            vertices=data["vertices"],
            edges=data["edges"],
            diameter=data["diameter"],
            clique_size=data["clique"]["size"],
            clique_witness=list(data["clique"]["witness"]),
            reduced_classes=data["reduced_classes"],
            sdim=sdim,
            predictions=[PredictionRow(**p) for p in data["predictions"]],
            notes=list(data["notes"]),
            timings_ms=data.get("timings_ms"),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "AnalysisReport":
        return cls.from_dict(json.loads(text))


def export_json(report: AnalysisReport, path: str | PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(report.to_json())


def load_json(path: str | PathLike) -> AnalysisReport:
    with open(path, encoding="utf-8") as fh:
        return AnalysisReport.from_json(fh.read())


def _class_dict(rc: RingClass) -> dict:
    return {"tag": rc.tag.value, "n": rc.n, "m": rc.m}


class _Stopwatch:
    def __init__(self):
        self.laps: dict[str, float] = {}
        self._t = time.perf_counter()

    def lap(self, name: str) -> None:
        now = time.perf_counter()
        self.laps[name] = round((now - self._t) * 1000, 3)
        self._t = now


def _method_report(g: PisGraph, result: SdimResult) -> MethodReport:
    witness = None if result.witness is None else g.labels_of(result.witness)
    return MethodReport(result.value, witness, result.applicable, result.reason)


def analyze_graph(
    spec: RingSpec | str | Sequence[int],
    *,
    oracle: bool = False,
    oracle_cap: int = DEFAULT_BRUTEFORCE_CAP,
    timings: bool = False,
) -> tuple[AnalysisReport, PisGraph]:
    """Build PIS(R) for ``spec`` and compute every invariant the report carries.

    Raises :class:`DisconnectedCaseError` for a product of two fields and
    :class:`~pisdim.pis.EmptyGraphError` for a single field.
    """
    echo = spec.strip() if isinstance(spec, str) else None
    spec = as_ring_spec(spec)
    echo = echo or str(spec)
    if is_disconnected_case(spec):
        raise DisconnectedCaseError(DISCONNECTED_REASON)
    rc = classify(spec)
    watch = _Stopwatch()

    g = build_pis(spec)
    watch.lap("build")
    d = all_pairs_distances(g)
    diam = diameter(g, d)
    watch.lap("distances")
    omega, clique = max_clique(g)
    if not g.is_clique(clique):
        raise AssertionError("clique witness failed re-validation")
    watch.lap("clique")
    reduced = reduce_by_closed_neighborhoods(g)
    watch.lap("reduction")

    notes = []
    results: dict[Method, SdimResult] = {}
    local = rc.tag is ClassTag.LOCAL
    if local:
        notes.append(
            "local ring: outside the non-local scope of the formulas; "
            "only the vertex-cover engine is used"
        )
        results[Method.REDUCTION] = SdimResult.not_applicable(
            Method.REDUCTION, "local ring: outside the non-local scope"
        )
    else:
        results[Method.REDUCTION] = sdim_via_reduction(g, d)
    watch.lap("sdim_reduction")
    results[Method.VERTEX_COVER] = sdim_via_vertex_cover(g, d)
    watch.lap("sdim_vertex_cover")
    if oracle:
        if local:
            results[Method.BRUTEFORCE] = SdimResult.not_applicable(
                Method.BRUTEFORCE, "local ring: outside the non-local scope"
            )
        elif g.n > oracle_cap:
            results[Method.BRUTEFORCE] = SdimResult.not_applicable(
                Method.BRUTEFORCE, f"{g.n} vertices exceeds the oracle cap of {oracle_cap}"
            )
        else:
            results[Method.BRUTEFORCE] = sdim_bruteforce(g, oracle_cap)
        watch.lap("sdim_bruteforce")

    for method, r in results.items():
        if r.applicable and not (
            len(r.witness) == r.value and is_strong_resolving_set(g, r.witness, d)
        ):
            raise AssertionError(f"{method.value} witness is not a strong resolving set")

    computed = {
        Quantity.VERTEX_COUNT: g.n,
        Quantity.DIAMETER: None if diam is DISCONNECTED else diam,
        Quantity.CLIQUE: omega,
        Quantity.SDIM: results[Method.VERTEX_COVER].value,
    }
    preds = [p.compare(computed[p.quantity]) for p in formulas.predictions_for(spec)]

    report = AnalysisReport(
        spec=echo,
        factors=list(spec.factors),
        ring_class=_class_dict(rc),
        vertices=g.n,
        edges=g.edge_count,
        diameter="disconnected" if diam is DISCONNECTED else diam,
        clique_size=omega,
        clique_witness=g.labels_of(clique),
        reduced_classes=reduced.class_count,
        sdim={m.value: _method_report(g, r) for m, r in results.items()},
        predictions=[PredictionRow.from_prediction(p) for p in preds],
        notes=notes,
        timings_ms=watch.laps if timings else None,
    )
    return report, g


def analyze(spec, **kwargs) -> AnalysisReport:
    return analyze_graph(spec, **kwargs)[0]


def format_report(report: AnalysisReport) -> str:
    rc = report.ring_class
    klass = f"{rc['tag']}(n={rc['n']}" + (f", m={rc['m']})" if rc["m"] else ")")
    lines = [
        f"ring            {report.spec}   factors {report.factors}",
        f"class           {klass}",
        f"vertices        {report.vertices}",
        f"edges           {report.edges}",
        f"diameter        {report.diameter}",
        f"clique number   {report.clique_size}   {{{', '.join(report.clique_witness)}}}",
        f"reduced classes {report.reduced_classes}",
        "",
        "sdim",
    ]
    for name, r in report.sdim.items():
        if r.applicable:
            lines.append(f"  {name:<13} {r.value:>5}   {{{', '.join(r.witness or [])}}}")
        else:
            lines.append(f"  {name:<13}   n/a   {r.reason}")
    lines += ["", "predictions"]
    for p in report.predictions:
        lines.append(
            f"  {p.formula_id:<20} {p.quantity:<13} predicted {p.value!s:>5}"
            f"  computed {p.computed!s:>5}  {p.status}"
        )
    for note in report.notes:
        lines.append(f"note: {note}")
    if report.timings_ms:
        lines.append("")
        lines.append(
            "timings (ms)    " + ", ".join(f"{k} {v:.1f}" for k, v in report.timings_ms.items())
        )
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# family sweeps

FAMILIES = ("fields", "unique", "chainpir", "mixed")

_RANGE_ITEM = re.compile(r"^(?P<key>[nmt])=(?P<lo>\d+)(?:\.\.(?P<hi>\d+))?$")


def parse_range(text: str) -> dict[str, range]:
    """``"n=3..5"``, ``"n=1,m=1..3"``, ``"n=2..3,t=3..4"`` -> inclusive ranges."""
    out = {}
    for item in re.sub(r"\s+", "", text).split(","):
        m = _RANGE_ITEM.match(item)
        if m is None:
            raise ValueError(f"malformed range item {item!r}")
        lo = int(m["lo"])
        hi = int(m["hi"]) if m["hi"] is not None else lo
        if hi < lo:
            raise ValueError(f"empty range {item!r}")
        out[m["key"]] = range(lo, hi + 1)
    return out


def family_specs(family: str, ranges: dict[str, range]) -> list[RingSpec]:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if "n" not in ranges:
        raise ValueError("the range must bound n")
    ns = ranges["n"]
    if family == "fields":
        return [RingSpec((1,) * n) for n in ns]
    if family == "unique":
        return [RingSpec((2,) * n) for n in ns]
    if family == "mixed":
        if "m" not in ranges:
            raise ValueError("the mixed family needs an m range")
        return [RingSpec((2,) * n + (1,) * m) for n in ns for m in ranges["m"]]
    ts = ranges.get("t", range(3, 4))
    if ts.start < 3:
        raise ValueError("chainpir factors need t >= 3")
    return [
        RingSpec(tuple(sorted(combo, reverse=True)))
        for n in ns
        for combo in combinations_with_replacement(ts, n)
    ]


@dataclass
class SweepRow:
    spec: RingSpec
    ring_class: RingClass
    vertices: int
    diameter: int | None = None
    clique: int | None = None
    sdim: int | None = None
    predictions: list[FormulaPrediction] = field(default_factory=list)
    skipped: str = ""

    @property
    def adjudicated(self) -> str | None:
        return formulas.adjudicate_mixed(self.predictions)

    @property
    def ok(self) -> bool:
        if self.skipped:
            return True
        mixed = self.ring_class.tag is ClassTag.MIXED_UNIQUE_AND_FIELDS
        for p in self.predictions:
            if mixed and p.formula_id in (formulas.COR_MIXED_PRINTED, formulas.COR_MIXED_ALT):
                continue
            if p.status is not Status.CONFIRMED:
                return False
        return not mixed or self.adjudicated is not None


def sweep_row(spec: RingSpec, vertex_limit: int = SWEEP_VERTEX_LIMIT) -> SweepRow:
    rc = classify(spec)
    count = formulas.predicted_vertex_count(spec)
    if count > vertex_limit:
        return SweepRow(spec, rc, count, skipped=f"{count} vertices exceeds {vertex_limit}")
    g = build_pis(spec)
    d = all_pairs_distances(g)
    diam = diameter(g, d)
    diam = None if diam is DISCONNECTED else diam
    omega, _ = max_clique(g)
    sdim = sdim_via_vertex_cover(g, d).value
    computed = {
        Quantity.VERTEX_COUNT: g.n,
        Quantity.DIAMETER: diam,
        Quantity.CLIQUE: omega,
        Quantity.SDIM: sdim,
    }
    preds = [p.compare(computed[p.quantity]) for p in formulas.predictions_for(spec)]
    return SweepRow(spec, rc, g.n, diam, omega, sdim, preds)


def verify_family(
    family: str, ranges: dict[str, range], vertex_limit: int = SWEEP_VERTEX_LIMIT
) -> list[SweepRow]:
    return [sweep_row(spec, vertex_limit) for spec in family_specs(family, ranges)]


def format_sweep(rows: list[SweepRow]) -> str:
    header = f"{'factors':<22}{'|V|':>6}{'diam':>6}{'omega':>7}{'sdim':>7}  predictions"
    lines = [header, "-" * len(header)]
    for row in rows:
        factors = str(list(row.spec.factors))
        if row.skipped:
            lines.append(f"{factors:<22}{row.vertices:>6}  skipped: {row.skipped}")
            continue
        preds = "; ".join(
            f"{p.formula_id}={p.predicted} {p.status.value}"
            for p in row.predictions
            if p.quantity in (Quantity.SDIM, Quantity.CLIQUE)
        )
        if row.ring_class.tag is ClassTag.MIXED_UNIQUE_AND_FIELDS:
            preds += f"; adjudicated: {row.adjudicated or 'NONE'}"
        lines.append(
            f"{factors:<22}{row.vertices:>6}{row.diameter!s:>6}{row.clique:>7}{row.sdim:>7}  {preds}"
        )
    return "\n".join(lines)
