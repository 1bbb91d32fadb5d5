"""Prime ideal sum graph of a product of chain rings."""

from __future__ import annotations

from dataclasses import dataclass, field
from os import PathLike
from typing import Iterable, Sequence

from .graph import Graph
from .rings import (
    IdealVector,
    RingSpec,
    as_ring_spec,
    enumerate_vertices,
    ideal_sum,
    is_prime_ideal,
    label,
)


class EmptyGraphError(ValueError):
    """The ring has no nonzero proper ideal (it is a field)."""


@dataclass(frozen=True, eq=False)
class PisGraph(Graph):
    """A :class:`Graph` whose vertex ``i`` is the ideal ``vertex_ideals[i]``."""

    vertex_ideals: tuple[IdealVector, ...] = ()
    labels: tuple[str, ...] = ()
    spec: RingSpec | None = None
    _index: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        super().__post_init__()
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.vertex_ideals)})

    def index(self, ideal: Sequence[int]) -> int:
        return self._index[tuple(ideal)]

    def ideals_of(self, vertices: Iterable[int]) -> list[IdealVector]:
        return [self.vertex_ideals[v] for v in vertices]

    def labels_of(self, vertices: Iterable[int]) -> list[str]:
        return [self.labels[v] for v in vertices]


def build_pis(spec: RingSpec | str | Sequence[int]) -> PisGraph:
    """Vertices are the nonzero proper ideals; ``I ~ J`` iff ``I + J`` is prime."""
    spec = as_ring_spec(spec)
    ideals = enumerate_vertices(spec)
    if not ideals:
        raise EmptyGraphError(f"{spec} is a field: it has no nonzero proper ideal")
    adj = [0] * len(ideals)
    for i, a in enumerate(ideals):
        for j in range(i + 1, len(ideals)):
            if is_prime_ideal(spec, ideal_sum(a, ideals[j])):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return PisGraph(
        tuple(adj),
        vertex_ideals=tuple(ideals),
        labels=tuple(label(spec, v) for v in ideals),
        spec=spec,
    )


def is_disconnected_case(spec: RingSpec) -> bool:
    """PIS(R) is disconnected exactly for a product of two fields."""
    return as_ring_spec(spec).factors == (1, 1)


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: Graph, name: str = "PIS") -> str:
    labels = getattr(g, "labels", None) or tuple(str(v) for v in range(g.n))
    lines = [f"graph {_quote(name)} {{"]
    lines += [f"  {_quote(s)};" for s in labels]
    lines += [f"  {_quote(labels[u])} -- {_quote(labels[v])};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_dot(g: Graph, path: str | PathLike, name: str = "PIS") -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_dot(g, name))
