"""Closed-form predictions for PIS(R) per ring class, and their comparison
with computed values.

Formula identifiers (used verbatim in reports):

=====================  =========================================
``Thm-fields``         sdim = 2^n - n - 2, n >= 3 fields
``Thm-unique``         sdim = 3^n - n - 3, n >= 2 factors with t = 2
``Cor-mixed(printed)`` sdim = 3^n 2^m - n - 3
``Cor-mixed(alt)``     sdim = 3^n 2^m - (n + m) - 3
``Thm-chainPIR``       sdim = |V| - n - 1, n >= 2 factors with t >= 3
=====================  =========================================
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace

from .graph import Graph
from .rings import ClassTag, IdealVector, RingClass, RingSpec, classify

THM_FIELDS = "Thm-fields"
THM_UNIQUE = "Thm-unique"
COR_MIXED_PRINTED = "Cor-mixed(printed)"
COR_MIXED_ALT = "Cor-mixed(alt)"
THM_CHAIN_PIR = "Thm-chainPIR"
LEM_FIELDS_CLIQUE = "Lem-fields-clique"
LEM_UNIQUE_CLIQUE = "Lem-unique-clique"
LEM_CHAIN_PIR_CLIQUE = "Lem-chainPIR-clique"
THM_DIAMETER = "Thm-diameter"
VERTEX_COUNT = "vertex-count"


class Quantity(str, enum.Enum):
    SDIM = "sdim"
    CLIQUE = "clique"
    VERTEX_COUNT = "vertex_count"
    DIAMETER = "diameter"


class Status(str, enum.Enum):
    CONFIRMED = "Confirmed"
    MISMATCH = "Mismatch"
    NOT_COVERED = "NotCovered"


@dataclass(frozen=True)
class FormulaPrediction:
    quantity: Quantity
    predicted: int | None
    formula_id: str
    ring_class: RingClass
    status: Status = Status.NOT_COVERED
    computed: int | None = None

    def compare(self, computed: int | None) -> "FormulaPrediction":
        if self.predicted is None or computed is None:
            return replace(self, status=Status.NOT_COVERED, computed=computed)
        status = Status.CONFIRMED if computed == self.predicted else Status.MISMATCH
        return replace(self, status=status, computed=computed)


def predicted_vertex_count(spec: RingSpec) -> int:
    return math.prod(t + 1 for t in spec.factors) - 2


def predicted_clique(ring_class: RingClass) -> int | None:
    tag, n = ring_class.tag, ring_class.n
    if tag is ClassTag.REDUCED_FIELDS and n >= 3:
        return n
    if tag in (ClassTag.UNIQUE_NONTRIVIAL, ClassTag.CHAIN_PIR) and n >= 2:
        return n + 1
    return None


def _clique_formula_id(tag: ClassTag) -> str:
    return {
        ClassTag.REDUCED_FIELDS: LEM_FIELDS_CLIQUE,
        ClassTag.UNIQUE_NONTRIVIAL: LEM_UNIQUE_CLIQUE,
        ClassTag.CHAIN_PIR: LEM_CHAIN_PIR_CLIQUE,
    }[tag]


def predicted_sdim(
    ring_class: RingClass, vertex_count: int | None = None
) -> list[FormulaPrediction]:
    """Every sdim formula whose hypothesis matches ``ring_class`` exactly.

    Usually zero or one prediction; the mixed class yields both readings
    of its corollary.  ``vertex_count`` is required for ChainPIR.
    """
    tag, n, m = ring_class.tag, ring_class.n, ring_class.m

    def pred(formula_id: str, value: int) -> FormulaPrediction:
        return FormulaPrediction(Quantity.SDIM, value, formula_id, ring_class)

    if tag is ClassTag.REDUCED_FIELDS and n >= 3:
        return [pred(THM_FIELDS, 2**n - n - 2)]
    if tag is ClassTag.UNIQUE_NONTRIVIAL and n >= 2:
        return [pred(THM_UNIQUE, 3**n - n - 3)]
    if tag is ClassTag.MIXED_UNIQUE_AND_FIELDS and n >= 1 and m >= 1:
        base = 3**n * 2**m
        return [pred(COR_MIXED_PRINTED, base - n - 3), pred(COR_MIXED_ALT, base - (n + m) - 3)]
    if tag is ClassTag.CHAIN_PIR and n >= 2:
        if vertex_count is None:
            raise ValueError("the ChainPIR formula needs the vertex count")
        return [pred(THM_CHAIN_PIR, vertex_count - n - 1)]
    return []


def predictions_for(spec: RingSpec) -> list[FormulaPrediction]:
    """All uncompared predictions (vertex count, diameter, clique, sdim) for ``spec``."""
    rc = classify(spec)
    count = predicted_vertex_count(spec)
    preds = [FormulaPrediction(Quantity.VERTEX_COUNT, count, VERTEX_COUNT, rc)]
    if spec.n >= 2 and spec.factors != (1, 1):
        preds.append(FormulaPrediction(Quantity.DIAMETER, 2, THM_DIAMETER, rc))
    omega = predicted_clique(rc)
    if omega is not None:
        preds.append(FormulaPrediction(Quantity.CLIQUE, omega, _clique_formula_id(rc.tag), rc))
    preds += predicted_sdim(rc, count)
    return preds


def adjudicate_mixed(preds: list[FormulaPrediction]) -> str | None:
    """The corollary reading confirmed by the computed value, if exactly one is."""
    confirmed = [
        p.formula_id
        for p in preds
        if p.formula_id in (COR_MIXED_PRINTED, COR_MIXED_ALT) and p.status is Status.CONFIRMED
    ]
    return confirmed[0] if len(confirmed) == 1 else None


# ---------------------------------------------------------------------------
# clique templates


def _field_templates(n: int) -> list[frozenset[IdealVector]]:
    """Both maximum-clique shapes for a product of ``n`` fields, each position.

    Exponent 1 is the zero ideal of a field.  Both shapes contain the ideals
    that are zero at a fixed position ``p`` and one other position ``k``;
    the first shape adds the ideal zero only at ``p``, the second adds
    the ideal that is the whole field at ``p`` and zero elsewhere.
    """
    out = []
    for p in range(n):
        pairs = {tuple(int(i in (p, k)) for i in range(n)) for k in range(n) if k != p}
        only_p = tuple(int(i == p) for i in range(n))
        out.append(frozenset(pairs | {only_p}))
        out.append(frozenset(pairs | {tuple(1 - e for e in only_p)}))
    return out


def _matches_chain_template(witness: set[IdealVector], factors: tuple[int, ...]) -> bool:
    """Clique shape for products of chain rings (t >= 2 in every factor).

    For some position ``p``: the maximal ideal ``M_p x R x ... x R``; for each
    ``k != p`` an ideal ``M_p`` at ``p``, a nonunit at ``k`` and the whole
    factor elsewhere; and one ideal ``M_p^j x R x ... x R`` with ``j >= 2``.
    """
    n = len(factors)
    if len(witness) != n + 1:
        return False
    for p in range(n):
        maximal = tuple(int(i == p) for i in range(n))
        if maximal not in witness:
            continue
        rest = witness - {maximal}
        deeper = [v for v in rest if v[p] >= 2 and all(v[i] == 0 for i in range(n) if i != p)]
        if len(deeper) != 1:
            continue
        others = rest - {deeper[0]}
        seen_k = set()
        for v in others:
            ks = [i for i in range(n) if i != p and v[i] != 0]
            if v[p] != 1 or len(ks) != 1:
                break
            seen_k.add(ks[0])
        else:
            if seen_k == set(range(n)) - {p}:
                return True
    return False


def verify_clique_structure(g: Graph, witness, ring_class: RingClass) -> bool:
    """Does a maximum clique of ``g`` have the shape its ring class predicts?

    ``witness`` holds vertex indices of ``g`` (a :class:`~pisdim.pis.PisGraph`)
    or ideal vectors directly.
    """
    ideals = {
        tuple(w) if isinstance(w, (tuple, list)) else g.vertex_ideals[w] for w in witness
    }
    if not g.is_clique(g.index(v) for v in ideals):
        return False
    if ring_class.tag is ClassTag.REDUCED_FIELDS:
        return frozenset(ideals) in _field_templates(ring_class.n)
    if ring_class.tag in (ClassTag.UNIQUE_NONTRIVIAL, ClassTag.CHAIN_PIR):
        return _matches_chain_template(ideals, g.spec.factors)
    raise ValueError(f"no clique template for {ring_class}")

