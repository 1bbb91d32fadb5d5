import pytest

from pisdim.clique import max_clique
from pisdim.formulas import (
    COR_MIXED_ALT,
    COR_MIXED_PRINTED,
    THM_CHAIN_PIR,
    THM_FIELDS,
    THM_UNIQUE,
    Quantity,
    Status,
    adjudicate_mixed,
    predicted_clique,
    predicted_sdim,
    predicted_vertex_count,
    predictions_for,
    verify_clique_structure,
)
from pisdim.pis import build_pis
from pisdim.rings import ClassTag, RingClass, RingSpec, classify, enumerate_vertices
from pisdim.sdim import sdim_via_vertex_cover


def rc(tag, n, m=0):
    return RingClass(tag, n, m)


@pytest.mark.parametrize("factors, count", [((1, 1, 1), 6), ((2, 2), 7), ((3, 3), 14)])
def test_predicted_vertex_count(factors, count):
    assert predicted_vertex_count(RingSpec(factors)) == count


def test_vertex_count_formula_exhaustive():
    import itertools

    for n in (1, 2, 3):
        for factors in itertools.product(range(1, 5), repeat=n):
            spec = RingSpec(factors)
            assert predicted_vertex_count(spec) == len(enumerate_vertices(spec))


@pytest.mark.parametrize(
    "ring_class, expected",
    [
        (rc(ClassTag.REDUCED_FIELDS, 3), 3),
        (rc(ClassTag.UNIQUE_NONTRIVIAL, 2), 3),
        (rc(ClassTag.CHAIN_PIR, 2), 3),
        (rc(ClassTag.TWO_FIELDS, 2), None),
        (rc(ClassTag.MIXED_UNIQUE_AND_FIELDS, 1, 1), None),
        (rc(ClassTag.UNCLASSIFIED, 2), None),
        (rc(ClassTag.LOCAL, 1), None),
    ],
)
def test_predicted_clique(ring_class, expected):
    assert predicted_clique(ring_class) == expected


def _values(preds):
    return {p.formula_id: p.predicted for p in preds}


def test_predicted_sdim():
    assert _values(predicted_sdim(rc(ClassTag.REDUCED_FIELDS, 4))) == {THM_FIELDS: 10}
    assert _values(predicted_sdim(rc(ClassTag.UNIQUE_NONTRIVIAL, 3))) == {THM_UNIQUE: 21}
    assert _values(predicted_sdim(rc(ClassTag.CHAIN_PIR, 2), 14)) == {THM_CHAIN_PIR: 11}
    assert _values(predicted_sdim(rc(ClassTag.MIXED_UNIQUE_AND_FIELDS, 1, 1))) == {
        COR_MIXED_PRINTED: 2,
        COR_MIXED_ALT: 1,
    }


def test_no_extrapolation():
    assert predicted_sdim(rc(ClassTag.TWO_FIELDS, 2)) == []
    assert predicted_sdim(rc(ClassTag.LOCAL, 1)) == []
    assert predicted_sdim(rc(ClassTag.UNCLASSIFIED, 3)) == []
    with pytest.raises(ValueError):
        predicted_sdim(rc(ClassTag.CHAIN_PIR, 2))


def test_compare():
    (p,) = predicted_sdim(rc(ClassTag.REDUCED_FIELDS, 3))
    assert p.compare(3).status is Status.CONFIRMED
    assert p.compare(4).status is Status.MISMATCH and p.compare(4).computed == 4
    assert p.compare(None).status is Status.NOT_COVERED


def test_predictions_for_two_fields_has_no_diameter():
    qs = {p.quantity for p in predictions_for(RingSpec((1, 1)))}
    assert qs == {Quantity.VERTEX_COUNT}


def test_adjudicate():
    preds = predicted_sdim(rc(ClassTag.MIXED_UNIQUE_AND_FIELDS, 1, 1))
    assert adjudicate_mixed([p.compare(2) for p in preds]) == COR_MIXED_PRINTED
    assert adjudicate_mixed([p.compare(1) for p in preds]) == COR_MIXED_ALT
    assert adjudicate_mixed([p.compare(7) for p in preds]) is None


def test_clique_template_fields_minimal_ideals():
    g = build_pis((1, 1, 1))
    fields3 = classify(g.spec)
    assert verify_clique_structure(g, [(0, 1, 1), (1, 0, 1), (1, 1, 0)], fields3)
    assert verify_clique_structure(g, [(1, 0, 0), (1, 1, 0), (1, 0, 1)], fields3)


def test_clique_template_rejects_maximal_ideals():
    g = build_pis((1, 1, 1))
    assert not verify_clique_structure(g, [(1, 0, 0), (0, 1, 0), (0, 0, 1)], classify(g.spec))


def test_clique_template_unique_ideals():
    g = build_pis((2, 2))
    witness = [(1, 0), (1, 1), (2, 0)]
    assert g.is_clique(g.index(v) for v in witness)
    assert verify_clique_structure(g, witness, classify(g.spec))
    # a clique of the right size that is not of the template shape does not exist here;
    # a non-clique is rejected outright
    assert not verify_clique_structure(g, [(1, 0), (0, 1), (2, 0)], classify(g.spec))


def test_clique_template_chain_with_deeper_power():
    # M_1 x M_2^2 also completes the clique when t >= 3
    g = build_pis((3, 3))
    witness = [(1, 0), (1, 2), (3, 0)]
    assert g.is_clique(g.index(v) for v in witness)
    assert verify_clique_structure(g, witness, classify(g.spec))


def test_clique_template_needs_a_covered_class():
    g = build_pis((2, 1))
    with pytest.raises(ValueError):
        verify_clique_structure(g, [0], classify(g.spec))


@pytest.mark.parametrize(
    "factors",
    [(1,) * n for n in range(3, 7)]
    + [(2,) * n for n in range(2, 5)]
    + [(3, 3), (4, 3), (4, 4), (3, 3, 3)],
)
def test_sweep_matches_formulas(factors):
    spec = RingSpec(factors)
    ring_class = classify(spec)
    g = build_pis(spec)
    omega, witness = max_clique(g)
    assert omega == predicted_clique(ring_class)
    assert verify_clique_structure(g, witness, ring_class)
    (pred,) = predicted_sdim(ring_class, g.n)
    assert pred.compare(sdim_via_vertex_cover(g).value).status is Status.CONFIRMED


@pytest.mark.parametrize(
    "n, m, sdim, reading",
    # sdim frozen from an independent networkx computation (strong resolving graph,
    # complement, find_cliques) and, up to 14 vertices, from brute force
    [
        (1, 1, 2, COR_MIXED_PRINTED),
        (1, 2, 6, COR_MIXED_ALT),
        (2, 1, 12, COR_MIXED_ALT),
        (1, 3, 17, COR_MIXED_ALT),
        (2, 2, 29, COR_MIXED_ALT),
        (3, 1, 47, COR_MIXED_ALT),
    ],
)
def test_mixed_adjudication(n, m, sdim, reading):
    spec = RingSpec((2,) * n + (1,) * m)
    g = build_pis(spec)
    computed = sdim_via_vertex_cover(g).value
    assert computed == sdim
    preds = [p.compare(computed) for p in predicted_sdim(classify(spec), g.n)]
    assert adjudicate_mixed(preds) == reading


def test_clique_template_fields_type_two_four_factors():
    g = build_pis((1, 1, 1, 1))
    witness = [(0, 1, 1, 1), (1, 1, 0, 0), (1, 0, 1, 0), (1, 0, 0, 1)]
    assert verify_clique_structure(g, witness, classify(g.spec))
    # all four minimal ideals pairwise sum to the whole ring minus two factors: no clique
    assert not verify_clique_structure(
        g, [(0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1), (1, 1, 1, 0)], classify(g.spec)
    )
