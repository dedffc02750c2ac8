import pytest

from legfront.codes import (
    from_pd,
    parse_pd_text,
    pd_text,
    to_generic_code,
    validate_code,
)
from legfront.errors import MalformedCode
from legfront.front import L, R, X, orient, validate

from conftest import TREFOIL


def test_unknot_exports_no_crossings(unknot):
    code = to_generic_code(unknot)
    assert code.crossing_count == 0
    assert code.free_loops == 1
    assert code.components == 1


def test_trefoil_export_structure(trefoil):
    code = to_generic_code(trefoil)
    assert code.crossing_count == 3
    assert code.free_loops == 0
    assert all(c.sign == 1 for c in code.crossings)
    assert all(
        c.over_component == c.under_component == 0 for c in code.crossings
    )
    # each PD edge label occurs exactly twice
    seen = {}
    for rec in code.crossings:
        for arc in rec.arcs.values():
            seen[arc] = seen.get(arc, 0) + 1
    assert set(seen.values()) == {2}


def test_export_crossing_count_matches_events(corpus_fronts):
    for word in corpus_fronts.values():
        code = to_generic_code(orient(word))
        assert code.crossing_count == sum(
            1 for e in word.events if e.kind == "X"
        )


def test_intercomponent_crossings_carry_distinct_labels(corpus_fronts):
    code = to_generic_code(orient(corpus_fronts["hopf_neg"]))
    assert code.crossing_count == 2
    for rec in code.crossings:
        assert rec.over_component != rec.under_component


def test_pd_round_trip(trefoil):
    code = to_generic_code(trefoil)
    text = pd_text(code)
    again = parse_pd_text(text)
    assert pd_text(again) == text
    assert again.pd() == code.pd()
    assert [c.sign for c in again.crossings] == [c.sign for c in code.crossings]


def test_pd_round_trip_across_corpus(corpus_fronts):
    for word in corpus_fronts.values():
        code = to_generic_code(orient(word))
        text = pd_text(code)
        try:
            again = parse_pd_text(text)
        except MalformedCode:
            # components that never pass under have no PD form
            continue
        assert pd_text(again) == text


def test_from_pd_standard_trefoil_signs():
    code = from_pd([(1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)])
    assert [c.sign for c in code.crossings] == [-1, -1, -1]
    assert code.components == 1
    validate_code(code)


def test_from_pd_rejects_bad_arc_usage():
    with pytest.raises(MalformedCode):
        from_pd([(1, 2, 3, 4)], [1])


def test_validate_code_rejects_missing_slots(trefoil):
    code = to_generic_code(trefoil)
    broken = code.crossings[0].arcs.copy()
    broken.pop("ul")
    rec = type(code.crossings[0])(
        broken,
        code.crossings[0].flags,
        0,
        0,
        1,
    )
    with pytest.raises(MalformedCode):
        validate_code(
            type(code)(
                (rec,) + code.crossings[1:],
                code.edges,
                code.arc_component,
                code.free_loops,
                code.components,
            )
        )
