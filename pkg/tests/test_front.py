import pytest
from hypothesis import given

from legfront.errors import EmptyWord, PositionOutOfRange, UnbalancedClosure
from legfront.front import (
    L,
    R,
    X,
    orient,
    trace_components,
    validate,
)

from conftest import TREFOIL, front_diagrams


def test_minimal_closed_front():
    d = validate([L(1), R(1)])
    assert d.profile == (0, 2, 0)


def test_crossing_on_unknot_is_positionally_valid():
    d = validate([L(1), X(1), R(1)])
    assert d.profile == (0, 2, 2, 0)


def test_position_out_of_range_reports_event_index():
    with pytest.raises(PositionOutOfRange) as exc:
        validate([L(1), R(2)])
    assert exc.value.index == 1
    assert exc.value.position == 2


def test_empty_word_rejected():
    with pytest.raises(EmptyWord):
        validate([])


def test_unbalanced_closure():
    with pytest.raises(UnbalancedClosure):
        validate([L(1), L(1)])


def test_left_cusp_position_bounds():
    validate([L(1), L(3), R(3), R(1)])
    with pytest.raises(PositionOutOfRange):
        validate([L(1), L(4), R(1), R(1)])


def test_trace_unknot_single_component():
    assert len(trace_components(validate([L(1), R(1)]))) == 1


def test_trace_nested_circles():
    comps = trace_components(validate([L(1), L(1), R(1), R(1)]))
    assert len(comps) == 2


def test_trace_trefoil_single_component():
    assert len(trace_components(validate(TREFOIL))) == 1


def test_components_ordered_by_first_event():
    # outer circle is born first, so it is component 0
    comps = trace_components(validate([L(1), L(1), R(1), R(1)]))
    assert (1, 1) in comps[0]


def test_default_orientation_unknot():
    of = orient(validate([L(1), R(1)]))
    assert of.direction[(1, 1)] == 1
    assert of.direction[(1, 2)] == -1


def test_orientation_flip_reverses_everything():
    of = orient(validate(TREFOIL))
    flipped = orient(validate(TREFOIL), [True])
    assert set(of.direction) == set(flipped.direction)
    assert all(flipped.direction[s] == -of.direction[s] for s in of.direction)


def test_two_component_orientation_bits_are_independent():
    word = [L(1), L(1), R(1), R(1)]
    seen = set()
    for bits in ([], [True], [False, True], [True, True]):
        of = orient(validate(word), bits)
        seen.add(tuple(sorted(of.direction.items())))
    assert len(seen) == 4


@given(front_diagrams())
def test_every_generated_word_traces_completely(d):
    comps = trace_components(d)
    segs = [seg for comp in comps for seg in comp]
    assert len(segs) == len(set(segs)) == sum(d.profile)
    assert len(comps) >= 1


@given(front_diagrams())
def test_orientation_is_consistent_through_events(d):
    # crossings preserve horizontal direction, cusps reverse it
    of = orient(d)
    for e, ev in enumerate(d.events):
        i = ev.position
        if ev.kind == "X":
            assert of.direction[(e, i)] == of.direction[(e + 1, i + 1)]
            assert of.direction[(e, i + 1)] == of.direction[(e + 1, i)]
        elif ev.kind == "R":
            assert of.direction[(e, i)] == -of.direction[(e, i + 1)]
        else:
            assert of.direction[(e + 1, i)] == -of.direction[(e + 1, i + 1)]
