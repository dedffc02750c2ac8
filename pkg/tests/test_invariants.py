import pytest
from hypothesis import given

from legfront.errors import SameComponent, UnknownComponent
from legfront.front import L, R, X, orient, validate
from legfront.invariants import (
    cusp_counts,
    linking,
    report,
    rot,
    tb,
    writhe,
)

from conftest import TREFOIL, front_diagrams


def test_unknot_anchor(unknot):
    assert writhe(unknot, 0) == 0
    assert cusp_counts(unknot, 0) == (1, 1, 1)
    assert tb(unknot, 0) == -1
    assert rot(unknot, 0) == 0


def test_trefoil_values(trefoil):
    assert writhe(trefoil, 0) == 3
    assert cusp_counts(trefoil, 0) == (2, 2, 2)
    assert tb(trefoil, 0) == 1
    assert rot(trefoil, 0) == 0


def test_paper_arithmetic_bb5_c4(corpus_fronts):
    of = orient(corpus_fronts["trefoil_kinks_tb5c4"])
    rep = report(of).components[0]
    assert (rep.bb, rep.right_cusps) == (5, 4)
    assert rep.tb == 1
    assert rep.rot == 0


def test_stabilized_unknot_cusps(corpus_fronts):
    of = orient(corpus_fronts["unknot_stab"])
    right, down, up = cusp_counts(of, 0)
    assert right == 2
    assert sorted((down, up)) == [1, 3]
    assert tb(of, 0) == -2
    assert rot(of, 0) in (-1, 1)


def test_unknown_component():
    of = orient(validate([L(1), R(1)]))
    with pytest.raises(UnknownComponent):
        tb(of, 1)
    with pytest.raises(SameComponent):
        linking(of, 0, 0)


def test_split_union_has_zero_linking(corpus_fronts):
    of = orient(corpus_fronts["nested_pair"])
    assert linking(of, 0, 1) == 0


def test_hopf_linkings(corpus_fronts):
    pos = orient(corpus_fronts["hopf_pos"])
    neg = orient(corpus_fronts["hopf_neg"])
    assert linking(pos, 0, 1) == 1
    assert linking(neg, 0, 1) == -1


def test_linking_symmetric(corpus_fronts):
    of = orient(corpus_fronts["torus24_link"])
    assert linking(of, 0, 1) == linking(of, 1, 0) == -2


def test_reversing_one_component_negates_lk_keeps_tb(corpus_fronts):
    word = corpus_fronts["hopf_pos"]
    of = orient(word)
    rev = orient(word, [True, False])
    assert linking(rev, 0, 1) == -linking(of, 0, 1)
    for k in (0, 1):
        assert tb(rev, k) == tb(of, k)
    # rot of the reversed component is negated
    assert rot(rev, 0) == -rot(of, 0)
    assert rot(rev, 1) == rot(of, 1)


@given(front_diagrams())
def test_tb_orientation_independent_rot_negates(d):
    of = orient(d)
    n = of.component_count
    for k in range(n):
        bits = [False] * n
        bits[k] = True
        rev = orient(d, bits)
        assert tb(rev, k) == tb(of, k)
        assert rot(rev, k) == -rot(of, k)


@given(front_diagrams())
def test_tb_plus_rot_is_odd_for_knots(d):
    of = orient(d)
    if of.component_count != 1:
        return
    assert (tb(of, 0) + rot(of, 0)) % 2 == 1


@given(front_diagrams())
def test_report_wiring(d):
    of = orient(d)
    rep = report(of)
    for k, c in enumerate(rep.components):
        assert c.tb == c.bb - c.right_cusps
        assert (c.down_cusps + c.up_cusps) % 2 == 0
        assert c.rot == (c.down_cusps - c.up_cusps) // 2
        assert c.right_cusps >= 1
        assert rep.lk[k][k] == 0
    for j in range(rep.component_count):
        for k in range(rep.component_count):
            assert rep.lk[j][k] == rep.lk[k][j]
