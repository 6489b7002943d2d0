import pytest
from hypothesis import given, strategies as st

from cycloids import CycloidParams, Point, build_net, enabled, enabled_set, fire
from cycloids.errors import DisabledTransitionError, UnknownNodeError
from cycloids.net import PlaceId, PlaceKind
from cycloids.semantics import check_marking, format_marking, parse_marking

from .conftest import params_strategy

F = PlaceKind.FORWARD
B = PlaceKind.BACKWARD
NET = build_net(CycloidParams(4, 2, 2, 3))
T10 = Point(1, 0)
PRE = frozenset({PlaceId(F, Point(0, 0)), PlaceId(B, Point(3, 2))})
POST = frozenset({PlaceId(F, Point(1, 0)), PlaceId(B, Point(1, 0))})


def test_enabled_by_pre_set():
    assert NET.pre_set(T10) == PRE
    assert enabled(NET, PRE, T10)


def test_empty_marking_enables_nothing():
    assert not enabled(NET, frozenset(), T10)
    assert enabled_set(NET, frozenset()) == frozenset()


def test_contact_blocks_firing():
    assert not enabled(NET, PRE | {PlaceId(F, Point(1, 0))}, T10)


def test_fire():
    after = fire(NET, PRE, T10)
    assert after == POST
    assert not enabled(NET, after, T10)
    assert len(after) == len(PRE)


def test_fire_disabled_raises():
    with pytest.raises(DisabledTransitionError):
        fire(NET, POST, T10)


def test_unknown_transition():
    with pytest.raises(UnknownNodeError):
        enabled(NET, PRE, Point(5, -1))


def test_enabled_set_single_pre_set():
    # brute force over every transition of the net
    for t in NET.transitions:
        assert enabled_set(NET, NET.pre_set(t)) == {t}


def test_full_marking_enables_nothing():
    assert enabled_set(NET, frozenset(NET.places)) == frozenset()


def test_parse_marking_folds_coordinates():
    assert parse_marking(NET, "F:0,0,B:3,2") == PRE
    # F:4,-2 folds onto F:0,0
    assert parse_marking(NET, " F:4,-2 , B:3,2 ") == PRE
    assert format_marking(PRE) == "F:0,0,B:3,2"
    with pytest.raises(ValueError):
        parse_marking(NET, "F:0,0,X:1,1")


def test_check_marking_rejects_foreign_places():
    with pytest.raises(UnknownNodeError):
        check_marking(NET, [PlaceId(F, Point(5, -1))])


@given(params_strategy(4), st.data())
def test_firing_properties(params, data):
    net = build_net(params)
    marking = frozenset(data.draw(st.sets(st.sampled_from(net.places))))
    for t in sorted(enabled_set(net, marking)):
        after = fire(net, marking, t)
        assert len(after) == len(marking)
        assert not (after & net.pre_set(t))
        assert net.post_set(t) <= after
        assert fire(net, marking, t) == after
