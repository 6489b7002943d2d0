import random

import networkx as nx
import pytest
from hypothesis import given, settings

from cycloids import (
    CycloidParams,
    are_isomorphic_by_closure,
    build_net,
    equivalent,
    iso_closure,
    net_isomorphic_oracle,
    phi_symmetric,
    shear,
    symmetric_params,
)
from cycloids.errors import GuardError, SizeLimitError
from cycloids.lattice import lattice_point
from cycloids.net import PlaceId
from cycloids.transforms import (
    DIRECTIONS,
    find_net_isomorphism,
    is_net_isomorphism,
    shear_applicable,
    symmetric_isomorphism,
)

from .conftest import box, params_strategy

C = CycloidParams


@pytest.mark.parametrize(
    "start, direction, expected",
    [
        ((2, 3, 2, 8), "reduce_delta", (2, 3, 4, 5)),
        ((2, 3, 4, 5), "reduce_delta", (2, 3, 6, 2)),
        ((4, 3, 10, 3), "reduce_gamma", (4, 3, 6, 6)),
    ],
)
def test_shear_examples(start, direction, expected):
    out = shear(C(*start), direction)
    assert out == C(*expected)
    assert out.area == C(*start).area


def test_shear_guards():
    with pytest.raises(GuardError):
        shear(C(4, 2, 2, 3), "reduce_gamma")
    with pytest.raises(GuardError):
        shear(C(4, 3, 6, 3), "reduce_delta")
    with pytest.raises(ValueError):
        shear(C(4, 3, 6, 3), "sideways")


def test_symmetric_params():
    assert symmetric_params(C(4, 2, 2, 3)) == C(2, 4, 3, 2)
    assert symmetric_params(C(1, 2, 5, 3)) == C(2, 1, 3, 5)
    assert symmetric_params(symmetric_params(C(4, 2, 2, 3))) == C(4, 2, 2, 3)


def test_phi_examples():
    p = C(4, 2, 2, 3)
    assert phi_symmetric(p, (0, 0)) == (2, -4)
    assert phi_symmetric(p, (1, 1)) == (3, -3)


@pytest.mark.parametrize("values", [(4, 2, 2, 3), (2, 3, 2, 8), (1, 1, 1, 1), (5, 1, 6, 2)])
def test_phi_congruence(values):
    p = C(*values)
    mirror = symmetric_params(p)
    rng = random.Random(sum(values))
    for _ in range(1000):
        x = (rng.randint(-30, 30), rng.randint(-30, 30))
        if rng.random() < 0.5:
            y = lattice_point(p, rng.randint(-4, 4), rng.randint(-4, 4)).shifted(*x)
        else:
            y = (rng.randint(-30, 30), rng.randint(-30, 30))
        if equivalent(p, x, y):
            assert equivalent(mirror, phi_symmetric(p, x), phi_symmetric(p, y))
        # phi is a bijection on the plane that also reflects non-equivalence
        assert equivalent(p, x, y) == equivalent(mirror, phi_symmetric(p, x), phi_symmetric(p, y))


@given(params_strategy(), params_strategy(3))
def test_shear_keeps_equivalence(params, other):
    rng = random.Random(other.area)
    for direction in DIRECTIONS:
        if not shear_applicable(params, direction):
            continue
        sheared = shear(params, direction)
        for _ in range(50):
            x = (rng.randint(-40, 40), rng.randint(-40, 40))
            y = (rng.randint(-40, 40), rng.randint(-40, 40))
            assert equivalent(params, x, y) == equivalent(sheared, x, y)


def test_iso_closure_examples():
    closure = iso_closure(C(4, 3, 10, 3), 2)
    assert C(4, 3, 6, 6) in closure and C(4, 3, 2, 9) in closure
    assert C(1, 1, 1, 1) in iso_closure(C(1, 1, 1, 1), 0)
    assert all(p.area == 22 for p in iso_closure(C(2, 3, 2, 8), 6))


def test_closure_is_monotone_in_steps():
    seed = C(2, 3, 2, 8)
    previous = set()
    for steps in range(6):
        current = iso_closure(seed, steps)
        assert previous <= current
        previous = current


def test_are_isomorphic_by_closure():
    assert are_isomorphic_by_closure(C(4, 3, 6, 6), C(4, 3, 2, 9), 4)
    assert are_isomorphic_by_closure(C(2, 3, 2, 8), C(2, 3, 6, 2), 4)
    assert not are_isomorphic_by_closure(C(1, 1, 1, 1), C(4, 3, 3, 3), 10)


def test_oracle_examples():
    assert net_isomorphic_oracle(build_net(C(2, 3, 2, 8)), build_net(C(2, 3, 6, 2)))
    assert net_isomorphic_oracle(build_net(C(1, 1, 1, 1)), build_net(C(1, 1, 1, 1)))
    assert not net_isomorphic_oracle(build_net(C(1, 1, 1, 1)), build_net(C(1, 1, 2, 1)))


def test_oracle_cap():
    with pytest.raises(SizeLimitError):
        net_isomorphic_oracle(build_net(C(4, 3, 3, 3)), build_net(C(4, 3, 3, 3)), cap=20)


def test_phi_induces_kind_swapping_isomorphism():
    for params in box(4):
        if params.area > 24:
            continue
        mapping = symmetric_isomorphism(params)
        assert is_net_isomorphism(build_net(params), build_net(symmetric_params(params)), mapping)
        for node, image in mapping.items():
            if isinstance(node, PlaceId):
                assert node.kind != image.kind


def test_every_move_yields_isomorphic_net():
    for params in box(4):
        if params.area > 24:
            continue
        net = build_net(params)
        for direction in DIRECTIONS:
            if shear_applicable(params, direction):
                # shears keep the point relation, hence place kinds
                assert net_isomorphic_oracle(net, build_net(shear(params, direction))), (params, direction)
        # the mirror map swaps axes; kinds are exchanged uniformly
        assert net_isomorphic_oracle(net, build_net(symmetric_params(params)), allow_kind_swap=True), params


def _nx_graph(net, swap=False):
    g = nx.DiGraph()
    for t in net.transitions:
        g.add_node(t, label="T")
    for p in net.places:
        label = p.kind.value
        if swap:
            label = {"F": "B", "B": "F"}[label]
        g.add_node(p, label=label)
    g.add_edges_from(net.arcs)
    return g


def _nx_isomorphic(n1, n2, swap=False):
    matcher = nx.algorithms.isomorphism.DiGraphMatcher(
        _nx_graph(n1), _nx_graph(n2, swap), node_match=lambda a, b: a["label"] == b["label"]
    )
    return matcher.is_isomorphic()


def test_oracle_agrees_with_networkx_on_equal_area_pairs():
    by_area = {}
    for params in box(3):
        if params.area <= 12:
            by_area.setdefault(params.area, []).append(params)
    rng = random.Random(5)
    checked = positives = 0
    for group in by_area.values():
        pairs = [(p, q) for p in group for q in group]
        for p, q in rng.sample(pairs, min(len(pairs), 25)):
            n1, n2 = build_net(p), build_net(q)
            for swap in (False, True):
                mine = find_net_isomorphism(n1, n2, swap_kinds=swap)
                truth = _nx_isomorphic(n1, n2, swap)
                assert (mine is not None) == truth, (p, q, swap)
                if mine is not None:
                    assert is_net_isomorphism(n1, n2, mine)
                    positives += 1
                checked += 1
    assert checked > 100 and 0 < positives < checked


@settings(max_examples=30)
@given(params_strategy(4))
def test_closure_members_have_equal_area(params):
    assert {p.area for p in iso_closure(params, 3)} == {params.area}
