"""Parameter moves that preserve the cycloid net up to isomorphism.

Two shears change ``(gamma, delta)`` by one column of the lattice basis
and leave the equivalence relation itself untouched:

* ``reduce_gamma``: ``(a, b, g, d) -> (a, b, g - a, d + b)``, needs ``g > a``
* ``reduce_delta``: ``(a, b, g, d) -> (a, b, g + a, d - b)``, needs ``d > b``

The symmetric cycloid ``(b, a, d, g)`` is isomorphic through the point map
``(xi, eta) -> (eta + b, xi - a)``.  That map swaps the two axes, so it
sends forward places to backward places and vice versa.

Closure under these moves is only a sufficient test for isomorphism.  The
exhaustive oracle at the bottom of this module is the ground truth for
small nets.
"""

from __future__ import annotations

from collections import Counter, deque
from typing import Literal

from .errors import GuardError, SizeLimitError
from .lattice import CycloidParams, Point, canonical
from .net import CycloidNet, PlaceId, PlaceKind, build_net

Direction = Literal["reduce_gamma", "reduce_delta"]
DIRECTIONS: tuple[Direction, ...] = ("reduce_gamma", "reduce_delta")

DEFAULT_ORACLE_CAP = 30


def shear_applicable(params: CycloidParams, direction: Direction) -> bool:
    if direction == "reduce_gamma":
        return params.gamma > params.alpha
    if direction == "reduce_delta":
        return params.delta > params.beta
    raise ValueError(f"unknown shear direction {direction!r}")


def shear(params: CycloidParams, direction: Direction) -> CycloidParams:
    a, b, g, d = params.as_tuple()
    if not shear_applicable(params, direction):
        need = "gamma > alpha" if direction == "reduce_gamma" else "delta > beta"
        raise GuardError(f"{direction} needs {need}, got {params}")
    if direction == "reduce_gamma":
        return CycloidParams(a, b, g - a, d + b)
    return CycloidParams(a, b, g + a, d - b)


def symmetric_params(params: CycloidParams) -> CycloidParams:
    a, b, g, d = params.as_tuple()
    return CycloidParams(b, a, d, g)


def phi_symmetric(params: CycloidParams, x) -> Point:
    return Point(x[1] + params.beta, x[0] - params.alpha)


def neighbours(params: CycloidParams) -> list[CycloidParams]:
    out = [shear(params, d) for d in DIRECTIONS if shear_applicable(params, d)]
    out.append(symmetric_params(params))
    return out


def iso_closure(params: CycloidParams, max_steps: int) -> set[CycloidParams]:
    """Everything reachable from ``params`` in at most ``max_steps`` moves."""
    if max_steps < 0:
        raise ValueError("max_steps must be non-negative")
    seen = {params}
    frontier = deque([(params, 0)])
    while frontier:
        current, depth = frontier.popleft()
        if depth == max_steps:
            continue
        for nxt in neighbours(current):
            if nxt not in seen:
                seen.add(nxt)
                frontier.append((nxt, depth + 1))
    return seen


def are_isomorphic_by_closure(p1: CycloidParams, p2: CycloidParams, max_steps: int) -> bool:
    """True when the moves connect ``p1`` to ``p2`` (or its mirror).

    False means "not shown isomorphic", nothing stronger.
    """
    if p1.area != p2.area:
        return False
    closure = iso_closure(p1, max_steps)
    return p2 in closure or symmetric_params(p2) in closure


def symmetric_isomorphism(params: CycloidParams) -> dict:
    """Node map ``build_net(params) -> build_net(symmetric_params(params))`` induced by phi."""
    mirror = symmetric_params(params)
    swap = {PlaceKind.FORWARD: PlaceKind.BACKWARD, PlaceKind.BACKWARD: PlaceKind.FORWARD}
    mapping = {}
    for t in build_net(params).transitions:
        image = canonical(mirror, phi_symmetric(params, t))
        mapping[t] = image
        for kind in PlaceKind:
            mapping[PlaceId(kind, t)] = PlaceId(swap[kind], image)
    return mapping


def is_net_isomorphism(net1: CycloidNet, net2: CycloidNet, mapping: dict) -> bool:
    """Check that ``mapping`` is a bijection of nodes carrying F1 exactly onto F2."""
    if set(mapping) != set(net1.node_set) or set(mapping.values()) != set(net2.node_set):
        return False
    if len(set(mapping.values())) != len(mapping):
        return False
    for t in net1.transitions:
        if not isinstance(mapping[t], Point):
            return False
    image = {(mapping[s], mapping[d]) for s, d in net1.arcs}
    return image == set(net2.arcs)


# --- exhaustive isomorphism oracle -------------------------------------------------


class _Graph:
    """Labelled digraph view of a net with integer node ids."""

    def __init__(self, net: CycloidNet, swap_kinds: bool = False):
        self.nodes = list(net.transitions) + list(net.places)
        index = {n: k for k, n in enumerate(self.nodes)}
        self.labels = []
        for n in self.nodes:
            if isinstance(n, PlaceId):
                kind = n.kind.value
                if swap_kinds:
                    kind = "B" if kind == "F" else "F"
                self.labels.append(kind)
            else:
                self.labels.append("T")
        size = len(self.nodes)
        self.succ = [set() for _ in range(size)]
        self.pred = [set() for _ in range(size)]
        for src, dst in net.arcs:
            self.succ[index[src]].add(index[dst])
            self.pred[index[dst]].add(index[src])


def _refine(g1: _Graph, g2: _Graph) -> tuple[list[int], list[int]] | None:
    """Joint colour refinement; None when the colour histograms differ.

    Nodes with different stable colours can never be matched, which prunes
    the backtracking below down to orbit candidates.
    """
    palette = {}
    c1 = [palette.setdefault(lab, len(palette)) for lab in g1.labels]
    c2 = [palette.setdefault(lab, len(palette)) for lab in g2.labels]
    while True:
        palette = {}

        def signature(g, colours, v):
            return (
                colours[v],
                tuple(sorted(colours[w] for w in g.succ[v])),
                tuple(sorted(colours[w] for w in g.pred[v])),
            )

        n1 = [palette.setdefault(signature(g1, c1, v), len(palette)) for v in range(len(c1))]
        n2 = [palette.setdefault(signature(g2, c2, v), len(palette)) for v in range(len(c2))]
        if Counter(n1) != Counter(n2):
            return None
        if len(set(n1)) == len(set(c1)):
            return n1, n2
        c1, c2 = n1, n2


def _match(g1: _Graph, g2: _Graph) -> dict[int, int] | None:
    if len(g1.nodes) != len(g2.nodes) or sorted(g1.labels) != sorted(g2.labels):
        return None
    if sum(map(len, g1.succ)) != sum(map(len, g2.succ)):
        return None
    refined = _refine(g1, g2)
    if refined is None:
        return None
    col1, col2 = refined

    # visit order: breadth first over the undirected shape, so every node but
    # the first of each component has an already-mapped neighbour
    order, seen = [], set()
    for root in range(len(g1.nodes)):
        if root in seen:
            continue
        seen.add(root)
        queue = deque([root])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in sorted(g1.succ[v] | g1.pred[v]):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)

    fwd: dict[int, int] = {}
    back: dict[int, int] = {}

    def candidates(v):
        for w in g1.pred[v]:
            if w in fwd:
                return g2.succ[fwd[w]]
        for w in g1.succ[v]:
            if w in fwd:
                return g2.pred[fwd[w]]
        return range(len(g2.nodes))

    def consistent(v, x):
        if col1[v] != col2[x] or x in back:
            return False
        if len(g1.succ[v]) != len(g2.succ[x]) or len(g1.pred[v]) != len(g2.pred[x]):
            return False
        for w in g1.succ[v]:
            if w in fwd and fwd[w] not in g2.succ[x]:
                return False
        for w in g1.pred[v]:
            if w in fwd and fwd[w] not in g2.pred[x]:
                return False
        for y in g2.succ[x]:
            if y in back and back[y] not in g1.succ[v]:
                return False
        for y in g2.pred[x]:
            if y in back and back[y] not in g1.pred[v]:
                return False
        return True

    def extend(depth):
        if depth == len(order):
            return True
        v = order[depth]
        for x in sorted(candidates(v)):
            if consistent(v, x):
                fwd[v] = x
                back[x] = v
                if extend(depth + 1):
                    return True
                del fwd[v]
                del back[x]
        return False

    # recursion depth is bounded by 3 * cap
    return dict(fwd) if extend(0) else None


def find_net_isomorphism(net1: CycloidNet, net2: CycloidNet, swap_kinds: bool = False) -> dict | None:
    """Exhaustive search for a flow-preserving bijection.

    Place kinds must match, or, with ``swap_kinds``, must be exchanged
    uniformly (every forward place onto a backward place and vice versa).
    """
    g1 = _Graph(net1)
    g2 = _Graph(net2, swap_kinds=swap_kinds)
    found = _match(g1, g2)
    if found is None:
        return None
    return {g1.nodes[v]: g2.nodes[x] for v, x in found.items()}


def net_isomorphic_oracle(
    net1: CycloidNet,
    net2: CycloidNet,
    allow_kind_swap: bool = False,
    cap: int = DEFAULT_ORACLE_CAP,
) -> bool:
    for net in (net1, net2):
        if net.params.area > cap:
            raise SizeLimitError(f"oracle cap {cap} exceeded by area {net.params.area} of {net.params}")
    if find_net_isomorphism(net1, net2) is not None:
        return True
    return allow_kind_swap and find_net_isomorphism(net1, net2, swap_kinds=True) is not None
