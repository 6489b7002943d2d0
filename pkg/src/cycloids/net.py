"""Finite cycloid nets as quotients of the Petri space.

Every Petri-space transition ``t(xi, eta)`` owns two output places, a forward
place ``F(xi, eta)`` feeding ``t(xi+1, eta)`` and a backward place
``B(xi, eta)`` feeding ``t(xi, eta+1)``.  Places are named after their
unique input transition, so after folding a place is identified by its kind
and the canonical coordinates of that transition.
"""

from __future__ import annotations

import json
import os
from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, NamedTuple, Union

from .errors import SizeLimitError, UnknownNodeError
from .lattice import CycloidParams, Point, canonical, fundamental_points, in_fundamental

DEFAULT_MAX_AREA = 10**6


def max_area() -> int:
    """Size cap for materialized nets; ``CYCLOID_MAX_AREA`` overrides it."""
    raw = os.environ.get("CYCLOID_MAX_AREA")
    return int(raw) if raw else DEFAULT_MAX_AREA


class PlaceKind(str, Enum):
    FORWARD = "F"
    BACKWARD = "B"

    def __str__(self):
        return self.value


class PlaceId(NamedTuple):
    kind: PlaceKind
    at: Point

    def __str__(self):
        return f"{self.kind.value}:{self.at}"


Node = Union[Point, PlaceId]


def is_place(node) -> bool:
    return isinstance(node, PlaceId)


def node_key(node: Node) -> str:
    """Stable string key: ``T:xi,eta``, ``F:xi,eta`` or ``B:xi,eta``."""
    if isinstance(node, PlaceId):
        return str(node)
    return f"T:{node[0]},{node[1]}"


def parse_node_key(key: str) -> Node:
    try:
        kind, coords = key.split(":")
        xi, eta = (int(c) for c in coords.split(","))
    except ValueError:
        raise UnknownNodeError(f"malformed node key {key!r}") from None
    if kind == "T":
        return Point(xi, eta)
    if kind in ("F", "B"):
        return PlaceId(PlaceKind(kind), Point(xi, eta))
    raise UnknownNodeError(f"malformed node key {key!r}")


_KIND_RANK = {"T": 0, "F": 1, "B": 2}


def node_sort_key(node: Node) -> tuple[int, int, int]:
    if isinstance(node, PlaceId):
        return (_KIND_RANK[node.kind.value], node.at.xi, node.at.eta)
    return (0, node[0], node[1])


def forward_place(t: Point) -> PlaceId:
    return PlaceId(PlaceKind.FORWARD, Point(*t))


def backward_place(t: Point) -> PlaceId:
    return PlaceId(PlaceKind.BACKWARD, Point(*t))


@dataclass(frozen=True)
class CycloidNet:
    """Immutable net ``(S, T, F)``; nodes are identified by canonical coordinates."""

    params: CycloidParams
    transitions: tuple[Point, ...]
    places: tuple[PlaceId, ...]
    arcs: tuple[tuple[Node, Node], ...] = field(repr=False)

    @cached_property
    def _post(self) -> dict[Node, tuple[Node, ...]]:
        out = defaultdict(list)
        for src, dst in self.arcs:
            out[src].append(dst)
        return {k: tuple(v) for k, v in out.items()}

    @cached_property
    def _pre(self) -> dict[Node, tuple[Node, ...]]:
        inp = defaultdict(list)
        for src, dst in self.arcs:
            inp[dst].append(src)
        return {k: tuple(v) for k, v in inp.items()}

    @cached_property
    def node_set(self) -> frozenset:
        return frozenset(self.transitions) | frozenset(self.places)

    def __contains__(self, node) -> bool:
        return node in self.node_set

    def _check(self, node):
        if node not in self.node_set:
            raise UnknownNodeError(f"{_safe_key(node)} is not a node of {self.params}")

    def pre_set(self, node) -> frozenset:
        self._check(node)
        return frozenset(self._pre.get(node, ()))

    def post_set(self, node) -> frozenset:
        self._check(node)
        return frozenset(self._post.get(node, ()))

    def successor(self, t: Point, kind: PlaceKind) -> Point:
        """The transition reached from ``t`` through its output place of ``kind``."""
        (nxt,) = self._post[PlaceId(kind, t)]
        return nxt

    @cached_property
    def transition_graph(self) -> dict[Point, tuple[Point, ...]]:
        """Transition -> successor transitions (through either output place)."""
        graph = {}
        for t in self.transitions:
            succ = []
            for p in self._post.get(t, ()):
                succ.extend(self._post.get(p, ()))
            graph[t] = tuple(sorted(succ))
        return graph


def pre_set(net: CycloidNet, node) -> frozenset:
    return net.pre_set(node)


def post_set(net: CycloidNet, node) -> frozenset:
    return net.post_set(node)


def build_net(params: CycloidParams, limit: int | None = None) -> CycloidNet:
    cap = max_area() if limit is None else limit
    if params.area > cap:
        raise SizeLimitError(f"area {params.area} of {params} exceeds the net size cap {cap}")
    transitions = tuple(fundamental_points(params))
    places = []
    arcs = []
    for t in transitions:
        f, b = forward_place(t), backward_place(t)
        places.extend((f, b))
        arcs.append((t, f))
        arcs.append((f, canonical(params, t.shifted(1, 0))))
        arcs.append((t, b))
        arcs.append((b, canonical(params, t.shifted(0, 1))))
    places.sort(key=node_sort_key)
    arcs.sort(key=lambda arc: (node_sort_key(arc[0]), node_sort_key(arc[1])))
    return CycloidNet(params, transitions, tuple(places), tuple(arcs))


@dataclass(frozen=True)
class Violation:
    """One broken structural invariant together with the nodes that break it."""

    invariant: str
    offenders: tuple[str, ...]
    detail: str = ""

    def __str__(self):
        shown = ", ".join(self.offenders[:8])
        more = f" (+{len(self.offenders) - 8} more)" if len(self.offenders) > 8 else ""
        return f"{self.invariant}: {self.detail} [{shown}{more}]"


def validate_net(net: CycloidNet) -> list[Violation]:
    """Check every structural invariant of a cycloid net.

    At most one violation is reported per invariant; it lists all offending
    nodes, so deleting a single arc shows up as one ``degree`` violation
    naming both endpoints.
    """
    params = net.params
    found: list[Violation] = []
    t_set = set(net.transitions)
    s_set = set(net.places)

    if len(t_set) != params.area or len(net.transitions) != len(t_set):
        found.append(Violation("transition-count", (), f"|T|={len(net.transitions)} expected {params.area}"))
    if len(s_set) != 2 * params.area or len(net.places) != len(s_set):
        found.append(Violation("place-count", (), f"|S|={len(net.places)} expected {2 * params.area}"))

    # Point and PlaceId never compare equal, but a hand-built net might mix raw tuples in
    overlap = t_set & s_set
    if overlap:
        found.append(Violation("disjoint", tuple(sorted(map(str, overlap))), "S and T intersect"))

    off_canonical = [t for t in net.transitions if not in_fundamental(params, t)]
    off_canonical += [p.at for p in net.places if not in_fundamental(params, p.at)]
    if off_canonical:
        found.append(
            Violation("canonical", tuple(node_key(Point(*x)) for x in off_canonical), "coordinates outside the fundamental parallelogram")
        )

    bad_arcs = []
    for src, dst in net.arcs:
        ok = (src in t_set and dst in s_set) or (src in s_set and dst in t_set)
        if not ok:
            bad_arcs.append(f"{_safe_key(src)}->{_safe_key(dst)}")
    if bad_arcs:
        found.append(Violation("flow", tuple(bad_arcs), "arc not in (S x T) u (T x S)"))
    if len(set(net.arcs)) != len(net.arcs):
        found.append(Violation("flow", (), "duplicate arcs"))

    degree_offenders = []
    for t in net.transitions:
        ins = [p for p in net._pre.get(t, ()) if p in s_set]
        outs = [p for p in net._post.get(t, ()) if p in s_set]
        if sorted(p.kind.value for p in ins) != ["B", "F"] or sorted(p.kind.value for p in outs) != ["B", "F"]:
            degree_offenders.append(node_key(t))
    for p in net.places:
        if len(net._pre.get(p, ())) != 1 or len(net._post.get(p, ())) != 1:
            degree_offenders.append(node_key(p))
    if degree_offenders:
        found.append(
            Violation(
                "degree",
                tuple(degree_offenders),
                "transitions need one F and one B place on each side; places need 1 input and 1 output",
            )
        )
    else:
        for kind in PlaceKind:
            image = [net.successor(t, kind) for t in net.transitions]
            if set(image) != t_set or len(set(image)) != len(image):
                found.append(Violation("permutation", (kind.value,), f"{kind.name.lower()} successor map is not a bijection on T"))
        wrong = []
        for t in net.transitions:
            if net._post[t] and set(net._post[t]) != {forward_place(t), backward_place(t)}:
                wrong.append(node_key(t))
            elif net.successor(t, PlaceKind.FORWARD) != canonical(params, t.shifted(1, 0)) or net.successor(
                t, PlaceKind.BACKWARD
            ) != canonical(params, t.shifted(0, 1)):
                wrong.append(node_key(t))
        if wrong:
            found.append(Violation("flow-geometry", tuple(wrong), "flow differs from the folded Petri space"))
    return found


def _safe_key(node) -> str:
    try:
        return node_key(node)
    except Exception:
        return repr(node)


def _dot_id(node: Node) -> str:
    return '"' + node_key(node) + '"'


def export_dot(net: CycloidNet) -> str:
    a, b, g, d = net.params.as_tuple()
    lines = [f'digraph "C({a},{b},{g},{d})" {{']
    for t in net.transitions:
        lines.append(f'  {_dot_id(t)} [shape=box, label="t{t.xi},{t.eta}"];')
    for p in net.places:
        lines.append(f'  {_dot_id(p)} [shape=circle, label="{p.kind.value}{p.at.xi},{p.at.eta}"];')
    for src, dst in net.arcs:
        lines.append(f"  {_dot_id(src)} -> {_dot_id(dst)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(net: CycloidNet) -> str:
    doc = {
        "params": list(net.params.as_tuple()),
        "transitions": [[t.xi, t.eta] for t in net.transitions],
        "places": [{"kind": p.kind.value, "at": [p.at.xi, p.at.eta]} for p in net.places],
        "arcs": [[node_key(src), node_key(dst)] for src, dst in net.arcs],
    }
    return json.dumps(doc, indent=1) + "\n"


def load_json(text: str) -> CycloidNet:
    """Inverse of :func:`export_json`.  No validation; run :func:`validate_net` for that."""
    doc = json.loads(text)
    params = CycloidParams.of(doc["params"])
    transitions = tuple(Point(xi, eta) for xi, eta in doc["transitions"])
    places = tuple(PlaceId(PlaceKind(p["kind"]), Point(*p["at"])) for p in doc["places"])
    arcs = tuple((parse_node_key(src), parse_node_key(dst)) for src, dst in doc["arcs"])
    return CycloidNet(params, transitions, places, arcs)


def nodes(net: CycloidNet) -> Iterable[Node]:
    yield from net.transitions
    yield from net.places
