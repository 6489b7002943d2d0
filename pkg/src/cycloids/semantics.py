"""Token game on cycloid nets.

Markings are sets of places.  The enabling rule is Petri's: besides a
full pre-set, the post-set must be empty (contact freeness), so a
transition whose output place already carries a token cannot fire.
"""

from __future__ import annotations

import re
from typing import Iterable

from .errors import DisabledTransitionError, UnknownNodeError
from .lattice import Point, canonical
from .net import CycloidNet, PlaceId, PlaceKind, node_sort_key

Marking = frozenset  # of PlaceId


def _require_transition(net: CycloidNet, t) -> Point:
    t = Point(*t)
    if t not in net.node_set:
        raise UnknownNodeError(f"T:{t} is not a transition of {net.params}")
    return t


def check_marking(net: CycloidNet, marking: Iterable[PlaceId]) -> Marking:
    marking = frozenset(marking)
    foreign = sorted(str(p) for p in marking if not (isinstance(p, PlaceId) and p in net.node_set))
    if foreign:
        raise UnknownNodeError(f"places not in {net.params}: {', '.join(foreign)}")
    return marking


def enabled(net: CycloidNet, marking: Marking, t) -> bool:
    t = _require_transition(net, t)
    return net.pre_set(t) <= marking and not (net.post_set(t) & marking)


def fire(net: CycloidNet, marking: Marking, t) -> Marking:
    t = _require_transition(net, t)
    if not enabled(net, marking, t):
        raise DisabledTransitionError(f"T:{t} is not enabled")
    return (frozenset(marking) - net.pre_set(t)) | net.post_set(t)


def enabled_set(net: CycloidNet, marking: Marking) -> frozenset:
    return frozenset(t for t in net.transitions if enabled(net, marking, t))


_TOKEN = re.compile(r"\s*([FB])\s*:\s*(-?\d+)\s*,\s*(-?\d+)\s*(?:,|$)")


def parse_marking(net: CycloidNet, text: str) -> Marking:
    """Parse ``"F:x,y,B:x,y,..."``.

    Coordinates may name any Petri-space point; they are folded to their
    canonical representative, so ``F:5,-1`` and ``F:1,1`` are the same place
    in ``C(4,2,2,3)``.
    """
    places = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise ValueError(f"cannot parse marking near {text[pos:]!r}")
        kind, xi, eta = match.groups()
        places.append(PlaceId(PlaceKind(kind), canonical(net.params, (int(xi), int(eta)))))
        pos = match.end()
    return check_marking(net, places)


def format_marking(marking: Marking) -> str:
    return ",".join(str(p) for p in sorted(marking, key=node_sort_key))
