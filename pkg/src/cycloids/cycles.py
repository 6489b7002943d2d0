"""Minimal cycle length of a cycloid.

A directed cycle through the origin lifts to a monotone lattice path from
``(0, 0)`` to an equivalent point ``(u, v) = A @ (i, j)`` with ``u, v >= 0``;
its length is ``u + v`` grid steps.  Such endpoints force ``j >= 1``.

Three routes compute the minimum and are expected to agree:

* :func:`cyc_lattice_min` scans every admissible ``(i, j)``;
* :func:`cyc_formula_b` fixes the optimal ``i`` for each ``j`` in closed form;
* :func:`shortest_cycle_graph` runs breadth-first search on the built net.

The closed forms :func:`cyc_case_c`, :func:`cyc_case_d`, :func:`cyc_case_e`
cover special parameter shapes and return ``None`` outside their guards.
"""

from __future__ import annotations

from collections import deque
from dataclasses import asdict, dataclass
from typing import NamedTuple

from .errors import MethodDisagreementError, NoCycleError, SizeLimitError
from .lattice import CycloidParams, Point
from .net import CycloidNet, build_net

DEFAULT_GRAPH_CAP = 10**4


@dataclass(frozen=True)
class CycleWitness:
    i: int
    j: int
    u: int
    v: int

    @property
    def length(self) -> int:
        return self.u + self.v

    @classmethod
    def at(cls, params: CycloidParams, i: int, j: int) -> "CycleWitness":
        a, b, g, d = params.as_tuple()
        return cls(i, j, i * a + j * g, -i * b + j * d)

    def as_dict(self) -> dict:
        return {**asdict(self), "length": self.length}


class GraphCycle(NamedTuple):
    length: int
    cycle: tuple[Point, ...]  # transitions in firing order, first one repeated implicitly


def j_bound(params: CycloidParams) -> int:
    """Largest ``j`` that can carry a minimal cycle."""
    if params.alpha <= params.beta:
        return params.area // params.gamma
    return params.area // params.delta


def cyc_lattice_min(params: CycloidParams, j_limit: int | None = None) -> CycleWitness:
    """Brute-force minimum of ``u + v`` over ``j in [1, j_limit]`` and all admissible ``i``.

    Ties go to the smallest ``j``, then the smallest ``i``.
    """
    a, b, g, d = params.as_tuple()
    top = j_bound(params) if j_limit is None else j_limit
    best = None
    for j in range(1, top + 1):
        # u = i*a + j*g >= 0  and  v = j*d - i*b >= 0
        for i in range(-((j * g) // a), (j * d) // b + 1):
            w = CycleWitness.at(params, i, j)
            if best is None or w.length < best.length:
                best = w
    assert best is not None  # (i, j) = (0, 1) is always admissible
    return best


def cyc_formula_b(params: CycloidParams) -> CycleWitness:
    """One-parameter minimisation: for each ``j`` the best ``i`` is fixed.

    With ``alpha <= beta`` moving along ``(alpha, -beta)`` never lengthens the
    path, so ``i`` is pushed up to ``floor(j*delta/beta)``; otherwise it is
    pushed down to ``-floor(j*gamma/alpha)``.
    """
    a, b, g, d = params.as_tuple()
    low_slope = a <= b
    best = None
    for j in range(1, j_bound(params) + 1):
        # every cycle with this j is at least j*gamma (resp. j*delta) long
        if best is not None and j * (g if low_slope else d) >= best.length:
            break
        i = (j * d) // b if low_slope else -((j * g) // a)
        w = CycleWitness.at(params, i, j)
        if best is None or w.length < best.length:
            best = w
    assert best is not None
    return best


def cyc_case_c(params: CycloidParams) -> int | None:
    a, b, g, d = params.as_tuple()
    if a <= b and g >= d:
        return g + d + (d // b) * (a - b)
    if a > b and g <= d:
        return g + d - (g // a) * (a - b)
    return None


def cyc_case_d(params: CycloidParams) -> int | None:
    a, b, g, d = params.as_tuple()
    if a <= b and d % b == 0:
        value = g + (d // b) * a
        if value * b != params.area:
            raise MethodDisagreementError("regular closed form differs from area/beta", {"params": params, "value": value})
        return value
    return None


def cyc_case_e(params: CycloidParams) -> int | None:
    a, b, g, d = params.as_tuple()
    if a > b and g % a == 0:
        value = d + (g // a) * b
        if value * a != params.area:
            raise MethodDisagreementError("co-regular closed form differs from area/alpha", {"params": params, "value": value})
        return value
    return None


def shortest_cycle_graph(net: CycloidNet, cap: int = DEFAULT_GRAPH_CAP) -> GraphCycle:
    """Shortest directed cycle in the transition graph, searched from every transition.

    Edges are the forward and backward successor maps.  Each per-source
    breadth-first search stops once it cannot beat the best cycle so far.
    """
    if net.params.area > cap:
        raise SizeLimitError(f"graph search cap {cap} exceeded by area {net.params.area}")
    graph = net.transition_graph
    best: GraphCycle | None = None
    exhausted_without_cycle = []
    for source in net.transitions:
        parent = {source: None}
        depth = {source: 0}
        queue = deque([source])
        closing = None
        truncated = False
        while queue and closing is None:
            t = queue.popleft()
            if best is not None and depth[t] + 1 >= best.length:
                truncated = True
                break
            for nxt in graph[t]:
                if nxt == source:
                    closing = t
                    break
                if nxt not in depth:
                    depth[nxt] = depth[t] + 1
                    parent[nxt] = t
                    queue.append(nxt)
        if closing is not None:
            path = []
            node = closing
            while node is not None:
                path.append(node)
                node = parent[node]
            path.reverse()
            if best is None or len(path) < best.length:
                best = GraphCycle(len(path), tuple(path))
        elif not truncated:
            exhausted_without_cycle.append(source)
    if exhausted_without_cycle:
        shown = ", ".join(f"T:{t}" for t in exhausted_without_cycle[:5])
        raise NoCycleError(f"no directed cycle through {len(exhausted_without_cycle)} transition(s) of {net.params}: {shown}")
    if best is None:
        raise NoCycleError(f"{net.params} has no directed cycle")
    return best


def cyc(params: CycloidParams, verify: bool = False) -> CycleWitness:
    """Minimal cycle length with a witness.

    Applicable closed forms are always cross-checked; ``verify`` adds the
    brute-force lattice scan.  Any mismatch raises
    :class:`MethodDisagreementError`.
    """
    result = cyc_formula_b(params)
    checks = {"case_c": cyc_case_c(params), "case_d": cyc_case_d(params), "case_e": cyc_case_e(params)}
    if verify:
        checks["lattice"] = cyc_lattice_min(params).length
    for name, value in checks.items():
        if value is not None and value != result.length:
            raise MethodDisagreementError(
                f"{name} disagrees with formula b for {params}",
                {"params": params.as_tuple(), "formula_b": result.length, "witness": result.as_dict(), **checks},
            )
    return result


def compare_methods(params: CycloidParams, graph_cap: int = DEFAULT_GRAPH_CAP) -> dict:
    """Run all three routes and return their results; raise if they differ."""
    formula = cyc_formula_b(params)
    lattice = cyc_lattice_min(params)
    graph = shortest_cycle_graph(build_net(params), cap=graph_cap)
    report = {"formula": formula, "lattice": lattice, "graph": graph}
    if not formula.length == lattice.length == graph.length:
        raise MethodDisagreementError(
            f"minimal cycle methods disagree for {params}",
            {
                "params": params.as_tuple(),
                "formula": formula.length,
                "lattice": lattice.length,
                "graph": graph.length,
                "formula_witness": formula.as_dict(),
                "lattice_witness": lattice.as_dict(),
                "graph_cycle": " ".join(f"T:{t}" for t in graph.cycle),
            },
        )
    return report
