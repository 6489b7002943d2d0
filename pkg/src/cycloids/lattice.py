"""Exact integer arithmetic on the cycloid lattice.

A cycloid ``C(alpha, beta, gamma, delta)`` identifies two points of the
integer plane when their difference lies in the lattice spanned by the
columns ``(alpha, -beta)`` and ``(gamma, delta)`` of the cycloid matrix

    A = [[alpha, gamma], [-beta, delta]]

with determinant ``area = alpha*delta + beta*gamma``.  The adjugate

    B = [[delta, -gamma], [beta, alpha]]

satisfies ``A^-1 = B / area``, so ``B @ v / area`` gives the lattice
coordinates of a difference vector ``v``.  Everything here stays in
integers (or ``Fraction`` for display); no floating point is involved.

Canonical representatives use the half-open box convention: a point is
in the fundamental parallelogram iff both lattice coordinates lie in
``[0, 1)``.  That keeps the edges O-P and O-Q and drops the corners P, Q,
R together with the two far edges.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterator, NamedTuple

from .errors import InvalidParamsError, SizeLimitError

#: Largest accepted parameter value.  Keeps the area inside signed 64 bits
#: so exports stay portable to fixed-width consumers.
MAX_PARAM = int(os.environ.get("CYCLOID_MAX_PARAM", 10**6))
_INT64_MAX = 2**63 - 1


class Point(NamedTuple):
    xi: int
    eta: int

    def shifted(self, dxi: int, deta: int) -> "Point":
        return Point(self.xi + dxi, self.eta + deta)

    def minus(self, other: "Point") -> "Point":
        return Point(self.xi - other.xi, self.eta - other.eta)

    def __str__(self):
        return f"{self.xi},{self.eta}"


class ParamVector(NamedTuple):
    """Lattice coordinates of a difference vector; both entries exact."""

    first: Fraction
    second: Fraction

    @property
    def is_integral(self) -> bool:
        return self.first.denominator == 1 and self.second.denominator == 1


class EquivalenceWitness(NamedTuple):
    m: int
    n: int


@dataclass(frozen=True, order=True)
class CycloidParams:
    alpha: int
    beta: int
    gamma: int
    delta: int

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise InvalidParamsError(f"{name} must be an integer, got {value!r}")
            if value < 1:
                raise InvalidParamsError(f"{name} must be >= 1, got {value}")
            if value > MAX_PARAM:
                raise SizeLimitError(f"{name}={value} exceeds the parameter limit {MAX_PARAM}")
        if self.area > _INT64_MAX:
            raise SizeLimitError(f"area {self.area} does not fit in 64 bits")

    @classmethod
    def of(cls, values) -> "CycloidParams":
        alpha, beta, gamma, delta = values
        return cls(int(alpha), int(beta), int(gamma), int(delta))

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.alpha, self.beta, self.gamma, self.delta)

    @cached_property
    def area(self) -> int:
        return self.alpha * self.delta + self.beta * self.gamma

    @property
    def matrix(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.alpha, self.gamma), (-self.beta, self.delta))

    @property
    def adjugate(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.delta, -self.gamma), (self.beta, self.alpha))

    @property
    def is_regular(self) -> bool:
        return self.delta % self.beta == 0

    @property
    def is_coregular(self) -> bool:
        return self.gamma % self.alpha == 0

    def __str__(self):
        return f"C({self.alpha},{self.beta},{self.gamma},{self.delta})"


def area(params: CycloidParams) -> int:
    return params.area


def lattice_point(params: CycloidParams, m: int, n: int) -> Point:
    """``A @ (m, n)``."""
    return Point(m * params.alpha + n * params.gamma, -m * params.beta + n * params.delta)


def _numerators(params: CycloidParams, v) -> tuple[int, int]:
    # B @ v, i.e. area * pi(v)
    xi, eta = v
    return (params.delta * xi - params.gamma * eta, params.beta * xi + params.alpha * eta)


def param_vector(params: CycloidParams, v) -> ParamVector:
    first, second = _numerators(params, v)
    return ParamVector(Fraction(first, params.area), Fraction(second, params.area))


def equivalence_witness(params: CycloidParams, x1, x2) -> EquivalenceWitness | None:
    """Return ``(m, n)`` with ``x2 - x1 = A @ (m, n)``, or None if no such pair exists."""
    p, q = _numerators(params, (x2[0] - x1[0], x2[1] - x1[1]))
    m, rem_m = divmod(p, params.area)
    n, rem_n = divmod(q, params.area)
    if rem_m or rem_n:
        return None
    return EquivalenceWitness(m, n)


def equivalent(params: CycloidParams, x1, x2) -> bool:
    p, q = _numerators(params, (x2[0] - x1[0], x2[1] - x1[1]))
    return p % params.area == 0 and q % params.area == 0


def in_fundamental(params: CycloidParams, x) -> bool:
    p, q = _numerators(params, x)
    return 0 <= p < params.area and 0 <= q < params.area


def canonical(params: CycloidParams, x) -> Point:
    p, q = _numerators(params, x)
    # floor division rounds toward -inf, matching a mod b = a - b*floor(a/b)
    m, n = p // params.area, q // params.area
    return Point(x[0] - m * params.alpha - n * params.gamma, x[1] + m * params.beta - n * params.delta)


def corners(params: CycloidParams) -> tuple[Point, Point, Point, Point]:
    """Corners ``(O, P, R, Q)`` of the fundamental parallelogram."""
    a, b, g, d = params.as_tuple()
    return (Point(0, 0), Point(a, -b), Point(a + g, d - b), Point(g, d))


def fundamental_points(params: CycloidParams) -> Iterator[Point]:
    """Yield every canonical point, sorted by ``(xi, eta)``.

    Each column ``xi`` contributes the integer interval of ``eta`` cut out by
    ``0 <= delta*xi - gamma*eta < area`` and ``0 <= beta*xi + alpha*eta < area``,
    so the cost is linear in the area plus the width ``alpha + gamma``.
    """
    a, b, g, d = params.as_tuple()
    big = params.area
    for xi in range(0, a + g):
        # delta*xi - gamma*eta >= 0       ->  eta <= floor(delta*xi / gamma)
        # delta*xi - gamma*eta <  area    ->  eta >= floor((delta*xi - area) / gamma) + 1
        # beta*xi + alpha*eta >= 0        ->  eta >= ceil(-beta*xi / alpha)
        # beta*xi + alpha*eta <  area     ->  eta <= ceil((area - beta*xi) / alpha) - 1
        lo = max((d * xi - big) // g + 1, -((b * xi) // a))
        hi = min((d * xi) // g, -((b * xi - big) // a) - 1)
        for eta in range(lo, hi + 1):
            yield Point(xi, eta)
