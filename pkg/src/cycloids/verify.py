"""Exhaustive invariant sweep over a box of parameters.

Used by ``cycloids verify`` and by the acceptance tests.  Output order is
fixed (lexicographic parameter order), so reports are reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .cycles import (
    compare_methods,
    cyc_case_c,
    cyc_case_d,
    cyc_case_e,
    cyc_formula_b,
    j_bound,
)
from .errors import CycloidError
from .lattice import CycloidParams, in_fundamental
from .net import build_net, validate_net
from .transforms import DIRECTIONS, shear, shear_applicable, symmetric_params


@dataclass
class SweepReport:
    max_value: int
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        out = [f"range=1..{self.max_value}", f"checked={self.checked}", f"violations={len(self.failures)}"]
        out.extend(f"violation {line}" for line in self.failures)
        out.append("status=" + ("ok" if self.ok else "FAIL"))
        return out


def check_params(params: CycloidParams) -> list[str]:
    """Every invariant for a single cycloid; returns human-readable failures."""
    tag = ",".join(map(str, params.as_tuple()))
    failures = []
    a, b, g, d = params.as_tuple()

    inside = sum(
        1 for xi in range(-g, a + g + 1) for eta in range(-b, b + d + 1) if in_fundamental(params, (xi, eta))
    )
    if inside != params.area:
        failures.append(f"{tag} fundamental-count={inside} area={params.area}")

    net = build_net(params)
    for violation in validate_net(net):
        failures.append(f"{tag} net {violation}")

    try:
        report = compare_methods(params)
    except CycloidError as exc:
        failures.append(f"{tag} {exc}")
        return failures
    length = report["formula"].length
    if length > params.area:
        failures.append(f"{tag} cyc={length} exceeds area={params.area}")
    if report["lattice"].j > j_bound(params):
        failures.append(f"{tag} minimizing j={report['lattice'].j} above bound {j_bound(params)}")

    for name, fn in (("c", cyc_case_c), ("d", cyc_case_d), ("e", cyc_case_e)):
        try:
            value = fn(params)
        except CycloidError as exc:
            failures.append(f"{tag} case {name}: {exc}")
            continue
        if value is not None and value != length:
            failures.append(f"{tag} case {name}={value} cyc={length}")

    mirror = symmetric_params(params)
    if mirror.area != params.area or cyc_formula_b(mirror).length != length:
        failures.append(f"{tag} symmetric cycloid changes area or cyc")
    for direction in DIRECTIONS:
        if shear_applicable(params, direction):
            sheared = shear(params, direction)
            if sheared.area != params.area or cyc_formula_b(sheared).length != length:
                failures.append(f"{tag} {direction} changes area or cyc")
    return failures


def all_params(max_value: int):
    for values in itertools.product(range(1, max_value + 1), repeat=4):
        yield CycloidParams(*values)


def sweep(max_value: int) -> SweepReport:
    report = SweepReport(max_value)
    for params in all_params(max_value):
        report.checked += 1
        report.failures.extend(check_params(params))
    return report
