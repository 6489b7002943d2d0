"""Time the three minimal-cycle routes over [1,N]^4 and report agreement.

    python scripts/cycle_methods.py --max 6
"""

import argparse
import time

from cycloids import build_net, cyc_formula_b, cyc_lattice_min, shortest_cycle_graph
from cycloids.verify import all_params


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max", type=int, default=6)
    args = parser.parse_args()

    timings = {"formula": 0.0, "lattice": 0.0, "graph": 0.0}
    disagreements = 0
    count = 0
    for params in all_params(args.max):
        values = {}
        for name, fn in (
            ("formula", lambda p: cyc_formula_b(p).length),
            ("lattice", lambda p: cyc_lattice_min(p).length),
            ("graph", lambda p: shortest_cycle_graph(build_net(p)).length),
        ):
            start = time.perf_counter()
            values[name] = fn(params)
            timings[name] += time.perf_counter() - start
        if len(set(values.values())) != 1:
            disagreements += 1
            print("disagree", params.as_tuple(), values)
        count += 1
    print(f"cycloids={count}")
    print(f"disagreements={disagreements}")
    for name, seconds in timings.items():
        print(f"seconds_{name}={seconds:.3f}")


if __name__ == "__main__":
    main()
