"""Compare closure-based isomorphism classes with the exhaustive oracle.

For every area up to ``--max-area`` (params in [1,N]^4) this partitions the
cycloids once by reachability under shears and mirroring, once by the
exhaustive net isomorphism search, and prints how many classes each finds.
A gap means the parameter moves miss some isomorphisms.

    python scripts/iso_census.py --max 4 --max-area 16
"""

import argparse
from collections import defaultdict

from cycloids import build_net, iso_closure
from cycloids.transforms import find_net_isomorphism
from cycloids.verify import all_params


def classes(items, same):
    reps = []
    for item in items:
        for group in reps:
            if same(group[0], item):
                group.append(item)
                break
        else:
            reps.append([item])
    return reps


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max", type=int, default=4)
    parser.add_argument("--max-area", type=int, default=16)
    parser.add_argument("--steps", type=int, default=12)
    args = parser.parse_args()

    by_area = defaultdict(list)
    for params in all_params(args.max):
        if params.area <= args.max_area:
            by_area[params.area].append(params)

    nets = {}

    def net(p):
        if p not in nets:
            nets[p] = build_net(p)
        return nets[p]

    def oracle(p, q):
        return (
            find_net_isomorphism(net(p), net(q)) is not None
            or find_net_isomorphism(net(p), net(q), swap_kinds=True) is not None
        )

    print("area cycloids closure_classes oracle_classes")
    for area in sorted(by_area):
        group = by_area[area]
        by_closure = classes(group, lambda p, q: q in iso_closure(p, args.steps))
        by_oracle = classes(group, oracle)
        print(f"{area:4d} {len(group):8d} {len(by_closure):15d} {len(by_oracle):14d}")


if __name__ == "__main__":
    main()
