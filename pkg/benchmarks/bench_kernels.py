"""Time the compiled kernels against the pure-Python reference.

    python benchmarks/bench_kernels.py [--repeat 5]

Each workload runs on both backends; results are checked to be identical
before the timings are reported.
"""

import argparse
import itertools
import sys
import timeit

from classical_pieri import kernels
from classical_pieri.characters import GroupId, irreducible_character
from classical_pieri.partitions import enumerate_partitions, partitions_of


# kernels take plain tuples, as the library passes them
_LR_CASES = [(tuple(lam), tuple(mu), tuple(nu)) for lam in partitions_of(9, max_length=5)
             for mu in partitions_of(5) for nu in partitions_of(4)]


def lr_workload(mod):
    return sum(mod.lr_coefficient(*case) for case in _LR_CASES)


_PARTS = [tuple(p) for p in enumerate_partitions(8)]


def strip_workload(mod):
    h = v = 0
    for a, b in itertools.product(_PARTS, repeat=2):
        h += mod.is_horizontal_strip(a, b)
        v += mod.is_vertical_strip(a, b)
    return h, v


_A = irreducible_character(GroupId.sp(3), (3, 2, 1)).terms
_B = irreducible_character(GroupId.sp(3), (2, 2)).terms


def laurent_workload(mod):
    prod = mod.laurent_mul(_A, _B)
    acc = dict(prod)
    mod.laurent_add_scaled(acc, _A, -3)
    return len(prod), len(acc)


WORKLOADS = [("lr_coefficient", lr_workload), ("strip tests", strip_workload),
             ("laurent mul/add", laurent_workload)]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    fast = kernels.compiled()
    if fast is None:
        print("compiled extension not built; nothing to compare", file=sys.stderr)
        return 1
    print(f"{'workload':<18}{'python (s)':>12}{'cython (s)':>12}{'speedup':>10}")
    for name, fn in WORKLOADS:
        if fn(kernels.pure) != fn(fast):
            print(f"{name}: backends disagree", file=sys.stderr)
            return 1
        t_py = min(timeit.repeat(lambda: fn(kernels.pure), number=1, repeat=args.repeat))
        t_cy = min(timeit.repeat(lambda: fn(fast), number=1, repeat=args.repeat))
        print(f"{name:<18}{t_py:>12.4f}{t_cy:>12.4f}{t_py / t_cy:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
