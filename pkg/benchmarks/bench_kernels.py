"""Compare the compiled permutation kernels with the pure-Python fallback.

Run from the repository root after installing the package:

    python3 benchmarks/bench_kernels.py [--repeat N] [--json]
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import timeit

from e6verify import kernels
from e6verify.lattice import dynkin_root
from e6verify.weyl import all_reflections, reflection


def workloads(impl, rng: random.Random) -> dict:
    refl = [r.perm for r in all_reflections()]
    pairs = [(rng.choice(refl), rng.choice(refl)) for _ in range(2000)]
    simple = [reflection(dynkin_root(i)).perm for i in range(1, 7)]
    triples = [rng.sample(refl, 3) for _ in range(200)]
    group = impl.closure(simple)
    return {
        "compose x2000": lambda: [impl.compose(p, q) for p, q in pairs],
        "cycle_type x2000": lambda: [impl.cycle_type(p) for p, _ in pairs],
        "orbits x200": lambda: [impl.orbits(t, 27) for t in triples],
        "closure of W(E6)": lambda: impl.closure(simple),
        "conjugacy classes of W(E6)": lambda: impl.conjugacy_partition(group, simple),
    }


def bench(impl, repeat: int) -> dict[str, float]:
    out = {}
    for name, fn in workloads(impl, random.Random(1)).items():
        out[name] = min(timeit.repeat(fn, number=1, repeat=repeat))
    return out


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)

    results = {"python": bench(kernels.python_impl, args.repeat)}
    if kernels.compiled_impl is not None:
        results["compiled"] = bench(kernels.compiled_impl, args.repeat)
    else:
        print("compiled kernels are not built; only the fallback was timed", file=sys.stderr)

    if args.json:
        print(json.dumps(results, indent=2))
        return 0
    names = list(results["python"])
    width = max(len(n) for n in names)
    header = f"{'workload':<{width}}  {'python (s)':>11}"
    if "compiled" in results:
        header += f"  {'compiled (s)':>12}  {'speedup':>8}"
    print(header)
    for n in names:
        line = f"{n:<{width}}  {results['python'][n]:>11.4f}"
        if "compiled" in results:
            c = results["compiled"][n]
            line += f"  {c:>12.4f}  {results['python'][n] / c if c else float('inf'):>7.1f}x"
        print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
