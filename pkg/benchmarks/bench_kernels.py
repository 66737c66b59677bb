"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py --max-sum 12 --repeat 3
"""

import argparse
import itertools
import timeit

from qatwist import _canon_py, _statesum_py, kernels
from qatwist.families import pretzel_diagram


def workload(max_sum):
    specs = []
    for n in range(2, 5):
        for mags in itertools.combinations_with_replacement(range(1, max_sum), n):
            if sum(mags) <= max_sum:
                specs.append(mags[:-1] + (-mags[-1],))
    out = []
    for s in specs:
        d = pretzel_diagram(s)
        flat = [lab for t in d.crossings for lab in t]
        out.append((d, flat))
    return out


def bench(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-sum", type=int, default=12, help="largest pretzel total twist")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    if kernels.BACKEND != "cython":
        print("compiled extension not available; only the fallback can run")
    diagrams = workload(args.max_sum)
    print("%d pretzel diagrams, up to %d crossings, backend %s"
          % (len(diagrams), max(d.n for d, _ in diagrams), kernels.BACKEND))

    cases = [
        ("state_histogram",
         lambda impl: [impl([x - 1 for x in f], d.arc_count, d.loops) for d, f in diagrams],
         kernels.state_histogram, _statesum_py.state_histogram),
        ("best_labelling",
         lambda impl: [impl(f, d.n, d.arc_count) for d, f in diagrams],
         kernels.best_labelling, _canon_py.best_labelling),
    ]
    print("%-16s %10s %10s %8s" % ("kernel", "python s", "cython s", "speedup"))
    for name, run, fast, slow in cases:
        t_slow = bench(lambda: run(slow), args.repeat)
        if kernels.BACKEND == "cython":
            t_fast = bench(lambda: run(fast), args.repeat)
            print("%-16s %10.3f %10.3f %7.1fx" % (name, t_slow, t_fast, t_slow / t_fast))
        else:
            print("%-16s %10.3f %10s %8s" % (name, t_slow, "-", "-"))


if __name__ == "__main__":
    main()
