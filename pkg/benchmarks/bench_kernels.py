"""Compiled versus pure-Python integer RREF.

    python benchmarks/bench_kernels.py [--repeat N]

Times the raw kernel on boundary matrices of iterated barycentric
subdivisions and on random integer matrices, then a full homology
computation with each backend selected.
"""

import argparse
import random
import sys
import timeit

from lefschetz import linalg
from lefschetz._kernels_py import rref as rref_py
from lefschetz.corpus import simplex_boundary
from lefschetz.homology import _boundary_rows, homology_basis
from lefschetz.subdivision import barycentric_subdivide, identity_subdivision


def boundary_cases():
    k = identity_subdivision(simplex_boundary(3))
    for rounds in (1, 2, 3):
        k = barycentric_subdivide(k)
        c = k.refined
        bases = [c.simplices_of_dim(q) for q in range(c.dimension + 1)]
        for q in (1, 2):
            rows = _boundary_rows(c, q, bases)
            yield f"d{q} of sd^{rounds}(S^2) {len(rows)}x{len(bases[q])}", rows, len(bases[q])


def random_cases(rng):
    for n, span in ((20, 9), (40, 9), (60, 3), (80, 1)):
        rows = [[rng.randint(-span, span) for _ in range(n)] for _ in range(n)]
        yield f"random {n}x{n} entries in [-{span},{span}]", rows, n


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if linalg._kernels_c is None:
        sys.exit("compiled kernel not available; build with `pip install -e . --no-build-isolation`")
    kc = linalg._kernels_c.rref

    print(f"{'case':44} {'python':>10} {'compiled':>10} {'speedup':>8}")
    cases = list(boundary_cases()) + list(random_cases(random.Random(0)))
    for name, rows, n in cases:
        assert linalg.rref(rows, n, backend="compiled") == rref_py(rows, n)
        tp = best(lambda: rref_py(rows, n), args.repeat)
        try:
            tc = best(lambda: kc(rows, n), args.repeat)
            note = f"{tp / tc:7.1f}x"
        except OverflowError:
            tc = best(lambda: linalg.rref(rows, n, backend="compiled"), args.repeat)
            note = " overflow"
        print(f"{name:44} {tp * 1e3:8.2f}ms {tc * 1e3:8.2f}ms {note:>8}")

    k = identity_subdivision(simplex_boundary(3))
    for _ in range(3):
        k = barycentric_subdivide(k)
    c = k.refined
    print(f"\nhomology of sd^3(S^2), {len(c)} simplices")
    saved = linalg.BACKEND
    try:
        for backend in ("python", "compiled"):
            linalg.BACKEND = backend

            def run():
                homology_basis.cache_clear()
                return homology_basis(c).betti

            print(f"  {backend:9} {best(run, args.repeat) * 1e3:8.1f}ms  betti={run()}")
    finally:
        linalg.BACKEND = saved


if __name__ == "__main__":
    main()
