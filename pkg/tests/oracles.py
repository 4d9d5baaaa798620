"""Independent reference computations; none of these touch the package's algorithms."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import sympy


def brute_subcomplexes(simplices):
    """All face-closed subsets, by filtering every subset of the simplex set."""
    sims = sorted(simplices, key=lambda s: (len(s), s))
    out = []
    for r in range(len(sims) + 1):
        for subset in combinations(sims, r):
            chosen = set(subset)
            if all(f in chosen for s in chosen for k in range(1, len(s)) for f in combinations(s, k)):
                out.append(frozenset(chosen))
    return out


def peel_valuation(values):
    """Valuation from closed-simplex values by peeling one maximal simplex at a time.

    mu(A) = mu(A - x) + mu(closure x) - mu(boundary x), using the lattice law
    only; no open-cell weights are ever formed.
    """

    @lru_cache(maxsize=None)
    def mu(a: frozenset):
        if not a:
            return Fraction(0)
        x = max(a, key=lambda s: (len(s), s))
        rest = a - {x}
        bd = frozenset(f for k in range(1, len(x)) for f in combinations(x, k))
        return mu(rest) + values[x] - mu(bd)

    return mu


def count_flags(simplices):
    """Number of chains of each length in the face poset (= simplices of the barycentric subdivision)."""
    sims = list(simplices)
    counts = {}

    def extend(chain):
        k = len(chain)
        counts[k] = counts.get(k, 0) + 1
        top = chain[-1]
        for s in sims:
            if len(s) > len(top) and set(top) < set(s):
                extend(chain + [s])

    for s in sims:
        extend([s])
    return [counts.get(k, 0) for k in range(1, max(counts) + 1)]


def dense_compose(*mats):
    """Product of dense Fraction matrices, rightmost applied first."""
    out = mats[-1]
    for m in reversed(mats[:-1]):
        out = [[sum((m[i][k] * out[k][j] for k in range(len(out))), Fraction(0))
                for j in range(len(out[0]))] for i in range(len(m))]
    return out


def sympy_homology_trace(bases, boundary, phi, q):
    """Trace of a chain map on H_q via sympy: tr(phi | Z_q) - tr(phi | B_q).

    ``bases[q]`` lists q-simplices, ``boundary(x)`` returns {face: coeff},
    ``phi(q, x)`` returns {simplex: coeff}.
    """
    def mat(rows, cols, fn):
        ri = {s: i for i, s in enumerate(rows)}
        m = sympy.zeros(len(rows), len(cols))
        for j, x in enumerate(cols):
            for y, c in fn(x).items():
                m[ri[y], j] = c
        return m

    cq = bases[q]
    if not cq:
        return Fraction(0)
    if q == 0:
        z = sympy.eye(len(cq))
    else:
        d = mat(bases[q - 1], cq, boundary)
        ns = d.nullspace()
        z = sympy.Matrix.hstack(*ns) if ns else sympy.zeros(len(cq), 0)
    if q + 1 < len(bases) and bases[q + 1]:
        d1 = mat(cq, bases[q + 1], boundary)
        cs = d1.columnspace()
        b = sympy.Matrix.hstack(*cs) if cs else sympy.zeros(len(cq), 0)
    else:
        b = sympy.zeros(len(cq), 0)
    p = mat(cq, cq, lambda x: phi(q, x))

    def restricted_trace(basis):
        if basis.shape[1] == 0:
            return sympy.Integer(0)
        img = p * basis
        coords = (basis.T * basis).LUsolve(basis.T * img)
        assert basis * coords == img, "subspace not invariant"
        return coords.trace()

    return Fraction(str(restricted_trace(z) - restricted_trace(b)))
