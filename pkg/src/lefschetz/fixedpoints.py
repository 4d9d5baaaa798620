"""Exact fixed points of simplicial maps, open simplex by open simplex.

On an open simplex ``rho`` of X' the map is affine: the point with local
weights ``lam`` goes to ``sum lam_i * e_{f(v_i)}``.  Both sides live in the
barycentric coordinates of the base vertex set, a single global frame, so a
fixed point is a solution of a linear system with ``lam > 0``.  Strict
positivity is decided by Fourier-Motzkin elimination in exact arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .complex import Simplex
from .linalg import integer_row, nullspace, rref
from .maps import SimplicialMap
from .subdivision import BarycentricPoint

Constraint = tuple[list[Fraction], Fraction]  # coeffs . t + const > 0


def strict_feasible_point(cons: list[Constraint], m: int) -> list[Fraction] | None:
    """A point ``t`` with every ``a . t + c > 0``, or ``None`` if there is none."""
    if m == 0:
        return [] if all(c > 0 for _, c in cons) else None
    pos, neg, rest = [], [], []
    for a, c in cons:
        k = a[-1]
        if k > 0:
            pos.append((a, c))
        elif k < 0:
            neg.append((a, c))
        else:
            rest.append((a[:-1], c))
    for a, c in pos:
        for b, d in neg:
            ak, bk = a[-1], -b[-1]
            rest.append(([bk * x + ak * y for x, y in zip(a[:-1], b[:-1])], bk * c + ak * d))
    sub = strict_feasible_point(rest, m - 1)
    if sub is None:
        return None

    def partial(a, c):
        return sum((x * t for x, t in zip(a[:-1], sub)), Fraction(0)) + c

    lo = max((-partial(a, c) / a[-1] for a, c in pos), default=None)
    hi = min((partial(b, d) / -b[-1] for b, d in neg), default=None)
    if lo is not None and hi is not None:
        t = (lo + hi) / 2
    elif lo is not None:
        t = lo + 1
    elif hi is not None:
        t = hi - 1
    else:
        t = Fraction(0)
    return sub + [t]


@dataclass(frozen=True)
class FixedPointCertificate:
    simplex: Simplex
    fixed_set_dimension: int
    witness: BarycentricPoint
    local_weights: tuple[Fraction, ...]

    def image_of_witness(self, f: SimplicialMap) -> BarycentricPoint:
        acc: dict[int, Fraction] = {}
        for v, lam in zip(self.simplex, self.local_weights):
            w = f(v)
            acc[w] = acc.get(w, Fraction(0)) + lam
        return BarycentricPoint(tuple(sorted(acc.items())))

    def verify(self, f: SimplicialMap) -> bool:
        pos = all(lam > 0 for lam in self.local_weights) and sum(self.local_weights) == 1
        return pos and self.image_of_witness(f) == self.witness


def fixed_point_in(f: SimplicialMap, rho: Simplex) -> FixedPointCertificate | None:
    locs = [f.domain.locations[v] for v in rho]
    imgs = [f(v) for v in rho]
    coords = sorted(set().union(*(p.carrier for p in locs)) | set(imgs))
    k = len(rho)
    # columns: lam_0..lam_{k-1}, rhs
    rows = []
    for u in coords:
        rows.append([p.weight(u) - (1 if w == u else 0) for p, w in zip(locs, imgs)] + [Fraction(0)])
    rows.append([Fraction(1)] * k + [Fraction(1)])
    red, piv = rref([integer_row(r) for r in rows], k + 1)
    if k in piv:
        return None
    particular = [Fraction(0)] * k
    for i, c in enumerate(piv):
        particular[c] = Fraction(red[i][k], red[i][c])
    homog = nullspace([r[:k] for r in rows], k)
    m = len(homog)
    cons = [([Fraction(h[i]) for h in homog], particular[i]) for i in range(k)]
    t = strict_feasible_point(cons, m)
    if t is None:
        return None
    lam = tuple(particular[i] + sum((h[i] * tj for h, tj in zip(homog, t)), Fraction(0)) for i in range(k))
    acc: dict[int, Fraction] = {}
    for p, l in zip(locs, lam):
        for u, w in p.weights:
            acc[u] = acc.get(u, Fraction(0)) + l * w
    witness = BarycentricPoint(tuple((u, w) for u, w in sorted(acc.items()) if w))
    return FixedPointCertificate(rho, m, witness, lam)


def fixed_point_certificates(f: SimplicialMap) -> list[FixedPointCertificate]:
    cached = getattr(f, "_fixed", None)
    if cached is None:
        cached = [c for rho in f.refined if (c := fixed_point_in(f, rho)) is not None]
        f._fixed = cached
    return list(cached)
