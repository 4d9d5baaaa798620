"""Subdivisions with exact barycentric geometry and the subdivision chain operator.

Every refined vertex is located by barycentric weights over the vertices of
the *original* base complex, so iterated subdivisions never stack
coordinate systems.  Orientation signs of the subdivision operator come from
determinants of those weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .chains import ChainOperator
from .complex import Complex, Simplex, build_complex, facets, make_simplex
from .errors import InvalidSubdivision, MalformedInput
from .linalg import rank


@dataclass(frozen=True)
class BarycentricPoint:
    """A point of |X| given by strictly positive weights on its carrier simplex."""

    weights: tuple[tuple[int, Fraction], ...]

    def __post_init__(self):
        if not self.weights:
            raise MalformedInput("a barycentric point needs at least one weight")
        total = Fraction(0)
        for v, w in self.weights:
            if not isinstance(w, Fraction):
                raise MalformedInput(f"weight {w!r} is not an exact fraction")
            if w <= 0:
                raise MalformedInput(f"weight on vertex {v} must be positive, got {w}")
            total += w
        if total != 1:
            raise MalformedInput(f"weights sum to {total}, not 1")
        vs = [v for v, _ in self.weights]
        if vs != sorted(set(vs)):
            raise MalformedInput("weights must be keyed by distinct vertices in ascending order")

    @classmethod
    def from_mapping(cls, m: Mapping[int, object]) -> "BarycentricPoint":
        items = []
        for v, w in sorted(m.items()):
            if isinstance(w, float):
                raise MalformedInput(f"floating point weight {w!r} rejected; use p/q")
            try:
                items.append((int(v), Fraction(w)))
            except (TypeError, ValueError, ZeroDivisionError) as e:
                raise MalformedInput(f"bad weight {w!r} for vertex {v}") from e
        return cls(tuple(items))

    @classmethod
    def vertex(cls, v: int) -> "BarycentricPoint":
        return cls(((v, Fraction(1)),))

    @property
    def carrier(self) -> Simplex:
        return tuple(v for v, _ in self.weights)

    def weight(self, v: int) -> Fraction:
        for u, w in self.weights:
            if u == v:
                return w
        return Fraction(0)

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.weights)


def barycenter(points: list[BarycentricPoint]) -> BarycentricPoint:
    acc: dict[int, Fraction] = {}
    for p in points:
        for v, w in p.weights:
            acc[v] = acc.get(v, Fraction(0)) + w
    n = len(points)
    return BarycentricPoint(tuple((v, w / n) for v, w in sorted(acc.items())))


def det(m: list[list[Fraction]]) -> Fraction:
    """Exact determinant by Gaussian elimination over Fractions."""
    a = [list(r) for r in m]
    n = len(a)
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            d = -d
        d *= a[c][c]
        inv = 1 / a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] * inv
            if f:
                for j in range(c, n):
                    a[i][j] -= f * a[c][j]
    return d


def _frame_matrix(points: list[BarycentricPoint], sigma: Simplex) -> list[list[Fraction]]:
    return [[p.weight(w) for w in sigma] for p in points]


class SubdividedComplex:
    """A refined complex X' over a base complex X with located vertices."""

    def __init__(
        self,
        base: Complex,
        refined: Complex,
        locations: Mapping[int, BarycentricPoint],
        *,
        validate: bool = True,
    ):
        self.base = base
        self.refined = refined
        self.locations = dict(locations)
        self._carriers: dict[Simplex, Simplex] = {}
        self._signs: dict[Simplex, int] | None = None
        if validate:
            self.validate()
        else:
            for x in refined:
                self._carriers[x] = self._union_carrier(x)

    def _union_carrier(self, x: Simplex) -> Simplex:
        sup: set[int] = set()
        for v in x:
            sup.update(self.locations[v].carrier)
        return tuple(sorted(sup))

    def validate(self) -> None:
        refined_vs = set(self.refined.vertices)
        missing = refined_vs - set(self.locations)
        if missing:
            raise MalformedInput(f"no location given for refined vertices {sorted(missing)}")
        for v in self.base.vertices:
            if v not in refined_vs:
                raise InvalidSubdivision(f"base vertex {v} is not a refined vertex")
        extra = set(self.locations) - refined_vs
        if extra:
            raise MalformedInput(f"locations given for unknown vertices {sorted(extra)}")
        for v in self.base.vertices:
            if self.locations[v] != BarycentricPoint.vertex(v):
                raise InvalidSubdivision(f"base vertex {v} must be located at itself")
        for v, p in self.locations.items():
            if p.carrier not in self.base:
                raise InvalidSubdivision(f"vertex {v} located on {list(p.carrier)}, not a base simplex")
        self._carriers = {}
        for x in self.refined:
            car = self._union_carrier(x)
            if car not in self.base:
                raise InvalidSubdivision(
                    f"refined simplex {list(x)} has no common base carrier (spans {list(car)})")
            self._carriers[x] = car
            if len(x) > 1:
                m = _frame_matrix([self.locations[v] for v in x], car)
                # affine independence of barycentric rows = linear independence
                if rank(m, len(car)) != len(x):
                    raise InvalidSubdivision(f"refined simplex {list(x)} is degenerate")
        volume: dict[Simplex, Fraction] = {s: Fraction(0) for s in self.base}
        for x, car in self._carriers.items():
            if len(x) == len(car):
                volume[car] += abs(det(_frame_matrix([self.locations[v] for v in x], car)))
        for s, vol in volume.items():
            if vol != 1:
                raise InvalidSubdivision(
                    f"refined {len(s) - 1}-simplices over {list(s)} have total volume {vol}, not 1")

    def carrier(self, x: Simplex) -> Simplex:
        return self._carriers[x]

    def orientation_signs(self) -> dict[Simplex, int]:
        """Sign of each top-dimensional refined simplex relative to its carrier."""
        if self._signs is None:
            signs = {}
            for x, car in self._carriers.items():
                if len(x) == len(car):
                    d = det(_frame_matrix([self.locations[v] for v in x], car))
                    signs[x] = 1 if d > 0 else -1
            self._signs = signs
        return self._signs

    def is_identity(self) -> bool:
        return self.refined == self.base

    def __repr__(self) -> str:
        return (f"SubdividedComplex(base={len(self.base)} simplices, "
                f"refined={len(self.refined)} simplices)")


def identity_subdivision(x: Complex) -> SubdividedComplex:
    return SubdividedComplex(x, x, {v: BarycentricPoint.vertex(v) for v in x.vertices}, validate=False)


def custom_subdivision(
    base: Complex,
    refined_maximal: list[list[int]],
    locations: Mapping[int, Mapping[int, object] | BarycentricPoint],
) -> SubdividedComplex:
    locs = {}
    for v, p in locations.items():
        locs[int(v)] = p if isinstance(p, BarycentricPoint) else BarycentricPoint.from_mapping(p)
    for v in base.vertices:
        locs.setdefault(v, BarycentricPoint.vertex(v))
    refined = build_complex(refined_maximal)
    return SubdividedComplex(base, refined, locs, validate=True)


def _flags(top: Simplex):
    """All maximal descending facet chains starting at ``top``."""
    if len(top) == 1:
        yield (top,)
        return
    for f in facets(top):
        for chain in _flags(f):
            yield (top,) + chain


def barycentric_subdivide(k: SubdividedComplex) -> SubdividedComplex:
    """One round of barycentric subdivision of ``k.refined``.

    Existing refined vertices keep their labels; each simplex of positive
    dimension gets a fresh label, assigned in canonical simplex order.
    """
    ref = k.refined
    nxt = max(ref.vertices, default=-1) + 1
    label: dict[Simplex, int] = {}
    locs = dict(k.locations)
    for s in ref:
        if len(s) == 1:
            label[s] = s[0]
        else:
            label[s] = nxt
            locs[nxt] = barycenter([k.locations[v] for v in s])
            nxt += 1
    tops = []
    for m in ref.maximal():
        for chain in _flags(m):
            tops.append(make_simplex(label[s] for s in chain))
    refined = Complex.closure_of(tops)
    return SubdividedComplex(k.base, refined, locs, validate=False)


def subdivision_operator(k: SubdividedComplex, q: int) -> ChainOperator:
    """``s_q: C_q(X) -> C_q(X')`` with orientation-comparison signs."""
    cols: dict[Simplex, dict[Simplex, int]] = {}
    for x, sign in k.orientation_signs().items():
        if len(x) == q + 1:
            cols.setdefault(k.carrier(x), {})[x] = sign
    return ChainOperator(q, k.base, k.refined, cols)
