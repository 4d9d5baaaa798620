"""Simplicial maps X' -> X, their induced chain maps, and chain-level Lefschetz traces."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .chains import ChainOperator, restriction_operator
from .complex import Complex, Simplex, require_subcomplex
from .errors import MalformedInput, NotSimplicial
from .subdivision import SubdividedComplex, identity_subdivision, subdivision_operator


def permutation_sign(seq) -> int:
    """Sign of the permutation sorting ``seq`` (distinct entries)."""
    sign = 1
    n = len(seq)
    for i in range(n):
        for j in range(i + 1, n):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


class SimplicialMap:
    """A vertex map from the refined complex of ``domain`` to its base complex."""

    def __init__(self, domain: SubdividedComplex, vertex_images: Mapping[int, int]):
        self.domain = domain
        self.vertex_images = {int(v): int(w) for v, w in vertex_images.items()}
        self._s_ops: dict[int, ChainOperator] = {}
        self._phi: dict[int, ChainOperator] = {}
        self._validate()

    @classmethod
    def on(cls, x: Complex, vertex_images: Mapping[int, int]) -> "SimplicialMap":
        """A self-map of ``x`` with the trivial subdivision."""
        return cls(identity_subdivision(x), vertex_images)

    @property
    def refined(self) -> Complex:
        return self.domain.refined

    @property
    def base(self) -> Complex:
        return self.domain.base

    def _validate(self) -> None:
        base_vs = set(self.base.vertices)
        for v in self.refined.vertices:
            if v not in self.vertex_images:
                raise MalformedInput(f"no image given for vertex {v}")
            if self.vertex_images[v] not in base_vs:
                raise NotSimplicial(f"vertex {v} maps to {self.vertex_images[v]}, not a base vertex")
        extra = set(self.vertex_images) - set(self.refined.vertices)
        if extra:
            raise MalformedInput(f"images given for unknown vertices {sorted(extra)}")
        for m in self.refined.maximal():
            img = self.image_simplex(m)
            if img not in self.base:
                raise NotSimplicial(f"{list(m)} maps onto {list(img)}, which is not a simplex")

    def __call__(self, v: int) -> int:
        return self.vertex_images[v]

    def image_simplex(self, x: Simplex) -> Simplex:
        return tuple(sorted({self.vertex_images[v] for v in x}))

    def oriented_image(self, x: Simplex) -> tuple[int, Simplex | None]:
        """``(sign, y)`` with ``f_q(x) = sign * y``, or ``(0, None)`` when degenerate."""
        imgs = [self.vertex_images[v] for v in x]
        if len(set(imgs)) < len(imgs):
            return 0, None
        return permutation_sign(imgs), tuple(sorted(imgs))

    def subdivision_op(self, q: int) -> ChainOperator:
        op = self._s_ops.get(q)
        if op is None:
            op = self._s_ops[q] = subdivision_operator(self.domain, q)
        return op


@dataclass(frozen=True, eq=False)
class MapPair:
    map: SimplicialMap
    subcomplex: Complex

    def __post_init__(self):
        require_subcomplex(self.subcomplex, self.map.refined)

    @classmethod
    def whole(cls, f: SimplicialMap) -> "MapPair":
        return cls(f, f.refined)

    def restrict(self, a: Complex) -> "MapPair":
        return MapPair(self.map, a)


def induced_chain_map(f: SimplicialMap, q: int) -> ChainOperator:
    """``f_q: C_q(X') -> C_q(X)``."""
    cols = {}
    for x in f.refined.simplices_of_dim(q):
        sign, y = f.oriented_image(x)
        if sign:
            cols[x] = {y: sign}
    return ChainOperator(q, f.refined, f.base, cols)


def lefschetz_chain_operator(p: MapPair, q: int) -> ChainOperator:
    """``f_{A,q} = s_A o f_q o j_A`` on ``C_q(X')``."""
    f = p.map
    j = restriction_operator(p.subcomplex, f.refined, q)
    return f.subdivision_op(q) @ induced_chain_map(f, q) @ j


def self_chain_map(f: SimplicialMap, q: int) -> ChainOperator:
    """``s_q o f_q`` on the whole of ``C_q(X')``; a chain map."""
    op = f._phi.get(q)
    if op is None:
        op = f._phi[q] = f.subdivision_op(q) @ induced_chain_map(f, q)
    return op


def simplex_coefficient(p: MapPair, x: Simplex) -> int:
    """Diagonal entry of ``f_{A,q}`` at ``x``: -1, 0 or +1."""
    if x not in p.subcomplex:
        return 0
    return map_coefficient(p.map, x)


def map_coefficient(f: SimplicialMap, x: Simplex) -> int:
    """The coefficient for any subcomplex that contains ``x``."""
    sign, y = f.oriented_image(x)
    if not sign:
        return 0
    dom = f.domain
    if dom.carrier(x) != y:
        return 0
    return sign * dom.orientation_signs()[x]


def chain_trace(p: MapPair, q: int) -> Fraction:
    return lefschetz_chain_operator(p, q).trace()


def chain_traces(p: MapPair) -> list[Fraction]:
    return [chain_trace(p, q) for q in range(p.map.refined.dimension + 1)]


def chain_lefschetz(p: MapPair) -> Fraction:
    return sum(((-1) ** q * t for q, t in enumerate(chain_traces(p))), Fraction(0))
