"""Finite abstract simplicial complexes and their lattice of subcomplexes.

A simplex is a strictly increasing tuple of non-negative integer vertex
labels; ascending order is the positive orientation everywhere in the
package.  The empty simplex is never a member of a complex.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import CombinatorialBlowup, DomainError, MalformedInput

Simplex = tuple[int, ...]

EXHAUSTIVE_LIMIT = 20


def simplex_key(s: Simplex) -> tuple[int, Simplex]:
    """Canonical order: dimension first, then lexicographic."""
    return (len(s), s)


def make_simplex(vertices: Iterable[int]) -> Simplex:
    vs = list(vertices)
    if not vs:
        raise MalformedInput("a simplex needs at least one vertex")
    for v in vs:
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise MalformedInput(f"vertex labels must be non-negative integers, got {v!r}")
    s = tuple(sorted(vs))
    if len(set(s)) != len(s):
        raise MalformedInput(f"repeated vertex in simplex {vs}")
    return s


def dim(s: Simplex) -> int:
    return len(s) - 1


def faces(s: Simplex) -> Iterator[Simplex]:
    """All non-empty faces of ``s``, including ``s`` itself."""
    for k in range(1, len(s) + 1):
        yield from combinations(s, k)


def facets(s: Simplex) -> list[Simplex]:
    """Codimension-one faces; empty for a vertex."""
    if len(s) == 1:
        return []
    return [s[:i] + s[i + 1:] for i in range(len(s))]


class Complex:
    """An immutable face-closed set of simplices."""

    __slots__ = ("_simplices", "_sorted", "_hash")

    def __init__(self, simplices: Iterable[Simplex] = (), *, check: bool = True):
        sims = frozenset(simplices)
        if check:
            for s in sims:
                for f in facets(s):
                    if f not in sims:
                        raise MalformedInput(f"not face-closed: {f} missing below {s}")
        self._simplices = sims
        self._sorted: tuple[Simplex, ...] | None = None
        self._hash: int | None = None

    @classmethod
    def closure_of(cls, simplices: Iterable[Simplex]) -> "Complex":
        out: set[Simplex] = set()
        for s in simplices:
            if s not in out:
                out.update(faces(s))
        return cls(out, check=False)

    @property
    def simplices(self) -> frozenset[Simplex]:
        return self._simplices

    def sorted(self) -> tuple[Simplex, ...]:
        if self._sorted is None:
            self._sorted = tuple(sorted(self._simplices, key=simplex_key))
        return self._sorted

    def __iter__(self) -> Iterator[Simplex]:
        return iter(self.sorted())

    def __len__(self) -> int:
        return len(self._simplices)

    def __contains__(self, s) -> bool:
        return s in self._simplices

    def __eq__(self, other) -> bool:
        if not isinstance(other, Complex):
            return NotImplemented
        return self._simplices == other._simplices

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._simplices)
        return self._hash

    def __le__(self, other: "Complex") -> bool:
        return self._simplices <= other._simplices

    def __or__(self, other: "Complex") -> "Complex":
        return Complex(self._simplices | other._simplices, check=False)

    def __and__(self, other: "Complex") -> "Complex":
        return Complex(self._simplices & other._simplices, check=False)

    def __repr__(self) -> str:
        return f"Complex({[list(s) for s in self.maximal()]})"

    @property
    def dimension(self) -> int:
        """-1 for the empty complex."""
        return max((len(s) for s in self._simplices), default=0) - 1

    @property
    def vertices(self) -> list[int]:
        return sorted(s[0] for s in self._simplices if len(s) == 1)

    def simplices_of_dim(self, q: int) -> list[Simplex]:
        return [s for s in self.sorted() if len(s) == q + 1]

    def counts(self) -> list[int]:
        """Number of simplices in each dimension 0..dim."""
        c = [0] * (self.dimension + 1)
        for s in self._simplices:
            c[len(s) - 1] += 1
        return c

    def maximal(self) -> list[Simplex]:
        covered: set[Simplex] = set()
        for s in self._simplices:
            covered.update(facets(s))
        return [s for s in self.sorted() if s not in covered]

    def is_pure(self) -> bool:
        d = self.dimension
        return all(len(s) == d + 1 for s in self.maximal())

    def is_subcomplex_of(self, other: "Complex") -> bool:
        return self._simplices <= other._simplices


def build_complex(maximal: Iterable[Iterable[int]]) -> Complex:
    return Complex.closure_of(make_simplex(m) for m in maximal)


def closed_simplex(s: Simplex) -> Complex:
    return Complex(faces(s), check=False)


def boundary_complex(s: Simplex) -> Complex:
    """The closed simplex with its top cell removed."""
    return Complex((f for f in faces(s) if f != s), check=False)


def lattice_union(a: Complex, b: Complex) -> Complex:
    return a | b


def lattice_intersection(a: Complex, b: Complex) -> Complex:
    return a & b


def euler_characteristic(a: Complex) -> int:
    return sum(-1 if len(s) % 2 == 0 else 1 for s in a.simplices)


@dataclass(frozen=True, order=True)
class OpenSimplex:
    simplex: Simplex

    @property
    def dimension(self) -> int:
        return len(self.simplex) - 1

    def closure(self) -> Complex:
        return closed_simplex(self.simplex)


def open_simplex_decomposition(a: Complex) -> list[OpenSimplex]:
    return [OpenSimplex(s) for s in a]


def random_subcomplex(a: Complex, rng: random.Random, density: float | None = None) -> Complex:
    """Closure of a random subset of the simplices of ``a``.

    Each simplex is drawn independently with probability ``density``; when
    not given, the density itself is drawn uniformly so that small and large
    subcomplexes both show up.
    """
    p = rng.random() if density is None else density
    return Complex.closure_of(s for s in a.sorted() if rng.random() < p)


def _all_subcomplexes(a: Complex) -> Iterator[Complex]:
    order = a.sorted()
    chosen: set[Simplex] = set()

    def rec(i: int) -> Iterator[Complex]:
        if i == len(order):
            yield Complex(chosen, check=False)
            return
        s = order[i]
        yield from rec(i + 1)
        if all(f in chosen for f in facets(s)):
            chosen.add(s)
            yield from rec(i + 1)
            chosen.discard(s)

    yield from rec(0)


def enumerate_subcomplexes(
    a: Complex,
    limit: int | None = None,
    *,
    rng: random.Random | None = None,
    max_simplices: int = EXHAUSTIVE_LIMIT,
    max_attempts: int | None = None,
) -> Iterator[Complex]:
    """Yield distinct subcomplexes of ``a``.

    With ``limit=None`` every subcomplex is produced (refused above
    ``max_simplices`` simplices).  With a numeric limit, up to ``limit``
    distinct random closures are produced; generation gives up after
    ``max_attempts`` draws, so a small lattice simply yields all it has.
    """
    if limit is None:
        if len(a) > max_simplices:
            raise CombinatorialBlowup(
                f"{len(a)} simplices exceeds the exhaustive limit of {max_simplices}"
            )
        yield from _all_subcomplexes(a)
        return
    rng = rng or random.Random(0)
    attempts = max_attempts if max_attempts is not None else 20 * limit + 100
    seen: set[Complex] = set()
    for _ in range(attempts):
        if len(seen) >= limit:
            return
        c = random_subcomplex(a, rng)
        if c not in seen:
            seen.add(c)
            yield c


def require_subcomplex(a: Complex, ambient: Complex, what: str = "subcomplex") -> None:
    if not a.is_subcomplex_of(ambient):
        extra = sorted(a.simplices - ambient.simplices, key=simplex_key)[0]
        raise DomainError(f"{what} is not contained in the ambient complex: {list(extra)} missing")
