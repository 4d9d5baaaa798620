"""Chains with exact rational coefficients and sparse operators between chain groups.

Bases are keyed by simplex, never by index.  Coefficients are Python
``int`` or ``Fraction``; both are exact and mix freely.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

from .complex import Complex, Simplex, facets, require_subcomplex, simplex_key


def _clean(coeffs: Mapping[Simplex, Rational]) -> dict[Simplex, Rational]:
    return {s: c for s, c in coeffs.items() if c != 0}


class Chain:
    """A formal sum of oriented q-simplices."""

    __slots__ = ("dimension", "coeffs")

    def __init__(self, dimension: int, coeffs: Mapping[Simplex, Rational] | None = None):
        self.dimension = dimension
        self.coeffs = _clean(coeffs or {})

    @classmethod
    def of(cls, *terms: tuple[Rational, Simplex]) -> "Chain":
        out: dict[Simplex, Rational] = {}
        q = None
        for c, s in terms:
            q = len(s) - 1
            out[s] = out.get(s, 0) + c
        return cls(q if q is not None else 0, out)

    def __add__(self, other: "Chain") -> "Chain":
        out = dict(self.coeffs)
        for s, c in other.coeffs.items():
            out[s] = out.get(s, 0) + c
        return Chain(self.dimension, out)

    def __neg__(self) -> "Chain":
        return Chain(self.dimension, {s: -c for s, c in self.coeffs.items()})

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def __rmul__(self, k: Rational) -> "Chain":
        return Chain(self.dimension, {s: k * c for s, c in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Chain):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, s: Simplex) -> Rational:
        return self.coeffs.get(s, 0)

    def support(self) -> list[Simplex]:
        return sorted(self.coeffs, key=simplex_key)

    def __repr__(self) -> str:
        terms = " ".join(f"{'+' if c > 0 else '-'}{abs(c)}*{list(s)}" for s, c in sorted(
            self.coeffs.items(), key=lambda kv: simplex_key(kv[0])))
        return f"Chain[{self.dimension}]({terms or '0'})"


class ChainOperator:
    """A sparse linear map ``C_q(source) -> C_{q+shift}(target)``.

    ``columns[x]`` is the image of the basis simplex ``x`` as a coefficient
    dict; basis simplices with zero image are simply absent.
    """

    __slots__ = ("degree", "shift", "source", "target", "columns")

    def __init__(
        self,
        degree: int,
        source: Complex,
        target: Complex,
        columns: Mapping[Simplex, Mapping[Simplex, Rational]],
        shift: int = 0,
    ):
        self.degree = degree
        self.shift = shift
        self.source = source
        self.target = target
        cols = {}
        for x, col in columns.items():
            col = _clean(col)
            if col:
                cols[x] = col
        self.columns = cols

    def check_bases(self) -> None:
        """Every referenced simplex lies in the declared complexes, in the right dimension."""
        q, r = self.degree, self.degree + self.shift
        for x, col in self.columns.items():
            if x not in self.source or len(x) != q + 1:
                raise ValueError(f"source basis element {x} not a {q}-simplex of the source")
            for y in col:
                if y not in self.target or len(y) != r + 1:
                    raise ValueError(f"target basis element {y} not a {r}-simplex of the target")

    def __call__(self, chain: Chain) -> Chain:
        out: dict[Simplex, Rational] = {}
        for x, c in chain.coeffs.items():
            col = self.columns.get(x)
            if col:
                for y, d in col.items():
                    out[y] = out.get(y, 0) + c * d
        return Chain(self.degree + self.shift, out)

    def image(self, x: Simplex) -> dict[Simplex, Rational]:
        return self.columns.get(x, {})

    def __matmul__(self, other: "ChainOperator") -> "ChainOperator":
        """``self @ other`` applies ``other`` first."""
        cols = {}
        for x, col in other.columns.items():
            out: dict[Simplex, Rational] = {}
            for y, c in col.items():
                img = self.columns.get(y)
                if img:
                    for z, d in img.items():
                        out[z] = out.get(z, 0) + c * d
            cols[x] = out
        return ChainOperator(other.degree, other.source, self.target, cols, other.shift + self.shift)

    def __sub__(self, other: "ChainOperator") -> "ChainOperator":
        cols = {x: dict(col) for x, col in self.columns.items()}
        for x, col in other.columns.items():
            tgt = cols.setdefault(x, {})
            for y, c in col.items():
                tgt[y] = tgt.get(y, 0) - c
        return ChainOperator(self.degree, self.source, self.target, cols, self.shift)

    def is_zero(self) -> bool:
        return not self.columns

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChainOperator):
            return NotImplemented
        return self.degree == other.degree and self.shift == other.shift and self.columns == other.columns

    def trace(self) -> Fraction:
        if self.shift != 0:
            raise ValueError("trace of an operator between different degrees")
        return Fraction(sum(col.get(x, 0) for x, col in self.columns.items()))

    def diagonal(self, x: Simplex) -> Rational:
        return self.columns.get(x, {}).get(x, 0)

    def matrix(self, rows: Iterable[Simplex] | None = None, cols: Iterable[Simplex] | None = None):
        """Dense row-major matrix in the given (default canonical) bases."""
        q, r = self.degree, self.degree + self.shift
        rows = list(rows) if rows is not None else self.target.simplices_of_dim(r)
        cols = list(cols) if cols is not None else self.source.simplices_of_dim(q)
        index = {y: i for i, y in enumerate(rows)}
        m = [[0] * len(cols) for _ in rows]
        for j, x in enumerate(cols):
            for y, c in self.columns.get(x, {}).items():
                m[index[y]][j] = c
        return m

    def __repr__(self) -> str:
        return f"ChainOperator(degree={self.degree}, shift={self.shift}, nnz={sum(map(len, self.columns.values()))})"


def identity_operator(c: Complex, q: int) -> ChainOperator:
    return ChainOperator(q, c, c, {x: {x: 1} for x in c.simplices_of_dim(q)})


def zero_operator(source: Complex, target: Complex, q: int, shift: int = 0) -> ChainOperator:
    return ChainOperator(q, source, target, {}, shift)


def boundary_chain(x: Simplex) -> dict[Simplex, int]:
    """Alternating face sum of an ascending-oriented simplex."""
    return {f: (-1) ** i for i, f in enumerate(facets(x))}


def boundary_operator(c: Complex, q: int) -> ChainOperator:
    """``d_q: C_q -> C_{q-1}``; zero for ``q == 0``."""
    if q <= 0:
        return ChainOperator(q, c, c, {}, -1)
    return ChainOperator(q, c, c, {x: boundary_chain(x) for x in c.simplices_of_dim(q)}, -1)


def restriction_operator(a: Complex, ambient: Complex, q: int) -> ChainOperator:
    """Projection of ``C_q(ambient)`` onto the span of the q-simplices of ``a``."""
    require_subcomplex(a, ambient)
    return ChainOperator(q, ambient, ambient, {x: {x: 1} for x in a.simplices_of_dim(q)})
