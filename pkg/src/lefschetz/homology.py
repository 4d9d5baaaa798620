"""Rational simplicial homology and the homological Lefschetz number.

The trace formula needs a chain map.  ``s o f`` is one on all of ``C(X')``,
but compressing it to an arbitrary subcomplex ``A`` generally is not.  We
therefore pass to the invariant core of ``A`` (its largest subcomplex
carried into itself by ``s o f``), take homology traces there, and account
for the cells of ``A`` outside the core through the relative cellular
chains of the pair; those cells form no chain complex of their own.  For
``A = X'``, and for every ``A`` under the identity, the core is ``A`` itself
and the value is a pure homology trace.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .chains import Chain, ChainOperator, boundary_chain
from .complex import Complex, Simplex, facets
from .errors import ConsistencyError
from .linalg import independent_columns, nullspace, solve_in_basis
from .maps import MapPair, SimplicialMap, map_coefficient, self_chain_map


@dataclass(frozen=True, eq=False)
class HomologyBasis:
    """Per-dimension cycle generators of ``H_q(C; Q)`` plus reduction data.

    ``boundaries[q]`` are independent integer vectors spanning ``B_q`` and
    ``generators[q]`` complete them to a basis of ``Z_q``, both in the
    coordinates of ``bases[q]`` (canonical simplex order).
    """

    complex: Complex
    bases: list[list[Simplex]]
    boundaries: list[list[list[int]]]
    generators: list[list[list[int]]]
    _index: list[dict[Simplex, int]] = field(repr=False)

    @property
    def betti(self) -> list[int]:
        return [len(g) for g in self.generators]

    def cycles(self, q: int) -> list[Chain]:
        return [self.to_chain(q, v) for v in self.generators[q]]

    def to_chain(self, q: int, vec) -> Chain:
        return Chain(q, dict(zip(self.bases[q], vec)))

    def to_vector(self, q: int, chain: Chain) -> list:
        v = [0] * len(self.bases[q])
        idx = self._index[q]
        for s, c in chain.coeffs.items():
            try:
                v[idx[s]] = c
            except KeyError:
                raise ConsistencyError(f"chain leaves the complex at {list(s)}") from None
        return v

    def is_cycle(self, chain: Chain) -> bool:
        out: dict[Simplex, Fraction] = {}
        for s, c in chain.coeffs.items():
            if len(s) > 1:
                for f, e in boundary_chain(s).items():
                    out[f] = out.get(f, 0) + c * e
        return not any(out.values())

    def express(self, q: int, cycles: list[Chain]) -> list[list[Fraction]]:
        """Homology coordinates of each cycle in ``generators[q]``.

        Raises ``ConsistencyError`` for a non-cycle; never projects.
        """
        for z in cycles:
            if not self.is_cycle(z):
                raise ConsistencyError(f"not a cycle: {z}")
        if not self.generators[q]:
            return [[] for _ in cycles]
        frame = self.boundaries[q] + self.generators[q]
        targets = []
        for z in cycles:
            vec = self.to_vector(q, z)
            dens = [c.denominator for c in vec if isinstance(c, Fraction)]
            if dens:
                m = lcm(*dens)
                vec = [int(c * m) for c in vec]
                targets.append((vec, m))
            else:
                targets.append((vec, 1))
        coords = solve_in_basis(frame, [t for t, _ in targets], len(self.bases[q]))
        if coords is None:
            raise ConsistencyError("cycle outside the span of boundaries and generators")
        nb = len(self.boundaries[q])
        return [[c / m for c in row[nb:]] for row, (_, m) in zip(coords, targets)]


def _boundary_rows(c: Complex, q: int, bases) -> list[list[int]]:
    """Rows of d_q indexed by (q-1)-simplices, columns by q-simplices."""
    rows_idx = {s: i for i, s in enumerate(bases[q - 1])}
    rows = [[0] * len(bases[q]) for _ in bases[q - 1]]
    for j, x in enumerate(bases[q]):
        for f, e in boundary_chain(x).items():
            rows[rows_idx[f]][j] = e
    return rows


@lru_cache(maxsize=4096)
def homology_basis(c: Complex) -> HomologyBasis:
    top = c.dimension
    bases = [c.simplices_of_dim(q) for q in range(top + 1)]
    kernels = []
    for q in range(top + 1):
        n = len(bases[q])
        if q == 0:
            kernels.append([[int(i == j) for i in range(n)] for j in range(n)])
        else:
            kernels.append(nullspace(_boundary_rows(c, q, bases), n))
    boundaries, generators = [], []
    for q in range(top + 1):
        n = len(bases[q])
        if q < top:
            rows = _boundary_rows(c, q + 1, bases)
            cols = [[rows[i][j] for i in range(n)] for j in range(len(bases[q + 1]))]
            b = [cols[j] for j in independent_columns(cols, n)]
        else:
            b = []
        picked = independent_columns(b + kernels[q], n)
        boundaries.append(b)
        generators.append([kernels[q][j - len(b)] for j in picked if j >= len(b)])
    index = [{s: i for i, s in enumerate(bq)} for bq in bases]
    return HomologyBasis(c, bases, boundaries, generators, index)


def betti_numbers(c: Complex) -> list[int]:
    return homology_basis(c).betti


def invariant_core(f: SimplicialMap, a: Complex) -> Complex:
    """Largest subcomplex ``K`` of ``a`` with ``s o f`` carrying ``C(K)`` into itself."""
    images: dict[Simplex, set[Simplex]] = {}
    for q in range(a.dimension + 1):
        op = self_chain_map(f, q)
        for x in a.simplices_of_dim(q):
            images[x] = set(op.image(x))
    alive = set(a.simplices)
    preimages: dict[Simplex, list[Simplex]] = {}
    for x, img in images.items():
        for y in img:
            preimages.setdefault(y, []).append(x)
    cofaces: dict[Simplex, list[Simplex]] = {}
    for x in alive:
        for y in facets(x):
            cofaces.setdefault(y, []).append(x)
    stack = [x for x in alive if not images[x] <= alive]
    while stack:
        x = stack.pop()
        if x not in alive:
            continue
        alive.discard(x)
        stack.extend(c for c in cofaces.get(x, ()) if c in alive)
        # anything whose image touched x is no longer invariant
        stack.extend(y for y in preimages.get(x, ()) if y in alive)
    return Complex(alive, check=False)


@dataclass(frozen=True)
class InducedHomologyMap:
    core: Complex
    basis: HomologyBasis
    matrices: list[list[list[Fraction]]]

    @property
    def traces(self) -> list[Fraction]:
        return [sum((m[i][i] for i in range(len(m))), Fraction(0)) for m in self.matrices]


def induced_on(basis: HomologyBasis, ops: list[ChainOperator]) -> list[list[list[Fraction]]]:
    """Matrix of each chain map ``ops[q]`` on ``H_q`` in the generator basis (columns = images)."""
    out = []
    for q, op in enumerate(ops):
        imgs = [op(z) for z in basis.cycles(q)]
        coords = basis.express(q, imgs)
        k = len(coords)
        out.append([[coords[j][i] for j in range(k)] for i in range(k)])
    return out


def _compressed(f: SimplicialMap, k: Complex, q: int) -> ChainOperator:
    op = self_chain_map(f, q)
    cols = {x: op.image(x) for x in k.simplices_of_dim(q)}
    return ChainOperator(q, k, k, cols)


def induced_homology_map(p: MapPair) -> InducedHomologyMap:
    f = p.map
    core = invariant_core(f, p.subcomplex)
    basis = homology_basis(core)
    ops = [_compressed(f, core, q) for q in range(core.dimension + 1)]
    return InducedHomologyMap(core, basis, induced_on(basis, ops))


def cellular_residual(p: MapPair, core: Complex) -> Fraction:
    """Alternating trace on the relative cellular chains of ``(A, core)``."""
    total = 0
    for x in p.subcomplex.simplices - core.simplices:
        total += (-1) ** (len(x) - 1) * map_coefficient(p.map, x)
    return Fraction(total)


def homological_traces(p: MapPair) -> list[Fraction]:
    return induced_homology_map(p).traces


def homological_lefschetz(p: MapPair) -> Fraction:
    h = induced_homology_map(p)
    value = sum(((-1) ** q * t for q, t in enumerate(h.traces)), Fraction(0))
    if h.core != p.subcomplex:
        value += cellular_residual(p, h.core)
    return value
