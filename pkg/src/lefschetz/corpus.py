"""Named complexes, subdivisions and maps used by the verify command and the tests."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from .complex import Complex, build_complex
from .maps import SimplicialMap
from .subdivision import BarycentricPoint, SubdividedComplex, barycentric_subdivide, identity_subdivision


def circle(n: int = 3) -> Complex:
    return build_complex([[i, (i + 1) % n] for i in range(n)])


def closed_triangle() -> Complex:
    return build_complex([[0, 1, 2]])


def simplex_boundary(d: int = 3) -> Complex:
    """Boundary of the d-simplex on vertices 0..d (a (d-1)-sphere)."""
    return build_complex(list(combinations(range(d + 1), d)))


def wrap_subdivision(m: int) -> SubdividedComplex:
    """The 3m-gon as a subdivision of the 3-circle.

    Position ``i`` of the 3m-gon is base vertex ``i // m`` when ``m`` divides
    ``i``; the others are labelled 3, 4, ... in order of position.
    """
    base = circle(3)
    n = 3 * m
    labels, locs = [], {}
    nxt = 3
    for i in range(n):
        k, r = divmod(i, m)
        if r == 0:
            labels.append(k)
            locs[k] = BarycentricPoint.vertex(k)
        else:
            t = Fraction(r, m)
            labels.append(nxt)
            locs[nxt] = BarycentricPoint.from_mapping({k: 1 - t, (k + 1) % 3: t})
            nxt += 1
    refined = build_complex([[labels[i], labels[(i + 1) % n]] for i in range(n)])
    return SubdividedComplex(base, refined, locs)


def wrap_map(d: int, shift: int = 0) -> SimplicialMap:
    """Degree-``d`` map from the 3|d|-gon onto the 3-circle (constant for ``d = 0``)."""
    m = max(1, abs(d))
    dom = wrap_subdivision(m)
    n = 3 * m
    labels = [None] * n
    nxt = 3
    for i in range(n):
        k, r = divmod(i, m)
        if r == 0:
            labels[i] = k
        else:
            labels[i] = nxt
            nxt += 1
    sgn = (d > 0) - (d < 0)
    images = {labels[i]: (sgn * i + shift) % 3 for i in range(n)}
    return SimplicialMap(dom, images)


def hexagon_subdivision() -> SubdividedComplex:
    """0-a-1-b-2-c with a=3, b=4, c=5 at the edge midpoints of the 3-circle."""
    return wrap_subdivision(2)


def hexagon_doubling() -> SimplicialMap:
    return SimplicialMap(hexagon_subdivision(), {0: 0, 3: 1, 1: 2, 4: 0, 2: 1, 5: 2})


def identity_map(x: Complex) -> SimplicialMap:
    return SimplicialMap.on(x, {v: v for v in x.vertices})


def rotation(n: int = 3) -> SimplicialMap:
    return SimplicialMap.on(circle(n), {i: (i + 1) % n for i in range(n)})


def reflection(n: int = 3) -> SimplicialMap:
    """``i -> -i mod n``; fixes vertex 0."""
    return SimplicialMap.on(circle(n), {i: (-i) % n for i in range(n)})


def square_reflection() -> SimplicialMap:
    """``p_i -> p_{1-i mod 4}`` on the 4-gon; fixed points at two edge midpoints."""
    return SimplicialMap.on(circle(4), {i: (1 - i) % 4 for i in range(4)})


def constant_map(x: Complex, v: int = 0) -> SimplicialMap:
    return SimplicialMap.on(x, {u: v for u in x.vertices})


def random_complex(rng: random.Random, max_vertices: int = 10, max_dim: int = 2) -> Complex:
    n = rng.randint(1, max_vertices)
    verts = list(range(n))
    tops = [[v] for v in verts]
    for _ in range(rng.randint(1, 2 * n)):
        k = rng.randint(2, min(max_dim + 1, n)) if n > 1 else 1
        tops.append(rng.sample(verts, k))
    return build_complex(tops)


def random_simplicial_map(
    rng: random.Random, domain: SubdividedComplex, tries: int = 50
) -> SimplicialMap:
    """A uniformly-seeded backtracking search for a vertex map carrying simplices to simplices."""
    base, ref = domain.base, domain.refined
    targets = base.vertices
    order = ref.vertices[:]
    rng.shuffle(order)
    maximal = ref.maximal()
    touching = {v: [m for m in maximal if v in m] for v in order}
    images: dict[int, int] = {}
    budget = [tries * len(order) + 100]

    def ok(v: int) -> bool:
        for m in touching[v]:
            img = {images[u] for u in m if u in images}
            if tuple(sorted(img)) not in base:
                return False
        return True

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        budget[0] -= 1
        if budget[0] < 0:
            return False
        v = order[i]
        cands = targets[:]
        rng.shuffle(cands)
        for w in cands:
            images[v] = w
            if ok(v) and rec(i + 1):
                return True
        del images[v]
        return False

    if not rec(0):
        # constant maps are always simplicial
        images = {v: targets[0] for v in ref.vertices}
    return SimplicialMap(domain, images)


def random_corpus(count: int = 100, seed: int = 0, max_vertices: int = 10, max_dim: int = 2):
    """``count`` random maps; every fourth one is defined on a barycentric subdivision."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        x = random_complex(rng, max_vertices, max_dim)
        dom = identity_subdivision(x)
        if i % 4 == 3 and len(x) <= 12:
            dom = barycentric_subdivide(dom)
        out.append((f"random-{i}", random_simplicial_map(rng, dom)))
    return out


def named_corpus() -> list[tuple[str, SimplicialMap]]:
    c3, c4 = circle(3), circle(4)
    return [
        ("identity-circle3", identity_map(c3)),
        ("identity-circle4", identity_map(c4)),
        ("rotation-circle3", rotation(3)),
        ("rotation-circle4", rotation(4)),
        ("reflection-circle3", reflection(3)),
        ("reflection-circle4", reflection(4)),
        ("square-reflection", square_reflection()),
        ("constant-circle3", constant_map(c3, 0)),
        ("constant-circle4", constant_map(c4, 2)),
        ("hexagon-doubling", hexagon_doubling()),
        ("identity-triangle", identity_map(closed_triangle())),
        ("identity-sphere2", identity_map(simplex_boundary(3))),
    ] + [(f"wrap-degree{d}", wrap_map(d)) for d in (-2, -1, 0, 1, 2, 3)]


def full_corpus(random_count: int = 100, seed: int = 0) -> list[tuple[str, SimplicialMap]]:
    return named_corpus() + random_corpus(random_count, seed)
