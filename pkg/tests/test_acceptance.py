"""Acceptance criteria; each test records one PASS/FAIL line.

Run ``pytest tests/test_acceptance.py`` (lines appear in the terminal summary)
or ``python tests/test_acceptance.py`` to print them directly.
"""

import functools
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

from lefschetz import (  # noqa: E402
    MapPair,
    SimplexAssignment,
    barycentric_subdivide,
    boundary_operator,
    chain_lefschetz,
    enumerate_subcomplexes,
    euler_characteristic,
    extend_valuation,
    fixed_point_certificates,
    homological_lefschetz,
    hopf_axiom_value,
    identity_subdivision,
    is_hopf_simplicial,
    lefschetz_report,
    simplex_axiom_value,
    subdivision_operator,
    verify_valuation,
)
from lefschetz.complex import Complex, random_subcomplex  # noqa: E402
from lefschetz.corpus import (  # noqa: E402
    circle,
    closed_triangle,
    constant_map,
    full_corpus,
    hexagon_doubling,
    hexagon_subdivision,
    identity_map,
    named_corpus,
    reflection,
    rotation,
    simplex_boundary,
    square_reflection,
    wrap_map,
)
from lefschetz.engine import EVALUATORS  # noqa: E402

from oracles import brute_subcomplexes, peel_valuation  # noqa: E402
from test_homology import _oracle_lefschetz  # noqa: E402

RESULTS: list[str] = []


def criterion(number, title, limit=None):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            t0 = time.perf_counter()
            ok, why = False, ""
            try:
                fn(*args, **kwargs)
                ok = limit is None or time.perf_counter() - t0 < limit
                why = "" if ok else f" over the {limit:g}s limit"
            except AssertionError as e:
                why = f" {str(e).splitlines()[0] if str(e) else 'assertion failed'}"
                raise
            finally:
                elapsed = time.perf_counter() - t0
                RESULTS.append(f"criterion {number} {'PASS' if ok else 'FAIL'}  {title}  ({elapsed:.2f}s){why}")
            assert ok, f"criterion {number} exceeded {limit}s: {elapsed:.2f}s"
        return run
    return wrap


@functools.lru_cache(maxsize=None)
def corpus():
    return tuple(full_corpus(100, seed=0))


@criterion(1, "Hadwiger: all-ones extension equals chi, exhaustive", limit=5)
def test_c1_hadwiger():
    for k in (closed_triangle(), simplex_boundary(3)):
        s = SimplexAssignment.constant(k)
        subs = list(enumerate_subcomplexes(k))
        assert len(subs) == len(brute_subcomplexes(k.simplices))
        for a in subs:
            assert extend_valuation(s, a) == euler_characteristic(a), a


@criterion(2, "identity map gives chi for all four evaluators")
def test_c2_identity_is_chi():
    for k in (circle(3), simplex_boundary(3)):
        f = identity_map(k)
        for a in enumerate_subcomplexes(k):
            for name, ev in EVALUATORS.items():
                assert ev(MapPair(f, a)) == euler_characteristic(a), (name, a)
    sd = barycentric_subdivide(identity_subdivision(simplex_boundary(3))).refined
    f = identity_map(sd)
    subs = list(enumerate_subcomplexes(sd, 500, rng=random.Random(0)))
    assert len(subs) >= 500
    for a in subs:
        for name, ev in EVALUATORS.items():
            assert ev(MapPair(f, a)) == euler_characteristic(a), (name, a)


@criterion(3, "Hopf trace: chain equals homological on the full corpus", limit=60)
def test_c3_hopf_trace():
    maps = corpus()
    names = {n for n, _ in maps}
    assert {"identity-circle3", "rotation-circle3", "reflection-circle3", "constant-circle3",
            "identity-circle4", "rotation-circle4", "reflection-circle4", "constant-circle4",
            "hexagon-doubling"} <= names
    randoms = [f for n, f in maps if n.startswith("random-")]
    assert len(randoms) >= 100
    assert all(len(f.refined.vertices) <= 10 and f.refined.dimension <= 2
               for n, f in maps if n.startswith("random-") and f.domain.is_identity())
    for name, f in maps:
        p = MapPair.whole(f)
        assert chain_lefschetz(p) == homological_lefschetz(p), name


@criterion(4, "degree regression: L = 1 - d")
def test_c4_degree():
    for d in (-2, -1, 0, 1, 2, 3):
        f = wrap_map(d)
        assert len(f.refined.simplices_of_dim(1)) == 3 * max(1, abs(d))
        p = MapPair.whole(f)
        for name, ev in EVALUATORS.items():
            assert ev(p) == 1 - d, (d, name)
        assert _oracle_lefschetz(f, f.refined) == 1 - d, d
    for f in (rotation(3), hexagon_doubling()):
        d = 1 if f.refined == circle(3) else 2
        assert all(ev(MapPair.whole(f)) == 1 - d for ev in EVALUATORS.values())


@criterion(5, "valuation law for every evaluator on every corpus map")
def test_c5_valuation():
    for name, f in corpus():
        for ev_name, ev in EVALUATORS.items():
            def e(a, ev=ev):
                return ev(MapPair(f, a))
            v = verify_valuation(e, f.refined, "sampled", samples=1000, seed=1)
            assert v.ok and v.pairs_checked >= 1000, (name, ev_name, v.detail)
            if len(f.refined) <= 12:
                v = verify_valuation(e, f.refined, "exhaustive")
                assert v.ok, (name, ev_name, v.detail)
    c3_maps = [f for _, f in corpus() if f.refined == circle(3)]
    assert len(c3_maps) >= 4
    n_pairs = len(list(enumerate_subcomplexes(circle(3))))
    for f in c3_maps:
        for ev in EVALUATORS.values():
            v = verify_valuation(lambda a, ev=ev: ev(MapPair(f, a)), circle(3), "exhaustive")
            assert v.ok and v.pairs_checked == n_pairs * (n_pairs + 1) // 2


@criterion(6, "four-way agreement on the corpus")
def test_c6_agreement():
    rng = random.Random(6)
    for name, f in corpus():
        r = lefschetz_report(MapPair.whole(f))
        assert r.agree and r.integral, (name, r.values)
        for _ in range(3):
            r = lefschetz_report(MapPair(f, random_subcomplex(f.refined, rng)))
            assert r.agree, (name, r.values)


@criterion(7, "Hopf classification and Hopf axiom")
def test_c7_hopf():
    sq = square_reflection()
    assert is_hopf_simplicial(sq)
    certs = fixed_point_certificates(sq)
    assert len(certs) == 2 and all(len(c.simplex) == 2 and c.fixed_set_dimension == 0 for c in certs)
    assert all(c.verify(sq) for c in certs)
    p = MapPair.whole(sq)
    for x in sq.refined:
        assert hopf_axiom_value(sq, x) == simplex_axiom_value(p, x), x
    assert set(lefschetz_report(p).values.values()) == {2}
    t = reflection(3)
    assert not is_hopf_simplicial(t)
    assert any(c.simplex == (0,) for c in fixed_point_certificates(t))


@criterion(8, "boundary squared is zero and subdivision commutes with boundary", limit=30)
def test_c8_chain_identities():
    sphere = simplex_boundary(3)
    sd1 = barycentric_subdivide(identity_subdivision(sphere))
    sd2 = barycentric_subdivide(sd1)
    subs = [identity_subdivision(k) for k in (circle(3), circle(4), closed_triangle(), sphere)]
    subs += [hexagon_subdivision(), sd1, sd2]
    for k in subs:
        for c in (k.base, k.refined):
            for q in range(2, c.dimension + 1):
                assert (boundary_operator(c, q - 1) @ boundary_operator(c, q)).is_zero()
        for q in range(1, k.base.dimension + 1):
            assert boundary_operator(k.refined, q) @ subdivision_operator(k, q) == \
                subdivision_operator(k, q - 1) @ boundary_operator(k.base, q)


@criterion(9, "Moebius extension matches the peel-one-simplex recursion")
def test_c9_uniqueness():
    rng = random.Random(9)
    for k in (circle(3), closed_triangle()):
        subs = brute_subcomplexes(k.simplices)
        for _ in range(20):
            vals = {x: Fraction(rng.randint(-20, 20), rng.randint(1, 12)) for x in k}
            mu = peel_valuation(vals)
            s = SimplexAssignment(k, vals)
            for a in subs:
                assert extend_valuation(s, Complex(a)) == mu(a)


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_c")]
    failed = 0
    for t in tests:
        try:
            t()
        except AssertionError:
            failed += 1
    print("\n".join(RESULTS))
    sys.exit(1 if failed else 0)
