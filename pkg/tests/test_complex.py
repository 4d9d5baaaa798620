import random

import pytest
from hypothesis import given, settings, strategies as st

from lefschetz import (
    Complex,
    boundary_complex,
    build_complex,
    closed_simplex,
    enumerate_subcomplexes,
    euler_characteristic,
    lattice_intersection,
    lattice_union,
    open_simplex_decomposition,
)
from lefschetz.complex import make_simplex, random_subcomplex
from lefschetz.corpus import circle, random_complex
from lefschetz.errors import CombinatorialBlowup, DomainError, MalformedInput

from oracles import brute_subcomplexes


def test_build_closes_under_faces(c3, triangle):
    assert c3.counts() == [3, 3]
    assert triangle.counts() == [3, 3, 1]
    assert build_complex([]) == Complex()
    assert Complex().dimension == -1


def test_make_simplex_sorts_and_rejects_repeats():
    assert make_simplex([2, 0, 1]) == (0, 1, 2)
    with pytest.raises(MalformedInput):
        make_simplex([1, 1])
    with pytest.raises(MalformedInput):
        make_simplex([])


def test_complex_rejects_non_closed_sets():
    with pytest.raises(MalformedInput):
        Complex([(0, 1)])


def test_closed_and_boundary_simplices():
    assert closed_simplex((0, 1, 2)).simplices == {(0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2)}
    assert boundary_complex((0, 1, 2)).simplices == {(0,), (1,), (2,), (0, 1), (0, 2), (1, 2)}
    assert boundary_complex((5,)) == Complex()
    assert boundary_complex((1, 2)).simplices == {(1,), (2,)}


def test_lattice_operations():
    a, b = build_complex([[0, 1]]), build_complex([[1, 2]])
    u, i = lattice_union(a, b), lattice_intersection(a, b)
    assert u.counts() == [3, 2]
    assert i.simplices == {(1,)}
    assert lattice_union(a, Complex()) == a
    assert lattice_intersection(a, Complex()) == Complex()
    assert a | a == a & a == a


def test_euler_characteristic(c3, triangle, sphere):
    assert euler_characteristic(c3) == 0
    assert euler_characteristic(triangle) == 1
    assert euler_characteristic(sphere) == 2
    assert euler_characteristic(Complex()) == 0


def test_open_simplices_partition(c3):
    edge = build_complex([[0, 1]])
    assert [o.simplex for o in open_simplex_decomposition(edge)] == [(0,), (1,), (0, 1)]
    assert open_simplex_decomposition(Complex()) == []
    assert len(open_simplex_decomposition(c3)) == 6


@pytest.mark.parametrize("k", [build_complex([[0, 1]]), build_complex([[0]]), Complex(), circle(3),
                               build_complex([[0, 1, 2]]), circle(4)])
def test_enumeration_matches_brute_force(k):
    ours = {c.simplices for c in enumerate_subcomplexes(k)}
    assert len(ours) == len(list(enumerate_subcomplexes(k)))
    assert ours == set(brute_subcomplexes(k.simplices))


def test_small_lattice_sizes():
    # the closed edge has five subcomplexes: empty, {0}, {1}, {0}+{1}, the edge
    assert len(list(enumerate_subcomplexes(build_complex([[0, 1]])))) == 5
    assert len(list(enumerate_subcomplexes(build_complex([[0]])))) == 2
    assert len(list(enumerate_subcomplexes(Complex()))) == 1


def test_exhaustive_refuses_large(sphere):
    big = build_complex([[0, 1, 2, 3, 4]])
    with pytest.raises(CombinatorialBlowup):
        list(enumerate_subcomplexes(big))


def test_sampled_enumeration_is_distinct_and_valid(sphere):
    subs = list(enumerate_subcomplexes(sphere, 50, rng=random.Random(3)))
    assert len(subs) == len(set(subs)) == 50
    assert all(s.is_subcomplex_of(sphere) for s in subs)


def test_sampled_enumeration_exhausts_small_lattice():
    subs = list(enumerate_subcomplexes(build_complex([[0, 1]]), 100, rng=random.Random(0)))
    assert len(subs) == 5


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000))
def test_lattice_laws_and_chi_inclusion_exclusion(seed):
    rng = random.Random(seed)
    k = random_complex(rng, 7, 2)
    a, b = random_subcomplex(k, rng), random_subcomplex(k, rng)
    assert (a | b).is_subcomplex_of(k) and (a & b).is_subcomplex_of(a)
    assert a | (a & b) == a and a & (a | b) == a
    assert euler_characteristic(a | b) + euler_characteristic(a & b) == \
        euler_characteristic(a) + euler_characteristic(b)


def test_require_subcomplex_error():
    from lefschetz.complex import require_subcomplex
    with pytest.raises(DomainError):
        require_subcomplex(build_complex([[0, 9]]), circle(3))
