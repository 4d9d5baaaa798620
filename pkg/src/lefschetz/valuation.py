"""Valuations on the lattice of subcomplexes, built from values on closed simplices."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Callable, Mapping

from .complex import Complex, Simplex, enumerate_subcomplexes, faces, random_subcomplex, require_subcomplex
from .errors import DomainError


@dataclass(frozen=True, eq=False)
class SimplexAssignment:
    """A value for every closed simplex of ``ambient``."""

    ambient: Complex
    values: Mapping[Simplex, Rational]
    _weights: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        missing = [s for s in self.ambient if s not in self.values]
        if missing:
            raise DomainError(f"assignment has no value for simplex {list(missing[0])}")

    @classmethod
    def constant(cls, ambient: Complex, value: Rational = 1) -> "SimplexAssignment":
        return cls(ambient, {s: value for s in ambient})

    @classmethod
    def from_function(cls, ambient: Complex, fn: Callable[[Simplex], Rational]) -> "SimplexAssignment":
        return cls(ambient, {s: fn(s) for s in ambient})

    def weights(self) -> dict[Simplex, Rational]:
        if not self._weights:
            self._weights.update(mobius_weights(self))
        return self._weights


def mobius_weights(s: SimplexAssignment) -> dict[Simplex, Rational]:
    """Open-cell weights: inclusion-exclusion of closed values over each face lattice."""
    out = {}
    for rho in s.ambient:
        n = len(rho)
        out[rho] = sum((-1) ** (n - len(tau)) * s.values[tau] for tau in faces(rho))
    return out


def extend_valuation(s: SimplexAssignment, a: Complex) -> Rational:
    require_subcomplex(a, s.ambient)
    w = s.weights()
    return sum((w[rho] for rho in a.simplices), Fraction(0))


@dataclass
class ValuationVerdict:
    ok: bool
    pairs_checked: int
    counterexample: tuple[Complex, Complex] | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_valuation(
    e: Callable[[Complex], Rational],
    ambient: Complex,
    mode: str = "exhaustive",
    samples: int = 1000,
    seed: int = 0,
    max_simplices: int = 20,
) -> ValuationVerdict:
    """Check ``E(empty) = 0`` and inclusion-exclusion over pairs of subcomplexes.

    ``mode="exhaustive"`` checks every unordered pair; ``"sampled"`` checks
    ``samples`` random pairs drawn with a seeded generator.
    """
    cache: dict[Complex, Rational] = {}

    def ev(a: Complex) -> Rational:
        v = cache.get(a)
        if v is None:
            v = cache[a] = e(a)
        return v

    empty = Complex()
    if ev(empty) != 0:
        return ValuationVerdict(False, 0, (empty, empty), f"E(empty) = {ev(empty)}")

    def check(a: Complex, b: Complex) -> str | None:
        lhs = ev(a | b) + ev(a & b)
        rhs = ev(a) + ev(b)
        if lhs != rhs:
            return f"E(A|B) + E(A&B) = {lhs} but E(A) + E(B) = {rhs}"
        return None

    n = 0
    if mode == "exhaustive":
        subs = list(enumerate_subcomplexes(ambient, max_simplices=max_simplices))
        for i, a in enumerate(subs):
            for b in subs[i:]:
                n += 1
                msg = check(a, b)
                if msg:
                    return ValuationVerdict(False, n, (a, b), msg)
    elif mode == "sampled":
        rng = random.Random(seed)
        for _ in range(samples):
            a = random_subcomplex(ambient, rng)
            b = random_subcomplex(ambient, rng)
            n += 1
            msg = check(a, b)
            if msg:
                return ValuationVerdict(False, n, (a, b), msg)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return ValuationVerdict(True, n)
