"""The four Lefschetz evaluators, the Hopf classifier, and the agreement report."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .complex import Complex, Simplex, boundary_complex, faces
from .errors import PreconditionError
from .fixedpoints import FixedPointCertificate, fixed_point_certificates
from .homology import cellular_residual, homological_lefschetz, induced_homology_map
from .maps import MapPair, SimplicialMap, chain_lefschetz, chain_traces, map_coefficient, simplex_coefficient
from .valuation import SimplexAssignment, extend_valuation


class _SimplexAxiom:
    """Literal recursion ``L(f, x) = (-1)^dim x c(f, x) + L(f, bd x)``, memoized per simplex."""

    def __init__(self, f: SimplicialMap):
        self.f = f
        self.values: dict[Simplex, Fraction] = {}
        self.weights: dict[Simplex, Fraction] = {}

    def value(self, x: Simplex) -> Fraction:
        v = self.values.get(x)
        if v is None:
            sign = -1 if len(x) % 2 == 0 else 1
            v = sign * map_coefficient(self.f, x) + self.extend(boundary_complex(x))
            self.values[x] = v
        return v

    def weight(self, rho: Simplex) -> Fraction:
        w = self.weights.get(rho)
        if w is None:
            n = len(rho)
            w = sum(((-1) ** (n - len(t)) * self.value(t) for t in faces(rho)), Fraction(0))
            self.weights[rho] = w
        return w

    def extend(self, a: Complex) -> Fraction:
        # empty complex gives 0, which terminates the recursion at vertices
        return sum((self.weight(rho) for rho in a.simplices), Fraction(0))


def simplex_axiom_value(p: MapPair, x: Simplex) -> Fraction:
    return _axiom(p.map).value(x)


def _axiom(f: SimplicialMap) -> _SimplexAxiom:
    ax = getattr(f, "_axiom", None)
    if ax is None:
        ax = f._axiom = _SimplexAxiom(f)
    return ax


def simplex_assignment(f: SimplicialMap) -> SimplexAssignment:
    """Simplex-axiom values on every closed simplex of X'."""
    sa = getattr(f, "_assignment", None)
    if sa is None:
        ax = _axiom(f)
        sa = f._assignment = SimplexAssignment.from_function(f.refined, ax.value)
    return sa


def lefschetz_axiomatic(p: MapPair) -> Fraction:
    return Fraction(extend_valuation(simplex_assignment(p.map), p.subcomplex))


def lefschetz_open_sum(p: MapPair) -> Fraction:
    total = 0
    for x in p.subcomplex.simplices:
        total += (-1) ** (len(x) - 1) * simplex_coefficient(p, x)
    return Fraction(total)


def is_hopf_simplicial(f: SimplicialMap) -> bool:
    return _hopf_offender(f) is None


def _hopf_offender(f: SimplicialMap) -> FixedPointCertificate | None:
    maximal = set(f.refined.maximal())
    for c in fixed_point_certificates(f):
        if c.simplex not in maximal:
            return c
    return None


def hopf_axiom_value(f: SimplicialMap, x: Simplex) -> Fraction:
    """0 off maximal simplices, ``(-1)^dim x c(f, x)`` on them; Hopf maps only."""
    bad = _hopf_offender(f)
    if bad is not None:
        raise PreconditionError(
            f"map is not Hopf simplicial: fixed point in non-maximal simplex {list(bad.simplex)} "
            f"at {dict(bad.witness.weights)}")
    if x not in f.refined:
        raise PreconditionError(f"{list(x)} is not a simplex of the domain")
    if x not in set(f.refined.maximal()):
        return Fraction(0)
    return Fraction((-1) ** (len(x) - 1) * map_coefficient(f, x))


METHODS = ("axiomatic", "open-sum", "chain", "homological")

EVALUATORS = {
    "axiomatic": lefschetz_axiomatic,
    "open-sum": lefschetz_open_sum,
    "chain": chain_lefschetz,
    "homological": homological_lefschetz,
}


@dataclass
class LefschetzReport:
    pair: MapPair = field(repr=False)
    value_axiomatic: Fraction
    value_open_sum: Fraction
    value_chain: Fraction
    value_homological: Fraction
    chain_traces: list[Fraction]
    homology_traces: list[Fraction]
    betti: list[int]
    core_is_whole: bool
    cellular_residual: Fraction

    @property
    def values(self) -> dict[str, Fraction]:
        return {
            "axiomatic": self.value_axiomatic,
            "open-sum": self.value_open_sum,
            "chain": self.value_chain,
            "homological": self.value_homological,
        }

    @property
    def agree(self) -> bool:
        return len(set(self.values.values())) == 1

    @property
    def integral(self) -> bool:
        return all(v.denominator == 1 for v in self.values.values())


def lefschetz_report(p: MapPair) -> LefschetzReport:
    h = induced_homology_map(p)
    residual = cellular_residual(p, h.core) if h.core != p.subcomplex else Fraction(0)
    hom = sum(((-1) ** q * t for q, t in enumerate(h.traces)), Fraction(0)) + residual
    ct = chain_traces(p)
    return LefschetzReport(
        pair=p,
        value_axiomatic=lefschetz_axiomatic(p),
        value_open_sum=lefschetz_open_sum(p),
        value_chain=sum(((-1) ** q * t for q, t in enumerate(ct)), Fraction(0)),
        value_homological=hom,
        chain_traces=ct,
        homology_traces=h.traces,
        betti=h.basis.betti,
        core_is_whole=h.core == p.subcomplex,
        cellular_residual=residual,
    )
