"""Property suites run by ``lefschetz verify``; each returns named check results."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .chains import boundary_operator
from .complex import Complex, closed_simplex, euler_characteristic
from .engine import EVALUATORS, hopf_axiom_value, is_hopf_simplicial, lefschetz_report, simplex_axiom_value
from .fixedpoints import fixed_point_certificates
from .homology import homological_lefschetz
from .maps import MapPair, SimplicialMap, chain_lefschetz, induced_chain_map, map_coefficient
from .subdivision import SubdividedComplex, subdivision_operator
from .valuation import verify_valuation

EXHAUSTIVE_PAIRS_LIMIT = 12


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""
    counterexample: Any = None

    def to_json(self) -> dict:
        out = {"name": self.name, "ok": self.ok}
        if self.detail:
            out["detail"] = self.detail
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def _cx(c: Complex) -> list[list[int]]:
    return [list(s) for s in c.maximal()]


def check_boundary_squared(c: Complex, label: str) -> Check:
    for q in range(2, c.dimension + 1):
        comp = boundary_operator(c, q - 1) @ boundary_operator(c, q)
        if not comp.is_zero():
            x = next(iter(comp.columns))
            return Check(f"boundary-squared[{label}]", False, f"d{q - 1} d{q} is non-zero", list(x))
    return Check(f"boundary-squared[{label}]", True)


def check_subdivision_chain_map(k: SubdividedComplex) -> Check:
    for q in range(1, k.base.dimension + 1):
        lhs = boundary_operator(k.refined, q) @ subdivision_operator(k, q)
        rhs = subdivision_operator(k, q - 1) @ boundary_operator(k.base, q)
        diff = lhs - rhs
        if not diff.is_zero():
            x = next(iter(diff.columns))
            return Check("subdivision-chain-map", False, f"d s != s d in degree {q}", list(x))
    return Check("subdivision-chain-map", True)


def check_map_chain_map(f: SimplicialMap) -> Check:
    for q in range(1, f.refined.dimension + 1):
        lhs = boundary_operator(f.base, q) @ induced_chain_map(f, q)
        rhs = induced_chain_map(f, q - 1) @ boundary_operator(f.refined, q)
        diff = lhs - rhs
        if not diff.is_zero():
            x = next(iter(diff.columns))
            return Check("map-chain-map", False, f"d f != f d in degree {q}", list(x))
    return Check("map-chain-map", True)


def check_valuation(name: str, fn, ambient: Complex, samples: int, seed: int) -> Check:
    mode = "exhaustive" if len(ambient) <= EXHAUSTIVE_PAIRS_LIMIT else "sampled"
    v = verify_valuation(fn, ambient, mode, samples=samples, seed=seed)
    ce = None
    if not v.ok and v.counterexample is not None:
        ce = {"A": _cx(v.counterexample[0]), "B": _cx(v.counterexample[1])}
    return Check(f"valuation[{name}]", v.ok, v.detail or f"{mode}, {v.pairs_checked} pairs", ce)


def check_hopf_trace(p: MapPair, label: str) -> Check:
    c, h = chain_lefschetz(p), homological_lefschetz(p)
    return Check(f"hopf-trace[{label}]", c == h, f"chain {c}, homological {h}")


def check_agreement(p: MapPair, label: str) -> Check:
    r = lefschetz_report(p)
    vals = {k: str(v) for k, v in r.values.items()}
    ok = r.agree and r.integral
    return Check(f"four-way-agreement[{label}]", ok, ", ".join(f"{k}={v}" for k, v in vals.items()),
                 None if ok else vals)


def check_hopf_consistency(f: SimplicialMap) -> Check:
    if not is_hopf_simplicial(f):
        return Check("hopf-axiom", True, "not Hopf simplicial; axiom does not apply")
    p = MapPair.whole(f)
    for x in f.refined:
        a, b = hopf_axiom_value(f, x), simplex_axiom_value(p, x)
        if a != b:
            return Check("hopf-axiom", False, f"Hopf value {a} != simplex value {b}", list(x))
    return Check("hopf-axiom", True)


def check_fixed_point_soundness(f: SimplicialMap) -> Check:
    certs = fixed_point_certificates(f)
    for c in certs:
        if not c.verify(f):
            return Check("fixed-points", False, "certificate does not verify", list(c.simplex))
    fixed = {c.simplex for c in certs}
    for x in f.refined:
        if map_coefficient(f, x) != 0:
            if not any(y in fixed for y in closed_simplex(x).simplices):
                return Check("fixed-points", False, "non-zero c(f, x) without a fixed point", list(x))
    return Check("fixed-points", True, f"{len(certs)} certificates")


def verify_map(f: SimplicialMap, subcomplex: Complex | None = None, samples: int = 1000,
               seed: int = 0) -> list[Check]:
    checks = [
        check_boundary_squared(f.refined, "refined"),
        check_boundary_squared(f.base, "base"),
        check_subdivision_chain_map(f.domain),
        check_map_chain_map(f),
    ]
    for name, ev in EVALUATORS.items():
        checks.append(check_valuation(name, lambda a, ev=ev: ev(MapPair(f, a)), f.refined, samples, seed))
    whole = MapPair.whole(f)
    checks.append(check_hopf_trace(whole, "whole"))
    checks.append(check_agreement(whole, "whole"))
    if subcomplex is not None and subcomplex != f.refined:
        sel = MapPair(f, subcomplex)
        checks.append(check_hopf_trace(sel, "selection"))
        checks.append(check_agreement(sel, "selection"))
    checks.append(check_hopf_consistency(f))
    checks.append(check_fixed_point_soundness(f))
    return checks


def verify_complex(k: SubdividedComplex, samples: int = 1000, seed: int = 0) -> list[Check]:
    return [
        check_boundary_squared(k.refined, "refined"),
        check_boundary_squared(k.base, "base"),
        check_subdivision_chain_map(k),
        check_valuation("euler", euler_characteristic, k.refined, samples, seed),
    ]
