"""Command-line entry point.

Exit status: 0 success, 1 a verified property failed, 2 malformed input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .complex import euler_characteristic
from .corpus import full_corpus
from .documents import ProblemDocument, emit_json, emit_problem, num, parse_problem
from .engine import EVALUATORS, METHODS, is_hopf_simplicial, lefschetz_report
from .errors import LefschetzError, MalformedInput
from .fixedpoints import FixedPointCertificate, fixed_point_certificates
from .homology import betti_numbers, induced_homology_map
from .maps import MapPair
from .subdivision import barycentric_subdivide
from .verification import verify_complex, verify_map

EXIT_OK, EXIT_VIOLATION, EXIT_MALFORMED = 0, 1, 2


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as e:
        raise MalformedInput(f"cannot read {path}: {e.strerror}") from None


def _load(path: str) -> ProblemDocument:
    return parse_problem(_read(path))


def certificate_json(c: FixedPointCertificate) -> dict:
    return {
        "simplex": list(c.simplex),
        "fixed_set_dimension": c.fixed_set_dimension,
        "witness": {str(v): str(w) for v, w in c.witness.weights},
        "local_weights": [str(w) for w in c.local_weights],
    }


def report_json(p: MapPair) -> dict:
    r = lefschetz_report(p)
    f = p.map
    certs = fixed_point_certificates(f)
    return {
        "values": {k: num(v) for k, v in r.values.items()},
        "agree": r.agree,
        "integral": r.integral,
        "chain_traces": [num(t) for t in r.chain_traces],
        "homology_traces": [num(t) for t in r.homology_traces],
        "betti": r.betti,
        "invariant_core_is_whole": r.core_is_whole,
        "cellular_residual": num(r.cellular_residual),
        "hopf_simplicial": is_hopf_simplicial(f),
        "fixed_points": [certificate_json(c) for c in certs],
    }


def cmd_euler(args) -> int:
    doc = _load(args.input)
    a = doc.selection
    print(emit_json({"euler_characteristic": euler_characteristic(a), "counts": a.counts()}), end="")
    return EXIT_OK


def cmd_homology(args) -> int:
    doc = _load(args.input)
    out = {"betti": betti_numbers(doc.selection)}
    if doc.vertex_map is not None:
        h = induced_homology_map(doc.pair())
        out["induced_traces"] = [num(t) for t in h.traces]
        out["induced_matrices"] = [[[num(x) for x in row] for row in m] for m in h.matrices]
        out["invariant_core_is_whole"] = h.core == doc.selection
    print(emit_json(out), end="")
    return EXIT_OK


def cmd_lefschetz(args) -> int:
    doc = _load(args.input)
    p = doc.pair()
    if args.method == "all":
        out = report_json(p)
        print(emit_json(out), end="")
        return EXIT_OK if out["agree"] else EXIT_VIOLATION
    print(emit_json({"method": args.method, "value": num(EVALUATORS[args.method](p))}), end="")
    return EXIT_OK


def cmd_hopf_check(args) -> int:
    doc = _load(args.input)
    f = doc.simplicial_map()
    maximal = set(f.refined.maximal())
    certs = fixed_point_certificates(f)
    out = {
        "hopf_simplicial": is_hopf_simplicial(f),
        "certificates": [dict(certificate_json(c), maximal=c.simplex in maximal) for c in certs],
    }
    print(emit_json(out), end="")
    return EXIT_OK


def cmd_subdivide(args) -> int:
    if args.rounds < 0:
        raise MalformedInput("--rounds must be non-negative")
    doc = _load(args.input)
    k = doc.domain
    for _ in range(args.rounds):
        k = barycentric_subdivide(k)
    new = ProblemDocument(doc.base, k if args.rounds or doc.subdivision else None)
    if doc.vertex_map is not None or doc.subcomplex is not None:
        print("note: map and subcomplex are not carried through subdivision", file=sys.stderr)
    print(emit_problem(new), end="")
    return EXIT_OK


def _inputs(paths: list[str]) -> list[str]:
    out = []
    for p in paths:
        path = Path(p)
        if p != "-" and path.is_dir():
            out.extend(str(q) for q in sorted(path.glob("*.json")))
        else:
            out.append(p)
    return out


def cmd_verify(args) -> int:
    results = []
    for path in _inputs(args.inputs):
        doc = _load(path)
        if doc.vertex_map is not None:
            checks = verify_map(doc.simplicial_map(), doc.subcomplex, args.samples, args.seed)
        else:
            checks = verify_complex(doc.domain, args.samples, args.seed)
        results.append((path, checks))
    if args.builtin:
        for name, f in full_corpus(args.random_maps, args.seed):
            results.append((f"builtin:{name}", verify_map(f, None, args.samples, args.seed)))
    ok = all(c.ok for _, checks in results for c in checks)
    out = {
        "ok": ok,
        "inputs": [
            {"input": path, "ok": all(c.ok for c in checks), "checks": [c.to_json() for c in checks]}
            for path, checks in results
        ],
    }
    print(emit_json(out), end="")
    return EXIT_OK if ok else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lefschetz", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def with_input(p):
        p.add_argument("input", nargs="?", default="-", help="problem document (default: stdin)")
        return p

    with_input(sub.add_parser("euler", help="Euler characteristic of the selected subcomplex")).set_defaults(
        func=cmd_euler)
    with_input(sub.add_parser("homology", help="Betti numbers and induced homology traces")).set_defaults(
        func=cmd_homology)
    p = with_input(sub.add_parser("lefschetz", help="Lefschetz number report"))
    p.add_argument("--method", choices=METHODS + ("all",), default="all")
    p.set_defaults(func=cmd_lefschetz)
    with_input(sub.add_parser("hopf-check", help="Hopf classification with fixed-point certificates")).set_defaults(
        func=cmd_hopf_check)
    p = with_input(sub.add_parser("subdivide", help="barycentric subdivision, emitted as a document"))
    p.add_argument("--rounds", type=int, default=1)
    p.set_defaults(func=cmd_subdivide)
    p = sub.add_parser("verify", help="run all property suites; exit 1 on any violation")
    p.add_argument("inputs", nargs="*", default=[], help="documents or directories of *.json")
    p.add_argument("--builtin", action="store_true", help="also run the built-in corpus")
    p.add_argument("--random-maps", type=int, default=100)
    p.add_argument("--samples", type=int, default=1000, help="sampled subcomplex pairs per evaluator")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "verify" and not args.inputs and not args.builtin:
        args.inputs = ["-"]
    try:
        return args.func(args)
    except MalformedInput as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_MALFORMED
    except LefschetzError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
