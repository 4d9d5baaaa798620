"""JSON problem documents and report serialization.

A document looks like::

    {
      "complex": [[0, 1], [1, 2], [0, 2]],
      "subdivision": {
        "refined": [[0, 3], [3, 1], [1, 4], [4, 2], [2, 5], [5, 0]],
        "locations": {"3": {"0": "1/2", "1": "1/2"}, "...": "..."}
      },
      "map": {"0": 0, "3": 1, "1": 2, "4": 0, "2": 1, "5": 2},
      "subcomplex": [[0, 3]]
    }

Only ``complex`` is required.  Weights are ``"p/q"`` strings, integers, or
``[p, q]`` pairs; JSON floats are rejected everywhere.  Base vertices may be
left out of ``locations`` (they sit at themselves).  The subcomplex is
given by generating simplices and closed under faces on load.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .complex import Complex, make_simplex, simplex_key
from .errors import MalformedInput
from .maps import MapPair, SimplicialMap
from .subdivision import BarycentricPoint, SubdividedComplex, identity_subdivision


def _reject_float(s: str):
    raise MalformedInput(f"floating point literal {s} rejected; write fractions as \"p/q\"")


def _fraction(x: Any, where: str) -> Fraction:
    if isinstance(x, bool):
        raise MalformedInput(f"expected a fraction, got {x!r}", where)
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            n, _, d = x.partition("/")
            return Fraction(int(n), int(d) if d else 1)
        except (ValueError, ZeroDivisionError):
            raise MalformedInput(f"bad fraction {x!r}", where) from None
    if isinstance(x, list) and len(x) == 2 and all(isinstance(v, int) and not isinstance(v, bool) for v in x):
        if x[1] == 0:
            raise MalformedInput("zero denominator", where)
        return Fraction(x[0], x[1])
    raise MalformedInput(f"expected a fraction, got {x!r}", where)


def _vertex(x: Any, where: str) -> int:
    try:
        v = int(x) if isinstance(x, str) else x
    except ValueError:
        raise MalformedInput(f"bad vertex label {x!r}", where) from None
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise MalformedInput(f"bad vertex label {x!r}", where)
    return v


def _simplices(x: Any, where: str) -> list[tuple[int, ...]]:
    if not isinstance(x, list):
        raise MalformedInput("expected a list of simplices", where)
    out = []
    for i, s in enumerate(x):
        loc = f"{where}[{i}]"
        if not isinstance(s, list):
            raise MalformedInput("a simplex is a list of vertex labels", loc)
        try:
            out.append(make_simplex(_vertex(v, loc) for v in s))
        except MalformedInput as e:
            if e.location is None:
                raise MalformedInput(str(e), loc) from None
            raise
    return out


@dataclass
class ProblemDocument:
    base: Complex
    subdivision: SubdividedComplex | None = None
    vertex_map: dict[int, int] | None = None
    subcomplex: Complex | None = None

    @property
    def domain(self) -> SubdividedComplex:
        return self.subdivision if self.subdivision is not None else identity_subdivision(self.base)

    @property
    def refined(self) -> Complex:
        return self.domain.refined

    @property
    def selection(self) -> Complex:
        """The selected subcomplex, defaulting to the whole refined complex."""
        return self.subcomplex if self.subcomplex is not None else self.refined

    def simplicial_map(self) -> SimplicialMap:
        if self.vertex_map is None:
            raise MalformedInput("document has no \"map\"", "map")
        return SimplicialMap(self.domain, self.vertex_map)

    def pair(self) -> MapPair:
        return MapPair(self.simplicial_map(), self.selection)

    def to_json(self) -> dict:
        doc: dict[str, Any] = {"complex": [list(s) for s in self.base.maximal()]}
        if self.subdivision is not None:
            sub = self.subdivision
            doc["subdivision"] = {
                "refined": [list(s) for s in sub.refined.maximal()],
                "locations": {
                    str(v): {str(u): str(w) for u, w in sub.locations[v].weights}
                    for v in sorted(sub.locations)
                },
            }
        if self.vertex_map is not None:
            doc["map"] = {str(v): self.vertex_map[v] for v in sorted(self.vertex_map)}
        if self.subcomplex is not None:
            doc["subcomplex"] = [list(s) for s in self.subcomplex.maximal()]
        return doc

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProblemDocument):
            return NotImplemented
        return self.to_json() == other.to_json()


def parse_problem(text: str) -> ProblemDocument:
    try:
        raw = json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as e:
        raise MalformedInput(e.msg, f"line {e.lineno} column {e.colno}") from None
    if not isinstance(raw, dict):
        raise MalformedInput("document must be a JSON object")
    unknown = set(raw) - {"complex", "subdivision", "map", "subcomplex"}
    if unknown:
        raise MalformedInput(f"unknown keys {sorted(unknown)}")
    if "complex" not in raw:
        raise MalformedInput("missing \"complex\"")
    base = Complex.closure_of(_simplices(raw["complex"], "complex"))

    subdivision = None
    if raw.get("subdivision") is not None:
        sd = raw["subdivision"]
        if not isinstance(sd, dict) or "refined" not in sd:
            raise MalformedInput("subdivision needs \"refined\" and \"locations\"", "subdivision")
        refined = Complex.closure_of(_simplices(sd["refined"], "subdivision.refined"))
        locs_raw = sd.get("locations", {})
        if not isinstance(locs_raw, dict):
            raise MalformedInput("expected an object", "subdivision.locations")
        locs = {}
        for k, weights in locs_raw.items():
            where = f"subdivision.locations.{k}"
            v = _vertex(k, where)
            if not isinstance(weights, dict):
                raise MalformedInput("expected an object of vertex weights", where)
            items = sorted((_vertex(u, where), _fraction(w, f"{where}.{u}")) for u, w in weights.items())
            try:
                locs[v] = BarycentricPoint(tuple(items))
            except MalformedInput as e:
                raise MalformedInput(str(e), where) from None
        for v in base.vertices:
            locs.setdefault(v, BarycentricPoint.vertex(v))
        subdivision = SubdividedComplex(base, refined, locs)

    vertex_map = None
    if raw.get("map") is not None:
        m = raw["map"]
        if not isinstance(m, dict):
            raise MalformedInput("expected an object {vertex: image}", "map")
        vertex_map = {_vertex(k, "map"): _vertex(w, f"map.{k}") for k, w in m.items()}

    subcomplex = None
    if raw.get("subcomplex") is not None:
        subcomplex = Complex.closure_of(_simplices(raw["subcomplex"], "subcomplex"))
        ambient = subdivision.refined if subdivision is not None else base
        if not subcomplex.is_subcomplex_of(ambient):
            missing = sorted(subcomplex.simplices - ambient.simplices, key=simplex_key)[0]
            raise MalformedInput(f"simplex {list(missing)} is not in the refined complex", "subcomplex")

    doc = ProblemDocument(base, subdivision, vertex_map, subcomplex)
    if vertex_map is not None:
        doc.simplicial_map()
    return doc


def _format(obj: Any, indent: int) -> str:
    pad, inner = " " * indent, " " * (indent + 2)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        if all(not isinstance(v, (dict, list)) for v in obj.values()):
            return json.dumps(obj)
        items = [f"{inner}{json.dumps(str(k))}: {_format(v, indent + 2)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, list):
        if all(not isinstance(v, dict) for v in obj) and all(
                not isinstance(v, list) or all(not isinstance(w, (dict, list)) for w in v) for v in obj):
            return json.dumps(obj)
        items = [inner + _format(v, indent + 2) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(obj)


def emit_json(obj: Any) -> str:
    """Deterministic JSON: two-space indent, short scalar containers kept on one line."""
    return _format(obj, 0) + "\n"


def emit_problem(doc: ProblemDocument) -> str:
    return emit_json(doc.to_json())


def num(x: Fraction | int):
    """JSON-safe exact number: an int when integral, else a ``"p/q"`` string."""
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else str(x)

