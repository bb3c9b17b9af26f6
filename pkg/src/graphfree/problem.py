"""JSON problem files: a graph, its vertex cumulant tables and named variables.

Schema (every key below is required unless marked optional; unknown keys are
rejected)::

    {
      "graph": {"vertices": ["1", "2"], "edges": [["1", "2"]]},
      "semigroupoid": {"max_len": 2, "mode": "simple"},
      "order_cap": 8,
      "nc_cap": 14,
      "specs": {
        "1": {"entries": {"s s": [1, 1]},
              "self_adjoint": ["s"],          # optional, default []
              "star_compatible": true},       # optional, default true
        ...
      },
      "variables": {                          # optional
        "x": {"components": {"1": [{"coeff": [1, 1], "letters": ["s@1"]}]},
              "scalar": [0, 1]},              # scalar optional
        "y": {"sum": ["x", "x"]},
        "z": {"product": ["x", "y"]},
        "u": {"adjoint": "x"},
        "v": {"scale": [[1, 2], "x"]}
      }
    }

Scalars are ``[num, den]`` or ``[[re_num, re_den], [im_num, im_den]]``; floats
are refused.  Entry keys are whitespace-separated letters of that vertex
(``"a a*"``); variable letters carry their vertex (``"a@1"``, ``"a@1#1"`` for
the second occurrence of vertex 1 along a walk).
"""

import json
from dataclasses import dataclass
from fractions import Fraction

from .cumulants import CumulantSpec, parse_letter
from .errors import ParseError, UnknownVariable
from .gfps import GRandomVariable, adjoint, build_context, mul, scale
from .graph import SIMPLE, WALK, SimplicialGraph, validate_graph
from .polynomial import Polynomial
from .scalars import GaussianRational

__all__ = ["Problem", "parse_scalar", "dump_scalar", "load_problem", "parse_problem",
           "problem_to_json"]

_TOP_KEYS = {"graph", "semigroupoid", "order_cap", "nc_cap", "specs", "variables"}
_TOP_REQUIRED = _TOP_KEYS - {"variables"}
_OPS = ("sum", "product", "adjoint", "scale")


@dataclass
class Problem:
    """A parsed problem file: the context plus resolved variables.

    ``document`` is the canonical (reduced, key-sorted) form of the input, so
    that echoing it and parsing again yields an equivalent context.
    """

    context: object
    nc_cap: int
    variables: dict
    document: dict

    def variable(self, name):
        if name not in self.variables:
            raise UnknownVariable(f"unknown variable {name!r}")
        return self.variables[name]


def _keys(obj, where, allowed, required=()):
    if not isinstance(obj, dict):
        raise ParseError(f"{where}: expected an object")
    extra = set(obj) - set(allowed)
    if extra:
        raise ParseError(f"{where}: unknown key(s) {sorted(extra)}")
    missing = set(required) - set(obj)
    if missing:
        raise ParseError(f"{where}: missing key(s) {sorted(missing)}")


def _int(value, where, minimum=None):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{where}: expected an integer")
    if minimum is not None and value < minimum:
        raise ParseError(f"{where}: must be >= {minimum}")
    return value


def _rational(value, where):
    if (not isinstance(value, list) or len(value) != 2
            or any(isinstance(v, bool) or not isinstance(v, int) for v in value)):
        raise ParseError(f"{where}: rational must be [num, den] with integers")
    if value[1] == 0:
        raise ParseError(f"{where}: zero denominator")
    return Fraction(value[0], value[1])


def parse_scalar(value, where="scalar"):
    """``[n, d]`` -> Fraction; ``[[a, b], [c, d]]`` -> GaussianRational (or Fraction if real)."""
    if isinstance(value, list) and len(value) == 2 and all(isinstance(v, list) for v in value):
        re = _rational(value[0], where + ".re")
        im = _rational(value[1], where + ".im")
        return re if im == 0 else GaussianRational(re, im)
    return _rational(value, where)


def dump_scalar(c):
    if isinstance(c, GaussianRational):
        if c.im == 0:
            c = c.re
        else:
            return [[c.re.numerator, c.re.denominator], [c.im.numerator, c.im.denominator]]
    c = Fraction(c)
    return [c.numerator, c.denominator]


def _string_list(value, where):
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise ParseError(f"{where}: expected a list of strings")
    return value


def _parse_graph(doc):
    _keys(doc, "graph", {"vertices", "edges"}, {"vertices", "edges"})
    vertices = _string_list(doc["vertices"], "graph.vertices")
    edges = doc["edges"]
    if not isinstance(edges, list):
        raise ParseError("graph.edges: expected a list")
    for e in edges:
        _string_list(e, "graph.edges[]")
    g = SimplicialGraph(vertices, edges, validate=False)
    validate_graph(g)
    return g


def _parse_spec(vertex, doc, order_cap):
    where = f"specs.{vertex}"
    _keys(doc, where, {"entries", "self_adjoint", "star_compatible"}, {"entries"})
    sa = _string_list(doc.get("self_adjoint", []), where + ".self_adjoint")
    sc = doc.get("star_compatible", True)
    if not isinstance(sc, bool):
        raise ParseError(f"{where}.star_compatible: expected a boolean")
    entries = doc["entries"]
    if not isinstance(entries, dict):
        raise ParseError(f"{where}.entries: expected an object")
    table = {}
    for key, value in entries.items():
        tokens = key.split()
        if not tokens:
            raise ParseError(f"{where}.entries: empty letter tuple")
        try:
            letters = tuple(parse_letter(t, vertex) for t in tokens)
        except ValueError as exc:
            raise ParseError(f"{where}.entries[{key!r}]: {exc}") from None
        table[letters] = parse_scalar(value, f"{where}.entries[{key!r}]")
    return CumulantSpec(vertex, order_cap, table, self_adjoint=frozenset(sa),
                        star_compatible=sc)


def _parse_polynomial(terms, where):
    if not isinstance(terms, list):
        raise ParseError(f"{where}: expected a list of terms")
    out = {}
    for k, term in enumerate(terms):
        tw = f"{where}[{k}]"
        _keys(term, tw, {"coeff", "letters"}, {"coeff", "letters"})
        c = parse_scalar(term["coeff"], tw + ".coeff")
        try:
            word = tuple(parse_letter(t) for t in _string_list(term["letters"], tw + ".letters"))
        except ValueError as exc:
            raise ParseError(f"{tw}: {exc}") from None
        out[word] = out.get(word, 0) + c
    return Polynomial(out)


def _resolve_variables(ctx, docs):
    if not isinstance(docs, dict):
        raise ParseError("variables: expected an object")
    resolved = {}
    active = set()

    def get(name, where):
        if not isinstance(name, str):
            raise ParseError(f"{where}: variable reference must be a string")
        if name not in docs:
            raise UnknownVariable(f"{where}: unknown variable {name!r}")
        if name in resolved:
            return resolved[name]
        if name in active:
            raise ParseError(f"variables: definition cycle through {name!r}")
        active.add(name)
        resolved[name] = build(name, docs[name])
        active.discard(name)
        return resolved[name]

    def build(name, doc):
        where = f"variables.{name}"
        if not isinstance(doc, dict):
            raise ParseError(f"{where}: expected an object")
        ops = [k for k in _OPS if k in doc]
        if ops:
            _keys(doc, where, ops[:1])
            op = ops[0]
            arg = doc[op]
            if op == "adjoint":
                return adjoint(get(arg, where))
            if op == "scale":
                if not isinstance(arg, list) or len(arg) != 2:
                    raise ParseError(f"{where}.scale: expected [scalar, name]")
                return scale(parse_scalar(arg[0], where + ".scale"), get(arg[1], where))
            if not isinstance(arg, list) or not arg:
                raise ParseError(f"{where}.{op}: expected a nonempty list of names")
            acc = get(arg[0], where)
            for other in arg[1:]:
                acc = acc + get(other, where) if op == "sum" else mul(acc, get(other, where))
            return acc
        _keys(doc, where, {"components", "scalar"}, {"components"})
        comps = doc["components"]
        if not isinstance(comps, dict):
            raise ParseError(f"{where}.components: expected an object")
        polys = {}
        for wtext, terms in comps.items():
            w = ctx.word(wtext)
            if w in polys:
                raise ParseError(f"{where}.components: word {w} given twice")
            polys[w] = _parse_polynomial(terms, f"{where}.components[{wtext!r}]")
        scalar = parse_scalar(doc["scalar"], where + ".scalar") if "scalar" in doc else 0
        return GRandomVariable(ctx, polys, scalar)

    for name in sorted(docs):
        get(name, "variables")
    return resolved


def _canonical_document(doc):
    """Reduce every rational and sort object keys; keeps the schema intact."""
    def walk(node, path):
        if isinstance(node, dict):
            return {k: walk(v, path + (k,)) for k, v in sorted(node.items())}
        if isinstance(node, list):
            if path and path[-1] in ("coeff", "scalar") or (len(path) >= 2 and path[-2] == "entries"):
                return dump_scalar(parse_scalar(node))
            if path and path[-1] == "scale":
                return [dump_scalar(parse_scalar(node[0])), node[1]]
            return [walk(v, path) for v in node]
        return node
    return walk(doc, ())


def parse_problem(doc, max_len=None, order_cap=None, nc_cap=None):
    """Build a :class:`Problem` from a decoded JSON document.

    ``max_len``, ``order_cap`` and ``nc_cap`` may lower (never raise) the caps
    written in the document.
    """
    _keys(doc, "problem", _TOP_KEYS, _TOP_REQUIRED)
    graph = _parse_graph(doc["graph"])
    semi = doc["semigroupoid"]
    _keys(semi, "semigroupoid", {"max_len", "mode"}, {"max_len", "mode"})
    file_len = _int(semi["max_len"], "semigroupoid.max_len", 0)
    mode = semi["mode"]
    if mode not in (SIMPLE, WALK):
        raise ParseError(f"semigroupoid.mode: expected 'simple' or 'walk', got {mode!r}")
    file_cap = _int(doc["order_cap"], "order_cap", 1)
    file_nc = _int(doc["nc_cap"], "nc_cap", 1)
    eff_len = _lower(file_len, max_len, "max_len")
    eff_cap = _lower(file_cap, order_cap, "order_cap")
    eff_nc = _lower(file_nc, nc_cap, "nc_cap")
    specs_doc = doc["specs"]
    if not isinstance(specs_doc, dict):
        raise ParseError("specs: expected an object")
    specs = {v: _parse_spec(v, s, file_cap) for v, s in specs_doc.items()}
    ctx = build_context(graph, specs, max_len=eff_len, mode=mode, order_cap=eff_cap)
    variables = _resolve_variables(ctx, doc.get("variables", {}))
    return Problem(ctx, eff_nc, variables, _canonical_document(doc))


def _lower(file_value, override, name):
    if override is None:
        return file_value
    if override > file_value:
        raise ParseError(f"--{name.replace('_', '-')} may only lower the file value {file_value}")
    return override


def load_problem(path, **overrides):
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from None
    return parse_problem(doc, **overrides)


def problem_to_json(problem):
    return json.dumps(problem.document, indent=2, ensure_ascii=False)

