"""``gfp``: command-line access to the lattice, graph and graph-free computations.

Text output carries results only (so two computations with the same answer
print the same bytes); ``--format json`` wraps the result together with the
query and the canonical problem document.

Exit codes: 0 success / property holds, 1 property fails, 2 parse or usage
error, 3 size cap exceeded, 4 invalid graph, 5 unknown variable, 6 word or
order too long.
"""

import argparse
import json
import os
import sys

from .errors import (GraphFreeError, GraphInvalid, ParseError, SizeExceedsCap,
                     UnknownVariable, WordTooLong)
from .gfps import are_g_free_numerical, expectation
from .graph import disjoint
from .nc_lattice import (NoncrossingPartition, alt_union, bottom, enumerate_nc,
                         format_partition, kreweras, moebius, nc_cap,
                         parse_partition, top)
from .problem import load_problem
from .rtransform import (boxed_g, index_words, is_g_circular, moment_series,
                         r_diagonal_witness, r_series, semicircular_witness)
from .scalars import render

__all__ = ["main", "build_parser", "exit_code"]


def exit_code(exc):
    if isinstance(exc, SizeExceedsCap):
        return 3
    if isinstance(exc, GraphInvalid):
        return 4
    if isinstance(exc, UnknownVariable):
        return 5
    if isinstance(exc, WordTooLong):
        return 6
    return 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


# rendering


def diag_text(d):
    parts = []
    if d.unit:
        parts.append(f"unit: {render(d.unit)}")
    parts += [f"{w}: {render(c)}" for w, c in d.items()]
    return ", ".join(parts) if parts else "0"


def diag_json(d):
    return {"unit": render(d.unit), "coords": [[str(w), render(c)] for w, c in d.items()]}


def _index_label(idx, s):
    if s == 1:
        return f"order {len(idx)}"
    return "(" + ",".join(map(str, idx)) + ")"


def series_text(S):
    return "\n".join(f"{_index_label(idx, S.num_vars)}: {diag_text(S[idx])}"
                     for idx in index_words(S.num_vars, S.order))


def series_json(S):
    return {
        "num_vars": S.num_vars,
        "order": S.order,
        "coefficients": [{"index": list(idx), "value": diag_json(S[idx])}
                         for idx in index_words(S.num_vars, S.order)],
    }


def _emit(args, text, result, query, problem=None):
    if args.format == "json":
        doc = {"command": query.pop("command"), "query": query, "result": result}
        if problem is not None:
            doc["problem"] = problem.document
        sys.stdout.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(text + "\n")


# nc


def _effective_nc_cap(flag):
    cap = nc_cap()
    if flag is not None:
        if flag > cap:
            raise ParseError(f"--nc-cap {flag} may only lower the active cap {cap}")
        cap = flag
    return cap


def _partition(text, n, what):
    if text == "bottom":
        return bottom(n)
    if text == "top":
        return top(n)
    try:
        p = parse_partition(text, n)
    except ValueError as exc:
        raise ParseError(f"{what}: {exc}") from None
    if not isinstance(p, NoncrossingPartition):
        raise ParseError(f"{what}: {text!r} is not noncrossing")
    return p


def cmd_nc(args):
    cap = _effective_nc_cap(args.nc_cap)
    n = args.n
    if n < 1:
        raise ParseError("--n must be positive")
    if n > cap:
        raise SizeExceedsCap(f"n={n} exceeds the NC size cap {cap}")
    query = {"command": f"nc {args.what}", "n": n}
    if args.what == "enumerate":
        lines = [format_partition(p) for p in enumerate_nc(n, cap)]
        _emit(args, "\n".join(lines), lines, query)
    elif args.what == "moebius":
        p = _partition(args.source, n, "--from")
        q = _partition(args.target, n, "--to")
        val = render(moebius(p, q))
        query.update({"from": args.source, "to": args.target})
        _emit(args, val, val, query)
    elif args.what == "kreweras":
        p = _partition(_need(args.pi, "--pi"), n, "--pi")
        out = format_partition(kreweras(p))
        query["pi"] = args.pi
        _emit(args, out, out, query)
    else:
        p = _partition(_need(args.pi, "--pi"), n, "--pi")
        q = kreweras(p) if args.sigma is None else _partition(args.sigma, n, "--sigma")
        out = format_partition(alt_union(p, q))
        query.update({"pi": args.pi, "sigma": format_partition(q)})
        _emit(args, out, out, query)
    return 0


def _need(value, flag):
    if value is None:
        raise ParseError(f"{flag} is required")
    return value


# file commands


def _load(args):
    cap_env = nc_cap()
    problem = load_problem(args.spec, max_len=args.max_len, order_cap=args.order_cap)
    # the environment variable replaces the file's cap; the flag only lowers it
    if os.environ.get("GFP_NC_CAP", "").strip():
        problem.nc_cap = cap_env
    if args.nc_cap is not None:
        if args.nc_cap > problem.nc_cap:
            raise ParseError(f"--nc-cap {args.nc_cap} may only lower the active cap {problem.nc_cap}")
        problem.nc_cap = args.nc_cap
    return problem


def _check_order(problem, order):
    if order is None:
        raise ParseError("--order is required")
    if order < 1:
        raise ParseError("--order must be positive")
    if order > problem.context.order_cap:
        raise WordTooLong(f"order {order} exceeds order_cap {problem.context.order_cap}")
    if order > problem.nc_cap:
        raise SizeExceedsCap(f"order {order} exceeds the NC size cap {problem.nc_cap}")


def cmd_graph(args):
    problem = _load(args)
    ctx = problem.context
    query = {"command": "graph"}
    if args.disjoint:
        w1, w2 = (ctx.word(t) for t in args.disjoint)
        val = "true" if disjoint(w1, w2) else "false"
        query["disjoint"] = [str(w1), str(w2)]
        _emit(args, val, val == "true", query, problem)
        return 0
    lines = [f"{w} length {len(w)}" for w in ctx.words]
    result = [{"word": list(w.vertices), "length": len(w)} for w in ctx.words]
    _emit(args, "\n".join(lines), result, query, problem)
    return 0


def _vars(problem, names, flag, count=None):
    if not names:
        raise ParseError(f"{flag} is required")
    if count is not None and len(names) != count:
        raise ParseError(f"expected exactly {count} {flag} value(s), got {len(names)}")
    return [problem.variable(n) for n in names]


def cmd_compute(args):
    problem = _load(args)
    ctx = problem.context
    what = args.what
    query = {"command": f"compute {what}"}
    if what == "expectation":
        (x,) = _vars(problem, args.var, "--var", 1)
        d = expectation(ctx, x)
        query["vars"] = args.var
        _emit(args, diag_text(d), diag_json(d), query, problem)
        return 0
    _check_order(problem, args.order)
    query["order"] = args.order
    if what == "boxed":
        left = _vars(problem, args.left, "--left")
        right = _vars(problem, args.right, "--right", len(left))
        S = boxed_g(r_series(ctx, left, args.order), r_series(ctx, right, args.order))
        query.update({"left": args.left, "right": args.right})
    else:
        count = 1 if what in ("moments", "cumulants") else None
        xs = _vars(problem, args.var, "--var", count)
        fn = moment_series if what in ("moments", "mseries") else r_series
        S = fn(ctx, xs, args.order)
        query["vars"] = args.var
    _emit(args, series_text(S), series_json(S), query, problem)
    return 0


def _labels(names, pattern):
    return ",".join(names[i] for i in pattern)


def cmd_check(args):
    problem = _load(args)
    ctx = problem.context
    what = args.what
    _check_order(problem, args.order)
    N = args.order
    query = {"command": f"check {what}", "vars": args.var, "order": N}
    if what == "gfree":
        x, y = _vars(problem, args.var, "--var", 2)
        v = are_g_free_numerical(ctx, x, y, N, names=tuple(args.var))
        if v:
            text, result = f"G-free up to order {N}", {"holds": True}
        else:
            text = f"not G-free: {v.describe()}"
            result = {"holds": False, "witness": list(v.witness),
                      "word": None if v.word is None else str(v.word),
                      "value": render(v.value)}
    elif what == "semicircular":
        (x,) = _vars(problem, args.var, "--var", 1)
        bad = semicircular_witness(ctx, x, N)
        if bad is None:
            text, result = f"G-semicircular up to order {N}", {"holds": True}
        else:
            n, k = bad
            text = f"not G-semicircular: k{n} = {diag_text(k)}"
            result = {"holds": False, "order": n, "value": diag_json(k)}
    elif what == "circular":
        x1, x2 = _vars(problem, args.var, "--var", 2)
        v = is_g_circular(ctx, x1, x2, N, names=tuple(args.var))
        if v:
            words = " ".join(map(str, v.words))
            text = f"G-circular up to order {N}: {v.kind} {words}"
            result = {"holds": True, "kind": v.kind, "words": [str(w) for w in v.words]}
        else:
            text = f"not G-circular: {v.reason}"
            result = {"holds": False, "reason": v.reason}
    else:
        (a,) = _vars(problem, args.var, "--var", 1)
        bad = r_diagonal_witness(ctx, a, N)
        if bad is None:
            text, result = f"G-R-diagonal up to order {N}", {"holds": True}
        else:
            pattern, k = bad
            names = (args.var[0], args.var[0] + "*")
            text = f"not G-R-diagonal: k({_labels(names, pattern)}) = {diag_text(k)}"
            result = {"holds": False, "pattern": [names[i] for i in pattern],
                      "value": diag_json(k)}
    _emit(args, text, result, query, problem)
    return 0 if result["holds"] else 1


def build_parser():
    parser = _Parser(prog="gfp", description="Exact graph free probability computations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, file=True):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--nc-cap", type=int, help="lower the NC size cap")
        if file:
            p.add_argument("spec", help="problem file (JSON)")
            p.add_argument("--max-len", type=int, help="lower semigroupoid.max_len")
            p.add_argument("--order-cap", type=int, help="lower order_cap")

    p = sub.add_parser("nc", help="noncrossing partition lattice")
    p.add_argument("what", choices=("enumerate", "moebius", "kreweras", "altunion"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pi")
    p.add_argument("--sigma", help="second partition for altunion (default Kr(pi))")
    p.add_argument("--from", dest="source", default="bottom")
    p.add_argument("--to", dest="target", default="top")
    common(p, file=False)
    p.set_defaults(func=cmd_nc)

    p = sub.add_parser("graph", help="list the enumerated semigroupoid")
    common(p)
    p.add_argument("--disjoint", nargs=2, metavar=("W1", "W2"))
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("compute", help="expectations, moments, cumulants and series")
    p.add_argument("what", choices=("expectation", "moments", "cumulants",
                                    "mseries", "rseries", "boxed"))
    common(p)
    p.add_argument("--var", action="append", default=[])
    p.add_argument("--left", action="append", default=[])
    p.add_argument("--right", action="append", default=[])
    p.add_argument("--order", type=int)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("check", help="freeness and distribution recognizers")
    p.add_argument("what", choices=("gfree", "semicircular", "circular", "rdiagonal"))
    common(p)
    p.add_argument("--var", action="append", default=[])
    p.add_argument("--order", type=int)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except GraphFreeError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return exit_code(exc)


if __name__ == "__main__":
    sys.exit(main())
