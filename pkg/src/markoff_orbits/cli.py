"""Command-line interface with machine-readable output.

Every subcommand accepts the surface either as boundary traces
(``--k a,b,c,d``) or as direct coefficients (``--alpha a1,a2,a3
--beta b``), exactly one of the two.  JSON output is key-sorted and
stable; coordinate-like integers are serialized as decimal strings
because they exceed any fixed-width range.  Exit codes: 0 verdict or
output produced, 1 usage error, 2 point not on the surface (the exact
residual is printed), 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence

# Accept values like "-3,6,15" after an option instead of reading the
# leading minus as a new flag.
_NEGATIVE_TUPLE = re.compile(r"^-\d+(,-?\d+)*$")

from .decide import decide_gamma, decide_mcg
from .descent import Moveset, ResourceCap, descend, orbit_graph
from .exceptional import core_components, enumerate_core, enumerate_core_mcg
from .oracle import oracle_equivalent
from .surface import (
    NotOnSurface,
    SurfaceParams,
    apply_word,
    derive_params,
    make_point,
    residual,
)

__all__ = ["main"]


class UsageError(Exception):
    pass


def _parse_ints(text: str, count: int, what: str) -> tuple:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != count:
        raise UsageError(f"{what} needs {count} comma-separated integers: {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError as exc:
        raise UsageError(f"{what} must be integers: {text!r}") from exc


def _params_from_args(args) -> SurfaceParams:
    if args.k is not None:
        if args.alpha is not None or args.beta is not None:
            raise UsageError("--k and --alpha/--beta are mutually exclusive")
        return derive_params(_parse_ints(args.k, 4, "--k"))
    if args.alpha is None or args.beta is None:
        raise UsageError("provide either --k or both --alpha and --beta")
    try:
        beta = int(args.beta)
    except ValueError as exc:
        raise UsageError(f"--beta must be an integer: {args.beta!r}") from exc
    return SurfaceParams(alpha=_parse_ints(args.alpha, 3, "--alpha"), beta=beta)


def _moveset(mode: str) -> Moveset:
    return Moveset.VIETA if mode == "gamma" else Moveset.MCG


def _ser_coords(coords) -> List[str]:
    return [str(c) for c in coords]


def _ser_word(word) -> List[int]:
    return list(word)


def _ser_trace(trace: dict) -> dict:
    out = {}
    for key, value in trace.items():
        if key == "stage":
            out[key] = value
        elif key.startswith("probes"):
            out[key] = [
                {"vertex": _ser_coords(v), "pairs": [list(p) for p in pairs]}
                for v, pairs in value
            ]
        else:
            out[key] = [_ser_coords(v) for v in value]
    return out


def _emit(payload: dict, fmt: str, text_lines) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, separators=(", ", ": ")))
    else:
        for line in text_lines(payload):
            print(line)


def _cert_payload(cert, x, y, mode: str) -> dict:
    payload = {
        "mode": mode,
        "x": _ser_coords(x.coords),
        "y": _ser_coords(y.coords),
        "verdict": cert.verdict,
        "trace": _ser_trace(cert.trace),
    }
    if cert.word is not None:
        payload["word"] = _ser_word(cert.word)
    if cert.reason is not None:
        payload["reason"] = {"code": cert.reason.code, "detail": cert.reason.detail}
    return payload


def _cert_text(payload) -> List[str]:
    lines = [f"verdict: {payload['verdict']} (mode {payload['mode']})"]
    if "word" in payload:
        lines.append("word: " + (",".join(map(str, payload["word"])) or "(empty)"))
    if "reason" in payload:
        lines.append(f"reason: {payload['reason']['code']}: {payload['reason']['detail']}")
    return lines


def _move_label(move) -> str:
    return " ".join(f"V{i}" for i in move)


def _graph_dot(graph) -> str:
    lines = ["graph orbit {"]
    for v in graph.vertices:
        lines.append(f'  "{v.canonical()}" [label="{v.canonical()} h={v.height()}"];')
    for e in graph.edges:
        lines.append(
            f'  "{e.src.canonical()}" -- "{e.dst.canonical()}" '
            f'[label="{_move_label(e.move)}"];'
        )
    lines.append("}")
    return "\n".join(lines)


def _add_params_options(sub) -> None:
    sub.add_argument("--k", help="boundary traces k1,k2,k3,k4")
    sub.add_argument("--alpha", help="surface coefficients a1,a2,a3")
    sub.add_argument("--beta", help="surface coefficient b")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="markoff-orbits",
        description="orbit-equivalence toolkit for Markoff-like cubic surfaces",
    )
    parser._negative_number_matcher = _NEGATIVE_TUPLE
    subs = parser.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("params", help="echo the derived surface coefficients")
    _add_params_options(sp)
    sp.add_argument("--format", choices=("json", "text"), default="json")

    sp = subs.add_parser("check", help="evaluate the surface equation at a point")
    _add_params_options(sp)
    sp.add_argument("--point", required=True)
    sp.add_argument("--format", choices=("json", "text"), default="json")

    sp = subs.add_parser("vieta", help="apply a move word to a point")
    _add_params_options(sp)
    sp.add_argument("--point", required=True)
    sp.add_argument("--word", default="", help="comma-separated move letters, e.g. 3,1")
    sp.add_argument("--format", choices=("json", "text"), default="json")

    sp = subs.add_parser("descend", help="drive a point down to its last vertices")
    _add_params_options(sp)
    sp.add_argument("--point", required=True)
    sp.add_argument("--mode", choices=("gamma", "mcg"), default="gamma")
    sp.add_argument("--budget", type=int, default=10**6)
    sp.add_argument("--format", choices=("json", "text"), default="json")

    sp = subs.add_parser(
        "exceptional", help="enumerate the finite exceptional set and its components"
    )
    _add_params_options(sp)
    sp.add_argument("--mode", choices=("gamma", "mcg"), default="gamma")
    sp.add_argument("--format", choices=("json", "text"), default="json")

    sp = subs.add_parser("decide", help="decide orbit equivalence of two points")
    _add_params_options(sp)
    sp.add_argument("--x")
    sp.add_argument("--y")
    sp.add_argument("--mode", choices=("gamma", "mcg"), default="gamma")
    sp.add_argument("--batch", help="file of queries, one x1,x2,x3;y1,y2,y3 per line")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--budget", type=int, default=10**6)
    sp.add_argument("--format", choices=("json", "text"), default="json")

    sp = subs.add_parser("orbit-graph", help="height-capped orbit closure")
    _add_params_options(sp)
    sp.add_argument("--point", required=True)
    sp.add_argument("--cap", type=int, required=True)
    sp.add_argument("--mode", choices=("gamma", "mcg"), default="gamma")
    sp.add_argument("--budget", type=int, default=10**6)
    sp.add_argument("--format", choices=("json", "dot", "text"), default="json")

    sp = subs.add_parser("oracle", help="brute-force capped orbit search")
    _add_params_options(sp)
    sp.add_argument("--x", required=True)
    sp.add_argument("--y", required=True)
    sp.add_argument("--cap", type=int, required=True)
    sp.add_argument("--mode", choices=("gamma", "mcg"), default="gamma")
    sp.add_argument("--budget", type=int, default=10**6)
    sp.add_argument("--format", choices=("json", "text"), default="json")

    for sub in subs.choices.values():
        sub._negative_number_matcher = _NEGATIVE_TUPLE
    return parser


def _cmd_params(args) -> int:
    params = _params_from_args(args)
    payload = {
        "alpha": _ser_coords(params.alpha),
        "beta": str(params.beta),
        "k": _ser_coords(params.source_k) if params.source_k else None,
    }
    _emit(
        payload,
        args.format,
        lambda p: [f"alpha = {p['alpha']}", f"beta = {p['beta']}", f"k = {p['k']}"],
    )
    return 0


def _cmd_check(args) -> int:
    params = _params_from_args(args)
    coords = _parse_ints(args.point, 3, "--point")
    r = residual(params, coords)
    payload = {
        "point": _ser_coords(coords),
        "residual": str(r),
        "on_surface": r == 0,
    }
    _emit(
        payload,
        args.format,
        lambda p: [f"residual = {p['residual']} (on surface: {p['on_surface']})"],
    )
    return 0 if r == 0 else 2


def _cmd_vieta(args) -> int:
    params = _params_from_args(args)
    point = make_point(params, _parse_ints(args.point, 3, "--point"))
    try:
        word = tuple(int(p) for p in args.word.split(",") if p.strip())
    except ValueError as exc:
        raise UsageError(f"--word must be comma-separated integers: {args.word!r}") from exc
    for letter in word:
        if letter not in (1, 2, 3):
            raise UsageError(f"move letters must be 1, 2 or 3: {word}")
    image = apply_word(params, point, word)
    payload = {
        "start": _ser_coords(point.coords),
        "word": _ser_word(word),
        "result": _ser_coords(image.coords),
        "height": str(image.height()),
    }
    _emit(payload, args.format, lambda p: [f"{p['start']} -> {p['result']}"])
    return 0


def _cmd_descend(args) -> int:
    params = _params_from_args(args)
    point = make_point(params, _parse_ints(args.point, 3, "--point"))
    result = descend(params, point, _moveset(args.mode), budget=args.budget)
    payload = {
        "mode": args.mode,
        "start": _ser_coords(point.coords),
        "explored": result.explored,
        "last_vertices": [
            {
                "point": _ser_coords(v.coords),
                "witness": _ser_word(word),
                "height": str(v.height()),
            }
            for v, word in result.last_vertices
        ],
    }
    _emit(
        payload,
        args.format,
        lambda p: [
            f"{lv['point']} via {lv['witness']}" for lv in p["last_vertices"]
        ],
    )
    return 0


def _cmd_exceptional(args) -> int:
    params = _params_from_args(args)
    moveset = _moveset(args.mode)
    points = (
        enumerate_core(params) if moveset is Moveset.VIETA else enumerate_core_mcg(params)
    )
    catalog = core_components(params, moveset)
    payload = {
        "mode": args.mode,
        "points": [_ser_coords(p.coords) for p in points],
        "components": [
            [_ser_coords(p.coords) for p in comp] for comp in catalog.components
        ],
    }
    _emit(
        payload,
        args.format,
        lambda p: [f"{len(p['points'])} points in {len(p['components'])} components"],
    )
    return 0


def _decide_one(params, mode: str, x_coords, y_coords, budget: int) -> dict:
    x = make_point(params, x_coords)
    y = make_point(params, y_coords)
    decider = decide_gamma if mode == "gamma" else decide_mcg
    cert = decider(params, x, y, descend_budget=budget, trace_budget=budget)
    return _cert_payload(cert, x, y, mode)


def _cmd_decide(args) -> int:
    params = _params_from_args(args)
    if args.batch is not None:
        if args.x is not None or args.y is not None:
            raise UsageError("--batch excludes --x/--y")
        queries = []
        with open(args.batch, "r", encoding="utf-8") as handle:
            for line in handle:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                try:
                    left, right = line.split(";")
                except ValueError as exc:
                    raise UsageError(f"bad batch line: {line!r}") from exc
                queries.append(
                    (
                        _parse_ints(left, 3, "batch x"),
                        _parse_ints(right, 3, "batch y"),
                    )
                )

        def run(query):
            return _decide_one(params, args.mode, query[0], query[1], args.budget)

        if args.jobs > 1:
            with ThreadPoolExecutor(max_workers=args.jobs) as pool:
                results = list(pool.map(run, queries))
        else:
            results = [run(q) for q in queries]
        for index, payload in enumerate(results):
            payload = dict(payload)
            payload["index"] = index
            _emit(payload, args.format, _cert_text)
        return 0

    if args.x is None or args.y is None:
        raise UsageError("decide needs --x and --y (or --batch)")
    payload = _decide_one(
        params,
        args.mode,
        _parse_ints(args.x, 3, "--x"),
        _parse_ints(args.y, 3, "--y"),
        args.budget,
    )
    _emit(payload, args.format, _cert_text)
    return 0


def _cmd_orbit_graph(args) -> int:
    params = _params_from_args(args)
    point = make_point(params, _parse_ints(args.point, 3, "--point"))
    graph = orbit_graph(
        params, point, args.cap, _moveset(args.mode), budget=args.budget
    )
    if args.format == "dot":
        print(_graph_dot(graph))
        return 0
    payload = {
        "mode": args.mode,
        "cap": args.cap,
        "truncated": graph.truncated,
        "vertices": [
            {"point": _ser_coords(v.coords), "height": str(v.height())}
            for v in graph.vertices
        ],
        "edges": [
            {
                "src": _ser_coords(e.src.coords),
                "dst": _ser_coords(e.dst.coords),
                "move": _ser_word(e.move),
            }
            for e in graph.edges
        ],
    }
    _emit(
        payload,
        args.format,
        lambda p: [
            f"{len(p['vertices'])} vertices, {len(p['edges'])} edges, "
            f"truncated={p['truncated']}"
        ],
    )
    return 0


def _cmd_oracle(args) -> int:
    params = _params_from_args(args)
    x = make_point(params, _parse_ints(args.x, 3, "--x"))
    y = make_point(params, _parse_ints(args.y, 3, "--y"))
    try:
        verdict = oracle_equivalent(
            params, x, y, args.cap, _moveset(args.mode), budget=args.budget
        )
    except ResourceCap:
        payload = {"state": "unknown", "cap": args.cap}
        _emit(payload, args.format, lambda p: [f"state: {p['state']}"])
        return 3
    payload = {
        "state": verdict.state,
        "cap": verdict.cap,
        "explored": verdict.explored,
    }
    if verdict.word is not None:
        payload["word"] = _ser_word(verdict.word)
    _emit(payload, args.format, lambda p: [f"state: {p['state']}"])
    return 0


_COMMANDS = {
    "params": _cmd_params,
    "check": _cmd_check,
    "vieta": _cmd_vieta,
    "descend": _cmd_descend,
    "exceptional": _cmd_exceptional,
    "decide": _cmd_decide,
    "orbit-graph": _cmd_orbit_graph,
    "oracle": _cmd_oracle,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        # Coordinates grow past any fixed size; lift the conversion guard
        # so they can be printed as decimal strings.
        sys.set_int_max_str_digits(0)
    except AttributeError:
        pass
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except NotOnSurface as exc:
        payload = {
            "error": "not_on_surface",
            "point": _ser_coords(exc.coords),
            "residual": str(exc.residual),
        }
        print(json.dumps(payload, sort_keys=True, separators=(", ", ": ")))
        return 2
    except ResourceCap as exc:
        payload = {"error": "resource_cap", "detail": str(exc)}
        print(json.dumps(payload, sort_keys=True, separators=(", ", ": ")))
        return 3


if __name__ == "__main__":
    sys.exit(main())
