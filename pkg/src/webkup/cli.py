"""Command-line surface.

Sign strings use the characters o, +, -, x on the command line; state
strings use 1, 0, m for the states +1, 0, -1.  Laurent values print in
the canonical text form, least to greatest exponent never mixed: highest
power first, e.g. "q^2 + 1 + q^-2".

Exit codes: 0 success, 1 a verification report failed, 2 usage errors
(bad flags, malformed strings, unusable input files).
"""

from __future__ import annotations

import argparse
import json
import sys

from .qlaurent import LaurentPoly
from .webs import LadderWeb, format_states, parse_states, weight_of_signs
from .flows import bracket, enumerate_flows, expansion
from .planar import rewrite_bracket
from .growth import dominant_states, growth, web_space
from .howe import inverse_growth, format_word, verify_relations
from .tableaux import is_balanced, is_semistandard, state_to_filling
from .dualcan import dual_canonical_basis, search_counterexample
from .render import render
from .cache import Workspace
from .acceptance import CRITERIA, run_all


class UsageError(Exception):
    pass


def _sign_string(s: str) -> str:
    try:
        weight_of_signs(s)
    except (ValueError, KeyError):
        raise argparse.ArgumentTypeError(
            f"bad sign string {s!r}: use characters o + - x"
        )
    return s


def _state_string(s: str):
    try:
        return parse_states(s)
    except (ValueError, KeyError):
        raise argparse.ArgumentTypeError(
            f"bad state string {s!r}: use characters 1 0 m"
        )


def _read_web(path: str) -> LadderWeb:
    try:
        text = sys.stdin.read() if path == "-" else open(path).read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}")
    try:
        return LadderWeb.from_json(json.loads(text))
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"{path} is not a ladder web: {exc}")


def _emit(doc) -> None:
    print(json.dumps(doc, sort_keys=True, indent=2))


def _poly_out(p: LaurentPoly, q1: bool):
    return p.eval_at_one() if q1 else str(p)


def _workspace(args) -> Workspace | None:
    return Workspace.from_env() if getattr(args, "cache", False) else None


# -- per-boundary artifact payloads (also the cached representations) --------


def basis_payload(signs: str) -> dict:
    space = web_space(signs)
    return {
        "signs": signs,
        "webs": {
            format_states(J): w.to_json() for J, w in space.basis.items()
        },
    }


def expansions_payload(signs: str) -> dict:
    space = web_space(signs)
    return {
        format_states(J): {
            format_states(k): str(v) for k, v in vec.items() if not v.is_zero()
        }
        for J, vec in space.expansions.items()
    }


def dualcan_payload(signs: str) -> dict:
    db = dual_canonical_basis(signs)
    d_rows: dict[str, dict[str, str]] = {}
    for (J, Jp), v in db.d_matrix.items():
        d_rows.setdefault(format_states(J), {})[format_states(Jp)] = str(v)
    return {
        "elements": {
            format_states(J): {
                format_states(k): str(v) for k, v in vec.items()
            }
            for J, vec in db.elements.items()
        },
        "d_matrix": d_rows,
    }


def blocks_payload(signs: str) -> dict:
    space = web_space(signs)
    mult: dict[str, int] = {}
    for w in space.basis.values():
        for f in enumerate_flows(w):
            key = format_states(f.boundary)
            mult[key] = mult.get(key, 0) + 1
    return {
        "multiplicities": mult,
        "sum_of_squares": sum(c * c for c in mult.values()),
    }


_BUILDERS = {
    "basis": basis_payload,
    "expansions": expansions_payload,
    "dualcan": dualcan_payload,
    "blocks": blocks_payload,
}


def _artifact(args, kind: str, signs: str) -> dict:
    ws = _workspace(args)
    if ws is None:
        return _BUILDERS[kind](signs)
    return ws.fetch(kind, signs, lambda: _BUILDERS[kind](signs))


# -- subcommands --------------------------------------------------------------


def cmd_enumerate(args) -> int:
    payload = _artifact(args, "basis", args.signs)
    if args.json:
        _emit(payload)
        return 0
    for key in sorted(payload["webs"]):
        web = payload["webs"][key]
        print(f"{key} {json.dumps(web, sort_keys=True, separators=(',', ':'))}")
    return 0


def cmd_eval(args) -> int:
    web = _read_web(args.closed)
    if not web.is_closed():
        raise UsageError("eval needs a closed web (all boundary labels 0 or 3)")
    if args.route in ("statesum", "both"):
        value = bracket(web)
    else:
        value = rewrite_bracket(web)
    if args.route == "both" and rewrite_bracket(web) != value:
        print("FAIL: the two evaluators disagree", file=sys.stderr)
        return 1
    print(_poly_out(value, args.q1))
    return 0


def cmd_expand(args) -> int:
    if (args.web is None) == (args.boundary is None):
        raise UsageError("expand needs a web file or --boundary, not both")
    if args.boundary is not None:
        payload = _artifact(args, "expansions", args.boundary)
        if args.q1:
            payload = {
                J: {k: LaurentPoly.parse(v).eval_at_one() for k, v in row.items()}
                for J, row in payload.items()
            }
        _emit(payload)
        return 0
    web = _read_web(args.web)
    if not web.has_closed_bottom():
        raise UsageError("expand needs a web with a closed bottom")
    vec = expansion(web)
    _emit(
        {
            format_states(k): _poly_out(v, args.q1)
            for k, v in vec.items()
            if not v.is_zero()
        }
    )
    return 0


def cmd_dualcan(args) -> int:
    payload = _artifact(args, "dualcan", args.signs)
    if args.q1:
        payload = {
            part: {
                J: {k: LaurentPoly.parse(v).eval_at_one() for k, v in row.items()}
                for J, row in table.items()
            }
            for part, table in payload.items()
        }
    _emit(payload)
    return 0


def cmd_howe_verify(args) -> int:
    try:
        count = verify_relations(args.k, args.k)
    except AssertionError as exc:
        print(f"k={args.k}: FAIL: {exc}")
        return 1
    print(f"k={args.k}: {count} relation instances hold: PASS")
    return 0


def cmd_center_dim(args) -> int:
    from .tableaux import center_dim

    print(center_dim(args.signs))
    return 0


def cmd_blocks(args) -> int:
    _emit(_artifact(args, "blocks", args.signs))
    return 0


def cmd_tableau(args) -> int:
    signs, J = args.signs, args.states
    try:
        filling = state_to_filling(signs, J)
    except ValueError as exc:
        raise UsageError(str(exc))
    balanced = is_balanced(filling)
    _emit(
        {
            "rows": [list(r) for r in zip(*filling)] if balanced else None,
            "columns": {"1": list(filling[0]), "0": list(filling[1]), "-1": list(filling[2])},
            "balanced": balanced,
            "semistandard": is_semistandard(filling),
        }
    )
    return 0


def cmd_inverse_growth(args) -> int:
    signs, J = args.signs, args.states
    if J not in set(dominant_states(signs)):
        raise UsageError(f"state {format_states(J)} is not dominant for {signs}")
    word, lam0 = inverse_growth(growth(signs, J).web)
    if args.pretty:
        print(format_word(word, lam0))
        return 0
    _emit([{"sign": s.sign, "index": s.index, "power": s.power} for s in word])
    return 0


def cmd_search(args) -> int:
    rep = search_counterexample(
        max_strands=args.max_strands,
        budget_s=args.budget_s,
        stop_at_first=args.stop_at_first,
    )
    print(rep.summary())
    return 0


def cmd_render(args) -> int:
    if (args.web is None) == (args.signs is None):
        raise UsageError("render needs a web file or a boundary with a state")
    if args.web is not None:
        svg = render(_read_web(args.web))
    else:
        if args.states is None:
            raise UsageError("render with a boundary also needs a state string")
        if args.states not in set(dominant_states(args.signs)):
            raise UsageError("render needs a dominant state (a basis web)")
        grown = growth(args.signs, args.states)
        svg = render(grown.web, None if args.no_flow else grown.flow)
    if args.out == "-":
        sys.stdout.write(svg)
    else:
        with open(args.out, "w") as fh:
            fh.write(svg)
    return 0


def cmd_selftest(args) -> int:
    numbers = None
    if args.only:
        try:
            numbers = sorted({int(tok) for tok in args.only.split(",")})
        except ValueError:
            raise UsageError(f"--only wants comma-separated integers, got {args.only!r}")
        unknown = [k for k in numbers if k not in CRITERIA]
        if unknown:
            raise UsageError(f"no such criteria: {unknown}")
    results = run_all(numbers)
    return 0 if all(r.passed for r in results) else 1


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="webkup",
        description="Exact computations in the sl3 web calculus.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        p = sub.add_parser(name, **kw)
        p.set_defaults(func=fn)
        return p

    p = add("enumerate", cmd_enumerate, help="list the basis webs of a boundary")
    p.add_argument("signs", type=_sign_string)
    p.add_argument("--json", action="store_true", help="emit the full JSON artifact")
    p.add_argument("--cache", action="store_true")

    p = add("eval", cmd_eval, help="evaluate a closed web")
    p.add_argument("--closed", required=True, metavar="WEB_JSON",
                   help="path to the closed web (JSON; - for stdin)")
    p.add_argument("--q1", action="store_true", help="evaluate at q=1")
    p.add_argument("--route", choices=("statesum", "rewrite", "both"),
                   default="statesum")

    p = add("expand", cmd_expand, help="boundary expansion of a web")
    p.add_argument("web", nargs="?", metavar="WEB_JSON")
    p.add_argument("--boundary", type=_sign_string,
                   help="emit the expansion matrix of a whole boundary")
    p.add_argument("--q1", action="store_true")
    p.add_argument("--cache", action="store_true")

    p = add("dualcan", cmd_dualcan, help="dual canonical vectors and d-matrix")
    p.add_argument("signs", type=_sign_string)
    p.add_argument("--q1", action="store_true")
    p.add_argument("--cache", action="store_true")

    p = add("howe-verify", cmd_howe_verify, help="check the generator relations")
    p.add_argument("--k", type=int, required=True, metavar="K",
                   help="number of columns (weights summing to K)")

    p = add("center-dim", cmd_center_dim, help="center dimension of a boundary")
    p.add_argument("signs", type=_sign_string)

    p = add("blocks", cmd_blocks, help="block multiplicities at a root of unity")
    p.add_argument("signs", type=_sign_string)
    p.add_argument("--cache", action="store_true")

    p = add("tableau", cmd_tableau, help="the column filling of a state")
    p.add_argument("signs", type=_sign_string)
    p.add_argument("states", type=_state_string)

    p = add("inverse-growth", cmd_inverse_growth,
            help="generator word hitting a basis web")
    p.add_argument("signs", type=_sign_string)
    p.add_argument("states", type=_state_string)
    p.add_argument("--pretty", action="store_true",
                   help="print the display form instead of JSON")

    p = add("search-counterexample", cmd_search,
            help="scan for a basis web that is not dual canonical")
    p.add_argument("--max-strands", type=int, default=10)
    p.add_argument("--budget-s", type=float, default=None,
                   help="seconds (default: WEBKUP_SEARCH_BUDGET or 1800)")
    p.add_argument("--stop-at-first", action="store_true")

    p = add("render", cmd_render, help="draw a web as SVG")
    p.add_argument("--web", metavar="WEB_JSON")
    p.add_argument("signs", nargs="?", type=_sign_string)
    p.add_argument("states", nargs="?", type=_state_string)
    p.add_argument("-o", "--out", default="-", help="output file (- for stdout)")
    p.add_argument("--no-flow", action="store_true",
                   help="skip the canonical flow overlay")

    p = add("selftest", cmd_selftest, help="run the acceptance criteria")
    p.add_argument("--only", metavar="N,N,...",
                   help="run a subset, e.g. --only 1,2,9")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
