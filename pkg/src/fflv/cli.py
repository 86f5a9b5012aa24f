"""Command-line front end.

One subcommand per module: ``roots``, ``word``, ``fflv``, ``tiling``,
``lusztig``, ``crystal``, ``verify``, ``conjecture``.  Everything prints to
stdout unless ``--out FILE`` is given; serialization is canonical, so
identical invocations produce byte-identical output.  Exit codes: 0 on
success, 1 when a verification fails, 2 on bad flags or bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .crystal import (
    CrystalGraph,
    conjecture_search,
    crystal_to_dot,
    pb_graph,
    sl3_bgt,
    sl3_blt,
)
from .fflv import fflv_hrep, fflv_points
from .polytope import lattice_points_auto
from .roots import ik_word, lexmax_word, lexmin_word, positive_roots, root_enumeration
from .tiling import (
    build_tiling,
    lusztig_hrep,
    lusztig_points,
    tiling_to_json,
    tiling_to_svg,
)
from .verify import (
    run_suite,
    verify_dyck_correspondence,
    verify_fundamental,
    verify_word_counts,
    verify_main,
)


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _emit(text: str, out: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_lambda(raw: str, n: int) -> tuple[int, ...]:
    try:
        parts = [int(x) for x in raw.split(",") if x != ""]
    except ValueError:
        raise ValueError(f"bad weight list {raw!r}")
    if len(parts) > n or any(x < 0 for x in parts):
        raise ValueError(f"need at most {n} nonnegative entries in {raw!r}")
    return tuple(parts) + (0,) * (n - len(parts))


def _parse_word(raw: str, n: int) -> tuple[int, ...]:
    if raw == "lexmin":
        return lexmin_word(n)
    if raw == "lexmax":
        return lexmax_word(n)
    if raw.startswith("ik:"):
        return ik_word(n, int(raw[3:]))
    try:
        return tuple(int(x) for x in raw.split(","))
    except ValueError:
        raise ValueError(f"bad word spec {raw!r}")


def _word_str(word: Sequence[int]) -> str:
    return "(" + ",".join(map(str, word)) + ")"


# ---------------------------------------------------------------------------
# subcommands


def cmd_roots(args) -> int:
    roots = positive_roots(args.n)
    if args.format == "json":
        _emit(_dumps([[r.i, r.j] for r in roots]), args.out)
    else:
        _emit("\n".join(str(r) for r in roots), args.out)
    return 0


def cmd_word(args) -> int:
    if args.ik is not None:
        word = ik_word(args.n, args.ik)
    elif args.lexmax:
        word = lexmax_word(args.n)
    elif args.word is not None:
        word = _parse_word(args.word, args.n)
    else:
        word = lexmin_word(args.n)
    lines = [_word_str(word)]
    if args.enumerate:
        lines.append(" ".join(str(r) for r in root_enumeration(word, n=args.n)))
    _emit("\n".join(lines), args.out)
    return 0


def cmd_fflv(args) -> int:
    lam = _parse_lambda(args.lam, args.n)
    if args.mode == "hrep":
        P = fflv_hrep(args.n, lam)
        if args.format == "json":
            _emit(_dumps(P.to_json()), args.out)
        else:
            lines = [
                " + ".join(f"x{i}" for i, c in enumerate(row) if c) + f" <= {b}"
                for row, b in P.rows
            ]
            _emit("\n".join(lines), args.out)
    else:
        pts = fflv_points(args.n, lam)
        if args.mode == "count":
            _emit(str(len(pts)), args.out)
        elif args.format == "json":
            _emit(pts.dumps(), args.out)
        else:
            _emit("\n".join(" ".join(map(str, p)) for p in pts), args.out)
    return 0


def cmd_tiling(args) -> int:
    word = _parse_word(args.word, args.n)
    T = build_tiling(word, n=args.n)
    if args.format == "svg":
        _emit(tiling_to_svg(T), args.out)
    elif args.format == "json":
        _emit(_dumps(tiling_to_json(T)), args.out)
    else:
        lines = [f"n={T.n} m={T.m} word={_word_str(T.word)} tiles={len(T.tiles)}"]
        lines += [f"  t{t.id}: {t.labels} root {t.root}" for t in T.tiles]
        _emit("\n".join(lines), args.out)
    return 0


def cmd_lusztig(args) -> int:
    word = _parse_word(args.word, args.n)
    lam = _parse_lambda(args.lam, args.n)
    if args.mode == "hrep":
        P = lusztig_hrep(word, lam, n=args.n)
        _emit(_dumps(P.to_json()) if args.format == "json" else str(P), args.out)
        return 0
    if args.box is not None:
        pts = lattice_points_auto(lusztig_hrep(word, lam, n=args.n), args.box)
    else:
        pts = lusztig_points(word, lam, n=args.n)
    if args.mode == "count":
        _emit(str(len(pts)), args.out)
    elif args.format == "json":
        _emit(pts.dumps(), args.out)
    else:
        _emit("\n".join(" ".join(map(str, p)) for p in pts), args.out)
    return 0


def _emit_crystal(g: CrystalGraph, args) -> None:
    if args.format == "dot":
        _emit(crystal_to_dot(g), args.out)
    elif args.format == "json":
        _emit(_dumps(g.to_json()), args.out)
    else:
        lines = [f"vertices={len(g.vertices)} edges={len(g.edges)}"]
        lines += [
            f"  {','.join(map(str, u))} -{a}-> {','.join(map(str, v))}"
            for u, a, v in sorted(g.edges)
        ]
        _emit("\n".join(lines), args.out)


def cmd_crystal_sl3(args) -> int:
    build = sl3_blt if args.lt else sl3_bgt
    _emit_crystal(build(args.a, args.b), args)
    return 0


def cmd_crystal_pb(args) -> int:
    lam = _parse_lambda(args.lam, args.n)
    _emit_crystal(pb_graph(args.n, lam), args)
    return 0


def cmd_conjecture(args) -> int:
    lam = _parse_lambda(args.lam, args.n)
    sigma = None
    if args.sigma:
        sigma = tuple(int(x) for x in args.sigma.split(","))
    res = conjecture_search(args.n, lam, sigma=sigma, mode=args.mode, budget=args.budget)
    if args.format == "json":
        _emit(
            _dumps(
                {
                    "mode": res.mode,
                    "complete": res.complete,
                    "valid": len(res.graphs),
                    "selections": res.selections,
                    "graphs": [g.to_json() for g in res.graphs],
                }
            ),
            args.out,
        )
    else:
        _emit(
            f"mode={res.mode} complete={res.complete} valid={len(res.graphs)} "
            f"selections={res.selections}",
            args.out,
        )
    return 0


def cmd_verify(args) -> int:
    if args.what == "main":
        reports = [verify_main(args.n, _parse_lambda(args.lam, args.n))]
    elif args.what == "fundamental":
        reports = [verify_fundamental(args.n, args.k, args.r)]
    elif args.what == "words":
        reports = [verify_word_counts(args.n, _parse_lambda(args.lam, args.n))]
    elif args.what == "dyck":
        reports = [verify_dyck_correspondence(args.n, args.k)]
    else:  # suite
        config = None
        if args.config:
            with open(args.config) as fh:
                config = json.load(fh)
        kinds = args.kinds.split(",") if args.kinds else None
        reports = run_suite(config, kinds=kinds)
    if args.json:
        _emit(_dumps([r.to_json() for r in reports]), args.out)
    else:
        passed = sum(r.passed for r in reports)
        lines = [str(r) for r in reports]
        lines.append(f"{passed}/{len(reports)} passed")
        _emit("\n".join(lines), args.out)
    return 0 if all(r.passed for r in reports) else 1


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fflv",
        description="FFLV and Lusztig polytopes, rhombic tilings, and crystal graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, lam=False, fmt=None):
        p.add_argument("--n", type=int, required=True)
        if lam:
            p.add_argument("--lambda", dest="lam", required=True,
                           help="comma-separated weights; trailing zeros optional")
        if fmt:
            p.add_argument("--format", choices=fmt, default=fmt[0])
        p.add_argument("--out", default=None)

    p = sub.add_parser("roots", help="positive roots in canonical order")
    common(p, fmt=("text", "json"))
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("word", help="reduced words of the longest element")
    p.add_argument("--n", type=int, required=True)
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--lexmin", action="store_true")
    grp.add_argument("--lexmax", action="store_true")
    grp.add_argument("--ik", type=int, default=None, metavar="K")
    grp.add_argument("--word", default=None, help="explicit comma-separated letters")
    p.add_argument("--enumerate", action="store_true",
                   help="also print the induced order on positive roots")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_word)

    p = sub.add_parser("fflv", help="FFLV polytope of a weight")
    common(p, lam=True, fmt=("text", "json"))
    p.add_argument("--mode", choices=("points", "hrep", "count"), default="points")
    p.set_defaults(func=cmd_fflv)

    p = sub.add_parser("tiling", help="rhombic tiling of a reduced word")
    common(p, fmt=("text", "json", "svg"))
    p.add_argument("--word", required=True,
                   help="lexmin | lexmax | ik:K | comma-separated letters")
    p.set_defaults(func=cmd_tiling)

    p = sub.add_parser("lusztig", help="Lusztig polytope of a reduced word")
    common(p, lam=True, fmt=("text", "json"))
    p.add_argument("--word", required=True,
                   help="lexmin | lexmax | ik:K | comma-separated letters")
    p.add_argument("--mode", choices=("points", "hrep", "count"), default="points")
    p.add_argument("--box", type=int, default=None,
                   help="override the initial enumeration box")
    p.set_defaults(func=cmd_lusztig)

    p = sub.add_parser("crystal", help="crystal graphs on FFLV lattice points")
    csub = p.add_subparsers(dest="which", required=True)
    q = csub.add_parser("sl3", help="the explicit crystals B^>(a,b) / B^<(a,b)")
    grp = q.add_mutually_exclusive_group(required=True)
    grp.add_argument("--gt", action="store_true")
    grp.add_argument("--lt", action="store_true")
    q.add_argument("--a", type=int, required=True)
    q.add_argument("--b", type=int, required=True)
    q.add_argument("--format", choices=("dot", "json", "text"), default="dot")
    q.add_argument("--out", default=None)
    q.set_defaults(func=cmd_crystal_sl3)
    q = csub.add_parser("pb", help="all candidate moves (usually a multigraph)")
    common(q, lam=True, fmt=("dot", "json", "text"))
    q.set_defaults(func=cmd_crystal_pb)

    p = sub.add_parser("conjecture", help="search for crystal structures")
    common(p, lam=True, fmt=("text", "json"))
    p.add_argument("--mode", choices=("exhaustive", "greedy"), default="exhaustive")
    p.add_argument("--sigma", default=None, help="color preference, e.g. 2,1")
    p.add_argument("--budget", type=int, default=10_000_000)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("verify", help="replay verification claims")
    vsub = p.add_subparsers(dest="what", required=True)
    q = vsub.add_parser("main")
    common(q, lam=True)
    q = vsub.add_parser("fundamental")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--r", type=int, default=1)
    q.add_argument("--out", default=None)
    q = vsub.add_parser("words")
    common(q, lam=True)
    q = vsub.add_parser("dyck")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--out", default=None)
    q = vsub.add_parser("suite")
    q.add_argument("--config", default=None, help="JSON file overriding the default sweep")
    q.add_argument("--kinds", default=None, help="comma-separated claim kinds to run")
    q.add_argument("--out", default=None)
    for q in vsub.choices.values():
        q.add_argument("--json", action="store_true", help="emit the JSON report array")
        q.set_defaults(func=cmd_verify)

    return parser


def dispatch(argv: Sequence[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
