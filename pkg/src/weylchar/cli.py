"""Command-line front end.

Commands: char, tensor, branch, verify, datum. Weights are comma-separated
fundamental coordinates (no spaces). Output is an aligned text table or
JSON with an embedded run manifest; JSON output is byte-identical across
identical invocations except for the timing fields.

Exit codes: 0 success, 1 identity-verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time

from . import __version__
from .cache import ENV_VAR, CharacterCache
from .characters import tensor_decompose, weyl_dimension
from .errors import (
    InternalConsistencyError,
    TheoremViolationError,
    WeylCharError,
)
from .langlands import (
    langlands_branching,
    langlands_branching_direct,
    langlands_branching_tensor,
    minuscule_branching_closed_form,
    verify_branching_theorem,
    verify_structure,
)
from .root_data import RootDatum, cartan_matrix, modified_datum, root_scaling_map
from .weyl import rho_l, steinberg_weight

_TYPE_RE = re.compile(r"^([A-Ga-g])([0-9]+)$")


class UsageError(WeylCharError):
    pass


def _parse_type(text: str) -> RootDatum:
    if text.startswith("@"):
        with open(text[1:]) as fh:
            return RootDatum.from_json(json.load(fh))
    m = _TYPE_RE.match(text)
    if not m:
        raise UsageError(
            f"bad type {text!r}: expected a family+rank like B2, or @file.json "
            "with a Cartan datum"
        )
    return RootDatum(cartan_matrix(m.group(1).upper(), int(m.group(2))))


def _parse_weight(text: str, rank: int) -> tuple[int, ...]:
    try:
        w = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"bad weight {text!r}: expected comma-separated integers") from None
    if len(w) != rank:
        raise UsageError(f"weight {text!r} has {len(w)} coordinates; rank is {rank}")
    return w


def _manifest(command: str, params: dict, started: float, cache: CharacterCache | None) -> dict:
    # everything volatile (timing, cache temperature) lives under "runtime";
    # the rest of the output is byte-identical across identical invocations
    return {
        "command": command,
        "params": params,
        "version": __version__,
        "runtime": {
            "wall_time_s": round(time.monotonic() - started, 6),
            "cache_hits": cache.hits if cache else 0,
            "cache_misses": cache.misses if cache else 0,
        },
    }


def _emit_json(obj: dict) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _table(rows: list[tuple], headers: tuple) -> str:
    cells = [tuple(str(c) for c in r) for r in [headers, *rows]]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _fmt_weight(w) -> str:
    return "(" + ",".join(str(x) for x in w) + ")"


def _cmd_char(args) -> int:
    started = time.monotonic()
    datum = _parse_type(args.type)
    lam = _parse_weight(args.weight, datum.rank)
    cache = CharacterCache(args.cache_dir, enabled=not args.no_cache)
    wf = cache.character(datum, lam)
    dim = wf.dimension()
    if args.format == "json":
        out = wf.to_json()
        out["highest_weight"] = list(lam)
        out["dimension"] = str(dim)
        out["manifest"] = _manifest("char", {"type": args.type, "weight": args.weight}, started, cache)
        _emit_json(out)
    else:
        print(f"character  type {args.type}  highest weight {_fmt_weight(lam)}  dim {dim}")
        print(_table([(_fmt_weight(w), m) for w, m in wf.sorted_entries()], ("weight", "mult")))
    return 0


def _cmd_tensor(args) -> int:
    started = time.monotonic()
    datum = _parse_type(args.type)
    lam = _parse_weight(args.weight1, datum.rank)
    mu = _parse_weight(args.weight2, datum.rank)
    vc = tensor_decompose(datum, lam, mu)
    if args.format == "json":
        out = vc.to_json()
        out["factors"] = [list(lam), list(mu)]
        out["manifest"] = _manifest(
            "tensor", {"type": args.type, "weight1": args.weight1, "weight2": args.weight2}, started, None
        )
        _emit_json(out)
    else:
        dims = weyl_dimension(datum, lam) * weyl_dimension(datum, mu)
        print(f"tensor  type {args.type}  {_fmt_weight(lam)} x {_fmt_weight(mu)}  dim {dims}")
        rows = [
            (_fmt_weight(w), c, weyl_dimension(datum, w))
            for w, c in vc.sorted_entries()
        ]
        print(_table(rows, ("highest weight", "mult", "dim")))
    return 0


def _cmd_branch(args) -> int:
    started = time.monotonic()
    datum = _parse_type(args.type)
    md = modified_datum(datum, args.ell if args.ell else datum.cartan.d)
    lam = _parse_weight(args.weight, datum.rank)
    agree = True
    n_part = []
    if args.method == "direct":
        m = langlands_branching_direct(md, lam)
    elif args.method == "tensor":
        m = langlands_branching_tensor(md, lam)
    elif args.method == "closed":
        m = minuscule_branching_closed_form(md, lam)
    else:
        result = langlands_branching(md, lam)
        m = result.direct
        agree = result.agree
        n_part = result.complementary.sorted_entries()
    dual_hk = md.dual.height_key
    m_rows = sorted(m.items(), key=lambda kv: (-dual_hk(kv[0]), kv[0]))
    if args.format == "json":
        out = {
            "lambda": list(lam),
            "ell": md.ell,
            "m": [{"mu": list(mu), "mult": str(c)} for mu, c in m_rows],
            "n": [{"nu": list(nu), "mult": str(c)} for nu, c in n_part],
            "routes_agree": agree,
            "manifest": _manifest(
                "branch",
                {"type": args.type, "ell": md.ell, "weight": args.weight, "method": args.method},
                started,
                None,
            ),
        }
        _emit_json(out)
    else:
        print(
            f"branching  type {args.type}  ell {md.ell}  lambda {_fmt_weight(lam)}"
            f"  method {args.method}" + ("" if agree else "  ROUTES DISAGREE")
        )
        print(_table([(_fmt_weight(mu), c) for mu, c in m_rows], ("mu (dual)", "mult")))
        if n_part:
            print(_table([(_fmt_weight(nu), c) for nu, c in n_part], ("nu (complement)", "mult")))
    return 0 if agree else 1


def _cmd_verify(args) -> int:
    started = time.monotonic()
    datum = _parse_type(args.type)
    md = modified_datum(datum, args.ell if args.ell else datum.cartan.d)
    structure_failures = verify_structure(md)
    report = verify_branching_theorem(md, args.bound, include_steinberg=True, jobs=args.jobs)
    ok = report.passed and not structure_failures
    if args.format == "json":
        out = report.to_json()
        out["structure_failures"] = structure_failures
        out["passed"] = ok
        out["manifest"] = _manifest(
            "verify",
            {"type": args.type, "ell": md.ell, "bound": args.bound, "jobs": args.jobs},
            started,
            None,
        )
        _emit_json(out)
    else:
        print(
            f"verify  type {args.type}  ell {md.ell}  bound {args.bound}: "
            f"{report.lambdas_checked} weights, {report.steinberg_checked} Steinberg checks, "
            f"max dimension {report.max_dimension}, {report.wall_time_s:.2f}s"
        )
        for f in structure_failures + report.failures:
            print(f"FAIL {f}")
        print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def _cmd_datum(args) -> int:
    started = time.monotonic()
    datum = _parse_type(args.type)
    md = modified_datum(datum, args.ell if args.ell else datum.cartan.d)
    scaling = root_scaling_map(md)
    if args.format == "json":
        out = {
            "datum": datum.to_json(),
            "d": datum.cartan.d,
            "ell": md.ell,
            "l": list(md.l),
            "rho_l": list(rho_l(md)),
            "shift_weight": list(steinberg_weight(md)),
            "dual": md.dual.to_json(),
            "positive_roots": [
                {"weight": list(r.weight), "coords": list(r.coords)} for r in datum.positive_roots
            ],
            "root_scaling": [
                {"root": list(s.root.weight), "image": list(s.image.weight), "factor": s.factor}
                for s in scaling
            ],
            "manifest": _manifest("datum", {"type": args.type, "ell": md.ell}, started, None),
        }
        _emit_json(out)
    else:
        print(f"type {args.type}  rank {datum.rank}  d {datum.cartan.d}  ell {md.ell}")
        print("cartan matrix:")
        for row in datum.cartan.matrix:
            print("  " + "  ".join(f"{x:3d}" for x in row))
        print(f"symmetrizers {_fmt_weight(datum.cartan.symmetrizers)}  l {_fmt_weight(md.l)}")
        rows = [
            (_fmt_weight(s.root.weight), _fmt_weight(s.root.coords), s.factor, _fmt_weight(s.image.weight))
            for s in scaling
        ]
        print(_table(rows, ("root", "over simple roots", "l_alpha", "dual image")))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylchar",
        description="Exact Weyl characters, tensor products, and Langlands branching",
    )
    parser.add_argument("--version", action="version", version=f"weylchar {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("type", help="family+rank like B2, or @file.json with a Cartan datum")
        p.add_argument("--format", choices=("json", "table"), default="table")

    p = sub.add_parser("char", help="weight multiplicities of an irreducible character")
    common(p)
    p.add_argument("--weight", required=True, help="comma-separated fundamental coordinates")
    p.add_argument("--no-cache", action="store_true", help="bypass the on-disk cache")
    p.add_argument("--cache-dir", default=None, help=f"cache directory (default ${ENV_VAR} or ~/.cache/weylchar)")
    p.set_defaults(func=_cmd_char)

    p = sub.add_parser("tensor", help="decompose a tensor product of irreducibles")
    common(p)
    p.add_argument("weight1", help="first highest weight")
    p.add_argument("weight2", help="second highest weight")
    p.set_defaults(func=_cmd_tensor)

    p = sub.add_parser("branch", help="Langlands branching multiplicities")
    common(p)
    p.add_argument("--ell", type=int, default=None, help="modification level (default: d)")
    p.add_argument("--weight", required=True)
    p.add_argument("--method", choices=("direct", "tensor", "closed", "all"), default="all")
    p.set_defaults(func=_cmd_branch)

    p = sub.add_parser("verify", help="run the branching/Steinberg/scaling identity battery")
    common(p)
    p.add_argument("--ell", type=int, default=None)
    p.add_argument("--bound", type=int, default=2, help="coordinate cap for the sweep")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers for the sweep")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("datum", help="print Cartan data, positive roots, and the root-scaling map")
    common(p)
    p.add_argument("--ell", type=int, default=None)
    p.set_defaults(func=_cmd_datum)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse usage errors already print a message
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (TheoremViolationError, InternalConsistencyError) as exc:
        print(f"identity verification failed: {exc}", file=sys.stderr)
        return 1
    except WeylCharError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
