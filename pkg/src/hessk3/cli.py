"""Command-line interface: ``hessk3 <command> ...``.

Exit status is 0 when every check passes, 1 when a check fails and 2 on
malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Optional, Sequence

from . import linalg as la
from .cubic import SylvesterSurface, disc32, eckardt_data, parse_lambda
from .lattice import LatticeError, Lattice, discriminant_form, reduce_even_binary, slh_embed
from .lattice.binary import check_embedding
from .moduli import (
    FamilySpec,
    ModuliError,
    catalog,
    catalog_point,
    divisor_membership,
    invariants_point,
    parse_point,
    sigma_point,
    singular_locus_component,
    weighted_limit,
    wps_equal,
    wps_is_singular,
)
from .repro import ALL_TAGS, TASKS, Report, run_task

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(ValueError):
    pass


def _emit(args, obj: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(text)


# -- repro -------------------------------------------------------------------


def run_tags(tags: Sequence[str], jobs: int = 1) -> list[Report]:
    """Run tasks, concurrently when ``jobs > 1``; results keep the tag order."""
    if jobs <= 1 or len(tags) <= 1:
        return [run_task(t) for t in tags]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run_task, tags))


def cmd_repro(args) -> int:
    tag = args.tag
    if tag == "all":
        tags = ALL_TAGS
    elif tag in TASKS:
        tags = [tag]
    else:
        raise InputError(f"unknown tag {tag!r}; choose from: all, {', '.join(TASKS)}")
    reports = run_tags(tags, args.jobs)
    ok = all(r.passed for r in reports)
    if args.json:
        obj = {
            "status": "pass" if ok else "fail",
            "reports": [r.to_json(timing=not args.no_timing) for r in reports],
        }
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        for r in reports:
            print(r.to_text())
        if len(reports) > 1:
            npass = sum(r.passed for r in reports)
            print(f"{npass}/{len(reports)} tasks passed")
    return EXIT_OK if ok else EXIT_FAIL


# -- invariants -----------------------------------------------------------------


def _catalog_name(p) -> Optional[str]:
    for e in catalog():
        q = catalog_point(e)
        if q is not None and wps_equal(p, q):
            return e.name
    return None


def cmd_invariants(args) -> int:
    try:
        lam = parse_lambda(args.lam)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad --lambda: {exc}") from exc
    try:
        s = SylvesterSurface(lam)
        sig = sigma_point(lam)
        pt = invariants_point(lam)
    except (ValueError, ModuliError) as exc:
        raise InputError(str(exc)) from exc
    flags = divisor_membership(pt, tritangent=args.tritangent)
    d32 = disc32(s)
    obj = {
        "lambda": [str(x) for x in lam],
        "sigma": sig.to_json(),
        "point": pt.to_json(),
        "flags": flags,
        "disc32": str(d32),
        "wps_singular": wps_is_singular(pt),
    }
    if all(lam):
        obj["eckardt_points"] = eckardt_data(s)[0]
    name = _catalog_name(pt)
    if name:
        obj["catalog_name"] = name
    lines = [
        f"lambda   = ({', '.join(obj['lambda'])})",
        f"sigma    = {sig}",
        f"I-point  = {pt}",
        f"disc32   = {d32}",
    ]
    if "eckardt_points" in obj:
        lines.append(f"Eckardt  = {obj['eckardt_points']}")
    lines += [f"{k:14s} = {'true' if v else 'false'}" for k, v in flags.items()]
    if name:
        lines.append(f"catalog  = {name}")
    _emit(args, obj, "\n".join(lines))
    return EXIT_OK


# -- lattice -------------------------------------------------------------------


def _read_json_arg(text: str):
    if text.startswith("@"):
        text = Path(text[1:]).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc


def cmd_lattice(args) -> int:
    obj = _read_json_arg(args.gram)
    try:
        gram = [[int(x) for x in row] for row in obj]
        lat = Lattice(gram)
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad Gram matrix: {exc}") from exc
    form = discriminant_form(lat)
    pos, neg = lat.signature
    rep = {
        "gram": la.to_json_obj(lat.gram),
        "rank": lat.rank,
        "det": str(lat.det),
        "signature": [pos, neg],
        "even": lat.is_even,
        "invariant_factors": [str(d) for d in form.invariant_factors],
        "q_values": [f"{q} mod 2" for q in form.q_values],
    }
    if lat.rank == 2 and neg == 0 and lat.is_even:
        rep["reduced"] = la.to_json_obj(reduce_even_binary(lat).gram)
    lines = [f"{k}: {v}" for k, v in rep.items()]
    _emit(args, rep, "\n".join(lines))
    return EXIT_OK


# -- slh -------------------------------------------------------------------------


def cmd_slh(args) -> int:
    n, m, a = args.n, args.m, args.a
    try:
        got = slh_embed(n, m, a)
    except LatticeError as exc:
        raise InputError(str(exc)) from exc
    if got is None:
        _emit(args, {"n": n, "m": m, "a": a, "embedding": None}, "no embedding")
        return EXIT_OK
    ok = check_embedding(n, m, a, got)
    x, y = got
    obj = {"n": n, "m": m, "a": a, "embedding": {"x": x, "y": y}, "verified": ok}
    _emit(args, obj, f"x = {tuple(x)}\ny = {tuple(y)}\nverified: {'yes' if ok else 'NO'}")
    return EXIT_OK if ok else EXIT_FAIL


# -- wps ---------------------------------------------------------------------------


def cmd_wps(args) -> int:
    try:
        if args.op == "eq":
            if len(args.points) != 2:
                raise InputError("wps eq needs two points")
            p, q = (parse_point(t) for t in args.points)
            res = wps_equal(p, q)
            _emit(args, {"p": p.to_json(), "q": q.to_json(), "equal": res}, "equal" if res else "not equal")
            return EXIT_OK
        if len(args.points) != 1:
            raise InputError("wps singular needs one point")
        p = parse_point(args.points[0])
    except ModuliError as exc:
        raise InputError(str(exc)) from exc
    res = wps_is_singular(p)
    comp = singular_locus_component(p)
    _emit(
        args,
        {"point": p.to_json(), "singular": res, "component": comp},
        f"singular ({comp})" if res else "smooth point",
    )
    return EXIT_OK


# -- limit ---------------------------------------------------------------------------


def cmd_limit(args) -> int:
    obj = _read_json_arg(args.family)
    try:
        fam = FamilySpec.from_json(obj)
        lim = weighted_limit(fam)
    except (ModuliError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad family: {exc}") from exc
    out = {
        "point": lim.point.to_json(),
        "exponent": str(lim.exponent),
        "d": lim.d,
        "valuations": [None if v is None else v for v in lim.valuations],
        "flags": divisor_membership(lim.point),
    }
    _emit(args, out, f"limit = {lim.point}  (e = {lim.exponent}, d = {lim.d})")
    return EXIT_OK


# -- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hessk3", description="Hessian K3 lattices and cubic surface moduli.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("repro", help="run a named reproduction")
    r.add_argument("tag")
    r.add_argument("--json", action="store_true")
    r.add_argument("--jobs", type=int, default=1, help="worker processes for 'all'")
    r.add_argument("--no-timing", action="store_true", help="omit timings from JSON")
    r.set_defaults(func=cmd_repro)

    i = sub.add_parser("invariants", help="invariants of a Sylvester form")
    i.add_argument("--lambda", dest="lam", required=True, help='five rationals, e.g. "1,1,1,1,1/4"')
    i.add_argument("--tritangent", action="store_true", help="also evaluate the tritangent divisor")
    i.add_argument("--json", action="store_true")
    i.set_defaults(func=cmd_invariants)

    lt = sub.add_parser("lattice", help="report on a Gram matrix")
    lt.add_argument("--gram", required=True, help="JSON matrix or @file")
    lt.add_argument("--report", action="store_true")
    lt.add_argument("--json", action="store_true")
    lt.set_defaults(func=cmd_lattice)

    s = sub.add_parser("slh", help="embed [[2n,a],[a,2m]] into U+U(2)+A2(-2)")
    s.add_argument("n", type=int)
    s.add_argument("m", type=int)
    s.add_argument("a", type=int)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_slh)

    w = sub.add_parser("wps", help="weighted projective points")
    w.add_argument("op", choices=["eq", "singular"])
    w.add_argument("points", nargs="+")
    w.add_argument("--json", action="store_true")
    w.set_defaults(func=cmd_wps)

    lm = sub.add_parser("limit", help="limit of a degenerating family")
    lm.add_argument("--family", required=True, help="JSON or @file")
    lm.add_argument("--json", action="store_true")
    lm.set_defaults(func=cmd_limit)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InputError, LatticeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
