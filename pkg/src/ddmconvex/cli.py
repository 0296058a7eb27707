"""Command-line front end (``ddmc`` / ``python -m ddmconvex``).

Exit codes: 0 all checks hold, 1 a property is violated, 2 usage or spec
error, 3 enumeration cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys

from .classify import DEFAULT_TOL, check_ddm_characterization, check_parallelogram, classify, is_ddm_convex
from .continuous import ContinuousFunction, fractional_restriction, verify_continuous_proximity, verify_r_ddm
from .errors import DescentError, ResourceLimitError, SpecError
from .functions import direct_sum, transform
from .gallery import run_gallery
from .fuzz import dumps, fuzz
from .minimize import scaling_minimize, steepest_descent, verify_proximity
from .spec_io import parse_box_arg, parse_function_spec

CLASS_ALIASES = {"ddm": "DDM", "lnat": "Lnat", "gdmc": "globalDMC", "ldmc": "localDMC",
                 "ic": "integrallyConvex", "submodular": "submodular", "sepdom": "separableConvexDomainOnly"}


class UsageError(Exception):
    pass


def _load(path):
    try:
        if path == "-":
            text = sys.stdin.read()
        elif path.lstrip().startswith("{"):
            text = path
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    return parse_function_spec(text)


def _lattice(obj, box=None):
    """Lattice oracle and box for a parsed spec (continuous specs are restricted at alpha = 1)."""
    if isinstance(obj, ContinuousFunction):
        box = box or obj.box
        if box is None:
            raise UsageError("continuous specs need a box (in the spec or via --box)")
        return fractional_restriction(obj, 1, box), box
    return obj, box or obj.universe


def _emit(args, payload, human):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


def _point(text, n):
    try:
        x = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"cannot read point {text!r}; use comma-separated integers") from None
    if len(x) != n:
        raise UsageError(f"point {text!r} has dimension {len(x)}, function has {n}")
    return x


def _verdict_line(v):
    s = f"{v.name:28s} {'holds' if v.holds else 'VIOLATED'}   pairs={v.pairs_checked}"
    if v.witness is not None:
        w = v.witness
        s += f"   witness x={list(w.x)}" + ("" if w.y is None else f" y={list(w.y)}")
    return s


def cmd_classify(args):
    obj = _load(args.spec)
    n = obj.n if isinstance(obj, ContinuousFunction) else obj.dim
    box = parse_box_arg(args.box, n) if args.box else None
    f, box = _lattice(obj, box)
    if box is None:
        raise UsageError("no box: give one in the spec or via --box")
    classes = None
    if args.classes:
        try:
            classes = [CLASS_ALIASES[c.strip().lower()] for c in args.classes.split(",")]
        except KeyError as exc:
            raise UsageError(f"unknown class {exc.args[0]!r}; choose from {', '.join(CLASS_ALIASES)}") from None
    rep = classify(f, box, classes, args.tol)
    verdicts = list(rep.verdicts.values())
    if args.char_variants:
        verdicts += [check_ddm_characterization(f, box, k, args.tol) for k in range(1, 6)]
    payload = {"box": box.to_dict(), "verdicts": [v.to_dict() for v in verdicts],
               "implication_violations": rep.implication_violations()}
    _emit(args, payload, "\n".join([f"box {list(box.lo)}..{list(box.hi)}"] + [_verdict_line(v) for v in verdicts]))
    return 0 if all(v.holds for v in verdicts) else 1


def cmd_minimize(args):
    obj = _load(args.spec)
    f, box = _lattice(obj)
    x0 = _point(args.start, f.dim)
    if args.algo == "descent":
        tr = steepest_descent(f, x0)
        payload = tr.to_dict()
        human = f"minimizer {list(tr.minimizer)} value {tr.values[-1]} after {tr.iterations} neighbourhood calls"
    else:
        tr = scaling_minimize(f, x0, args.k_inf)
        payload = tr.to_dict()
        human = (f"minimizer {list(tr.minimizer)} value {tr.value}; phases {tr.alphas}; "
                 f"{tr.total_calls} neighbourhood calls; certified={tr.certified}")
    if not args.trace:
        keep = ("minimizer", "value", "values", "iterations", "total_calls", "alphas", "certified")
        payload = {k: v for k, v in payload.items() if k in keep}
        if "values" in payload:
            payload["value"] = payload.pop("values")[-1]
    elif args.format == "human":
        path = payload.get("path") or payload.get("phase_minimizers")
        human += "\n" + "\n".join(f"  {p}" for p in path)
    _emit(args, payload, human)
    return 0


def cmd_verify(args):
    obj = _load(args.spec)
    prop = args.property
    if isinstance(obj, ContinuousFunction):
        box = parse_box_arg(args.box, obj.n) if args.box else obj.box
        if box is None:
            raise UsageError("continuous specs need a box")
        if prop == "rddm":
            v = verify_r_ddm(obj, args.alpha or 3, box, args.tol)
        elif prop == "continuous-proximity":
            v = verify_continuous_proximity(obj, box)
        else:
            f, box = _lattice(obj, box)
            v = _lattice_property(f, box, prop, args)
    else:
        f, box = _lattice(obj, parse_box_arg(args.box, obj.dim) if args.box else None)
        v = _lattice_property(f, box, prop, args)
    _emit(args, v.to_dict(), _verdict_line(v) + ("   (inconclusive)" if v.inconclusive else ""))
    return 0 if v.holds else 1


def _lattice_property(f, box, prop, args):
    if prop == "proximity":
        if not args.alpha:
            raise UsageError("--property proximity needs --alpha")
        return verify_proximity(f, args.alpha, box)
    if prop == "parallelogram":
        return check_parallelogram(f, box, tol=args.tol)
    if prop.startswith("closure="):
        op = prop.split("=", 1)[1]
        if op == "scale":
            g = transform(f, "scale", args.alpha or 2)
        elif op == "sign_flip":
            g = transform(f, "sign_flip", [-1] * f.dim)
        elif op == "permute":
            g = transform(f, "permute", list(reversed(range(f.dim))))
        elif op == "translate":
            g = transform(f, "translate", [1] * f.dim)
        elif op == "direct_sum":
            g = direct_sum(f, f)
        else:
            raise UsageError(f"unknown closure operation {op!r}")
        v = is_ddm_convex(g, g.universe, args.tol)
        v.name = f"DDM after {op}"
        return v
    raise UsageError(f"unknown property {prop!r}")


def cmd_gallery(args):
    ok, rep = run_gallery()
    lines = [f"{'pass' if r['pass'] else 'FAIL'}  {r['fixture']:14s} {r['claim']}" for r in rep["fixtures"]]
    lines.append(f"{rep['passed']}/{rep['total']} fixtures reproduced")
    _emit(args, rep, "\n".join(lines))
    return 0 if ok else 1


def cmd_fuzz(args):
    rep = fuzz(args.seed, args.count, args.family)
    if args.format == "json":
        print(dumps(rep))
    else:
        for inst in rep["instances"]:
            inst = dict(inst)
            inst.pop("spec")
            print(json.dumps(inst, sort_keys=True))
    bad = any(i.get("implication_violations") or i.get("agree") is False
              or (args.family == "2sep" and not i["DDM"]) for i in rep["instances"])
    return 1 if bad else 0


def build_parser():
    p = argparse.ArgumentParser(prog="ddmc", description="DDM-convexity toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("human", "json"), default="human")
        sp.add_argument("--tol", type=float, default=DEFAULT_TOL, help="violation slack")

    c = sub.add_parser("classify", help="classify a function over a box")
    c.add_argument("spec", help="path to a JSON spec, '-' for stdin, or inline JSON")
    c.add_argument("--box", help="lo..hi or l1,l2..h1,h2")
    c.add_argument("--classes", help="comma list of " + ",".join(CLASS_ALIASES))
    c.add_argument("--char-variants", action="store_true", help="also run the five DDM characterizations")
    common(c)

    m = sub.add_parser("minimize", help="steepest descent or scaling minimization")
    m.add_argument("spec")
    m.add_argument("--from", dest="start", required=True, help="start point, e.g. 3,-3")
    m.add_argument("--algo", choices=("descent", "scaling"), default="descent")
    m.add_argument("--k-inf", type=int, help="override the domain diameter used by scaling")
    m.add_argument("--trace", action="store_true")
    common(m)

    v = sub.add_parser("verify", help="check one property")
    v.add_argument("spec")
    v.add_argument("--property", required=True,
                   help="proximity | parallelogram | closure=<scale|sign_flip|permute|translate|direct_sum> "
                        "| rddm | continuous-proximity")
    v.add_argument("--alpha", type=int)
    v.add_argument("--box")
    common(v)

    g = sub.add_parser("gallery", help="reproduce the worked examples")
    common(g)

    z = sub.add_parser("fuzz", help="classify seeded random instances")
    z.add_argument("--seed", type=int, default=0)
    z.add_argument("--count", type=int, default=10)
    z.add_argument("--family", choices=("table", "quadratic", "2sep"), default="table")
    common(z)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    handlers = {"classify": cmd_classify, "minimize": cmd_minimize, "verify": cmd_verify,
                "gallery": cmd_gallery, "fuzz": cmd_fuzz}
    try:
        return handlers[args.command](args)
    except (SpecError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return 3
    except DescentError as exc:
        print(f"descent failed: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
