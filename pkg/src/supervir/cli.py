"""Command-line front end.

Exit status: 0 on pass (or successful evidence), 1 on a failed
verification, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import morphisms as mm
from .algebra import Family, bracket, check_super_jacobi
from .errors import SuperVirError
from .modules import ModuleSpec, act, check_module_axioms, vector_class
from .poly import VarPoly
from .scalar import QuadRat, SpecPoint
from .structure import (
    DEFAULT_POINTS,
    GAMMA,
    XI,
    check_closure,
    freeness_check,
    probe_simplicity,
    probe_submodule,
)
from .syntax import parse_element, parse_scalar, parse_vector

USAGE_ERROR = 2


class UsageError(Exception):
    pass


def _points_help():
    pts = "; ".join(f"({p.q0}, {p.alpha0})" for p in DEFAULT_POINTS)
    return f"default seed list of (q0, alpha0) points: {pts}; lambda0 = q0^2"


def parse_quad(text: str, flag: str) -> QuadRat:
    try:
        s = parse_scalar(text)
        if not s.is_constant():
            raise ValueError
        return s.constant_value()
    except (SuperVirError, ValueError):
        raise UsageError(f"{flag}: {text!r} is not a constant of the form a+b*w") from None


def parse_point(text: str, flag: str) -> SpecPoint:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"{flag}: expected 'q0,alpha0', got {text!r}")
    q0, a0 = (parse_quad(p.strip(), flag) for p in parts)
    if q0.is_zero():
        raise UsageError(f"{flag}: q0 must be nonzero (lambda = q0^2 lies in C*)")
    return SpecPoint(q0, a0)


def parse_params(text: str, family, flag="--params") -> ModuleSpec:
    if text == "symbolic":
        return ModuleSpec.symbolic(family)
    return ModuleSpec.specialized(family, parse_point(text, flag))


def parse_module(text: str, flag: str) -> ModuleSpec:
    """``family[/variant]:params`` e.g. ``ramond:1,2``, ``ns:symbolic``,
    ``ramond/restricted:w,3``."""
    head, _, params = text.partition(":")
    family, _, variant = head.partition("/")
    try:
        fam = Family(family)
    except ValueError:
        raise UsageError(f"{flag}: unknown family {family!r} (ramond or ns)") from None
    spec = parse_params(params or "symbolic", fam, flag)
    if variant in ("", "plain"):
        return spec
    if variant == "restricted":
        if fam is not Family.RAMOND:
            raise UsageError(f"{flag}: the restricted variant needs the ramond family")
        return spec.restricted()
    if variant == "twisted":
        return spec.twisted()
    raise UsageError(f"{flag}: unknown variant {variant!r}")


def build_spec(args) -> ModuleSpec:
    fam = Family(args.family)
    variant = getattr(args, "variant", "plain")
    if variant == "restricted" and fam is not Family.RAMOND:
        raise UsageError("--variant restricted requires --family ramond (NS acting on a Ramond carrier)")
    spec = parse_params(args.params, fam)
    if getattr(args, "alpha", None) is not None:
        spec = spec.with_alpha(parse_scalar(args.alpha))
    if variant == "restricted":
        spec = spec.restricted()
    elif variant == "twisted":
        root = parse_scalar(args.twist)
        if not root.is_unit():
            raise UsageError("--twist must be a nonzero unit c*q^k (the square root of the twist lambda)")
        spec = spec.twisted(root)
    return spec


def _positive(name):
    def check(text):
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer") from None
        if value < 1:
            raise argparse.ArgumentTypeError(f"{name} must be at least 1")
        return value

    return check


def _emit(args, report=None, text=None, payload=None):
    if args.json:
        data = report.to_dict() if report is not None else payload
        out = json.dumps(data, indent=2, sort_keys=True)
        if args.json == "-":
            print(out)
        else:
            with open(args.json, "w") as fh:
                fh.write(out + "\n")
            if text:
                print(text)
    elif text:
        print(text)
    if report is not None and not args.json:
        print(report.summary())
        for w in report.witnesses:
            print("  witness:", json.dumps(w, sort_keys=True))
    if report is not None:
        return 0 if report.passed else 1
    return 0


def cmd_act(args):
    spec = build_spec(args)
    elem = parse_element(args.element, spec.acting_family)
    vec = parse_vector(args.vector, spec.family)
    out = act(elem, vec, spec)
    return _emit(args, text=str(out), payload={"schema": 1, "result": str(out), "module": spec.describe()})


def cmd_bracket(args):
    fam = Family(args.family) if args.family else None
    a = parse_element(args.a, fam)
    b = parse_element(args.b, fam)
    out = bracket(a, b)
    return _emit(args, text=str(out), payload={"schema": 1, "result": str(out)})


def cmd_verify_algebra(args):
    fams = [Family(args.family)] if args.family else [Family.RAMOND, Family.NS]
    return _emit(args, report=check_super_jacobi(args.window, fams))


def cmd_verify_module(args):
    return _emit(args, report=check_module_axioms(build_spec(args), args.window, args.max_deg))


_MAPS = {
    "small-phi": ("ramond", lambda s: mm.small_phi(s.with_alpha(0))),
    "small-phi-inverse": ("ramond", lambda s: mm.small_phi_inverse(s.with_alpha(Fraction(1, 2)).parity_flipped())),
    "psi": ("ns", lambda s: mm.psi(s.with_alpha(0))),
    "psi-inverse": ("ns", lambda s: mm.psi_inverse(s.with_alpha(Fraction(1, 2)).parity_flipped())),
    "big-phi": ("ns", lambda s: mm.big_phi(s)),
    "big-phi-inverse": ("ns", lambda s: mm.big_phi_inverse(mm.big_phi(s).codomain)),
}


def cmd_verify_iso(args):
    family, build = _MAPS[args.map]
    spec = parse_params(args.params, Family(family))
    return _emit(args, report=mm.verify_intertwiner(build(spec), args.window, args.max_deg))


def cmd_search(args):
    A = parse_module(args.A, "--A")
    B = parse_module(args.B, "--B")
    if A.acting_family is not B.acting_family:
        raise UsageError("--A and --B must be modules over the same algebra")
    maps = mm.intertwiner_search(A, B, args.window, args.max_deg)
    payload = {
        "schema": 1,
        "check": "intertwiner-search",
        "A": A.describe(),
        "B": B.describe(),
        "bounds": {"window": args.window, "max_deg": args.max_deg},
        "dimension": len(maps),
        "basis": [m.describe() for m in maps],
        "note": f"no intertwiner beyond this space up to degree {args.max_deg}, window {args.window}",
    }
    lines = [f"dimension: {len(maps)}  (degree <= {args.max_deg}, window {args.window})"]
    for n, m in enumerate(maps):
        lines.append(f"basis map {n} (parity {m.parity}):")
        for (i, k), image in sorted(m.matrix.items()):
            tag = vector_class(A.family).tags[i]
            src = VarPoly.monomial(tag, k)
            if A.family is Family.RAMOND and i == 1:
                src = f"x*{src}"
            lines.append(f"  {'even' if i == 0 else 'odd'} {src} -> {image}")
    return _emit(args, text="\n".join(lines), payload=payload)


def cmd_probe_submodule(args):
    pred = XI if args.submodule == "xi" else GAMMA
    closure = check_closure(pred, args.window, args.max_deg)
    point = parse_point(args.point, "--point")
    if point.alpha0:
        raise UsageError("--point must have alpha0 = 0")
    seed = parse_vector(args.seed, pred.family) if args.seed else None
    span = probe_submodule(pred, point, seed, min(args.window, 2), args.max_words, max(args.max_deg, 8))
    ok = closure.passed and span.passed
    if args.json:
        _emit(args, payload={"schema": 1, "closure": closure.to_dict(), "span": span.to_dict()})
    else:
        print(closure.summary())
        print(span.summary())
        for w in closure.witnesses + span.witnesses:
            print("  witness:", json.dumps(w, sort_keys=True))
    return 0 if ok else 1


def cmd_probe_simplicity(args):
    points = DEFAULT_POINTS
    if args.seed_list:
        points = tuple(parse_point(p.strip(), "--seed-list") for p in args.seed_list.split(";") if p.strip())
    report = probe_simplicity(
        args.family,
        points,
        window=args.window,
        max_words=args.max_words,
        max_deg=args.max_deg,
        via_sigma=args.via_sigma,
    )
    return _emit(args, report=report)


def cmd_check_freeness(args):
    spec = parse_params(args.params, Family(args.family))
    return _emit(args, report=freeness_check(spec, args.max_deg))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supervir",
        description="Exact checks for the super-Virasoro modules Omega_R and Omega_NS.",
        epilog="Scalars: q (sqrt of lambda), a (alpha), w (sqrt 2). " + _points_help(),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, window=4, max_deg=4):
        p.add_argument("--json", nargs="?", const="-", default=None, metavar="PATH",
                       help="emit a JSON report (to stdout, or to PATH)")
        if window is not None:
            p.add_argument("--window", type=_positive("--window"), default=window)
        if max_deg is not None:
            p.add_argument("--max-deg", type=_positive("--max-deg"), default=max_deg)

    def module_opts(p):
        p.add_argument("--family", choices=["ramond", "ns"], default="ramond")
        p.add_argument("--params", default="symbolic", help="'symbolic' or 'q0,alpha0'")
        p.add_argument("--alpha", default=None, help="override alpha with a scalar expression")
        p.add_argument("--variant", choices=["plain", "twisted", "restricted"], default="plain")
        p.add_argument("--twist", default="q", help="square root of the twist lambda (twisted variant)")

    p = sub.add_parser("act", help="act with an algebra element on a vector")
    module_opts(p)
    common(p, window=None, max_deg=None)
    p.add_argument("element")
    p.add_argument("vector")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("bracket", help="super-bracket of two algebra elements")
    p.add_argument("--family", choices=["ramond", "ns"], default=None)
    common(p, window=None, max_deg=None)
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("verify-algebra", help="graded Jacobi identity on basis triples")
    p.add_argument("--family", choices=["ramond", "ns"], default=None)
    common(p, max_deg=None)
    p.set_defaults(func=cmd_verify_algebra)

    p = sub.add_parser("verify-module", help="module axioms on a generator/monomial grid")
    module_opts(p)
    common(p)
    p.set_defaults(func=cmd_verify_module)

    p = sub.add_parser("verify-iso", help="check a builtin map intertwines the actions")
    p.add_argument("--map", choices=sorted(_MAPS), required=True)
    p.add_argument("--params", default="symbolic", help="'symbolic' or 'q0,alpha0'")
    common(p, window=3)
    p.set_defaults(func=cmd_verify_iso)

    p = sub.add_parser("search-intertwiner", help="solve for degree-bounded intertwiners A -> B")
    p.add_argument("--A", required=True, help="family[/variant]:params, e.g. ramond:1,1")
    p.add_argument("--B", required=True, help="family[/variant]:params, e.g. ramond/restricted:w,3")
    common(p, window=2)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("probe-submodule", help="closure of Xi or Gamma and a cyclic-span probe")
    p.add_argument("--submodule", choices=["xi", "gamma"], required=True)
    p.add_argument("--point", default="1,0", help="specialization q0,0 for the span probe")
    p.add_argument("--seed", default=None, help="seed vector (default t, resp. x)")
    p.add_argument("--max-words", type=_positive("--max-words"), default=8)
    common(p, window=6, max_deg=5)
    p.set_defaults(func=cmd_probe_submodule)

    p = sub.add_parser("probe-simplicity", help="cyclic spans from monomial seeds reach 1")
    p.add_argument("--family", choices=["ramond", "ns"], default="ramond")
    p.add_argument("--via-sigma", action="store_true", help="NS acting on the Ramond carrier")
    p.add_argument("--max-words", type=_positive("--max-words"), default=6)
    p.add_argument("--seed-list", default=None, help="';'-separated q0,alpha0 points")
    common(p, window=2, max_deg=8)
    p.set_defaults(func=cmd_probe_simplicity)

    p = sub.add_parser("check-freeness", help="free over C[L0] (rank 2) / U(h) (rank 1)")
    p.add_argument("--family", choices=["ramond", "ns"], default="ramond")
    p.add_argument("--params", default="symbolic")
    common(p, window=None, max_deg=5)
    p.set_defaults(func=cmd_check_freeness)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"supervir {args.command}: error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except SuperVirError as exc:
        print(f"supervir {args.command}: error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
