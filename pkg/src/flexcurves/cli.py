"""Command-line interface. Exit codes: 0 success, 1 a constraint failed or
a congruence was contradicted, 2 usage or input error."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import arith, cover, forms, genus, scheme, verdict
from .curve import CurveSpec, Surface
from .errors import FlexError


class _UsageError(FlexError):
    pass


def _range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(part) for part in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A,B, got {text!r}") from None
    return a, b


def _q(value: Fraction | int) -> str:
    return arith.format_rational(value)


def _emit(args: argparse.Namespace, payload, lines: Sequence[str]) -> None:
    if args.json:
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        for line in lines:
            print(line)


def _table(header: Sequence[str], rows: Sequence[Sequence[object]]) -> list[str]:
    cells = [list(map(str, header))] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells]


def _curve_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--ambient", choices=[s.value for s in Surface], default="cp2")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--degree", type=int)
    grp.add_argument("--bidegree", type=_pair, metavar="A,B")
    p.add_argument("--nonorientable", action="store_true", help="the curve surface is non-orientable")
    chi = p.add_mutually_exclusive_group()
    chi.add_argument("--chi", type=int, help="Euler characteristic of a non-orientable curve")
    chi.add_argument("--extremal", action="store_true", help="use the largest possible Euler characteristic")
    p.add_argument("--not-q-flexible", dest="q_flexible", action="store_false",
                   help="drop bounds that need transversality to the empty conic")


def _spec(args: argparse.Namespace) -> CurveSpec:
    if not args.nonorientable and (args.chi is not None or args.extremal):
        raise _UsageError("--chi and --extremal need --nonorientable")
    return CurveSpec(
        Surface(args.ambient), args.degree, args.bidegree,
        orientable=not args.nonorientable, chi_F=args.chi,
        q_flexible=args.q_flexible, extremal_chi=args.extremal,
    )


def _scheme_ambient(spec: CurveSpec, text: str) -> scheme.Ambient:
    if spec.ambient is Surface.HYPERBOLOID:
        return scheme.Ambient.HYPERBOLOID
    if spec.ambient is Surface.ELLIPSOID:
        return scheme.Ambient.ELLIPSOID
    return scheme.Ambient.PROJECTIVE_ODD if "J" in text else scheme.Ambient.PROJECTIVE_EVEN


# ------------------------------------------------------------ subcommands


def cmd_check(args: argparse.Namespace) -> int:
    spec = _spec(args)
    s = scheme.parse_scheme(args.scheme, _scheme_ambient(spec, args.scheme))
    v = verdict.check(spec, s)
    st = v.stats
    lines = [
        f"scheme {s}  (l={st.total_ovals}, l+={st.l_plus}, l0={st.l_zero}, l-={st.l_minus}, b0={s.b0})",
        *_table(["constraint", "bound", "observed", "status"],
                [(r.id, _q(r.bound), r.observed, r.status.value) for r in v.records]),
    ]
    if v.min_oval_bound is not None:
        lines.append(f"combined l0+l- bound: {_q(v.min_oval_bound)}")
    lines += [f"note: {n}" for n in v.notes]
    lines.append(f"overall: {v.overall.value}")
    _emit(args, v.to_json(), lines)
    return 0 if v.passed else 1


def cmd_bounds(args: argparse.Namespace) -> int:
    m = args.degree
    rows: list[tuple[str, Fraction]] = [("harnack", arith.evaluate_bound("harnack", m=m).value)]
    if m % 2:
        if m >= 3:
            rows.append(("vz", arith.evaluate_bound("vz", m=m).value))
        rows.append(("zvonilov", arith.evaluate_bound("zvonilov", m=m).value))
        rows.append(("s", arith.evaluate_bound("s", m=m).value))
        if args.all:
            rows.append(("ellipsoid", arith.evaluate_bound("ellipsoid", m=m).value))
            rows.append(("hyperboloid", arith.evaluate_bound("hyperboloid", a=m, b=m).value))
            chi = genus.genus_tilde(m * m).value
            rows.append(("novz-extremal", arith.evaluate_bound("novz", m=m, chi=chi).value))
            rows.append(("harnack-no-extremal", arith.evaluate_bound("harnack-no", chi=chi).value))
    payload = {"degree": m, "bounds": {k: _q(v) for k, v in rows}}
    if m >= 2:
        payload["h"] = arith.largest_prime_power(m)
    lines = [f"degree {m}" + (f", h = {payload['h']}" if "h" in payload else "")]
    lines += _table(["bound", "value"], [(k, _q(v)) for k, v in rows])
    _emit(args, payload, lines)
    return 0


def _compare_rows(lo: int, hi: int) -> list[dict]:
    rows = []
    for m in range(max(lo, 3), hi + 1):
        if m % 2 == 0:
            continue
        vz = arith.evaluate_bound("vz", m=m).value
        s = arith.evaluate_bound("s", m=m).value
        zv = arith.evaluate_bound("zvonilov", m=m).value
        rows.append({"m": m, "h": arith.largest_prime_power(m), "vz": _q(vz), "s": _q(s),
                     "zvonilov": _q(zv), "min": _q(min(vz, s, zv))})
    return rows


def cmd_compare(args: argparse.Namespace) -> int:
    if args.degrees is None and args.mp is None:
        raise _UsageError("compare needs --degrees LO:HI and/or --mp P")
    payload: dict = {}
    lines: list[str] = []
    if args.degrees is not None:
        rows = _compare_rows(*args.degrees)
        payload["rows"] = rows
        keys = ["m", "h", "vz", "s", "zvonilov", "min"]
        lines += _table(keys, [[r[k] for k in keys] for r in rows])
    if args.mp is not None:
        cert = arith.mp_sequence(args.mp)
        payload["mp"] = {"p": cert.p, "m": str(cert.m), "divisible_by_5": cert.divisible_by_5,
                         "divisible_by_7": cert.divisible_by_7, "h": str(cert.h),
                         "vz_minus_s": _q(cert.vz_minus_s)}
        lines += [
            f"m_{cert.p} = {cert.m}",
            f"  5 | m+2: {cert.divisible_by_5}   7 | m+2: {cert.divisible_by_7}",
            f"  h(m) = {cert.h}",
            f"  VZ(m) - S(m) = {_q(cert.vz_minus_s)}",
        ]
    _emit(args, payload, lines)
    return 0


def cmd_pipeline(args: argparse.Namespace) -> int:
    report = cover.pipeline(_spec(args))
    data = report.to_json()
    _emit(args, data, _table(["invariant", "value"], list(data.items())))
    return 0


def _load_form(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise _UsageError(f"cannot read form file: {exc}") from None
    except json.JSONDecodeError as exc:
        raise _UsageError(f"form file is not valid JSON: {exc}") from None


def cmd_brown(args: argparse.Namespace) -> int:
    payload: dict = {}
    if args.preset:
        bilinear, choices = forms.PRESETS[args.preset]
        betas = forms.enumerate_betas(bilinear, choices)
        payload.update(preset=args.preset, betas=sorted(betas))
    else:
        data = _load_form(args.form)
        if args.enumerate:
            if "phi_choices" not in data:
                raise _UsageError("--enumerate needs 'phi_choices' in the form file")
            betas = forms.enumerate_betas(data["bilinear"], data["phi_choices"])
            payload["betas"] = sorted(betas)
        else:
            result = forms.brown(forms.QuadraticForm.from_json(data))
            betas = frozenset({result.beta})
            payload.update(beta=result.beta, gauss_sum=str(result.gauss_sum), betas=[result.beta])
    lines = [f"brown invariants: {sorted(betas)}"]
    if "gauss_sum" in payload:
        lines.insert(0, f"gauss sum: {payload['gauss_sum']}")
    code = 0
    if args.gm is not None:
        sigma, e = args.gm
        gm = forms.guillou_marin_check(sigma, e, betas)
        payload["guillou_marin"] = {"sigma": sigma, "e": e, "required": gm.required, "verdict": gm.label}
        lines.append(f"sigma - e = {sigma - e} needs beta = {gm.required} mod 8: {gm.label}")
        code = 0 if gm.consistent else 1
    _emit(args, payload, lines)
    return code


def cmd_genus(args: argparse.Namespace) -> int:
    if args.range is None and args.construct is None:
        raise _UsageError("genus needs --range LO:HI and/or --construct E")
    payload: dict = {}
    lines: list[str] = []
    if args.range is not None:
        lo, hi = args.range
        rows = [(m, genus.genus_tilde(m)) for m in range(lo, hi + 1)]
        payload["table"] = [{"e": m, "value": g.value, "status": g.status.value} for m, g in rows]
        lines += _table(["e", "g~(e)", "status"], [(m, g.value, g.status.value) for m, g in rows])
    if args.construct is not None:
        c = genus.plan_construction(args.construct)
        e, chi = c.achieved
        payload["construction"] = {
            "e_target": args.construct, "local_genus": c.local_genus, "local_self_int": c.local_self_int,
            "partners": [p.value for p in c.partners], "achieved": {"e": e, "chi": chi},
            "whitney_massey_ok": c.local_admissible(),
        }
        lines.append(f"e = {args.construct}: {c.describe()} -> (e, chi) = ({e}, {chi})")
    _emit(args, payload, lines)
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    if args.filter and args.degree is None:
        raise _UsageError("--filter pass needs --degree")
    odd = args.degree is None or args.degree % 2 == 1
    amb = scheme.Ambient.PROJECTIVE_ODD if odd else scheme.Ambient.PROJECTIVE_EVEN
    schemes = scheme.enumerate_schemes(args.ovals, amb)
    if args.filter:
        spec = CurveSpec(Surface.CP2, args.degree)
        schemes = [s for s in schemes if verdict.check(spec, s).passed]
    texts = [str(s) for s in schemes]
    _emit(args, {"ovals": args.ovals, "count": len(texts), "schemes": texts}, texts + [f"count: {len(texts)}"])
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="flexcurves", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit one JSON document")
        return p

    p = add("check", "test a real scheme against every applicable bound")
    _curve_args(p)
    p.add_argument("--scheme", required=True)
    p.set_defaults(func=cmd_check)

    p = add("bounds", "evaluate the closed-form bounds for a degree")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--all", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = add("compare", "tabulate VZ against S, or certify a member of the m_p family")
    p.add_argument("--degrees", type=_range, metavar="LO:HI")
    p.add_argument("--mp", type=int, metavar="P")
    p.set_defaults(func=cmd_compare)

    p = add("pipeline", "invariants of the branched double cover")
    _curve_args(p)
    p.set_defaults(func=cmd_pipeline)

    p = add("brown", "Brown invariants of a quadratic refinement")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--preset", choices=sorted(forms.PRESETS))
    src.add_argument("--form", metavar="FILE.json")
    p.add_argument("--enumerate", action="store_true", help="range over 'phi_choices' in the form file")
    p.add_argument("--gm", nargs=2, type=int, metavar=("SIGMA", "E"), help="run the Guillou-Marin check")
    p.set_defaults(func=cmd_brown)

    p = add("genus", "non-orientable genus table and constructions")
    p.add_argument("--range", type=_range, metavar="LO:HI")
    p.add_argument("--construct", type=int, metavar="E")
    p.set_defaults(func=cmd_genus)

    p = add("enumerate", "list all schemes with a given number of ovals")
    p.add_argument("--ovals", type=int, required=True)
    p.add_argument("--degree", type=int)
    p.add_argument("--filter", choices=["pass"])
    p.set_defaults(func=cmd_enumerate)
    return parser


def _join_ranges(argv: Sequence[str]) -> list[str]:
    # "--range -5:3" would otherwise read -5:3 as an option
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in ("--range", "--degrees"):
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = _join_ranges(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (FlexError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
