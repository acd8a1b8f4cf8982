"""Command-line interface: analyze, verify and identify.

Exit codes: 0 success, 1 verify found mismatches, 2 invalid or singular
input, 3 identification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional

from . import __version__
from .arith import FactoredInteger, factor
from .core import SingularModelError, WeierstrassModel, invariants
from .families import ALL_FAMILIES, FamilyParams, as_family, family_invariants
from .minimality import table_minimal
from .normalization import CanonicalParams, canonicalize
from .recognition import Identification, RecognitionError, identify
from .reduction import additive_primes
from .sweep import run_verify

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_UNIDENTIFIED = 0, 1, 2, 3


class InputError(ValueError):
    pass


def _rat(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _factored_json(f: FactoredInteger) -> dict:
    return {"sign": f.sign, "factors": [[str(p), e] for p, e in f.factors]}


def _int_json(n: int, with_factorization: bool = True) -> dict:
    out = {"value": str(n)}
    if with_factorization:
        out["factorization"] = _factored_json(factor(n)) if n else None
    return out


def _params_json(p: FamilyParams) -> dict:
    return {k: str(v) for k, v in (("a", p.a), ("b", p.b), ("d", p.d)) if v is not None}


def _model_json(m: WeierstrassModel) -> list:
    return [_rat(c) for c in m.coeffs]


def family_record(cp: CanonicalParams) -> dict:
    """The analysis of one canonical family member."""
    T = cp.family
    res = table_minimal(T, cp)
    rep = additive_primes(T, cp)
    fi = family_invariants(T, cp.params)
    inv = invariants(res.minimal_model)
    return {
        "family": T.value,
        "params": _params_json(cp.params),
        "decomposition": [str(v) for v in cp.decomposition] if cp.decomposition else None,
        "invariants": {
            "alpha": str(fi.alpha),
            "beta": str(fi.beta),
            "gamma": str(fi.gamma),
            "j": _rat(inv.j),
        },
        "u_T": str(res.uT),
        "branch": res.branch,
        "minimal_model": _model_json(res.minimal_model),
        "min_discriminant": {"value": str(res.min_discriminant),
                             "factorization": _factored_json(res.min_discriminant_factored)},
        "min_c4": _int_json(res.min_c4),
        "min_c6": _int_json(res.min_c6),
        "additive_primes": [{"prime": str(p), "row": row} for p, row in rep.additive.items()],
        "semistable": rep.semistable,
        "semistable_row": rep.semistable_row,
        "fixed_additive_set": (None if rep.allowed_set is None
                               else [str(p) for p in sorted(rep.allowed_set)]),
    }


def identification_json(ident: Identification) -> dict:
    out = {
        "family": ident.family.value,
        "params": _params_json(ident.params.params),
        "order": ident.order,
        "t": _rat(ident.t) if ident.t is not None else None,
        "tate_normal_form": None,
    }
    if ident.tnf is not None:
        out["tate_normal_form"] = {"f": _rat(ident.tnf.f), "g": _rat(ident.tnf.g),
                                   "model": _model_json(ident.tnf.model)}
    return out


def _parse_rationals(text: str, n: int, what: str) -> list[Fraction]:
    parts = [s.strip() for s in text.split(",")]
    if len(parts) != n:
        raise InputError(f"{what} needs {n} comma-separated values, got {len(parts)}")
    try:
        return [Fraction(s) for s in parts]
    except (ValueError, ZeroDivisionError):
        raise InputError(f"could not parse {what} {text!r}") from None


def _parse_point(text: str):
    if text.strip().lower() in ("inf", "infinity", "o", "0:1:0"):
        return None
    x, y = _parse_rationals(text, 2, "--point")
    return (x, y)


def _model_from_args(args) -> WeierstrassModel:
    return WeierstrassModel(*_parse_rationals(args.coeffs, 5, "--coeffs"))


def _family_params(args) -> tuple:
    T = as_family(args.family)
    vals = [args.a]
    if T.arity >= 2:
        if args.b is None:
            raise InputError(f"{T} needs --b")
        vals.append(args.b)
    if T.arity == 3:
        if args.d is None:
            raise InputError(f"{T} needs --d")
        vals.append(args.d)
    return T, tuple(vals)


def _emit(records: list[dict], args, text_render) -> None:
    if args.format == "json":
        for rec in records:
            print(json.dumps(rec, indent=2))
    else:
        for rec in records:
            print(text_render(rec))
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            for rec in records:
                fh.write(json.dumps(rec, separators=(",", ":")) + "\n")


def _fact_text(f: dict) -> str:
    if not f["factors"]:
        return str(f["sign"])
    body = " * ".join(p if e == 1 else f"{p}^{e}" for p, e in f["factors"])
    return ("-" if f["sign"] < 0 else "") + body


def _model_text(coeffs: list) -> str:
    return str(WeierstrassModel(*map(Fraction, coeffs)))


def _analysis_text(rec: dict) -> str:
    a = rec["analysis"]
    lines = []
    if "identification" in rec:
        ident = rec["identification"]
        lines.append(f"identified: {ident['family']} {ident['params']} (point order "
                     f"{ident['order']}, t = {ident['t']})")
    lines += [
        f"family: {a['family']}  params: {a['params']}",
        f"u_T = {a['u_T']}  ({a['branch']})",
        f"minimal model: {_model_text(a['minimal_model'])}",
        f"minimal discriminant: {a['min_discriminant']['value']}"
        f" = {_fact_text(a['min_discriminant']['factorization'])}",
        f"c4 = {a['min_c4']['value']}",
        f"c6 = {a['min_c6']['value']}",
        "additive primes: " + (", ".join(f"{r['prime']} [{r['row']}]"
                                         for r in a["additive_primes"]) or "none"),
        f"semistable: {'yes' if a['semistable'] else 'no'}",
    ]
    return "\n".join(lines)


def _identify_text(rec: dict) -> str:
    i = rec["identification"]
    lines = [f"family: {i['family']}", f"params: {i['params']}", f"point order: {i['order']}"]
    if i["t"] is not None:
        lines.append(f"t = {i['t']}")
    if i["tate_normal_form"]:
        lines.append(f"Tate normal form: {_model_text(i['tate_normal_form']['model'])}")
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    if args.coeffs is not None:
        if args.point is None:
            raise InputError("--coeffs needs --point")
        m = _model_from_args(args)
        P = _parse_point(args.point)
        ident = identify(m, P)
        record = {
            "version": __version__,
            "input": {"coeffs": _model_json(m),
                      "point": None if P is None else [_rat(P[0]), _rat(P[1])]},
            "identification": identification_json(ident),
            "analysis": family_record(ident.params),
        }
    else:
        if args.family is None or args.a is None:
            raise InputError("analyze needs either --family/--a or --coeffs/--point")
        T, raw = _family_params(args)
        cp = canonicalize(T, raw)
        record = {
            "version": __version__,
            "input": {"family": T.value, "params": [str(v) for v in raw]},
            "analysis": family_record(cp),
        }
    _emit([record], args, _analysis_text)
    return EXIT_OK


def cmd_identify(args) -> int:
    m = _model_from_args(args)
    P = _parse_point(args.point)
    ident = identify(m, P, prefer_full_torsion=args.prefer_full_torsion)
    record = {
        "version": __version__,
        "input": {"coeffs": _model_json(m),
                  "point": None if P is None else [_rat(P[0]), _rat(P[1])]},
        "identification": identification_json(ident),
    }
    _emit([record], args, _identify_text)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.families.strip().lower() == "all":
        fams = list(ALL_FAMILIES)
    else:
        fams = [as_family(s) for s in args.families.split(",") if s.strip()]
    if args.bound < 1:
        raise InputError("--bound must be positive")
    summary = run_verify(fams, args.bound, jobs=args.jobs, d_bound=args.d_bound,
                         extras=args.extras)
    records = []
    for T in fams:
        fails = [r for r in summary.failures if r.family == T.value]
        rec = {"family": T.value, "checked": summary.counts[T.value],
               "mismatches": sum(len(r.failures) for r in fails)}
        if fails:
            rec["first_counterexample"] = {"params": [str(v) for v in fails[0].params],
                                           "failures": [list(f) for f in fails[0].failures]}
        records.append(rec)
        line = f"{T.value}: {rec['checked']} tuples, {rec['mismatches']} mismatches"
        if fails:
            line += f"; first counterexample {fails[0].params}: {fails[0].failures[0]}"
        print(line)
    print(f"total: {sum(summary.counts.values())} tuples, {summary.mismatches} mismatches")
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            for rec in records:
                fh.write(json.dumps(rec, separators=(",", ":")) + "\n")
    return EXIT_OK if summary.mismatches == 0 else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minmodels",
        description="Global minimal models and additive reduction of the torsion families E_T.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    fam_names = ", ".join(T.value for T in ALL_FAMILIES)

    an = sub.add_parser("analyze", help="minimal model and reduction data for one curve")
    an.add_argument("--family", help=f"one of {fam_names}")
    an.add_argument("--a", type=int)
    an.add_argument("--b", type=int)
    an.add_argument("--d", type=int)
    an.add_argument("--coeffs", help="a1,a2,a3,a4,a6 (use --coeffs=... if a1 is negative)")
    an.add_argument("--point", help="x,y of a torsion point, or 'inf'")
    an.add_argument("--format", choices=("json", "text"), default="text")
    an.add_argument("--output", help="also write the record as newline-delimited JSON")
    an.set_defaults(func=cmd_analyze)

    ve = sub.add_parser("verify", help="sweep canonical tuples against the independent oracles")
    ve.add_argument("--families", default="all", help="comma-separated list or 'all'")
    ve.add_argument("--bound", type=int, required=True, help="|a|, |b| <= bound")
    ve.add_argument("--d-bound", type=int, default=None,
                    help="|d| <= this for C2 and C2xC2 (default: --bound)")
    ve.add_argument("--extras", action="store_true",
                    help="add sampled large a for C3 and 2-adic a for C4, C2xC2, C2xC4")
    ve.add_argument("--jobs", type=int, default=1)
    ve.add_argument("--output", help="write per-family summaries as newline-delimited JSON")
    ve.set_defaults(func=cmd_verify)

    idp = sub.add_parser("identify", help="recognise (T, params) from a model and torsion point")
    idp.add_argument("--coeffs", required=True, help="a1,a2,a3,a4,a6")
    idp.add_argument("--point", required=True, help="x,y or 'inf'")
    idp.add_argument("--prefer-full-torsion", action="store_true",
                     help="report C2xC2M instead of C2M when the curve has full 2-torsion")
    idp.add_argument("--format", choices=("json", "text"), default="text")
    idp.add_argument("--output")
    idp.set_defaults(func=cmd_identify)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RecognitionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNIDENTIFIED
    except SingularModelError as exc:
        msg = str(exc)
        print(msg if msg.startswith("singular") else f"singular: {msg}", file=sys.stderr)
        return EXIT_INVALID
    except (InputError, ValueError, TypeError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
