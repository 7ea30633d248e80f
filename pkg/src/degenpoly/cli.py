"""Command line front end: print tables, evaluate, verify identities.

Exit codes: 0 on success, 1 when an identity check fails, 2 on usage
or input errors (including evaluation at a pole).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .rational import as_rational, is_scalar
from .poly import LambdaPoly, XPoly
from .series import NonInvertibleError
from .ratfunc import PoleError, RationalFn
from .render import value_to_json
from .identities import REGISTRY, run_all, verdict_to_dict
from . import families as fam

_SEQUENCE_FAMILIES = {
    "bell_deg": fam.bell_deg,
    "phi_deg": fam.bell_partial_deg,
    "bel_second": fam.bell_second_deg,
    "geom_deg": fam.geometric_deg,
    "geom_r": fam.geometric_r,
    "geometric": fam.geometric,
    "bell": fam.bell_poly,
    "bernoulli_deg": fam.bernoulli_deg,
    "bernoulli_poly": fam.bernoulli_poly,
    "eulerian": fam.eulerian_poly,
    "falling": fam.falling_factorial,
    "falling_lambda": fam.falling_factorial_lambda,
}

_TRIANGLE_FAMILIES = {
    "stirling1": "S1",
    "stirling2": "S2",
    "stirling1_deg": "S1deg",
    "stirling2_deg": "S2deg",
}

_DEFAULT_N_MAX = 32


class _Ratio:
    # a rational-function value whose parts still depend on λ after
    # substituting x; kept as a plain pair for rendering
    __slots__ = ("num", "den")

    def __init__(self, num, den):
        self.num = num
        self.den = den


def _rat_or_sym(text: str):
    if text == "sym":
        return None
    try:
        return as_rational(text)
    except (ValueError, ZeroDivisionError, TypeError):
        raise argparse.ArgumentTypeError(f"expected a rational p/q or 'sym', got {text!r}")


def _family_value(family: str, n: int, r):
    if family == "geom_r":
        return fam.geometric_r(n, r)
    return _SEQUENCE_FAMILIES[family](n)


def _specialise(value, lam, x):
    """Substitute the requested rational values into a family member."""
    if isinstance(value, LambdaPoly):
        return value.eval(lam) if lam is not None else value
    if isinstance(value, XPoly):
        if lam is not None:
            value = value.eval_lambda(lam)
        if x is not None:
            out = value.eval_x(x)
            return out.constant_value() if lam is not None else out
        return value
    if isinstance(value, RationalFn):
        if lam is not None and x is not None:
            return value.eval(x, lam)
        if lam is not None:
            return RationalFn(value.num.eval_lambda(lam), value.den.eval_lambda(lam))
        if x is not None:
            return _Ratio(value.num.eval_x(x), value.den.eval_x(x))
        return value
    raise TypeError(f"cannot specialise {value!r}")


def _to_text(v, latex=False) -> str:
    if is_scalar(v):
        return LambdaPoly.const(v).latex() if latex else str(v)
    if isinstance(v, _Ratio):
        if latex:
            return f"\\frac{{{v.num.latex()}}}{{{v.den.latex()}}}"
        return f"({v.num}) / ({v.den})"
    return v.latex() if latex else v.text()


def _to_json_value(v):
    if isinstance(v, _Ratio):
        return {"num": value_to_json(v.num), "den": value_to_json(v.den)}
    return value_to_json(v)


def _write(text: str, path: str | None):
    if path in (None, "-"):
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_table(args) -> int:
    family = args.family
    if args.n is not None:
        ns = [args.n]
    else:
        ns = list(range((args.n_max if args.n_max is not None else _DEFAULT_N_MAX) + 1))
    if any(n < 0 for n in ns):
        raise ValueError("n must be nonnegative")

    rows = []
    if family in _TRIANGLE_FAMILIES:
        kind = _TRIANGLE_FAMILIES[family]
        for n in ns:
            for k in range(n + 1):
                v = fam.stirling(kind, n, k)
                rows.append({"n": n, "k": k, "value": _specialise(v, args.lam, None)})
        header = ["n", "k", "value"]
    elif family in _SEQUENCE_FAMILIES:
        for n in ns:
            v = _family_value(family, n, args.r)
            rows.append({"n": n, "value": _specialise(v, args.lam, args.x)})
        header = ["n", "value"]
    else:
        known = ", ".join(sorted(_SEQUENCE_FAMILIES) + sorted(_TRIANGLE_FAMILIES))
        raise ValueError(f"unknown family {args.family!r}; known: {known}")

    if args.format == "json":
        payload = {
            "family": family,
            "lambda": "sym" if args.lam is None else str(args.lam),
            "x": "sym" if args.x is None else str(args.x),
            "rows": [
                {**{k: row[k] for k in header if k != "value"}, "value": _to_json_value(row["value"])}
                for row in rows
            ],
        }
        if family == "geom_r":
            payload["r"] = args.r
        _write(json.dumps(payload, indent=2), args.output)
    elif args.format == "latex":
        lines = ["\\begin{tabular}{" + "r" * (len(header) - 1) + "l}"]
        lines.append(" & ".join(header) + " \\\\")
        lines.append("\\hline")
        for row in rows:
            cells = [str(row[k]) for k in header if k != "value"]
            cells.append(_to_text(row["value"], latex=True))
            lines.append(" & ".join(cells) + " \\\\")
        lines.append("\\end{tabular}")
        _write("\n".join(lines), args.output)
    else:
        import io

        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(header)
        for row in rows:
            cells = [row[k] for k in header if k != "value"]
            cells.append(_to_text(row["value"]))
            w.writerow(cells)
        _write(buf.getvalue(), args.output)
    return 0


def _cmd_eval(args) -> int:
    family = args.family
    if args.n is None:
        raise ValueError("eval requires --n")
    if args.n < 0:
        raise ValueError("n must be nonnegative")
    if family in _TRIANGLE_FAMILIES:
        if args.k is None:
            raise ValueError(f"eval of {family} requires --k")
        v = fam.stirling(_TRIANGLE_FAMILIES[family], args.n, args.k)
        out = _specialise(v, args.lam, None)
    elif family in _SEQUENCE_FAMILIES:
        v = _family_value(family, args.n, args.r)
        out = _specialise(v, args.lam, args.x)
    else:
        known = ", ".join(sorted(_SEQUENCE_FAMILIES) + sorted(_TRIANGLE_FAMILIES))
        raise ValueError(f"unknown family {args.family!r}; known: {known}")
    _write(_to_text(out), args.output)
    return 0


def _cmd_verify(args) -> int:
    prefix = None if args.all or args.prefix is None else args.prefix
    overrides = {
        "n_max": args.n_max,
        "order": args.order,
        "m_max": args.m_max,
        "r_max": args.r_max,
    }
    verdicts = run_all(prefix, overrides, negative_control=args.negative_control)
    json_out = args.format == "json" or args.output not in (None, "-")
    lines_to = sys.stderr if (args.format == "json" and args.output in (None, "-")) else sys.stdout
    for v in verdicts:
        mark = "PASS" if v.ok else "FAIL"
        rng = ", ".join(f"{k}={val}" for k, val in v.checked_range.items())
        print(f"{mark} {v.id:<8} {v.description} [{rng}]", file=lines_to)
        if not v.ok:
            ce = v.counterexample
            print(f"     at {ce['indices']}: {ce['lhs']} != {ce['rhs']}", file=lines_to)
    failed = [v for v in verdicts if not v.ok]
    print(f"{len(verdicts) - len(failed)} passed, {len(failed)} failed", file=lines_to)
    if json_out:
        _write(json.dumps([verdict_to_dict(v) for v in verdicts], indent=2), args.output)
    return 1 if failed else 0


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="degenpoly",
        description="Exact tables, evaluations, and identity verification for "
        "deformed special polynomial families.",
    )
    sub = p.add_subparsers(dest="cmd", required=True)

    def common(sp, with_x=True):
        sp.add_argument("--family", required=True, help="family name, e.g. bell_deg, stirling2")
        sp.add_argument("--lambda", dest="lam", type=_rat_or_sym, default=None,
                        metavar="P/Q|sym", help="deformation parameter value (default: symbolic)")
        if with_x:
            sp.add_argument("--x", type=_rat_or_sym, default=None, metavar="P/Q|sym",
                            help="value for x (default: symbolic)")
        sp.add_argument("--r", type=int, default=1, help="order for geom_r (default 1)")
        sp.add_argument("--output", default=None, metavar="PATH", help="write to file instead of stdout")

    t = sub.add_parser("table", help="print family members for a range of n")
    common(t)
    t.add_argument("--n", type=int, default=None, help="single row n")
    t.add_argument("--n-max", type=int, default=None,
                   help=f"rows 0..n_max (default {_DEFAULT_N_MAX})")
    t.add_argument("--format", choices=("csv", "latex", "json"), default="csv")
    t.set_defaults(fn=_cmd_table)

    e = sub.add_parser("eval", help="evaluate one family member")
    common(e)
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--k", type=int, default=None, help="column for triangular tables")
    e.set_defaults(fn=_cmd_eval)

    v = sub.add_parser("verify", help="run the identity checks")
    v.add_argument("prefix", nargs="?", default=None,
                   help="only run checks whose id starts with this prefix")
    v.add_argument("--all", action="store_true", help="run the complete suite")
    v.add_argument("--n-max", type=int, default=None)
    v.add_argument("--order", type=int, default=None)
    v.add_argument("--m-max", type=int, default=None)
    v.add_argument("--r-max", type=int, default=None)
    v.add_argument("--negative-control", nargs="?", const=True, default=False,
                   metavar="ID",
                   help="inject the registered fault into every check, or only "
                   "into the named one (test hook)")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--output", default=None, metavar="PATH", help="write JSON verdicts to a file")
    v.set_defaults(fn=_cmd_verify)

    return p


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except PoleError as exc:
        print(f"error: pole: {exc}", file=sys.stderr)
        return 2
    except (ValueError, NonInvertibleError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry():  # console-script hook
    sys.exit(main())


if __name__ == "__main__":
    entry()
