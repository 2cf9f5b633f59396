"""Command-line front end.

Exit codes: 0 all checks pass, 1 a verification failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import assoc_braid as ab
from . import virasoro as vir
from .errors import GammaPoleError, LevelCapExceeded, QcatError
from .exactfield import eval_at, qfact, qint
from .fusion_cg import cg_embedding, fusion_multiplicity_check, intertwiner_check, sel
from .uqsl2_rep import CoproductSide

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- rendering ---------------------------------------------------------------------

class Output:
    """What a subcommand produced: a JSON-able payload plus table/CSV views."""

    def __init__(self, payload, rows=None, header=None, text=None, ok=True):
        self.payload = payload
        self.rows = rows
        self.header = header
        self.text = text
        self.ok = ok

    def render(self, fmt):
        if fmt == "json":
            return dump_json(self.payload)
        if fmt == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            if self.header:
                writer.writerow(self.header)
            writer.writerows(self.rows or [])
            return buf.getvalue()
        if self.text is not None:
            return self.text + "\n"
        return _table(self.header, self.rows or [])


def dump_json(obj):
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _table(header, rows):
    cells = ([list(map(str, header))] if header else []) + [list(map(str, r)) for r in rows]
    if not cells:
        return ""
    widths = [max(len(r[i]) for r in cells if i < len(r)) for i in range(max(map(len, cells)))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    if header:
        lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _exact_str(x):
    return str(x) if isinstance(x, Fraction) else x


# -- argument helpers ----------------------------------------------------------------

def _label(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"label must be an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"label must be nonnegative, got {value}")
    return value


def _parameter(text):
    try:
        value = vir.as_parameter(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"cannot read t={text!r}")
    if value == 0:
        raise argparse.ArgumentTypeError("t must be nonzero")
    return value


def _exact_parameter(t):
    return t if isinstance(t, Fraction) else Fraction(repr(t))


# -- subcommands -----------------------------------------------------------------------

def cmd_qint(args):
    value = str(qint(args.n))
    return Output({"n": args.n, "value": value}, [[args.n, value]], ["n", "qint"], text=value)


def cmd_qfact(args):
    if args.n < 0:
        raise UsageError("qfact needs a nonnegative integer")
    value = str(qfact(args.n))
    return Output({"n": args.n, "value": value}, [[args.n, value]], ["n", "qfact"], text=value)


def cmd_cg(args):
    if args.ell not in sel(args.ell1, args.ell2):
        raise UsageError(f"--ell {args.ell} is not in Sel({args.ell1}, {args.ell2})")
    side = CoproductSide.DELTA_OP if args.op else CoproductSide.DELTA
    matrix = cg_embedding(args.ell, args.ell1, args.ell2, side).to_strings()
    payload = {"ell": args.ell, "ell1": args.ell1, "ell2": args.ell2,
               "side": side.value, "matrix": matrix}
    return Output(payload, matrix)


def cmd_sixj(args):
    table = ab.sixj(*args.labels)
    payload = table.to_json()
    rows = [[m, n, str(table[(m, n)])] for m in table.ms for n in table.ns]
    return Output(payload, rows, ["m", "n", "value"])


def cmd_braid(args):
    l1, l2 = args.labels
    if args.eigenvalues:
        vals = {ell: str(ab.braiding_eigenvalue(ell, l1, l2)) for ell in reversed(sel(l1, l2))}
        payload = {str(ell): v for ell, v in vals.items()}
        return Output(payload, [[ell, v] for ell, v in vals.items()], ["ell", "eigenvalue"])
    matrix = ab.braiding(l1, l2).to_strings()
    return Output({"ell1": l1, "ell2": l2, "matrix": matrix}, matrix)


def cmd_twist(args):
    value = str(ab.twist(args.ell))
    return Output({"ell": args.ell, "value": value}, [[args.ell, value]], ["ell", "twist"],
                  text=value)


def _intertwiner_report(lmax):
    report = ab.CheckReport("intertwiner", [lmax])
    for l1 in range(lmax + 1):
        for l2 in range(lmax + 1):
            for side in CoproductSide:
                report.failures.extend(intertwiner_check(l1, l2, side))
    return report


def cmd_verify(args):
    runners = {
        "pentagon": ab.pentagon_check,
        "hexagon": ab.hexagon_sweep,
        "ribbon": ab.ribbon_sweep,
        "intertwiner": _intertwiner_report,
    }
    report = runners[args.which](args.lmax)
    payload = report.to_dict()
    rows = [[report.check, args.lmax, "pass" if report.passed else "FAIL", len(report.failures)]]
    out = Output(payload, rows, ["check", "lmax", "status", "failures"], ok=report.passed)
    if not report.passed and args.format == "table":
        out.text = _table(out.header, rows) + "\n".join(map(str, report.failures))
    return out


def cmd_vir(args):
    t = args.t
    c = vir.central_charge(t)
    payload = {"t": _exact_str(t), "c": _exact_str(c)}
    ok = True
    L = args.lmax
    if args.what == "weights":
        rows = [[ell, _exact_str(vir.h_weight(ell, t))] for ell in range(L + 1)]
        payload["weights"] = [{"ell": e, "h": h} for e, h in rows]
        header = ["ell", "h"]
    elif args.what == "fusion":
        rows = [[a, b, d, vir.fusion_dim(a, b, d)]
                for a in range(L + 1) for b in range(L + 1) for d in range(L + 1)]
        payload["fusion"] = [{"ell1": a, "ell2": b, "ell3": d, "dim": n} for a, b, d, n in rows]
        header = ["ell1", "ell2", "ell3", "dim"]
    elif args.what == "bconst":
        tf = float(t)
        rows = [[a, b, d, vir.b_const(a, b, d, tf)]
                for a in range(L + 1) for b in range(L + 1) for d in sel(a, b)]
        payload["bconst"] = [{"ell1": a, "ell2": b, "ell3": d, "B": x} for a, b, d, x in rows]
        header = ["ell1", "ell2", "ell3", "B"]
    else:
        te = _exact_parameter(t)
        payload["t"], payload["c"] = str(te), str(vir.central_charge(te))
        entries = []
        for ell in range(L + 1):
            passed, detail = vir.kac_first_row_check(ell, te, detail=True)
            ok = ok and passed
            entries.extend(detail)
        payload["kac"] = entries
        rows = [[e["ell"], e["level"], e["det_zero"]] for e in entries]
        header = ["ell", "level", "det_zero"]
    return Output(payload, rows, header, ok=ok)


def equivalence_report(t, lmax, tol=1e-9, pentagon_lmax=None):
    """Compare quantum-group braiding/twist scalars with the Virasoro phases at ``q = e^{i pi t}``."""
    t = float(t)
    if pentagon_lmax is None:
        pentagon_lmax = min(lmax, 2)
    fusion_ok = True
    braid_dev = 0.0
    twist_dev = 0.0
    for l1 in range(lmax + 1):
        for l2 in range(lmax + 1):
            predicted, found = fusion_multiplicity_check(l1, l2)
            via_vir = [l3 for l3 in range(l1 + l2 + 1) if vir.fusion_dim(l1, l2, l3)]
            fusion_ok = fusion_ok and predicted == found == via_vir
            for ell in sel(l1, l2):
                lam = eval_at(ab.braiding_eigenvalue(ell, l1, l2), t)
                braid_dev = max(braid_dev, abs(lam - vir.braid_phase(ell, l1, l2, t)))
    for ell in range(lmax + 1):
        twist_dev = max(twist_dev, abs(eval_at(ab.twist(ell), t) - vir.twist_phase(ell, t)))
    pent = ab.pentagon_check(pentagon_lmax)
    passed = fusion_ok and braid_dev < tol and twist_dev < tol and pent.passed
    return {
        "t": t, "lmax": lmax, "tol": tol,
        "fusion_match": fusion_ok,
        "braiding_max_dev": braid_dev,
        "twist_max_dev": twist_dev,
        "pentagon": {"lmax": pentagon_lmax, "pass": pent.passed},
        "pass": passed,
    }


def cmd_equiv(args):
    rep = equivalence_report(args.t, args.lmax, args.tol, args.pentagon_lmax)
    rows = [["fusion match", rep["fusion_match"]],
            ["braiding max |dev|", f"{rep['braiding_max_dev']:.3e}"],
            ["twist max |dev|", f"{rep['twist_max_dev']:.3e}"],
            [f"pentagon (lmax={rep['pentagon']['lmax']})", rep["pentagon"]["pass"]],
            ["pass", rep["pass"]]]
    return Output(rep, rows, ["item", "value"], ok=rep["pass"])


# -- parser -----------------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["table", "json", "csv"], default=argparse.SUPPRESS)
    common.add_argument("--out", default=argparse.SUPPRESS, help="write output to FILE")

    p = argparse.ArgumentParser(prog="qcat", description="Exact U_q(sl2) category data and "
                                "Virasoro first-row comparison.")
    p.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p.add_argument("--out", default=None, help="write output to FILE")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("qint", parents=[common], help="q-integer [N]")
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_qint)

    s = sub.add_parser("qfact", parents=[common], help="q-factorial [N]!")
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_qfact)

    s = sub.add_parser("cg", parents=[common], help="Clebsch-Gordan embedding matrix")
    s.add_argument("--ell", type=_label, required=True)
    s.add_argument("--ell1", type=_label, required=True)
    s.add_argument("--ell2", type=_label, required=True)
    s.add_argument("--op", action="store_true", help="use the opposite coproduct")
    s.set_defaults(func=cmd_cg)

    s = sub.add_parser("sixj", parents=[common], help="6j table for labels A B C D")
    s.add_argument("labels", type=_label, nargs=4)
    s.set_defaults(func=cmd_sixj)

    s = sub.add_parser("braid", parents=[common], help="braiding matrix c = P R")
    s.add_argument("labels", type=_label, nargs=2)
    s.add_argument("--eigenvalues", action="store_true", help="channel eigenvalues instead")
    s.set_defaults(func=cmd_braid)

    s = sub.add_parser("twist", parents=[common], help="twist scalar on V_L")
    s.add_argument("ell", type=_label)
    s.set_defaults(func=cmd_twist)

    s = sub.add_parser("verify", parents=[common], help="exact coherence sweeps")
    s.add_argument("which", choices=["pentagon", "hexagon", "ribbon", "intertwiner"])
    s.add_argument("--lmax", type=_label, required=True)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("vir", parents=[common], help="Virasoro first-row tables")
    s.add_argument("what", choices=["weights", "fusion", "bconst", "kac"])
    s.add_argument("--t", type=_parameter, required=True)
    s.add_argument("--lmax", type=_label, required=True)
    s.set_defaults(func=cmd_vir)

    s = sub.add_parser("equiv", parents=[common], help="numeric equivalence report")
    s.add_argument("--t", type=_parameter, required=True)
    s.add_argument("--lmax", type=_label, required=True)
    s.add_argument("--tol", type=float, default=1e-9)
    s.add_argument("--pentagon-lmax", type=_label, default=None)
    s.set_defaults(func=cmd_equiv)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with 2 on usage errors
    try:
        out = args.func(args)
    except (UsageError, LevelCapExceeded, GammaPoleError, ValueError) as exc:
        print(f"qcat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except QcatError as exc:
        print(f"qcat: consistency failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    text = out.render(args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if out.ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
