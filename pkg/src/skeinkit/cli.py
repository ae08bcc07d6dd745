"""Command-line entry point: ``skeinkit <command> [flags]``.

Exit codes: 0 success, 1 malformed input, 2 Indeterminate verdict.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from . import classify as cl
from . import threebox as tb
from .coeffring import PoleError, RationalFunction
from .hecke import DELTA
from .linkinv import (BraidWord, calibrate_jones, closure_value, parse_corpus,
                      skein_resolve_value, specialized_jones, SkeinBudgetExceeded)
from .temperley import DegenerateLoopValue, jones_wenzl, markov_trace
from .young import IllDefinedIdempotent, YoungDiagram, quantum_trace, trace_at_specialization, trace_numeric

EXIT_OK, EXIT_MALFORMED, EXIT_INDETERMINATE = 0, 1, 2
_R = RationalFunction.gens()[1]


class InputError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_MALFORMED, f"{self.prog}: error: {message}\n")


@dataclass
class Result:
    payload: dict
    text: str
    rows: list[dict] = field(default_factory=list)
    columns: Optional[tuple[str, ...]] = None
    code: int = EXIT_OK


def _fmt_float(x: float) -> str:
    return repr(float(x))


def _point_dict(q: complex, r: complex) -> dict:
    return {"q_re": q.real, "q_im": q.imag, "r_re": r.real, "r_im": r.imag}


def _real_or_none(z) -> Optional[float]:
    if z is None:
        return None
    z = complex(z)
    return z.real if abs(z.imag) <= 1e-9 * max(1.0, abs(z)) else None


# -- commands -----------------------------------------------------------------------

def _braids_from_args(args) -> list[tuple[str, BraidWord]]:
    if args.corpus:
        text = sys.stdin.read() if args.corpus == "-" else open(args.corpus, encoding="utf-8").read()
        return [(e.name, e.braid) for e in parse_corpus(text)]
    if args.strands is None:
        raise InputError("--strands is required with --braid")
    return [("braid", BraidWord.parse(args.strands, args.braid or ""))]


def cmd_homfly(args) -> Result:
    entries = []
    for name, beta in _braids_from_args(args):
        if args.method == "skein":
            value = skein_resolve_value(beta).value
        else:
            value = closure_value(beta).value
        if args.normalized:
            value = value / (DELTA * _R ** beta.writhe)
        entries.append({"name": name, "strands": beta.n, "braid": beta.to_text(), "writhe": beta.writhe,
                        "normalized": args.normalized, "method": args.method, "value": value.to_text()})
    text = "\n".join(e["value"] if len(entries) == 1 else f"{e['name']}\t{e['value']}" for e in entries)
    return Result({"entries": entries}, text, entries,
                  ("name", "strands", "braid", "writhe", "normalized", "method", "value"))


def cmd_jones(args) -> Result:
    beta = BraidWord.parse(args.strands, args.braid or "")
    cal = calibrate_jones()
    if not cal:
        raise RuntimeError("no calibration matched the reference braids")
    value = cal[0].apply(specialized_jones(beta)).to_text()
    payload = {"braid": beta.to_text(), "strands": beta.n, "calibration": cal[0].describe(), "value": value}
    return Result(payload, value, [payload], ("braid", "strands", "calibration", "value"))


def cmd_qtrace(args) -> Result:
    lam = YoungDiagram.parse(args.diagram)
    payload: dict = {"diagram": lam.to_text()}
    if args.N is not None and args.m is not None:
        t = trace_at_specialization(lam, args.N, m=args.m)
        payload.update(value=t.value, sign=t.sign)
    elif args.N is not None and args.q0 is not None:
        t = trace_at_specialization(lam, args.N, q0=args.q0)
        payload.update(value=t.value, sign=t.sign)
    elif args.q_re is not None:
        v = trace_numeric(lam, complex(args.q_re, args.q_im), complex(args.r_re, args.r_im)).value
        payload.update(value=v.real, imag=v.imag)
    else:
        payload["value"] = quantum_trace(lam).to_text()
    text = str(payload["value"])
    return Result(payload, text, [payload], tuple(payload))


def _loop(text: Optional[str]):
    if text is None:
        return tb.D, "δ"
    try:
        return Fraction(text), text
    except ValueError:
        raise InputError(f"--delta must be rational, got {text!r}") from None


def cmd_jw(args) -> Result:
    loop, label = _loop(args.delta)
    f = jones_wenzl(args.n, loop)
    terms = [{"matching": m.to_text(), "coefficient": _coef_text(c)} for m, c in sorted(f.terms.items())]
    payload = {"n": args.n, "loop": label, "trace": _coef_text(markov_trace(f)), "terms": terms}
    text = "\n".join(f"{t['coefficient']}\t{t['matching']}" for t in terms)
    return Result(payload, text, terms, ("matching", "coefficient"))


def _coef_text(c) -> str:
    return c.to_text() if hasattr(c, "to_text") else str(c)


def cmd_idem3(args) -> Result:
    chk = tb.idempotent_system_check(args.branch)
    tp, tq = tb.hecke_idempotent_traces()
    P, Q = tb.pq_idempotents()
    f3 = tb.ALGEBRA.f3()
    mul = tb.multiply
    threebox = {
        "P_idempotent": mul(P, P) == P,
        "Q_idempotent": mul(Q, Q) == Q,
        "PQ_zero": mul(P, Q) == tb.ALGEBRA.zero(),
        "P_plus_Q_is_f3": P + Q == f3,
        "trace_P": tb.trace(P) == (tb.D ** 3 - 2 * tb.D) / (1 + tb.G),
    }
    payload = {
        "branch": args.branch,
        "ok": chk.ok,
        "residuals": {k: v.to_text() for k, v in chk.residuals.items()},
        "literal_residuals": {k: v.to_text() for k, v in chk.literal_residuals.items()},
        "trace_P": tp.to_text(),
        "trace_Q": tq.to_text(),
        "threebox": threebox,
    }
    lines = [f"system ok: {chk.ok}"] + [f"{k}: {v}" for k, v in threebox.items()]
    rows = [{"name": k, "value": v} for k, v in payload["residuals"].items()] + \
           [{"name": k, "value": v} for k, v in threebox.items()]
    return Result(payload, "\n".join(lines), rows, ("name", "value"))


def cmd_relations(args) -> Result:
    rc = tb.two_two_solutions(args.omega, args.a, args.a_prime)
    chk = tb.verify_capping(rc)
    coeffs = {k: getattr(rc, k).to_text() for k in ("b", "c", "d", "epsilon") if getattr(rc, k) is not None}
    payload = {"omega": args.omega, "a": args.a, "a_prime": args.a_prime, "coefficients": coeffs,
               "capping_ok": chk.ok, "capping_residuals": {k: v.to_text() for k, v in chk.residuals.items()}}
    text = "\n".join([f"{k} = {v}" for k, v in coeffs.items()] + [f"capping ok: {chk.ok}"])
    rows = [{"name": k, "value": v} for k, v in coeffs.items()] + [{"name": "capping_ok", "value": chk.ok}]
    return Result(payload, text, rows, ("name", "value"))


def cmd_exclusions(args) -> Result:
    report = tb.exclusion_report()
    rows, lines = [], []
    for br in report["branches"]:
        lines.append(f"({br['branch']}) {br['verdict']}")
        for p in br["polynomials"]:
            rows.append({"branch": br["branch"], "polynomial": p["name"],
                         "roots_above_2": p["roots_above_2"],
                         "real_roots": " ".join(map(str, p["real_roots_approx"])),
                         "verdict": br["verdict"]})
            lines.append(f"    {p['name']}: real roots {p['real_roots_approx']}")
    return Result(report, "\n".join(lines), rows, ("branch", "polynomial", "roots_above_2", "real_roots", "verdict"))


def _point_from_args(args) -> cl.ParameterPoint:
    if args.N is not None and args.m is not None:
        return cl.ParameterPoint.root_of_unity(args.N, args.m)
    if args.q_re is None or args.r_re is None:
        raise InputError("give --q-re/--r-re (and optional imaginary parts), or --N/--m")
    return cl.ParameterPoint.numeric(complex(args.q_re, args.q_im), complex(args.r_re, args.r_im), args.delta)


def cmd_classify(args) -> Result:
    if args.gamma is not None:
        if args.delta is None:
            raise InputError("--gamma needs --delta")
        verdict = cl.positivity_from_delta_gamma(args.delta, args.gamma)
        point = {"delta": args.delta, "gamma": args.gamma}
        d, g = args.delta, args.gamma
    else:
        p = _point_from_args(args)
        verdict = cl.positivity(p)
        q, r = p.values()
        point = {"mode": p.mode, **_point_dict(q, r)}
        try:
            dg = cl.delta_gamma_from_qr(p)
            d, g = _real_or_none(dg.delta), _real_or_none(dg.gamma)
        except (PoleError, ZeroDivisionError):
            d = g = None
    v = verdict.to_dict()
    payload = {"point": point, "delta": d, "gamma": g, "verdict": v}
    text = verdict.kind
    if verdict.kind == "Negative":
        text += f" witness [{v['witness']}] trace {_fmt_float(v['value'])}"
    elif verdict.kind == "PositiveRootOfUnity":
        text += f" N={verdict.N} l={verdict.l}"
    elif verdict.kind == "PositiveReal":
        text += f" N={verdict.N}"
    else:
        text += f": {verdict.reason}"
    row = {**(_point_dict(*p.values()) if args.gamma is None else {"q_re": None, "q_im": None, "r_re": None,
                                                                      "r_im": None}),
           "delta": d, "gamma": g, "verdict": verdict.kind, "witness": v["witness"] or "",
           "trace_value": v["value"]}
    code = EXIT_INDETERMINATE if verdict.kind == "Indeterminate" else EXIT_OK
    return Result(payload, text, [row], cl.SCAN_COLUMNS, code)


def cmd_solve_params(args) -> Result:
    sols = cl.qr_from_delta_gamma(args.delta, args.gamma)
    out = [{**_point_dict(s.q, s.r), "gamma_matches": s.gamma_matches, "residual": s.eq_residual} for s in sols]
    payload = {"delta": args.delta, "gamma": args.gamma, "solutions": out}
    text = "\n".join(f"q = {s.q:.12g}  r = {s.r:.12g}  {'gamma' if s.gamma_matches else '1/gamma'}" for s in sols)
    return Result(payload, text, out, ("q_re", "q_im", "r_re", "r_im", "gamma_matches", "residual"))


def cmd_orbit(args) -> Result:
    p = _point_from_args(args)
    if args.full:
        pts = cl.full_orbit(p)
    else:
        pts = [(x, t) for x, (_, t) in zip(cl.symmetry_orbit(p), cl.full_orbit(p))]
    out = [{**_point_dict(*x.values()), "transposes": t} for x, t in pts]
    text = "\n".join(f"q = {x.values()[0]:.12g}  r = {x.values()[1]:.12g}" for x, _ in pts)
    return Result({"points": out}, text, out, ("q_re", "q_im", "r_re", "r_im", "transposes"))


def _grid(lo: float, hi: float, n: int) -> list[float]:
    if n < 1:
        raise InputError("grid needs at least one step")
    if n == 1:
        return [lo]
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


def cmd_scan(args) -> Result:
    xs = _grid(args.x_range[0], args.x_range[1], args.steps)
    ys = _grid(args.y_range[0], args.y_range[1], args.steps)
    points = []
    for x in xs:
        for y in ys:
            if args.mode == "real":
                points.append((complex(x), complex(y)))
            else:  # angles in units of pi
                points.append((complex(math.cos(math.pi * x), math.sin(math.pi * x)),
                               complex(math.cos(math.pi * y), math.sin(math.pi * y))))
    rows = [r.as_dict() for r in cl.scan(points, workers=args.workers)]
    text = "\n".join(f"{r['q_re']:.6g}{r['q_im']:+.6g}i {r['r_re']:.6g}{r['r_im']:+.6g}i {r['verdict']} "
                     f"{r['witness']}".rstrip() for r in rows)
    return Result({"rows": rows}, text, rows, cl.SCAN_COLUMNS)


# -- parser -------------------------------------------------------------------------

COMMANDS: dict[str, tuple[Callable, str, str]] = {}


def _add(sub, name: str, fn: Callable, default_format: str, help_: str) -> argparse.ArgumentParser:
    p = sub.add_parser(name, help=help_)
    p.add_argument("--format", choices=("json", "text", "csv"), default=default_format)
    p.set_defaults(handler=fn)
    COMMANDS[name] = (fn, default_format, help_)
    return p


def _point_flags(p: argparse.ArgumentParser, with_root: bool = True):
    p.add_argument("--q-re", type=float)
    p.add_argument("--q-im", type=float, default=0.0)
    p.add_argument("--r-re", type=float)
    p.add_argument("--r-im", type=float, default=0.0)
    p.add_argument("--delta", type=float, help="circle parameter (required when q = ±1)")
    if with_root:
        p.add_argument("--N", type=int)
        p.add_argument("--m", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="skeinkit", description="HOMFLY skein theory and positivity toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = _add(sub, "homfly", cmd_homfly, "text", "closure value of a braid or corpus")
    p.add_argument("--braid")
    p.add_argument("--strands", type=int)
    p.add_argument("--corpus", help="corpus file, or - for stdin")
    p.add_argument("--normalized", action="store_true", help="divide by delta * r^writhe")
    p.add_argument("--method", choices=("hecke", "skein"), default="hecke")

    p = _add(sub, "jones", cmd_jones, "text", "Jones polynomial via the r = q^2 specialization")
    p.add_argument("--braid", required=True)
    p.add_argument("--strands", type=int, required=True)

    p = _add(sub, "qtrace", cmd_qtrace, "text", "quantum trace of a Young idempotent")
    p.add_argument("--diagram", required=True, help="row lengths, e.g. 3,1")
    p.add_argument("--N", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--q0", type=float)
    p.add_argument("--q-re", type=float)
    p.add_argument("--q-im", type=float, default=0.0)
    p.add_argument("--r-re", type=float, default=0.0)
    p.add_argument("--r-im", type=float, default=0.0)

    p = _add(sub, "jw", cmd_jw, "json", "Jones-Wenzl idempotent")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", help="rational loop value; symbolic if omitted")

    p = _add(sub, "idem3", cmd_idem3, "json", "3-strand idempotents and the 3-box algebra checks")
    p.add_argument("--branch", type=int, choices=(1, 2), default=1)

    p = _add(sub, "relations", cmd_relations, "json", "2-2 move coefficients and capping check")
    p.add_argument("--omega", choices=tb.OMEGA_TAGS, default="1")
    p.add_argument("--a", type=int, choices=(1, -1), default=1)
    p.add_argument("--a-prime", type=int, choices=(1, -1), default=1)

    _add(sub, "exclusions", cmd_exclusions, "json", "certified exclusion of the degenerate branches")

    p = _add(sub, "classify", cmd_classify, "json", "positivity verdict at a parameter point")
    _point_flags(p)
    p.add_argument("--gamma", type=float)

    p = _add(sub, "solve-params", cmd_solve_params, "json", "all (q, r) for a given (delta, gamma)")
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--gamma", type=float, required=True)

    p = _add(sub, "orbit", cmd_orbit, "json", "symmetry orbit of a parameter point")
    _point_flags(p)
    p.add_argument("--full", action="store_true", help="all eight images of the generated group")

    p = _add(sub, "scan", cmd_scan, "csv", "positivity over a grid")
    p.add_argument("--mode", choices=("real", "circle"), default="real",
                   help="real: x = q, y = r; circle: x, y = arg q, arg r in units of pi")
    p.add_argument("--x-range", type=float, nargs=2, required=True, metavar=("LO", "HI"))
    p.add_argument("--y-range", type=float, nargs=2, required=True, metavar=("LO", "HI"))
    p.add_argument("--steps", type=int, default=20)
    p.add_argument("--workers", type=int)
    return parser


def render(result: Result, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(result.payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    if fmt == "text":
        return result.text + "\n"
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(result.columns or result.rows[0].keys()), lineterminator="\n",
                       extrasaction="ignore")
    w.writeheader()
    for row in result.rows:
        w.writerow({k: ("" if v is None else v) for k, v in row.items()})
    return buf.getvalue()


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.handler(args)
    except (InputError, ValueError, PoleError, IllDefinedIdempotent, DegenerateLoopValue,
            tb.DegenerateParameter, SkeinBudgetExceeded, OSError) as exc:
        print(f"skeinkit {args.command}: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    sys.stdout.write(render(result, args.format))
    return result.code


if __name__ == "__main__":
    sys.exit(main())
