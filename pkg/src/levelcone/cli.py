"""Command-line front end.

Exit codes: 0 when the checked condition holds, 1 when it fails, 2 for
bad input.  JSON arguments may be given inline or as ``@path``.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import jsonio
from .bounds import mc_bounds, mc_upper_certificate_codim3, zanello_check
from .cancellation import apply_cancellations, cancellation_certificate
from .census import FLAGS, KNOWN_LEVEL_COUNT, run_census
from .diagram import hvector_of, multiplicity, phi, phi_inverse
from .errors import CertificateFailed, NotACancellation, NotInCone, NotModuleHVector, NotOSequence
from .hvec import level_condition, rational_cancellable, rational_dual_cancellable, wlp_condition
from .lex import betti_lex, exact_cancellable, exact_dual_cancellable, module_o_sequence, normalized_betti_lex
from .pure import ecomp_hvector, ecomp_type, greedy_decompose, pure_diagram
from .rational import format_rational, pretty_rational

# failures of the condition being tested, as opposed to malformed input
CONDITION_ERRORS = (NotInCone, NotACancellation, NotOSequence, NotModuleHVector, CertificateFailed)


def _read_json(arg: str):
    if arg.startswith("@"):
        with open(arg[1:], encoding="utf-8") as fh:
            arg = fh.read()
    return jsonio.loads(arg)


def _h(arg):
    return jsonio.hvector_from_json(_read_json(arg))


def _diagram(arg):
    return jsonio.diagram_from_json(_read_json(arg))


def _nums(xs):
    return [format_rational(x) for x in xs]


class _Out:
    def __init__(self, fmt: str):
        self.fmt = fmt
        self.data: dict = {}
        self.lines: list[str] = []

    def put(self, key, value, text=None):
        self.data[key] = value
        if text is not None:
            self.lines.append(f"{key}: {text}")

    def block(self, key, value, text):
        self.data[key] = value
        self.lines.append(f"{key}:")
        self.lines.extend("  " + line for line in text.splitlines())

    def emit(self, stream):
        if self.fmt == "json":
            stream.write(json.dumps(self.data, indent=2, sort_keys=True) + "\n")
        else:
            stream.write("\n".join(self.lines) + "\n")


def _put_diagram(out, key, D):
    out.block(key, jsonio.diagram_to_json(D), jsonio.render_diagram(D))


def _put_combo(out, key, combo):
    text = " + ".join(f"{pretty_rational(q)}*pi{d}" for q, d in combo.terms) or "0"
    out.put(key, jsonio.combo_to_json(combo), text)


def _list_text(xs):
    return "(" + ", ".join(pretty_rational(x) for x in xs) + ")"


# hvec


def cmd_hvec_check(args, out):
    h = _h(args.h)
    w = level_condition(h, args.vars)
    out.put("h", jsonio.hvector_to_json(h), h.pretty())
    out.put("f", _nums(w.f), _list_text(w.f))
    out.put("dets", _nums(w.dets), _list_text(w.dets))
    out.put("passed", w.passed, str(w.passed))
    if w.passed:
        _put_combo(out, "combo", w.combo())
    return w.passed


def cmd_hvec_ecomp(args, out):
    d = ecomp_type(0, args.j, args.c, args.vars)
    h = ecomp_hvector(args.j, args.c, args.vars)
    out.put("type", list(d), str(d))
    out.put("h", jsonio.hvector_to_json(h), h.pretty())
    _put_diagram(out, "diagram", pure_diagram(d))
    return True


def cmd_hvec_wlp(args, out):
    h = _h(args.h)
    data = wlp_condition(h, args.vars)
    out.put("u", data.u, str(data.u))
    out.put("f", _nums(data.f), _list_text(data.f))
    out.put("g", _nums(data.g), _list_text(data.g))
    _put_diagram(out, "F", data.F)
    _put_diagram(out, "G", data.G)
    _put_diagram(out, "E", data.E)
    out.put("passed", data.passed, str(data.passed))
    if data.passed:
        _put_combo(out, "decomposition", greedy_decompose(data.E))
    return data.passed


def cmd_hvec_cancellable(args, out):
    h = _h(args.h)
    p = args.vars
    if args.mode == "rational":
        rep = rational_cancellable(h, p)
        out.put("a", _nums(rep.a), _list_text(rep.a))
        out.put("margins", _nums(rep.margins), _list_text(rep.margins))
        ok = rep.passed
    elif args.mode == "dual":
        ok = rational_dual_cancellable(h, p)
    elif args.mode == "exact":
        ok = exact_cancellable(h, p)
    else:
        ok = exact_dual_cancellable(h, p)
    out.put("mode", args.mode, args.mode)
    out.put("passed", ok, str(ok))
    return ok


# diagram


def cmd_diagram_hvector(args, out):
    D = _diagram(args.diagram)
    h = hvector_of(D)
    out.put("h", jsonio.hvector_to_json(h), h.pretty())
    out.put("multiplicity", format_rational(multiplicity(D)), pretty_rational(multiplicity(D)))
    return True


def cmd_diagram_decompose(args, out):
    combo = greedy_decompose(_diagram(args.diagram))
    _put_combo(out, "decomposition", combo)
    out.put("chain", combo.is_chain(), str(combo.is_chain()))
    return True


def cmd_diagram_cancel(args, out):
    D = _diagram(args.diagram)
    if args.target:
        cert = cancellation_certificate(D, _diagram(args.target))
        out.put("certificate", jsonio.certificate_to_json(cert), _cert_text(cert))
    elif args.certificate:
        cert = jsonio.certificate_from_json(_read_json(args.certificate))
        _put_diagram(out, "diagram", apply_cancellations(D, cert))
    else:
        raise ValueError("give --target or --certificate")
    return True


def _cert_text(cert):
    return ", ".join(f"b({k},{l})={pretty_rational(b)}" for (k, l), b in cert.amounts.items()) or "none"


def cmd_diagram_render(args, out):
    D = _diagram(args.diagram)
    if out.fmt == "json":
        out.put("text", jsonio.render_diagram(D))
    else:
        out.lines.append(jsonio.render_diagram(D))
    return True


def cmd_diagram_phi(args, out):
    D = _diagram(args.diagram)
    if args.inverse:
        if args.dk is None:
            raise ValueError("--inverse needs --dk")
        R = phi_inverse(D, args.k, args.dk)
    else:
        R = phi(D, args.k)
    _put_diagram(out, "diagram", R)
    return True


# lex


def cmd_lex_betti(args, out):
    h = _h(args.h)
    if args.normalized:
        m, B = normalized_betti_lex(h, args.gens, args.vars)
        out.put("stabilizer", m, str(m))
    else:
        B = betti_lex(h, args.gens, args.vars)
    _put_diagram(out, "betti", B)
    return True


def cmd_lex_osequence(args, out):
    ok = module_o_sequence(_h(args.h), args.gens, args.vars)
    out.put("passed", ok, str(ok))
    return ok


# bounds


def _put_bounds(out, b):
    for name in ("lower", "e", "upper"):
        v = getattr(b, name)
        out.put(name, format_rational(v), pretty_rational(v))
    out.put("lower_ok", b.lower_ok, str(b.lower_ok))
    out.put("upper_ok", b.upper_ok, str(b.upper_ok))


def cmd_bounds_mc(args, out):
    b = mc_bounds(_diagram(args.diagram))
    _put_bounds(out, b)
    return b.ok


def cmd_bounds_zanello(args, out):
    b = zanello_check(_h(args.h))
    _put_bounds(out, b)
    return b.ok


def cmd_bounds_mc_cert(args, out):
    h, B = _h(args.h), _diagram(args.diagram)
    combo = mc_upper_certificate_codim3(h, B)
    _put_combo(out, "certificate", combo)
    b = mc_bounds(B)
    _put_bounds(out, b)
    return b.upper_ok


# census


def cmd_census_run(args, out):
    rep = run_census(args.h0, args.hc, args.c, args.vars, full_degree_one=not args.allow_degree_one_relations)
    counts = rep.counts()
    rows = [{"h": jsonio.hvector_to_json(h), "pretty": h.pretty(), **f.as_dict()} for h, f in rep.rows]
    out.data.update({"counts": counts, "rows": rows, "known_level_count_external": KNOWN_LEVEL_COUNT})
    out.lines.append(f"census h0={args.h0} hc={args.hc} c={args.c} vars={args.vars}")
    out.lines.append(f"{'total':<28}{counts['total']:>6}")
    for name in FLAGS:
        out.lines.append(f"{name:<28}{counts[name]:>6}")
    out.lines.append("exact_dual_cancellable but not normhvec:")
    out.lines.extend("  " + h.pretty() for h in rep.exact_not_normhvec())
    out.lines.append("normhvec but not exact_dual_cancellable:")
    out.lines.extend("  " + h.pretty() for h in rep.normhvec_not_exact())
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(out.data, fh, indent=2, sort_keys=True)
    return True


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="levelcone", description="Betti diagram and h-vector checks.")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    groups = parser.add_subparsers(dest="group", required=True)

    def sub(group, name, func, help_text):
        sp = group.add_parser(name, help=help_text)
        sp.set_defaults(func=func)
        sp.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
        return sp

    hv = groups.add_parser("hvec").add_subparsers(dest="cmd", required=True)
    sp = sub(hv, "check", cmd_hvec_check, "extremely compressed determinant test")
    sp.add_argument("--h", required=True)
    sp.add_argument("--vars", type=int, default=3)
    sp = sub(hv, "ecomp", cmd_hvec_ecomp, "extremely compressed diagram")
    sp.add_argument("--j", type=int, required=True)
    sp.add_argument("--c", type=int, required=True)
    sp.add_argument("--vars", type=int, default=3)
    sp = sub(hv, "wlp", cmd_hvec_wlp, "weak Lefschetz test")
    sp.add_argument("--h", required=True)
    sp.add_argument("--vars", type=int, default=3)
    sp = sub(hv, "cancellable", cmd_hvec_cancellable, "cancellability tests")
    sp.add_argument("--h", required=True)
    sp.add_argument("--vars", type=int, default=3)
    sp.add_argument("--mode", choices=("rational", "dual", "exact", "exact-dual"), default="rational")

    dg = groups.add_parser("diagram").add_subparsers(dest="cmd", required=True)
    for name, func, help_text in (
        ("hvector", cmd_diagram_hvector, "h-vector and multiplicity"),
        ("decompose", cmd_diagram_decompose, "greedy pure decomposition"),
        ("render", cmd_diagram_render, "print the grid"),
    ):
        sub(dg, name, func, help_text).add_argument("--diagram", required=True)
    sp = sub(dg, "cancel", cmd_diagram_cancel, "find or apply consecutive cancellations")
    sp.add_argument("--diagram", required=True)
    sp.add_argument("--target")
    sp.add_argument("--certificate")
    sp = sub(dg, "phi", cmd_diagram_phi, "remove or reinsert a single-entry column")
    sp.add_argument("--diagram", required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--inverse", action="store_true")
    sp.add_argument("--dk", type=int)

    lx = groups.add_parser("lex").add_subparsers(dest="cmd", required=True)
    sp = sub(lx, "betti", cmd_lex_betti, "Betti numbers of the lex quotient")
    sp.add_argument("--h", required=True)
    sp.add_argument("--gens", type=int, default=1)
    sp.add_argument("--vars", type=int, default=3)
    sp.add_argument("--normalized", action="store_true")
    sp = sub(lx, "osequence", cmd_lex_osequence, "Macaulay's condition")
    sp.add_argument("--h", required=True)
    sp.add_argument("--gens", type=int, default=1)
    sp.add_argument("--vars", type=int, default=3)

    bd = groups.add_parser("bounds").add_subparsers(dest="cmd", required=True)
    sub(bd, "mc", cmd_bounds_mc, "shift bounds on the multiplicity").add_argument("--diagram", required=True)
    sub(bd, "zanello", cmd_bounds_zanello, "sign-change bounds").add_argument("--h", required=True)
    sp = sub(bd, "mc-cert", cmd_bounds_mc_cert, "codim-3 upper bound certificate")
    sp.add_argument("--h", required=True)
    sp.add_argument("--diagram", required=True)

    cs = groups.add_parser("census").add_subparsers(dest="cmd", required=True)
    sp = sub(cs, "run", cmd_census_run, "enumerate and classify")
    sp.add_argument("--h0", type=int, required=True)
    sp.add_argument("--hc", type=int, required=True)
    sp.add_argument("--c", type=int, required=True)
    sp.add_argument("--vars", type=int, default=3)
    sp.add_argument("--json")
    sp.add_argument("--allow-degree-one-relations", action="store_true")
    return parser


def dispatch(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    out = _Out(args.format)
    try:
        ok = args.func(args, out)
    except CONDITION_ERRORS as exc:
        out.put("error", f"{type(exc).__name__}: {exc}", f"{type(exc).__name__}: {exc}")
        out.emit(stdout)
        return 1
    except (ValueError, TypeError, KeyError, OSError) as exc:
        stderr.write(f"levelcone: error: {exc}\n")
        return 2
    out.emit(stdout)
    return 0 if ok else 1


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
