"""Command-line front end: construct, verify, point, bench.

Exit codes: 0 success, 1 a selected suite failed, 2 bad input (parse error,
off-curve point, unusable arguments), 3 stored digest does not match the
recomputed z-table, 4 construction rejected a choice.
"""

import argparse
import configparser
import csv
import io
import json
import os
import sys
import time

from . import __version__
from .constructor import ChoiceSpec, construct
from .ecgroup import (
    GFOps,
    INFINITY,
    mul_n,
    neutral,
    point_from_json,
    point_to_json,
    translated_neg,
    translated_op,
)
from .errors import (
    AlgebraError,
    ChoiceNotInSubfield,
    MembershipViolation,
    NotOnCurve,
    ParseError,
    PreconditionFailed,
)
from .field import FieldElem
from .gf2m import get_field
from .hd import hd_from_json, hd_to_json
from .textfmt import parse_gf
from .verifier import (
    VerificationReport,
    check_difference_derivatives,
    check_iteration_rule,
    check_kernel_identity,
    check_rho_commutes,
    check_thm51_conditions,
    constants_report,
    hd_telemetry,
    spot_check_elements,
)

SUITES = ("iteration", "rho", "thm51", "kernel", "torsion", "constants")
OUT_DIR_ENV = "ITERDER_OUTPUT_DIR"
DEFAULT_SEED = 0
TORSION_ORDER_CAP = 8

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_DIGEST, EXIT_CONSTRUCT = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


# -- io helpers ---------------------------------------------------------------


def resolve_out(path):
    """Relative output paths land under $ITERDER_OUTPUT_DIR when it is set."""
    if path is None or path == "-":
        return path
    base = os.environ.get(OUT_DIR_ENV)
    if base and not os.path.isabs(path):
        return os.path.join(base, path)
    return path


def write_text(path, text):
    path = resolve_out(path)
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    d = os.path.dirname(path)
    if d:
        os.makedirs(d, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def dump_json(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def load_choices(path):
    """A ChoiceSpec JSON file: a list of strings or {"choices": [...]}."""
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError("choice file %s is not valid JSON: %s" % (path, exc)) from exc
    if isinstance(data, dict):
        data = data.get("choices")
    if not isinstance(data, list) or not all(isinstance(c, str) for c in data):
        raise ParseError("choice file must hold a list of strings")
    return data, ChoiceSpec.parse(data)


def read_config(path):
    """key = value lines; '#' comments. Keys are long flag names."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    cp = configparser.ConfigParser(interpolation=None)
    cp.read_string("[run]\n" + text)
    return {k.replace("-", "_"): v for k, v in cp["run"].items()}


def parse_gf_spec(text):
    """'2^m', 'GF(2^m)' or the field size 2^m itself."""
    s = text.strip().replace(" ", "")
    if s.upper().startswith("GF(") and s.endswith(")"):
        s = s[3:-1]
    if s.startswith("2^"):
        m = int(s[2:])
    else:
        q = int(s)
        if q < 2 or q & (q - 1):
            raise UsageError("--gf must be a power of two, got %s" % text)
        m = q.bit_length() - 1
    if not 1 <= m <= 16:
        raise UsageError("--gf extension degree must be in 1..16")
    return m


# -- construct ---------------------------------------------------------------


def cmd_construct(args):
    if args.order < 1:
        raise UsageError("--order must be >= 1")
    if args.choices:
        raw, spec = load_choices(args.choices)
    else:
        raw, spec = [], ChoiceSpec()
    hd = construct(args.order, spec)
    prov = {
        "tool": "iterder",
        "tool_version": __version__,
        "command": "construct",
        "order": args.order,
        "choices_input": raw,
    }
    write_text(args.out, dump_json(hd_to_json(hd, provenance=prov)))
    return EXIT_OK


# -- verify ------------------------------------------------------------------


def _merge(name, reports, notes=""):
    out = VerificationReport(name, notes=notes)
    for r in reports:
        out.checks.extend(r.checks)
        if not out.telemetry:
            out.telemetry = r.telemetry
        if r.notes and not notes:
            out.notes = r.notes
    return out


def run_suite(name, hd, order, seed):
    N = order
    if name == "iteration":
        return _merge("iteration", [check_iteration_rule(hd, N), spot_check_elements(hd, 10, seed, N)])
    if name == "rho":
        return _merge("rho", [check_rho_commutes(hd, N), check_difference_derivatives(hd, N)])
    if name == "thm51":
        if N < 2:
            return VerificationReport("thm51", telemetry=hd_telemetry(hd))
        level = (N.bit_length() - 1) - 1
        return check_thm51_conditions(hd.truncated(N) if N < hd.order else hd, level)
    if name == "kernel":
        rep = VerificationReport("kernel", telemetry=hd_telemetry(hd))
        level = 1
        while (1 << level) + (1 << (level - 1)) <= N:
            for u in ("t", "x", "z"):
                elem = getattr(FieldElem, u)(hd.m)
                try:
                    rep.checks.extend(check_kernel_identity(hd, level, elem, name=u).checks)
                except PreconditionFailed as exc:
                    rep.add("kernel:%s:l=%d:precondition" % (u, level), False, 0.0, {"suite": "kernel", "level": level, "element": u, "reason": str(exc)})
            level += 1
        return rep
    if name == "torsion":
        from .torsion import check_action_composition, check_all_torsion, no_rational_2_torsion

        n = min(N, TORSION_ORDER_CAP)
        return _merge(
            "torsion",
            [check_all_torsion(hd, n), check_action_composition(), no_rational_2_torsion(8)],
            notes="translation maps checked at order %d" % n,
        )
    if name == "constants":
        return constants_report(hd, 3, N)
    raise UsageError("unknown suite %r" % name)


def parse_suites(text):
    names = [s.strip() for s in text.split(",") if s.strip()]
    if not names:
        raise UsageError("--suite is empty")
    out = []
    for s in names:
        if s == "all":
            out.extend(SUITES)
        elif s in SUITES:
            out.append(s)
        else:
            raise UsageError("unknown suite %r; choose from %s" % (s, ", ".join(SUITES + ("all",))))
    seen = []
    for s in out:
        if s not in seen:
            seen.append(s)
    return seen


def format_reports(reports, fmt):
    if fmt == "json":
        return dump_json({"passed": all(r.passed for r in reports), "suites": [r.to_json() for r in reports]})
    lines = [r.summary() for r in reports]
    lines.append("overall    %s" % ("PASS" if all(r.passed for r in reports) else "FAIL"))
    return "\n".join(lines) + "\n"


def cmd_verify(args):
    if not args.input:
        raise UsageError("verify needs --in")
    with open(args.input, encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError("%s is not valid JSON: %s" % (args.input, exc)) from exc
    hd, digest_ok = hd_from_json(obj, strict=False)
    if not digest_ok:
        sys.stderr.write("error: stored zc_digest does not match the recomputed z-table\n")
        return EXIT_DIGEST
    suites = parse_suites(args.suite)
    N = hd.order if args.order is None else args.order
    if N > hd.order:
        raise UsageError("--order %d exceeds the stored order %d" % (N, hd.order))
    reports = [run_suite(s, hd, N, args.seed) for s in suites]
    write_text(args.out or "-", format_reports(reports, args.format))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


# -- point -------------------------------------------------------------------


def _render_point(P):
    if P is INFINITY:
        return "infinity"
    return "(%s, %s)" % (P.x, P.z)


def _parse_point(text, field):
    text = text.strip()
    obj = text
    if text.startswith("{") or text.startswith('"'):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError("bad point JSON %r" % text) from exc
    try:
        return point_from_json(obj, lambda s: parse_gf(str(s), field))
    except (KeyError, TypeError) as exc:
        raise ParseError("bad point %r" % text) from exc


def cmd_point(args):
    field = get_field(parse_gf_spec(args.gf))
    ops = GFOps(field)
    operands = list(args.operands)
    if args.op == "mul":
        if len(operands) != 2:
            raise UsageError("point mul takes N and a point")
        try:
            n = int(operands[0])
        except ValueError as exc:
            raise UsageError("multiplier must be an integer, got %r" % operands[0]) from exc
        P = _parse_point(operands[1], field)
        if n < 0:
            n, P = -n, translated_neg(P, ops)
        R = neutral(ops) if n == 0 else mul_n(P, n, ops)
    else:
        want = 1 if args.op == "neg" else 2
        if len(operands) != want:
            raise UsageError("point %s takes %d point(s)" % (args.op, want))
        pts = [_parse_point(s, field) for s in operands]
        if args.op == "neg":
            R = translated_neg(pts[0], ops)
        else:
            R = translated_op(pts[0], pts[1], args.op, ops)
    if args.format == "json":
        sys.stdout.write(dump_json({"gf": "2^%d" % field.m, "op": args.op, "result": point_to_json(R, str)}))
    else:
        sys.stdout.write(_render_point(R) + "\n")
    return EXIT_OK


# -- bench -------------------------------------------------------------------

BENCH_HEADER = ["order", "millis", "max_t_deg", "max_x_deg", "coeffs"]


def bench_row(order):
    t0 = time.perf_counter()
    hd = construct(order, ChoiceSpec.sample())
    check_iteration_rule(hd)
    check_rho_commutes(hd)
    millis = (time.perf_counter() - t0) * 1000.0
    tel = hd_telemetry(hd)
    coeffs = 0
    for v in tuple(hd.xi) + tuple(hd.zc):
        coeffs += v.a.coeff_count() + v.b.coeff_count()
    return [order, "%.1f" % millis, max(tel["max_num_degree"], tel["max_den_degree"]), tel["max_x_degree"], coeffs]


def cmd_bench(args):
    try:
        orders = [int(s) for s in args.orders.split(",") if s.strip()]
    except ValueError as exc:
        raise UsageError("--orders must be a comma-separated list of integers") from exc
    if not orders or min(orders) < 1:
        raise UsageError("--orders needs positive integers")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(BENCH_HEADER)
    for n in orders:
        w.writerow(bench_row(n))
    write_text(args.out or "-", buf.getvalue())
    return EXIT_OK


# -- entry -------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="iterder", description="Iterative derivations on the function field of z^2+z=x^3 over F2(t).")
    p.add_argument("--version", action="version", version="%(prog)s " + __version__)
    p.add_argument("--config", help="key = value file supplying defaults for the flags")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build xi_1..xi_N and write HDData JSON")
    c.add_argument("--order", "-n", type=int, default=None)
    c.add_argument("--choices", help="ChoiceSpec JSON file (list of strings in s)")
    c.add_argument("--out", help="output file (default stdout)")

    v = sub.add_parser("verify", help="run verification suites on an HDData file")
    v.add_argument("--in", dest="input")
    v.add_argument("--suite", default=None, help="comma list of %s or all" % ",".join(SUITES))
    v.add_argument("--order", "-n", type=int, default=None)
    v.add_argument("--format", choices=("json", "text"), default=None)
    v.add_argument("--seed", type=int, default=None)
    v.add_argument("--out", help="report file (default stdout)")

    q = sub.add_parser("point", help="point arithmetic on z^2+z=x^3 over GF(2^m), neutral (0,0)")
    q.add_argument("op", choices=("add", "sub", "neg", "mul"))
    q.add_argument("operands", nargs="+", help="points as '(x,z)', JSON or 'infinity'; mul takes N first")
    q.add_argument("--gf", default=None, help="field as 2^m (default 2^2)")
    q.add_argument("--format", choices=("json", "text"), default="text")

    b = sub.add_parser("bench", help="time construct+verify per order, CSV")
    b.add_argument("--orders", default=None, help="comma list, e.g. 4,8,16")
    b.add_argument("--out", help="CSV file (default stdout)")
    return p


DEFAULTS = {"order": 4, "suite": "all", "format": "json", "seed": DEFAULT_SEED, "gf": "2^2", "orders": "4,8,16"}
INT_KEYS = {"order", "seed"}


def apply_config(args):
    conf = read_config(args.config) if args.config else {}
    for key, default in DEFAULTS.items():
        if not hasattr(args, key) or getattr(args, key) is not None:
            continue
        val = conf.get(key, default)
        if key in INT_KEYS and val is not None and not isinstance(val, int):
            val = int(val)
        if args.command == "verify" and key == "order" and key not in conf:
            val = None
        setattr(args, key, val)
    for key in ("choices", "out", "input"):
        if hasattr(args, key) and getattr(args, key) is None and key in conf:
            setattr(args, key, conf[key])
    if args.command == "verify" and getattr(args, "input", None) is None and "in" in conf:
        args.input = conf["in"]
    return args


COMMANDS = {"construct": cmd_construct, "verify": cmd_verify, "point": cmd_point, "bench": cmd_bench}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        apply_config(args)
        return COMMANDS[args.command](args)
    except NotOnCurve as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_INPUT
    except (ParseError, UsageError, OSError, ValueError) as exc:
        if isinstance(exc, (ChoiceNotInSubfield, MembershipViolation)):
            sys.stderr.write("error: construction rejected: %s\n" % exc)
            return EXIT_CONSTRUCT
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_INPUT
    except AlgebraError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
