"""Command-line entry point.

    latticerec transform -p square.json
    latticerec recursion-verify -p tri.json --q point.json --kmax 5 --json
    latticerec repro-paper

Exit status: 0 verified, 1 verification failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import format_rational
from .brion import brion_check, brion_terms
from .errors import (
    DimensionMismatch,
    InfeasibleError,
    InvalidInput,
    UnboundedError,
    UnsupportedInput,
    VerificationError,
)
from .polytope import Polytope, polytope_from_json, polytope_to_json
from .schurgt import (
    GTPattern,
    SkewShape,
    counterexample_report,
    dominates,
    gt_vertices,
    kostka,
    schur_polynomial,
    schur_recursion_check,
    ssyt_enumerate,
    tableau_content,
)
from .transform import (
    annihilating_power,
    ehrhart_sequence,
    indicator_recursion_check,
    integer_point_transform,
    minimality_residuals,
    transform_sequence,
    verify_recursion,
    vertex_key,
)

EXIT_OK, EXIT_FAILED, EXIT_BAD_INPUT = 0, 1, 2


@dataclass
class RunReport:
    command: str
    inputs: dict
    verified: bool
    artifacts: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def to_json(self, timing=False):
        out = {
            "command": self.command,
            "inputs": self.inputs,
            "verified": self.verified,
            "artifacts": self.artifacts,
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 6)
        return json.dumps(out, indent=2, sort_keys=True) + "\n"

    def to_text(self):
        lines = [f"command: {self.command}", f"verified: {str(self.verified).lower()}"]
        for key, value in self.artifacts.items():
            if isinstance(value, (dict, list)):
                value = json.dumps(value, sort_keys=True)
            elif isinstance(value, bool):
                value = str(value).lower()
            lines.append(f"{key}: {value}")
        return "\n".join(lines) + "\n"


class BadInput(Exception):
    pass


# ---------------------------------------------------------------------------
# input helpers


def _load_json(path, what):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise BadInput(f"{what}: cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise BadInput(f"{path}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}") from None


def _polytope(path, what="--polytope"):
    if path is None:
        raise BadInput(f"{what} is required")
    try:
        return polytope_from_json(_load_json(path, what))
    except InvalidInput as exc:
        raise BadInput(f"{path}: {exc}") from None


def _shape_obj(path):
    if path is None:
        raise BadInput("--shape is required")
    obj = _load_json(path, "--shape")
    if not isinstance(obj, dict):
        raise BadInput(f"{path}: shape JSON must be an object")
    for key in ("lambda", "n"):
        if key not in obj:
            raise BadInput(f"{path}: missing field '{key}'")
    return obj


def _shape(path):
    obj = _shape_obj(path)
    try:
        return SkewShape(tuple(obj["lambda"]), tuple(obj.get("mu", ())), obj["n"]), obj
    except (InvalidInput, TypeError) as exc:
        raise BadInput(f"{path}: {exc}") from None


def _int_list(text, what):
    try:
        return [int(v) for v in text.split(",")]
    except ValueError:
        raise BadInput(f"{what}: expected comma-separated integers, got {text!r}") from None


def _num(v):
    v = Fraction(v)
    return int(v) if v.denominator == 1 else format_rational(v)


# ---------------------------------------------------------------------------
# commands


def cmd_transform(args):
    P = _polytope(args.polytope)
    sigma = integer_point_transform(P)
    return RunReport(
        "transform",
        {"polytope": polytope_to_json(P)},
        True,
        {"transform": sigma.render(), "lattice_points": len(sigma)},
    ), sigma.render() + "\n"


def _q_or_origin(args, n):
    if args.q is None:
        return Polytope([(0,) * n])
    return _polytope(args.q, "--q")


def cmd_recursion_verify(args):
    P = _polytope(args.polytope)
    Q = _q_or_origin(args, P.n)
    inputs = {"p": polytope_to_json(P), "q": polytope_to_json(Q), "kmax": args.kmax}
    try:
        cert = verify_recursion(P, Q, args.kmax)
    except VerificationError as exc:
        return RunReport("recursion-verify", inputs, False, {"error": str(exc), **_detail(exc)}), None
    return RunReport("recursion-verify", inputs, True, cert.to_json()), None


def _detail(exc):
    return {k: (str(v) if not isinstance(v, (int, str, bool, list)) else v) for k, v in exc.detail.items()}


def cmd_minimality(args):
    P = _polytope(args.polytope)
    Q = _q_or_origin(args, P.n)
    inputs = {"p": polytope_to_json(P), "q": polytope_to_json(Q)}
    residuals = minimality_residuals(P, Q)
    seq = transform_sequence(P, Q, args.kmax + 1)
    artifacts = {
        "minimal": all(not p.is_zero() for p in residuals.values()),
        "residuals": {vertex_key(v): p.render() for v, p in residuals.items()},
        "sequence": [s.render() for s in seq],
    }
    return RunReport("minimality", inputs, True, artifacts), None


def _box(text, n):
    if text is None:
        raise BadInput("--box is required (e.g. --box -1:4 or --box -1:4,0:3)")
    parts = text.split(",")
    try:
        ranges = [tuple(Fraction(x) for x in part.split(":")) for part in parts]
    except (ValueError, ZeroDivisionError):
        raise BadInput(f"--box: cannot parse {text!r}") from None
    if any(len(r) != 2 for r in ranges):
        raise BadInput("--box: each range must be lo:hi")
    if len(ranges) == 1:
        ranges = ranges * n
    if len(ranges) != n:
        raise BadInput(f"--box: expected 1 or {n} ranges, got {len(ranges)}")
    return ranges


def cmd_indicator_check(args):
    P = _polytope(args.polytope)
    box = _box(args.box, P.n)
    try:
        step = Fraction(args.step)
    except (ValueError, ZeroDivisionError):
        raise BadInput(f"--step: cannot parse {args.step!r}") from None
    inputs = {
        "polytope": polytope_to_json(P),
        "k": args.k,
        "box": [[_num(a), _num(b)] for a, b in box],
        "step": format_rational(step),
    }
    try:
        indicator_recursion_check(P, args.k, box, step)
    except VerificationError as exc:
        return RunReport("indicator-check", inputs, False, {"error": str(exc), **_detail(exc)}), None
    return RunReport("indicator-check", inputs, True, {}), None


def cmd_ehrhart(args):
    P = _polytope(args.polytope)
    inputs = {"polytope": polytope_to_json(P), "kmax": args.kmax}
    try:
        counts = ehrhart_sequence(P, args.kmax)
    except VerificationError as exc:
        return RunReport("ehrhart", inputs, False, {"error": str(exc), **_detail(exc)}), None
    artifacts = {
        "counts": counts,
        "dim": P.dim,
        "checked_power": P.dim + 1,
        "minimal_power": annihilating_power(counts),
    }
    return RunReport("ehrhart", inputs, True, artifacts), None


def cmd_brion(args):
    P = _polytope(args.polytope)
    terms = brion_terms(P)
    ok = brion_check(P, terms)
    artifacts = {
        "vertices": [
            {
                "vertex": list(v),
                "numerator": t.numerator.render(),
                "denominator_factors": [list(g) for g in t.denominator_factors],
            }
            for v, t in terms
        ]
    }
    return RunReport("brion", {"polytope": polytope_to_json(P)}, ok, artifacts), None


def cmd_schur(args):
    shape, _ = _shape(args.shape)
    s = schur_polynomial(shape)
    return RunReport("schur", {"shape": shape.to_json()}, True, {"schur": s.render()}), s.render() + "\n"


def cmd_gt_vertices(args):
    shape, _ = _shape(args.shape)
    verts = gt_vertices(shape)
    artifacts = {
        "vertices": [
            {"rows": [[_num(v) for v in row] for row in p.rows], "weight": [_num(c) for c in p.weight()]}
            for p in verts
        ],
        "all_integral": all(p.is_integral() for p in verts),
    }
    return RunReport("gt-vertices", {"shape": shape.to_json()}, True, artifacts), None


def cmd_kostka(args):
    shape, _ = _shape(args.shape)
    if args.weight is None:
        raise BadInput("--weight is required")
    w = _int_list(args.weight, "--weight")
    if len(w) != shape.n:
        raise BadInput(f"--weight: expected {shape.n} entries, got {len(w)}")
    k = kostka(shape, w)
    inputs = {"shape": shape.to_json(), "weight": w}
    return RunReport("kostka", inputs, True, {"kostka": k}), f"{k}\n"


def cmd_counterexample(args):
    shape, _ = _shape(args.shape)
    report = counterexample_report(shape)
    return RunReport("counterexample", {"shape": shape.to_json()}, True, report.to_json()), None


def cmd_schur_recursion(args):
    shape, obj = _shape(args.shape)
    n = shape.n
    kappa = obj.get("kappa", [0] * n)
    nu = obj.get("nu", [0] * n)
    l_max = args.kmax if args.kmax is not None else obj.get("l")
    if l_max is None:
        raise BadInput(f"{args.shape}: missing field 'l' (largest l to check)")
    inputs = {"shape": shape.to_json(), "kappa": kappa, "nu": nu, "l": l_max, "r": obj.get("r")}
    try:
        cert = schur_recursion_check(kappa, shape.lam, shape.mu, nu, n, l_max, r=obj.get("r"))
    except VerificationError as exc:
        return RunReport("schur-recursion", inputs, False, {"error": str(exc), **_detail(exc)}), None
    return RunReport("schur-recursion", inputs, True, cert.to_json()), None


def repro_paper():
    """Both decisive computations: the non-lattice Q example and the
    counterexample for lam = (5,3,1), mu = (3,0,0), n = 3."""
    checks = {}
    # non-lattice translate: P = [0,1] x {0}, Q = {(1/2, 1/2)}
    P = Polytope([(0, 0), (1, 0)])
    Q = Polytope([(Fraction(1, 2), Fraction(1, 2))])
    cert = verify_recursion(P, Q, 5)
    seq = transform_sequence(P, Q, 6)
    checks["nonlattice_sequence_zero"] = all(s.is_zero() for s in seq)
    checks["nonlattice_all_residuals_zero"] = all(p.is_zero() for p in cert.minimality_residuals.values())
    checks["nonlattice_not_minimal"] = not cert.minimal

    shape = SkewShape((5, 3, 1), (3, 0, 0), 3)
    pattern = GTPattern(((1, 3, 5), (0, 1, 4), (0, 0, 3), (0, 0, 3)))
    target = (4, 2, 0)
    checks["pattern_weight_420"] = pattern.weight() == target
    checks["420_dominates_321"] = dominates(target, (3, 2, 1))
    checks["kostka_420_positive"] = kostka(shape, target) >= 1
    checks["tableau_with_content_420_exists"] = any(
        tableau_content(T, 3) == target for T in ssyt_enumerate(shape)
    )
    report = counterexample_report(shape)
    checks["420_in_W"] = target in report.W
    checks["vertex_coordinates_in_0135"] = set(report.vertex_values) <= {0, 1, 3, 5}
    checks["all_vertices_integral"] = report.all_vertices_integral
    checks["420_not_a_vertex_weight"] = target not in report.vertex_weights
    checks["conjecture_refuted"] = report.refuted
    artifacts = {
        "checks": checks,
        "nonlattice_certificate": cert.to_json(),
        "counterexample": report.to_json(),
    }
    return all(checks.values()), artifacts


def cmd_repro_paper(args):
    ok, artifacts = repro_paper()
    return RunReport("repro-paper", {}, ok, artifacts), None


COMMANDS = {
    "transform": cmd_transform,
    "recursion-verify": cmd_recursion_verify,
    "minimality": cmd_minimality,
    "indicator-check": cmd_indicator_check,
    "ehrhart": cmd_ehrhart,
    "brion": cmd_brion,
    "schur": cmd_schur,
    "gt-vertices": cmd_gt_vertices,
    "kostka": cmd_kostka,
    "counterexample": cmd_counterexample,
    "schur-recursion": cmd_schur_recursion,
    "repro-paper": cmd_repro_paper,
}


HELP = {
    "transform": "print the integer point transform of P",
    "recursion-verify": "check the vertex recursion for sigma(kP+Q), k=0..kmax",
    "minimality": "dropped-root residuals for P and Q",
    "indicator-check": "pointwise indicator identity for the k-th dilate",
    "ehrhart": "lattice-point counts of kP and their annihilating power",
    "brion": "vertex-cone generating functions and Brion's identity",
    "schur": "print the skew Schur polynomial of a shape",
    "gt-vertices": "vertices of the Gelfand-Tsetlin polytope of a shape",
    "kostka": "Kostka number of a shape and --weight",
    "counterexample": "compare W with the GT vertex weights of a shape",
    "schur-recursion": "check the vertex-weight recursion for a Schur family",
    "repro-paper": "rerun the non-lattice translate and (5,3,1)/(3,0,0) checks",
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="latticerec",
        description="Exact recursions for integer point transforms and skew Schur polynomials.",
        epilog="Exit status: 0 verified, 1 verification failed, 2 bad input.",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True
    for name in COMMANDS:
        p = sub.add_parser(name, help=HELP[name], description=HELP[name])
        p.add_argument("-p", "--polytope", "--p", dest="polytope", metavar="FILE", help="polytope JSON file")
        p.add_argument("--q", metavar="FILE", help="second polytope Q (default: the origin)")
        p.add_argument("--kmax", type=int, default=5, help="largest k (or l) to check")
        p.add_argument("--shape", metavar="FILE", help="shape JSON file")
        p.add_argument("--weight", help="comma-separated weight vector (kostka)")
        p.add_argument("--k", type=int, default=0, help="dilation index (indicator-check)")
        p.add_argument("--box", help="sample box lo:hi or lo:hi,lo:hi,... (indicator-check)")
        p.add_argument("--step", default="1/2", help="grid spacing (indicator-check)")
        p.add_argument("--out", metavar="FILE", help="write output here instead of stdout")
        p.add_argument("--json", action="store_true", help="emit the JSON run report")
        p.add_argument("--timing", action="store_true", help="include elapsed time in the report")
    return parser


def run(argv=None):
    """Execute one command; returns (exit_code, RunReport or None)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (EXIT_OK if exc.code == 0 else EXIT_BAD_INPUT), None
    if args.command == "schur-recursion" and "--kmax" not in (argv or sys.argv[1:]):
        args.kmax = None
    start = time.perf_counter()
    try:
        report, plain = COMMANDS[args.command](args)
    except BadInput as exc:
        print(f"latticerec {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT, None
    except (InvalidInput, DimensionMismatch, UnsupportedInput, InfeasibleError, UnboundedError) as exc:
        print(f"latticerec {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT, None
    report.elapsed = time.perf_counter() - start
    if args.json or plain is None:
        text = report.to_json(timing=args.timing) if args.json else report.to_text()
    else:
        text = plain
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return (EXIT_OK if report.verified else EXIT_FAILED), report


def main(argv=None):
    code, _ = run(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
