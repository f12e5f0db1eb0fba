"""Command-line front end with reproducible, machine-readable output.

Subcommands: ``invariants`` (basis and dimension at a degree), ``beta``
(generation-degree scan), ``verify`` (closed-form identity sweeps, kernel
certificates, or theorem-value comparison), and ``explore`` (beta scans for
the algebras A(0,-1) and A(2,-1)).  Output is byte-stable for a fixed
configuration regardless of the parallelism width.

Exit codes: 0 success/verified, 1 verification failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .ncalg import AlgebraSpec, downup_spec, skew_spec
from .action import invariant_basis, invariant_dimension_trace, standard_action
from .gendeg import compute_beta
from .formulas import VERIFY_TARGETS, verify_identity
from .parallel import default_width, pmap

FORMATS = ("json", "csv", "table")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ncinv",
        description="Exact invariant-ring computations for cyclic actions on "
        "the skew polynomial ring and the graded down-up algebras.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, algebra=True):
        if algebra:
            p.add_argument("--algebra", choices=("skew", "downup"), default="skew")
            p.add_argument("--alpha", type=Fraction, default=None,
                           help="down-up relation parameter, as p/q")
            p.add_argument("--beta", type=Fraction, default=None, dest="beta_param",
                           help="down-up relation parameter, as p/q (nonzero)")
        p.add_argument("--n", type=int, required=True,
                       help="order of the root of unity; the group has order 2n")
        p.add_argument("--format", choices=FORMATS, default="json")
        p.add_argument("--threads", type=int, default=None,
                       help="parallelism width (default: NCINV_THREADS or cores)")

    p_inv = sub.add_parser("invariants", help="invariant basis and dimension at a degree")
    common(p_inv)
    p_inv.add_argument("--degree", type=int, required=True)

    p_beta = sub.add_parser("beta", help="scan product spans and report beta(g)")
    common(p_beta)
    p_beta.add_argument("--max-multiple", type=int, default=5)
    p_beta.add_argument("--full-scan", action="store_true",
                        help="audit degrees not divisible by n instead of skipping")

    p_ver = sub.add_parser("verify", help="verify a closed-form identity or theorem value")
    common(p_ver)
    p_ver.add_argument("--target", required=True,
                       choices=VERIFY_TARGETS + ("beta-theorem",))
    p_ver.add_argument("--max-multiple", type=int, default=5)

    p_exp = sub.add_parser("explore", help="beta scans for A(0,-1) and A(2,-1)")
    common(p_exp, algebra=False)
    p_exp.add_argument("--max-multiple", type=int, default=8)
    return parser


def _spec_from_args(args) -> AlgebraSpec:
    if args.algebra == "skew":
        if args.alpha is not None or args.beta_param is not None:
            raise ValueError("--alpha/--beta apply to down-up algebras only")
        return skew_spec(args.n)
    if args.alpha is None or args.beta_param is None:
        raise ValueError("down-up algebras need --alpha and --beta")
    return downup_spec(args.alpha, args.beta_param, args.n)


def _theorem_beta(spec: AlgebraSpec) -> int:
    """The paper's beta value, where a theorem states one."""
    n = spec.n
    if spec.kind == "skew":
        if n % 2 == 1:
            return 3 * n
        return 2 * n if n % 4 == 0 else n
    if (spec.alpha, spec.beta_param) == (0, 1):
        return 2 * n if n % 2 == 0 else 3 * n
    raise ValueError(
        "no theorem value for this algebra; use the beta or explore subcommands"
    )


def run(args) -> tuple[int, str]:
    """Execute one validated configuration; returns (exit status, output)."""
    width = args.threads if args.threads is not None else default_width()
    if width < 1:
        raise ValueError("--threads must be a positive integer")

    if args.subcommand == "invariants":
        spec = _spec_from_args(args)
        if args.degree < 0:
            raise ValueError("--degree must be nonnegative")
        act = standard_action(spec)
        basis = invariant_basis(act, args.degree)
        report = {
            "algebra": spec.to_json(),
            "degree": args.degree,
            "dimension": len(basis),
            "trace_dimension": invariant_dimension_trace(act, args.degree),
            "basis": [p.to_json() for p in basis],
        }
        return 0, emit(report, args.format)

    if args.subcommand == "beta":
        spec = _spec_from_args(args)
        report = compute_beta(
            standard_action(spec), args.max_multiple, full_scan=args.full_scan
        )
        return 0, emit(report.to_json(), args.format)

    if args.subcommand == "verify":
        if args.algebra == "downup" and args.alpha is None and args.beta_param is None:
            args.alpha, args.beta_param = Fraction(0), Fraction(1)
        spec = _spec_from_args(args)
        if spec.kind == "downup" and (spec.alpha, spec.beta_param) != (0, 1):
            raise ValueError(
                "closed-form identities and theorem values cover the down-up "
                "algebra A(0,1) only"
            )
        if args.target == "beta-theorem":
            expected = _theorem_beta(spec)
            computed = compute_beta(standard_action(spec), args.max_multiple).beta
            failures = []
            if computed != expected:
                failures.append({
                    "tuple": ["beta"],
                    "closed_form": str(expected),
                    "engine": str(computed),
                })
            report = {
                "target": "beta-theorem",
                "n": spec.n,
                "kind": spec.kind,
                "checked": 1,
                "expected": expected,
                "computed": computed,
                "failures": failures,
            }
        else:
            report = verify_identity(args.target, args.n, kind=spec.kind)
        status = 0 if not report["failures"] else 1
        return status, emit(report, args.format)

    # explore: the Question's algebras
    if args.n < 1:
        raise ValueError("--n must be a positive integer")
    specs = [downup_spec(0, -1, args.n), downup_spec(2, -1, args.n)]
    reports = pmap(
        lambda s: compute_beta(standard_action(s), args.max_multiple).to_json(),
        specs,
        width,
    )
    report = {
        "n": args.n,
        "max_multiple": args.max_multiple,
        "explorations": list(reports),
    }
    return 0, emit(report, args.format)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def emit(report: dict, fmt: str) -> str:
    """Render a report deterministically in the requested format."""
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    if fmt == "csv":
        return _emit_csv(report)
    return _emit_table(report)


def _generation_rows(report: dict, algebra: str) -> list[list[str]]:
    return [
        [algebra, str(r["degree"]), str(r["inv_dim"]), str(r["product_dim"]),
         str(r["new_gens"])]
        for r in report["degrees"]
    ]


def _emit_csv(report: dict) -> str:
    if "degrees" in report:
        lines = ["degree,inv_dim,product_dim,new_gens"]
        lines += [",".join(row[1:]) for row in _generation_rows(report, "")]
        return "\n".join(lines) + "\n"
    if "explorations" in report:
        lines = ["algebra,degree,inv_dim,product_dim,new_gens"]
        for sub in report["explorations"]:
            name = _algebra_name(sub["algebra"])
            lines += [",".join(row) for row in _generation_rows(sub, name)]
        return "\n".join(lines) + "\n"
    if "failures" in report:
        head = "target,n,kind,checked,failures"
        row = ",".join(
            str(report[k]) for k in ("target", "n", "kind", "checked")
        ) + f",{len(report['failures'])}"
        return head + "\n" + row + "\n"
    return "degree,dimension,trace_dimension\n" + ",".join(
        str(report[k]) for k in ("degree", "dimension", "trace_dimension")
    ) + "\n"


def _algebra_name(spec_json: dict) -> str:
    if spec_json["kind"] == "skew":
        return "skew"
    return f"A({spec_json['alpha']};{spec_json['beta']})"


def _emit_table(report: dict) -> str:
    if "degrees" in report:
        lines = [f"algebra {_algebra_name(report['algebra'])}  n={report['n']}"]
        lines.append(f"{'degree':>7} {'inv_dim':>8} {'prod_dim':>9} {'new_gens':>9}")
        for r in report["degrees"]:
            lines.append(
                f"{r['degree']:>7} {r['inv_dim']:>8} {r['product_dim']:>9} "
                f"{r['new_gens']:>9}"
            )
        lines.append(f"beta = {report['beta']}  exhausted = {report['exhausted']}")
        return "\n".join(lines) + "\n"
    if "explorations" in report:
        return "".join(_emit_table(sub) for sub in report["explorations"])
    if "failures" in report:
        lines = [
            f"target {report['target']}  kind {report['kind']}  n={report['n']}",
            f"checked {report['checked']}  failures {len(report['failures'])}",
        ]
        for f in report["failures"]:
            lines.append(f"  tuple {f['tuple']}")
            lines.append(f"    closed form: {f['closed_form']}")
            lines.append(f"    engine:      {f['engine']}")
        lines.append("VERIFIED" if not report["failures"] else "FAILED")
        return "\n".join(lines) + "\n"
    lines = [
        f"algebra {_algebra_name(report['algebra'])}  degree {report['degree']}",
        f"dimension {report['dimension']}  (trace oracle {report['trace_dimension']})",
    ]
    for p in report["basis"]:
        terms = " + ".join(
            f"{_coeff_str(t['coeff'])}*{t['monomial']}" for t in p["terms"]
        )
        lines.append("  " + terms)
    return "\n".join(lines) + "\n"


def _coeff_str(coeff_json: dict) -> str:
    return "[" + ",".join(coeff_json["coeffs"]) + "]"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        status, text = run(args)
    except (ValueError, ArithmeticError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
