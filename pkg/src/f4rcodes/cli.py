"""Command-line interface: ``f4rcodes <command> ...``.

Exit codes: 0 ok, 2 parse error, 3 precondition violated, 4 budget exceeded,
5 verification failure.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Sequence

from . import dna
from .artifact import (
    artifact_to_code,
    build_descriptor,
    code_to_artifact,
    dumps,
    load_json,
)
from .codes.analysis import (
    check_equivalence_theorems,
    dual,
    gray_image,
    is_self_orthogonal,
)
from .codes.code import Code, Op, is_closed_under, verified_flags
from .codes.distance import enum_cap, min_distance
from .errors import F4RError
from .skewpoly import all_monic_right_divisors, format_poly
from .verify import verify_tables

log = logging.getLogger("f4rcodes")

_SKEW_OP = {"f4r": Op.SKEW_SHIFT, "f4_cyclic": Op.CYCLIC_SHIFT, "f4_skew": Op.FROBENIUS_SHIFT}


def _write(text: str, path: str | None) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_code(path: str) -> tuple[Code, str]:
    return artifact_to_code(load_json(path))


def _cap(args: argparse.Namespace) -> int:
    return args.cap if args.cap is not None else enum_cap()


def analyze(code: Code, kind: str, seed: int = 0, cap: int | None = None) -> dict:
    """Parameters and structural checks of one code, as plain data."""
    amb = code.ambient
    cap = enum_cap() if cap is None else cap
    report: dict = {
        "kind": kind,
        "alpha": amb.alpha,
        "beta": amb.beta,
        "length": amb.length,
        "gray_length": amb.gray_length,
        "log2_size": code.log2_size,
        "k": code.f4_dimension,
        "free": code.f4_dimension is not None,
    }
    if code.is_zero():
        report["min_distance"] = None
    else:
        r = min_distance(code, cap=cap, seed=seed)
        report["min_distance"] = r.as_dict(amb)
    report["skew_cyclic"] = is_closed_under(code, _SKEW_OP[kind])
    report["linear"] = is_closed_under(code, Op.R_SCALARS if kind == "f4r" else Op.F4_SCALARS)
    report["self_orthogonal"] = is_self_orthogonal(code)
    if kind == "f4r":
        if amb.beta % 2 == 0:
            report["dual_skew_cyclic"] = is_closed_under(dual(code), Op.SKEW_SHIFT)
        else:
            report["dual_skew_cyclic"] = None
        report["equivalence"] = check_equivalence_theorems(code)
    return report


def _params_line(rep: dict) -> str:
    md = rep["min_distance"]
    k = rep["k"] if rep["k"] is not None else f"{rep['log2_size']}/2 (non-free)"
    if md is None:
        return f"[{rep['gray_length']},{k},-] zero code"
    tag = "exact" if md["exact"] else "upper bound"
    return f"[{rep['gray_length']},{k},{md['value']}] {tag}"


def _format_report(rep: dict) -> str:
    lines = [
        _params_line(rep),
        f"kind: {rep['kind']}  alpha={rep['alpha']} beta={rep['beta']}  "
        f"length={rep['length']} gray_length={rep['gray_length']}",
        f"log2|C| = {rep['log2_size']}",
        f"skew cyclic: {'yes' if rep['skew_cyclic'] else 'no'}",
        f"linear: {'yes' if rep['linear'] else 'no'}",
        f"self-orthogonal: {'yes' if rep['self_orthogonal'] else 'no'}",
    ]
    if "dual_skew_cyclic" in rep:
        val = rep["dual_skew_cyclic"]
        lines.append(
            "dual skew cyclic: " + ("n/a (odd beta)" if val is None else ("yes" if val else "no"))
        )
        eq = rep["equivalence"]
        for name in ("plain_cyclic_closure", "index2_quasi_cyclic_closure"):
            e = eq[name]
            state = "applies" if e["applies"] else "not applicable"
            lines.append(f"{name}: {'holds' if e['holds'] else 'fails'} ({state})")
    return "\n".join(lines) + "\n"


# -- commands -------------------------------------------------------------------


def cmd_build(args: argparse.Namespace) -> int:
    desc = load_json(args.descriptor)
    code, kind = build_descriptor(desc)
    code = verified_flags(code)
    _write(dumps(code_to_artifact(code, kind)), args.output)
    return 0


def cmd_analyze(args: argparse.Namespace) -> int:
    code, kind = _load_code(args.artifact)
    rep = analyze(code, kind, seed=args.seed, cap=_cap(args))
    if args.json == "-":
        _write(dumps(rep), None)
        return 0
    if args.json:
        _write(dumps(rep), args.json)
    _write(_format_report(rep), None)
    return 0


def cmd_dual(args: argparse.Namespace) -> int:
    code, kind = _load_code(args.artifact)
    if kind != "f4r":
        log.info("dual uses the mixed inner product; for beta = 0 it is the Euclidean dual")
    _write(dumps(code_to_artifact(verified_flags(dual(code)), kind)), args.output)
    return 0


def cmd_gray(args: argparse.Namespace) -> int:
    code, _ = _load_code(args.artifact)
    img = verified_flags(gray_image(code))
    if str(Op.CYCLIC_SHIFT) in img.closure_flags:
        kind = "f4_cyclic"
    elif str(Op.FROBENIUS_SHIFT) in img.closure_flags:
        kind = "f4_skew"
    else:
        kind = "f4r"
    _write(dumps(code_to_artifact(img, kind)), args.output)
    return 0


def cmd_dna(args: argparse.Namespace) -> int:
    code, _ = _load_code(args.artifact)
    cap = _cap(args)
    if args.check_rc:
        yes = dna.is_reversible_complement(code, cap)
        _write(f"reversible complement: {'yes' if yes else 'no'}\n", None)
    if args.min_distance is None and not args.fasta and not args.strands:
        return 0
    strands = dna.emit_strands(code, cap)
    if args.fasta:
        _write(dna.to_fasta(strands), args.fasta)
    if args.strands:
        _write("".join(s.sequence + "\n" for s in strands), args.strands)
    if args.min_distance is not None:
        rep = dna.check_hamming_constraints(strands, args.min_distance, strict=args.strict)
        _write(
            f"hamming constraints (d={rep['d']}): {'pass' if rep['passed'] else 'fail'}; "
            f"{rep['distance_violation_count']} distance violations, "
            f"{rep['hybridization_violation_count']} hybridization violations, "
            f"{len(rep['fixed_points'])} fixed points, "
            f"{rep['rc_partner_pairs']} reverse-complement partner pairs\n",
            None,
        )
    return 0


def cmd_verify_tables(args: argparse.Namespace) -> int:
    res = verify_tables(args.effort, seed=args.seed, cap=args.cap)
    _write(dumps(res), args.output)
    return 0 if res["summary"]["passed"] else 5


def cmd_enumerate(args: argparse.Namespace) -> int:
    code, _ = _load_code(args.artifact)
    # a limit bounds the work, so the size cap only applies to full dumps
    cap = _cap(args) if args.limit is None else code.size
    lines = []
    for i, w in enumerate(code.codewords(cap)):
        if args.limit is not None and i >= args.limit:
            break
        lines.append(str(w) + "\n")
    _write("".join(lines), args.output)
    return 0


def cmd_divisors(args: argparse.Namespace) -> int:
    divs = all_monic_right_divisors(args.n, args.base, max_degree=args.max_degree)
    if args.json:
        _write(dumps([format_poly(d) for d in divs]), None)
    else:
        _write("".join(format_poly(d) + "\n" for d in divs), None)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for randomized searches")
    common.add_argument(
        "--cap", type=int, default=None, help="enumeration cap (default: $F4R_ENUM_CAP or 2^24)"
    )
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="f4rcodes", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("build", parents=[common], help="build a code from a JSON descriptor")
    s.add_argument("descriptor")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("analyze", parents=[common], help="parameters and structure of a code")
    s.add_argument("artifact")
    s.add_argument("--json", metavar="PATH", help="also write the JSON report ('-' for stdout only)")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("dual", parents=[common], help="dual code artifact")
    s.add_argument("artifact")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_dual)

    s = sub.add_parser("gray", parents=[common], help="Gray image as an F4 code artifact")
    s.add_argument("artifact")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gray)

    s = sub.add_parser("dna", parents=[common], help="DNA strands and constraint checks")
    s.add_argument("artifact")
    s.add_argument("--check-rc", action="store_true", help="test the reversible-complement property")
    s.add_argument("--min-distance", type=int, metavar="D", help="check the Hamming constraints")
    s.add_argument(
        "--strict", action="store_true", help="count exact reverse-complement partners as violations"
    )
    s.add_argument("--fasta", metavar="PATH", help="write strands as FASTA")
    s.add_argument("--strands", metavar="PATH", help="write strands, one per line")
    s.set_defaults(func=cmd_dna)

    s = sub.add_parser("verify-tables", parents=[common], help="re-verify the golden tables")
    s.add_argument("--effort", choices=("quick", "full"), default="quick")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_verify_tables)

    s = sub.add_parser("enumerate", parents=[common], help="dump codewords")
    s.add_argument("artifact")
    s.add_argument("--limit", type=int)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("divisors", parents=[common], help="monic right divisors of X^n - 1")
    s.add_argument("n", type=int)
    s.add_argument("--base", choices=("F4", "R"), default="F4")
    s.add_argument("--max-degree", type=int, default=12)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_divisors)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
    )
    try:
        return args.func(args)
    except F4RError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
