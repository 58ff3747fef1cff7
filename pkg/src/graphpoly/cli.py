"""Command-line driver: ``graphpoly <command> [options]``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .counting import coefficients, structure
from .errors import GraphPolyError
from .experiments import (
    ExperimentConfig,
    dumps,
    exp_dom_distinction,
    exp_identity_suite,
    exp_jlr_table,
    exp_mc_unimodal,
    exp_realrooted_sweep,
)
from .graph import parse_graph6, write_graph6
from .poly import parse_polynomial, render, squarefree_part
from .properties import is_member, parse_property
from .realroots import (
    brown_criterion,
    count_distinct_real_roots,
    is_real_rooted,
    sign_variations_at_infinity,
    sturm_sequence,
)
from .shape import analyze, central_index, cohereditary_inequalities

EXIT_ASSERTION = 8  # argparse already uses 2 for usage errors


def _int_list(text: str) -> list[int]:
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if "-" in part[1:]:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    return out


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _read_graph(arg: str):
    if os.path.exists(arg):
        with open(arg, "rb") as fh:
            lines = [ln.strip() for ln in fh.read().splitlines() if ln.strip()]
        if not lines:
            from .errors import Graph6Error

            raise Graph6Error(f"{arg}: no graph found")
        return parse_graph6(lines[0])
    return parse_graph6(arg)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _bool(b: bool) -> str:
    return "true" if b else "false"


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_compute(args) -> int:
    g = _read_graph(args.graph)
    spec = parse_property(args.property)
    seq = coefficients(g, spec)
    poly = seq.polynomial()
    rr = is_real_rooted(poly)
    shape = analyze(seq.values)
    info = {
        "graph6": write_graph6(g),
        "n": g.n,
        "property": spec.describe(),
        "coefficients": list(seq.values),
        "polynomial": render(poly),
        "real_rooted": rr,
        "unimodal": shape.is_unimodal,
        "modes": sorted(shape.modes),
        "log_concave": shape.is_log_concave,
        "internal_zeros": shape.has_internal_zeros,
    }
    if spec.is_cohereditary or spec.is_augmented:
        ineq = cohereditary_inequalities(seq.values)
        info["central_mode"] = shape.is_unimodal and central_index(g.n) in shape.modes
        info["lemma21"] = ineq.lemma21_pass
        info["ratio"] = ineq.ratio_pass
    if spec.is_hereditary:
        member = is_member(spec, g)
        info["member"] = member
        if not member:
            st = structure(g, spec, seq)
            info["structure"] = {"g": st.g, "nabla": st.nabla, "alpha": st.alpha, "degree": st.degree}
    if args.format == "json":
        _emit(json.dumps(info, sort_keys=True, indent=2) + "\n", args.out)
        return 0
    lines = [seq.to_csv().rstrip("\n")]
    for key in ("real_rooted", "unimodal", "log_concave", "internal_zeros", "central_mode", "lemma21", "ratio", "member"):
        if key in info:
            lines.append(f"{key}: {_bool(info[key])}")
    lines.append("modes: " + ",".join(map(str, info["modes"])))
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_sturm(args) -> int:
    f = parse_polynomial(args.poly)
    if f.degree < 1:
        raise ValueError("need a polynomial of degree >= 1")
    sq = squarefree_part(f)
    seq = sturm_sequence(f)
    info = {
        "polynomial": render(f),
        "sturm": [render(p) for p in seq.polys],
        "degrees": seq.degrees,
        "leading_signs": seq.leading_signs,
        "variations_minus_inf": sign_variations_at_infinity(seq, -1),
        "variations_plus_inf": sign_variations_at_infinity(seq, +1),
        "distinct_real_roots": count_distinct_real_roots(f),
        "squarefree": sq.degree == f.degree,
        "real_rooted": is_real_rooted(f),
    }
    if sq.degree >= 1:
        target = sq if sq.leading > 0 else -sq
        ok, diag = brown_criterion(target)
        info["brown"] = {
            "holds": ok,
            "applied_to": render(target),
            "all_leading_positive": diag.all_leading_positive,
            "unit_degree_steps": diag.unit_degree_steps,
        }
    if args.format == "json":
        _emit(json.dumps(info, sort_keys=True, indent=2) + "\n", args.out)
    else:
        lines = [
            f"{k}: {_bool(v) if isinstance(v, bool) else v}"
            for k, v in info.items()
            if k not in ("sturm", "brown")
        ]
        lines += [f"F{i}: {p}" for i, p in enumerate(info["sturm"])]
        if "brown" in info:
            lines.append(f"brown: {_bool(info['brown']['holds'])}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _run_report(args, report: dict) -> int:
    if args.format == "csv":
        rows = report["per_n"]
        keys = [k for k in rows[0] if not isinstance(rows[0][k], (list, dict))] if rows else []
        text = ",".join(keys) + "\n" + "".join(",".join(str(r[k]) for k in keys) + "\n" for r in rows)
    else:
        text = dumps(report)
    _emit(text, args.out)
    return 0 if report["passed"] else EXIT_ASSERTION


def _config(args, name: str, **kw) -> ExperimentConfig:
    return ExperimentConfig(
        experiment=name,
        seed=args.seed,
        output_format=args.format,
        output_path=args.out,
        workers=getattr(args, "workers", 1),
        **kw,
    )


def cmd_mc(args) -> int:
    cfg = _config(
        args, "mc_unimodal",
        property=args.property, n_values=args.n, samples=args.samples, p=args.p,
        exhaustive=args.exhaustive, threshold=args.threshold,
    )
    return _run_report(args, exp_mc_unimodal(cfg))


def cmd_sweep(args) -> int:
    cfg = _config(args, "realrooted_sweep", property=args.property, n_values=args.n)
    return _run_report(args, exp_realrooted_sweep(cfg))


def cmd_identities(args) -> int:
    return _run_report(args, exp_identity_suite(_config(args, "identity_suite", n_values=args.n)))


def cmd_jlr(args) -> int:
    h = _read_graph(args.pattern)
    cfg = _config(args, "jlr", n_values=args.n, p=args.p)
    return _run_report(args, exp_jlr_table(cfg, h))


def cmd_dom(args) -> int:
    return _run_report(args, exp_dom_distinction(_config(args, "dom_distinction")))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=1, help="64-bit sampling seed (default 1)")
    common.add_argument("--format", choices=("json", "csv"), default=None)
    common.add_argument("--out", default=None, help="write output here instead of stdout")

    parser = argparse.ArgumentParser(prog="graphpoly", description="Generating polynomials of graph properties.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="coefficients and shape for one graph")
    p.add_argument("--graph", required=True, help="graph6 string or file (first line used)")
    p.add_argument("--property", required=True)
    p.set_defaults(func=cmd_compute, default_format="csv")

    p = sub.add_parser("sturm", parents=[common], help="Sturm diagnostics for a polynomial")
    p.add_argument("--poly", required=True, help='e.g. "1 + 3*x + x^2" or "1,3,1"')
    p.set_defaults(func=cmd_sturm, default_format="csv")

    p = sub.add_parser("sweep", parents=[common], help="exhaustive real-rootedness sweep")
    p.add_argument("--property", required=True)
    p.add_argument("--n", type=_int_list, default=list(range(1, 8)), help="e.g. 1-7 or 4,5,6")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_sweep, default_format="json")

    p = sub.add_parser("mc", parents=[common], help="Monte Carlo unimodality in G(n, p)")
    p.add_argument("--property", required=True)
    p.add_argument("--n", type=_int_list, required=True)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--p", type=_fraction, default=Fraction(1, 2))
    p.add_argument("--threshold", type=_fraction, default=Fraction(99, 100),
                   help="minimum fraction of samples with a central mode")
    p.add_argument("--exhaustive", action="store_true", help="all labelled graphs instead of samples (n <= 6)")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_mc, default_format="json")

    p = sub.add_parser("identities", parents=[common], help="classical polynomial identities")
    p.add_argument("--n", type=_int_list, default=list(range(1, 8)))
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_identities, default_format="json")

    p = sub.add_parser("jlr", parents=[common], help="subgraph-avoidance bounds table")
    p.add_argument("--pattern", required=True, help="graph6 string or file for H")
    p.add_argument("--n", type=_int_list, required=True)
    p.add_argument("--p", type=_fraction, default=Fraction(1, 2))
    p.set_defaults(func=cmd_jlr, default_format="json")

    p = sub.add_parser("dom-distinction", parents=[common], help="domination counts are not a property count")
    p.set_defaults(func=cmd_dom, default_format="json")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = args.default_format
    try:
        return args.func(args)
    except GraphPolyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except (ValueError, ZeroDivisionError) as exc:
        code = getattr(exc, "exit_code", 1)
        print(f"error: {exc}", file=sys.stderr)
        return code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
