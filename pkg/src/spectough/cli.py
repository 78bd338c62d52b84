"""Command-line front end.

Graphs travel as graph6 lines (file, stdin, or inline argument); one
record is emitted per input graph, in input order.  Exit codes are stable:

    0  success
    2  malformed input (graph6 parse error or bad usage)
    3  toughness undefined (complete or disconnected input)
    4  search budget exceeded
    5  infeasible construction or generation parameters
    6  certification contradiction (fatal; prints census diagnostics)

Floats print at 10 significant digits; rationals always print as p/q.
The structured output mode emits one `key=value ...` record per line; the
field inventory is documented in docs/output-schema.md.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Optional

from .certify import (
    CertReport,
    ContradictionError,
    TheoremChoice,
    Verdict,
    certify_thm3,
    certify_thm4,
    random_regular,
    verify_on_corpus,
)
from .constructions import (
    Family,
    InfeasibleConstructionError,
    build_family,
    hub_size,
)
from .graph import Graph, delete_vertices, components, is_connected, is_regular
from .graph6 import Graph6Error, parse_graph6, write_graph6
from .spectral import eigenvalues
from .thresholds import ThresholdParams, phi, psi
from .toughness import (
    BudgetExceededError,
    ToughnessUndefinedError,
    is_one_over_b_tough,
    toughness_exact,
)

BUDGET_ENV_VAR = "SPECTOUGH_BUDGET"


@dataclass(frozen=True)
class RunConfig:
    output_format: str = "human"
    budget: Optional[int] = None

    @staticmethod
    def from_args(args: argparse.Namespace) -> "RunConfig":
        budget = getattr(args, "budget", None)
        if budget is None:
            env = os.environ.get(BUDGET_ENV_VAR)
            budget = int(env) if env else None
        return RunConfig(getattr(args, "format", "human"), budget)


def _fmt(x: float) -> str:
    return f"{x:.10g}"


def _frac(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _vertex_list(vs: Iterable[int]) -> str:
    return "{" + ", ".join(str(v) for v in vs) + "}"


def _record(kind: str, fields: dict[str, str]) -> str:
    parts = [f"record={kind}"]
    parts.extend(f"{k}={v}" for k, v in fields.items())
    return " ".join(parts)


def _read_graphs(source: str) -> list[Graph]:
    """Accept a file path, '-' for stdin, or an inline graph6 string."""
    if source == "-":
        lines = [ln for ln in sys.stdin.read().splitlines() if ln.strip()]
    elif Path(source).is_file():
        lines = [ln for ln in Path(source).read_text().splitlines() if ln.strip()]
    else:
        lines = [source]
    return [parse_graph6(ln.strip()) for ln in lines]


# -- subcommands ------------------------------------------------------------


def cmd_spectrum(args: argparse.Namespace) -> int:
    cfg = RunConfig.from_args(args)
    for i, g in enumerate(_read_graphs(args.input)):
        spec = eigenvalues(g)
        if cfg.output_format == "structured":
            print(
                _record(
                    "spectrum",
                    {
                        "index": str(i),
                        "n": str(g.n),
                        "values": ",".join(_fmt(v) for v in spec.values),
                    },
                )
            )
        else:
            print(" ".join(_fmt(v) for v in spec.values))
    return 0


def cmd_tough(args: argparse.Namespace) -> int:
    cfg = RunConfig.from_args(args)
    for i, g in enumerate(_read_graphs(args.input)):
        if args.b is None:
            res = toughness_exact(g, budget=cfg.budget)
            if cfg.output_format == "structured":
                print(
                    _record(
                        "tough",
                        {
                            "index": str(i),
                            "n": str(g.n),
                            "tau": _frac(res.tau),
                            "witness": ",".join(str(v) for v in res.witness),
                            "components": str(res.component_count),
                        },
                    )
                )
            else:
                print(
                    f"tau = {_frac(res.tau)}; witness S = {_vertex_list(res.witness)}; "
                    f"c(G-S) = {res.component_count}"
                )
        else:
            dec = is_one_over_b_tough(g, args.b, budget=cfg.budget)
            if cfg.output_format == "structured":
                fields = {"index": str(i), "b": str(args.b), "tough": str(dec.tough).lower()}
                if dec.witness is not None:
                    fields["witness"] = ",".join(str(v) for v in dec.witness)
                    fields["components"] = str(dec.component_count)
                print(_record("tough-decision", fields))
            elif dec.tough:
                print(f"1/{args.b}-tough: yes")
            else:
                print(
                    f"NOT 1/{args.b}-tough; witness S = {_vertex_list(dec.witness)}, "
                    f"c(G-S) = {dec.component_count} >= {args.b}*{len(dec.witness)}+1"
                )
    return 0


def _construct_checks(g: Graph, family: Family, d: int, b: int, budget: Optional[int]):
    """The four post-build checks: regularity, connectivity, threshold boundary,
    and non-toughness (exact solver when small, hub-cut witness otherwise)."""
    checks: list[tuple[str, bool, str]] = []
    reg = is_regular(g)
    checks.append(("regular", reg == d, f"degree {reg}" if reg is not None else "degrees vary"))
    checks.append(("connected", is_connected(g), f"{components(g).count} component(s)"))

    lam2 = eigenvalues(g).lambda_k(2)
    target = phi(ThresholdParams(d, b))
    gap = abs(lam2 - target.value)
    checks.append(
        (
            "boundary",
            gap <= 1e-6,
            f"lambda2 = {_fmt(lam2)}, threshold = {_fmt(target.value)} "
            f"({target.branch.value}), |diff| = {gap:.3e}",
        )
    )

    if g.n <= 24:
        res = toughness_exact(g, budget=budget)
        ok = res.tau < Fraction(1, b)
        checks.append(("non-tough", ok, f"tau = {_frac(res.tau)} vs 1/{b}"))
    else:
        s = list(range(hub_size(family, d, b)))
        c = components(delete_vertices(g, s)).count
        ok = c >= b * len(s) + 1
        checks.append(
            ("non-tough", ok, f"hub cut S = {_vertex_list(s)} leaves {c} >= {b}*{len(s)}+1 components")
        )
    return checks


def cmd_construct(args: argparse.Namespace) -> int:
    cfg = RunConfig.from_args(args)
    family = Family(args.family)
    g = build_family(family, args.d, args.b)
    line = write_graph6(g).decode("ascii")
    if args.out:
        Path(args.out).write_text(line + "\n")
    else:
        print(line)
    if not args.verify:
        return 0

    checks = _construct_checks(g, family, args.d, args.b, cfg.budget)
    all_ok = all(ok for _, ok, _ in checks)
    if cfg.output_format == "structured":
        for name, ok, detail in checks:
            print(
                _record(
                    "construct-check",
                    {
                        "family": family.value,
                        "d": str(args.d),
                        "b": str(args.b),
                        "n": str(g.n),
                        "check": name,
                        "result": "pass" if ok else "FAIL",
                        "detail": detail.replace(" ", "_"),
                    },
                )
            )
    else:
        width = max(len(name) for name, _, _ in checks)
        for name, ok, detail in checks:
            print(f"{name:<{width}}  {'pass' if ok else 'FAIL'}  {detail}")
    return 0 if all_ok else 1


def cmd_certify(args: argparse.Namespace) -> int:
    cfg = RunConfig.from_args(args)
    theorem = TheoremChoice.THM3 if args.theorem == 3 else TheoremChoice.THM4
    certify = certify_thm3 if theorem is TheoremChoice.THM3 else certify_thm4
    for i, g in enumerate(_read_graphs(args.input)):
        report = certify(g, args.b)
        if args.cross_check and report.verdict is Verdict.CERTIFIED:
            report = _cross_check(g, report, cfg.budget)
        rec = report.to_record()
        if cfg.output_format == "structured":
            rec = {"index": str(i), **rec}
            print(_record("certify", rec))
        else:
            body = ", ".join(f"{k}={v}" for k, v in rec.items() if k != "verdict")
            print(f"graph {i}: {report.verdict.value} ({body})")
    return 0


def _cross_check(g: Graph, report: CertReport, budget: Optional[int]) -> CertReport:
    from dataclasses import replace

    if g.is_complete():
        # no vertex cut exists, so the certificate cannot be contradicted
        return replace(report, cross_check="confirmed")
    try:
        decision = is_one_over_b_tough(g, report.b, budget=budget)
    except BudgetExceededError:
        return replace(report, cross_check="skipped_budget")
    if not decision.tough:
        raise ContradictionError(g, report, decision)
    return replace(report, cross_check="confirmed")


def cmd_verify_corpus(args: argparse.Namespace) -> int:
    cfg = RunConfig.from_args(args)
    if (args.n * args.d) % 2 == 1:
        raise InfeasibleConstructionError("n*d must be even")
    if args.d >= args.n:
        raise InfeasibleConstructionError(f"degree d={args.d} impossible on n={args.n} vertices")
    theorem = TheoremChoice.THM3 if args.theorem == 3 else TheoremChoice.THM4
    graphs = (random_regular(args.n, args.d, args.seed + i) for i in range(args.count))
    summary = verify_on_corpus(graphs, args.b, theorem, budget=cfg.budget)
    fields = {
        "theorem": theorem.value,
        "n": str(args.n),
        "d": str(args.d),
        "b": str(args.b),
        "count": str(args.count),
        "seed": str(args.seed),
        **summary.to_record(),
    }
    if cfg.output_format == "structured":
        print(_record("corpus-summary", fields))
    else:
        print(" ".join(f"{k}={v}" for k, v in fields.items()))
    return 0


def _parse_range(text: str) -> tuple[int, int]:
    if ":" in text:
        lo, hi = text.split(":", 1)
        pair = (int(lo), int(hi))
    else:
        pair = (int(text), int(text))
    if pair[0] < 1 or pair[1] < pair[0]:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; want LO:HI with 1 <= LO <= HI")
    return pair


def cmd_thresholds(args: argparse.Namespace) -> int:
    cfg = RunConfig.from_args(args)
    d_lo, d_hi = args.d_range
    b_lo, b_hi = args.b_range
    rows = []
    for d in range(d_lo, d_hi + 1):
        for b in range(b_lo, b_hi + 1):
            p = ThresholdParams(d, b)
            rows.append((d, b, p.c, phi(p), psi(p)))
    if cfg.output_format == "structured":
        for d, b, c, ph, ps in rows:
            print(
                _record(
                    "threshold",
                    {
                        "d": str(d),
                        "b": str(b),
                        "c": str(c),
                        "phi_branch": ph.branch.value,
                        "phi": _fmt(ph.value),
                        "psi_branch": ps.branch.value,
                        "psi": _fmt(ps.value),
                    },
                )
            )
    else:
        print(f"{'d':>3} {'b':>3} {'c':>3}  {'phi branch':<16} {'phi':>14}  {'psi branch':<16} {'psi':>14}")
        for d, b, c, ph, ps in rows:
            print(
                f"{d:>3} {b:>3} {c:>3}  {ph.branch.value:<16} {_fmt(ph.value):>14}  "
                f"{ps.branch.value:<16} {_fmt(ps.value):>14}"
            )
    return 0


# -- parser -----------------------------------------------------------------


def _add_io_flags(p: argparse.ArgumentParser, with_budget: bool = True) -> None:
    p.add_argument(
        "--format", choices=("human", "structured"), default="human", help="output style"
    )
    if with_budget:
        p.add_argument(
            "--budget",
            type=int,
            default=None,
            help=f"subset-enumeration cap (default from ${BUDGET_ENV_VAR} or built-in)",
        )


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="spectough",
        description="Exact graph toughness, adjacency spectra, and spectral toughness certificates.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="adjacency eigenvalues, descending")
    p.add_argument("input", nargs="?", default="-", help="graph6 file, inline string, or - for stdin")
    _add_io_flags(p, with_budget=False)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("tough", help="exact toughness, or the 1/b decision with --b")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--b", type=int, default=None, help="test toughness >= 1/b instead")
    _add_io_flags(p)
    p.set_defaults(func=cmd_tough)

    p = sub.add_parser("construct", help="build an extremal family member as graph6")
    p.add_argument("family", choices=[f.value for f in Family])
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--out", default=None, help="write the graph6 line here instead of stdout")
    p.add_argument(
        "--verify",
        action="store_true",
        help="also check regularity, connectivity, threshold boundary, non-toughness",
    )
    _add_io_flags(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("certify", help="spectral 1/b-toughness certificate per input graph")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--theorem", type=int, choices=(3, 4), required=True)
    p.add_argument(
        "--cross-check",
        action="store_true",
        help="replay certified verdicts against the exact solver",
    )
    _add_io_flags(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify-corpus", help="certify random regular graphs and cross-check")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--theorem", type=int, choices=(3, 4), required=True)
    _add_io_flags(p)
    p.set_defaults(func=cmd_verify_corpus)

    p = sub.add_parser("thresholds", help="table of phi/psi values over parameter ranges")
    p.add_argument("--d-range", type=_parse_range, required=True, metavar="LO:HI")
    p.add_argument("--b-range", type=_parse_range, required=True, metavar="LO:HI")
    _add_io_flags(p, with_budget=False)
    p.set_defaults(func=cmd_thresholds)

    return top


def main(argv: Optional[list[str]] = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except Graph6Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ToughnessUndefinedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except InfeasibleConstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5
    except ContradictionError as exc:
        print(f"CONTRADICTION\n{exc}", file=sys.stderr)
        return 6


if __name__ == "__main__":
    sys.exit(main())
