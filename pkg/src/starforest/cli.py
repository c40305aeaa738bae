"""Command-line interface: generate, solve, verify, domset, bench."""

from __future__ import annotations

import argparse
import csv
import sys
import time
from pathlib import Path

from .factor import StarFactor
from .general import GeneralConfig, PhaseError, star_factor_general
from .generators import (
    GenerationError,
    complete_bipartite,
    paley_bipartite,
    random_regular,
)
from .graph import Graph, GraphError, dump_edge_list, load_edge_list
from .regular import RegularConfig, star_factor_regular
from .report import format_report, write_report
from .resample import ResampleExhausted
from .verify import min_dominating_set, validate_star_factor


def _write_out(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "regular":
        g = random_regular(args.p1, args.p2, seed=args.seed)
    elif args.family == "paley":
        g = paley_bipartite(args.p1)
    else:
        g = complete_bipartite(args.p1, args.p2)
    _write_out(args.out, dump_edge_list(g))
    return 0


def _solve(g: Graph, mode: str, d: int, seed: int, relax: float):
    if mode == "regular":
        cfg = RegularConfig.from_degree(d, seed=seed, clamp_bias=True)
        return star_factor_regular(g, cfg)
    cfg = GeneralConfig.from_degree(d, seed=seed, relax=relax)
    return star_factor_general(g, cfg)


def _cmd_solve(args: argparse.Namespace) -> int:
    g = load_edge_list(Path(args.infile).read_text(encoding="utf-8"))
    t0 = time.perf_counter()
    factor, solver_report = _solve(g, args.mode, args.d, args.seed, args.relax)
    t1 = time.perf_counter()
    verdict = validate_star_factor(g, factor, min_size=1)
    t2 = time.perf_counter()
    _write_out(args.out, factor.to_text())
    if args.report:
        record = dict(solver_report)
        record["command"] = "solve"
        record["input"] = args.infile
        record["valid"] = verdict.valid
        record["violations"] = len(verdict.violations)
        record["time_solve_ms"] = round((t1 - t0) * 1000.0, 3)
        record["time_validate_ms"] = round((t2 - t1) * 1000.0, 3)
        write_report(args.report, record)
    if not verdict.valid:
        print("INVALID star factor produced", file=sys.stderr)
        for kind, detail in verdict.violations[:20]:
            print(f"  {kind}: {detail}", file=sys.stderr)
        return 1
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    g = load_edge_list(Path(args.infile).read_text(encoding="utf-8"))
    sf = StarFactor.from_text(Path(args.factor).read_text(encoding="utf-8"))
    verdict = validate_star_factor(g, sf, min_size=args.min_size)
    if verdict.valid:
        print(
            f"valid: {verdict.star_count} stars, "
            f"min {verdict.min_star}, max {verdict.max_star}"
        )
        return 0
    print("invalid:")
    for kind, detail in verdict.violations:
        print(f"  {kind}: {detail}")
    if verdict.coverage_gap:
        print(f"  uncovered: {sorted(verdict.coverage_gap)}")
    return 1


def _cmd_domset(args: argparse.Namespace) -> int:
    g = load_edge_list(Path(args.infile).read_text(encoding="utf-8"))
    result = min_dominating_set(g, budget=args.budget)
    tag = "exact" if result.exact else "INEXACT (budget exhausted)"
    print(f"size={result.size} ({tag})")
    print("witness=" + " ".join(str(v) for v in sorted(result.witness)))
    return 0 if result.exact else 1


def _bench_instance(family: str, size: int, d: int | None, gen_seed: int) -> tuple[Graph, int]:
    if family == "regular":
        if d is None:
            raise GraphError("bench family 'regular' needs --d")
        return random_regular(size, d, seed=gen_seed), d
    if family == "paley":
        g = paley_bipartite(size)
        return g, (size - 1) // 2
    if family == "kab":
        if d is None:
            raise GraphError("bench family 'kab' needs --d (the small side)")
        return complete_bipartite(d, size), d
    raise GraphError(f"unknown family {family!r}")


def _cmd_bench(args: argparse.Namespace) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s]
    seeds = [int(s) for s in args.seeds.split(",") if s]
    rows: list[dict] = []
    for size in sizes:
        for seed in seeds:
            g, d = _bench_instance(args.family, size, args.d, seed)
            t0 = time.perf_counter()
            factor, solver_report = _solve(g, args.mode, d, seed, args.relax)
            elapsed = (time.perf_counter() - t0) * 1000.0
            verdict = validate_star_factor(g, factor, min_size=1)
            rows.append(
                {
                    "family": args.family,
                    "mode": args.mode,
                    "size": size,
                    "d": d,
                    "seed": seed,
                    "n": g.n,
                    "min_star": factor.min_star(),
                    "stars": len(factor.stars),
                    "elapsed_ms": round(elapsed, 3),
                    "valid": verdict.valid,
                }
            )
    rows.sort(key=lambda r: (r["size"], r["seed"]))
    fieldnames = [
        "family", "mode", "size", "d", "seed", "n",
        "min_star", "stars", "elapsed_ms", "valid",
    ]
    if args.out:
        with open(args.out, "w", newline="", encoding="utf-8") as fh:
            writer = csv.DictWriter(fh, fieldnames=fieldnames)
            writer.writeheader()
            writer.writerows(rows)
        from .plots import render_bench_figures

        prefix = Path(args.out).with_suffix("")
        for path in render_bench_figures(rows, prefix):
            print(f"wrote {path}")
        print(f"wrote {args.out}")
    else:
        writer = csv.DictWriter(sys.stdout, fieldnames=fieldnames)
        writer.writeheader()
        writer.writerows(rows)
    return 0 if all(r["valid"] for r in rows) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="starforest",
        description="Spanning star forests with large components",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate an instance as an edge list")
    p_gen.add_argument("family", choices=["regular", "paley", "kab"])
    p_gen.add_argument("p1", type=int, help="n (regular), p (paley), or a (kab)")
    p_gen.add_argument("p2", type=int, nargs="?", default=None,
                       help="d (regular) or b (kab)")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--out", default=None)
    p_gen.set_defaults(func=_cmd_gen)

    p_solve = sub.add_parser("solve", help="compute a star factor")
    p_solve.add_argument("--mode", choices=["regular", "general"], required=True)
    p_solve.add_argument("--in", dest="infile", required=True)
    p_solve.add_argument("--d", type=int, required=True)
    p_solve.add_argument("--seed", type=int, default=0)
    p_solve.add_argument("--relax", type=float, default=1.0)
    p_solve.add_argument("--out", default=None)
    p_solve.add_argument("--report", default=None)
    p_solve.set_defaults(func=_cmd_solve)

    p_verify = sub.add_parser("verify", help="validate a star-factor file")
    p_verify.add_argument("--in", dest="infile", required=True)
    p_verify.add_argument("--factor", required=True)
    p_verify.add_argument("--min-size", type=int, default=1)
    p_verify.set_defaults(func=_cmd_verify)

    p_dom = sub.add_parser("domset", help="exact minimum dominating set")
    p_dom.add_argument("--in", dest="infile", required=True)
    p_dom.add_argument("--budget", type=int, default=5_000_000)
    p_dom.set_defaults(func=_cmd_domset)

    p_bench = sub.add_parser("bench", help="benchmark table (+ figures with --out)")
    p_bench.add_argument("--mode", choices=["regular", "general"], required=True)
    p_bench.add_argument("--family", choices=["regular", "paley", "kab"], required=True)
    p_bench.add_argument("--sizes", required=True, help="comma-separated sizes")
    p_bench.add_argument("--seeds", required=True, help="comma-separated seeds")
    p_bench.add_argument("--d", type=int, default=None)
    p_bench.add_argument("--relax", type=float, default=1.0)
    p_bench.add_argument("--out", default=None)
    p_bench.set_defaults(func=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "gen" and args.family in ("regular", "kab") and args.p2 is None:
        parser.error(f"gen {args.family} requires two positional parameters")
    try:
        return args.func(args)
    except (GraphError, GenerationError, PhaseError, ResampleExhausted, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
