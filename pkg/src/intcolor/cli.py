"""Command-line front end: ``intcolor {gen,color,verify,cut,oracle,bench}``.

Exit codes: 0 success / verified, 1 verification failure, 2 usage or input error.
All rationals on the wire are ``"num/den"`` strings. The only non-deterministic
field in any output is ``elapsed_s``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import metrics
from .cut import k_max_cut, mixed_edge_floor, mixed_edge_lower_bound
from .graph import (
    FAMILIES,
    Graph,
    GraphFormatError,
    gen_gnp,
    gen_named,
    load_dimacs,
    load_edge_list,
    serialize_dimacs,
    serialize_edge_list,
)
from .metrics import Coloring, WeightVector, format_rational
from .oracle import (
    EnumerationLimitExceeded,
    OracleLimit,
    exact_max_cut,
    exhaustive_integrated_search,
    min_sigma,
)
from .solver import (
    PreconditionError,
    SolveConfig,
    SolverError,
    integrated_coloring,
    proportional_coloring,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
GRAPH_SUFFIXES = (".col", ".dimacs", ".edges", ".el", ".txt")


class UsageError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)


# -- graph input -----------------------------------------------------------


def _sniff_format(text: str) -> str:
    for line in text.splitlines():
        tok = line.split()
        if tok and tok[0] in ("p", "c", "e"):
            return "dimacs"
        if tok:
            return "edgelist"
    return "edgelist"


def parse_graph(text: str, fmt: str = "auto", name: str = "") -> Graph:
    if fmt == "auto":
        fmt = "dimacs" if name.endswith((".col", ".dimacs")) else _sniff_format(text)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return load_dimacs(text) if fmt == "dimacs" else load_edge_list(text)


def read_graph(path: str, fmt: str = "auto") -> Graph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return parse_graph(text, fmt, path)


def _serialize(g: Graph, fmt: str) -> str:
    return serialize_edge_list(g) if fmt == "edgelist" else serialize_dimacs(g)


# -- shared run logic -------------------------------------------------------


def _config(args) -> SolveConfig:
    if args.init == "random" and args.seed is None:
        raise UsageError("--init random requires --seed")
    return SolveConfig(init=args.init, seed=args.seed, max_steps=getattr(args, "max_steps", None))


def run_color(
    g: Graph,
    descriptor: str,
    cfg: SolveConfig,
    k: Optional[int] = None,
    weights: Optional[WeightVector] = None,
    trace_out: Optional[Path] = None,
) -> dict:
    """Solve, then re-verify from scratch. Returns a RunResult dict."""
    start = time.perf_counter()
    if weights is None:
        if k is None:
            raise UsageError("one of --k or --weights is required")
        coloring, trace = integrated_coloring(g, k, cfg)
    else:
        coloring, trace = proportional_coloring(g, weights, cfg)
        k = weights.k
    elapsed = time.perf_counter() - start
    if trace_out is not None:
        trace_out.write_text(trace.to_jsonl(), encoding="utf-8")

    if weights is None:
        report = metrics.verify_integrated(g, coloring, k)
        bound: Optional[int] = mixed_edge_floor(g.m, k)
    else:
        report = metrics.verify_proportional(g, coloring, weights)
        bound = None
    mix = metrics.mixing_number(g, coloring)
    return {
        "input": descriptor,
        "k": k,
        "seed": cfg.seed,
        "init": cfg.init,
        "weights": None if weights is None else weights.format(),
        "n": g.n,
        "m": g.m,
        "coloring": coloring.to_dict(),
        "mixing_number": mix,
        "bound": bound,
        "bound_ok": None if bound is None else mix >= bound,
        "steps": len(trace.steps),
        "checks": trace.checks,
        "elapsed_s": elapsed,
        "verified": report.ok,
        "violations": len(report.violations),
    }


# -- commands ---------------------------------------------------------------


def cmd_gen(args) -> int:
    if (args.family is None) == (args.gnp is None):
        raise UsageError("give exactly one of --family or --gnp")
    if args.gnp is not None:
        n_text, p_text = args.gnp
        try:
            n, p = int(n_text), float(p_text)
        except ValueError:
            raise UsageError(f"bad --gnp spec {n_text} {p_text}") from None
        seed = 0 if args.seed is None else args.seed
        if args.count > 1:
            if args.output is None:
                raise UsageError("--count > 1 needs --output DIR")
            outdir = Path(args.output)
            outdir.mkdir(parents=True, exist_ok=True)
            ext = ".txt" if args.format == "edgelist" else ".col"
            for s in range(seed, seed + args.count):
                g = gen_gnp(n, p, s)
                (outdir / f"gnp_n{n}_p{p_text}_s{s}{ext}").write_text(
                    _serialize(g, args.format), encoding="utf-8"
                )
            return EXIT_OK
        g = gen_gnp(n, p, seed)
    else:
        g = gen_named(args.family, args.n if args.n is not None else 0)
    text = _serialize(g, args.format)
    if args.output is None:
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text, encoding="utf-8")
    return EXIT_OK


def _weights(args) -> Optional[WeightVector]:
    if args.weights is None:
        return None
    return WeightVector.parse(args.weights)


def cmd_color(args) -> int:
    g = read_graph(args.input, args.format)
    weights = _weights(args)
    if weights is None and args.k is None:
        raise UsageError("one of --k or --weights is required")
    trace_out = Path(args.trace) if args.trace else None
    result = run_color(g, args.input, _config(args), args.k, weights, trace_out)
    if args.output:
        Path(args.output).write_text(Coloring.from_dict(result["coloring"]).to_json() + "\n")
    print(_dumps(result))
    return EXIT_OK if result["verified"] else EXIT_FAIL


def load_coloring(path: str) -> Coloring:
    """Accepts a bare coloring object or a RunResult that carries one."""
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if "coloring" in data:
        data = data["coloring"]
    return Coloring.from_dict(data)


def cmd_verify(args) -> int:
    g = read_graph(args.input, args.format)
    c = load_coloring(args.coloring)
    if len(c) != g.n:
        raise UsageError(f"coloring has {len(c)} entries but graph has {g.n} vertices")
    if args.k is not None:
        mode, report = f"integrated k={args.k}", metrics.verify_integrated(g, c, args.k)
    elif args.weights is not None:
        p = WeightVector.parse(args.weights)
        if p.k != c.k:
            raise UsageError(f"coloring has k={c.k} but {p.k} weights were given")
        mode, report = f"proportional p={args.weights}", metrics.verify_proportional(g, c, p)
    elif args.defective is not None:
        mode, report = f"defective u={args.defective}", metrics.verify_defective(g, c, args.defective)
    elif args.proper:
        mode, report = "proper", metrics.verify_proper(g, c)
    else:
        mode, report = "unfriendly", metrics.verify_unfriendly_partition(g, c)
    if args.json:
        print(_dumps({"mode": mode, **report.to_dict()}))
    else:
        print(f"{mode}: {'ok' if report.ok else 'FAILED'}")
        for x in report.violations:
            print(
                f"  vertex {x.vertex}: {x.observed} same-colored neighbors"
                f" > {format_rational(x.threshold)}"
            )
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_cut(args) -> int:
    g = read_graph(args.input, args.format)
    part, size = k_max_cut(g, args.k, _config(args))
    bound = mixed_edge_floor(g.m, args.k)
    if args.output:
        Path(args.output).write_text(part.to_json() + "\n", encoding="utf-8")
    if args.json:
        print(_dumps({
            "partition": part.to_dict(),
            "cut_size": size,
            "bound": bound,
            "bound_exact": format_rational(mixed_edge_lower_bound(g.m, args.k)),
            "m": g.m,
        }))
    else:
        for i, p in enumerate(part.parts, 1):
            print(f"V_{i}: {' '.join(map(str, p))}")
        print(f"cut size {size} (m={g.m}, guaranteed >= {bound})")
    return EXIT_OK if size >= bound else EXIT_FAIL


def cmd_oracle(args) -> int:
    g = read_graph(args.input, args.format)
    lim = OracleLimit(args.limit)
    out: dict = {"check": args.check, "n": g.n, "m": g.m}
    ok = True
    if args.check == "minsigma":
        p = _weights(args)
        if p is None:
            if args.k is None:
                raise UsageError("minsigma needs --weights or --k")
            p = WeightVector.uniform(args.k)
        value, arg = min_sigma(g, p, lim)
        ok = metrics.verify_proportional(g, arg, p).ok
        out.update(weights=p.format(), min_sigma=format_rational(value),
                   minimizer=arg.to_dict(), minimizer_ok=ok)
        if args.compare:
            c, _ = proportional_coloring(g, p)
            out["heuristic_sigma"] = format_rational(metrics.sigma(g, c, p))
    else:
        if args.k is None:
            raise UsageError(f"--check {args.check} needs --k")
        if args.check == "exists":
            res = exhaustive_integrated_search(g, args.k, lim)
            ok = res.exists
            out.update(k=args.k, exists=res.exists, count=res.count,
                       witness=None if res.witness is None else res.witness.to_dict())
        else:
            best = exact_max_cut(g, args.k, lim)
            out.update(k=args.k, max_cut=best, bound=mixed_edge_floor(g.m, args.k))
            if args.compare:
                _, size = k_max_cut(g, args.k)
                out["heuristic_cut"] = size
                ok = out["bound"] <= size <= best
    if args.json:
        print(_dumps(out))
    else:
        for key, val in out.items():
            print(f"{key}: {json.dumps(val) if isinstance(val, (dict, list)) else val}")
    return EXIT_OK if ok else EXIT_FAIL


def _bench_one(job: tuple) -> dict:
    path, name, k, seed, init = job
    try:
        g = read_graph(str(path))
        cfg = SolveConfig(init=init, seed=seed)
        res = run_color(g, name, cfg, k=k)
        res["status"] = "ok" if res["verified"] and res["bound_ok"] else "failed"
        return res
    except (GraphFormatError, ValueError, OSError, SolverError) as exc:
        return {"input": name, "k": k, "seed": seed, "init": init,
                "status": "error", "error": str(exc)}


def bench_summary(rows: list[dict]) -> dict:
    done = [r for r in rows if r["status"] != "error"]
    bound_hits = sum(1 for r in done if r["bound_ok"])
    ratios = [Fraction(r["steps"], r["m"]) for r in done if r["m"] > 0]
    return {
        "summary": True,
        "runs": len(rows),
        "errors": len(rows) - len(done),
        "failures": sum(1 for r in rows if r["status"] != "ok"),
        "verified": sum(1 for r in done if r["verified"]),
        "bound_satisfaction_rate": format_rational(Fraction(bound_hits, len(done))) if done else None,
        "max_step_ratio": format_rational(max(ratios)) if ratios else None,
    }


def cmd_bench(args) -> int:
    corpus = Path(args.corpus)
    if not corpus.is_dir():
        raise UsageError(f"corpus {corpus} is not a directory")
    files = sorted(p for p in corpus.iterdir() if p.is_file() and p.suffix in GRAPH_SUFFIXES)
    ks = _int_list(args.k, "--k")
    seeds = _int_list(args.seeds, "--seeds")
    jobs = [(p, p.name, k, s, args.init) for p in files for k in ks for s in seeds]
    if args.jobs > 1 and jobs:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(_bench_one, jobs, chunksize=8))
    else:
        rows = [_bench_one(j) for j in jobs]
    rows.sort(key=lambda r: (r["input"], r["k"], r["seed"]))
    summary = bench_summary(rows)
    text = "".join(_dumps(r) + "\n" for r in rows) + _dumps(summary) + "\n"
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK if summary["failures"] == 0 else EXIT_FAIL


def _int_list(text: str, flag: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"{flag} expects a comma-separated list of integers") from None


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="intcolor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_args(sp, required=True):
        sp.add_argument("--input", "-i", required=required, help="graph file, '-' for stdin")
        sp.add_argument("--format", choices=("auto", "dimacs", "edgelist"), default="auto")

    def solve_args(sp):
        sp.add_argument("--init", choices=("uniform", "random"), default="uniform")
        sp.add_argument("--seed", type=int)
        sp.add_argument("--max-steps", type=int)

    sp = sub.add_parser("gen", help="write a named or G(n,p) graph")
    sp.add_argument("--family", choices=FAMILIES)
    sp.add_argument("--n", type=int)
    sp.add_argument("--gnp", nargs=2, metavar=("N", "P"))
    sp.add_argument("--seed", type=int)
    sp.add_argument("--count", type=int, default=1, help="number of consecutive seeds (G(n,p) only)")
    sp.add_argument("--format", choices=("dimacs", "edgelist"), default="dimacs")
    sp.add_argument("--output", "-o", help="file (or directory when --count > 1)")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("color", help="integrated or proportional coloring")
    graph_args(sp)
    sp.add_argument("--k", type=int)
    sp.add_argument("--weights", help="comma-separated rationals, e.g. 1/4,3/4")
    solve_args(sp)
    sp.add_argument("--trace", help="write the step trace as JSON lines")
    sp.add_argument("--output", "-o", help="also write the bare coloring JSON here")
    sp.set_defaults(func=cmd_color)

    sp = sub.add_parser("verify", help="check a coloring against a definition")
    graph_args(sp)
    sp.add_argument("--coloring", "-c", required=True)
    mode = sp.add_mutually_exclusive_group(required=True)
    mode.add_argument("--k", type=int, help="integrated k-coloring")
    mode.add_argument("--weights", help="proportional coloring for these weights")
    mode.add_argument("--defective", type=int, metavar="U", help="(k,U)-coloring")
    mode.add_argument("--proper", action="store_true")
    mode.add_argument("--unfriendly", action="store_true")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("cut", help="k-way cut from an integrated coloring")
    graph_args(sp)
    sp.add_argument("--k", type=int, required=True)
    solve_args(sp)
    sp.add_argument("--output", "-o", help="write the partition JSON here")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_cut)

    sp = sub.add_parser("oracle", help="exhaustive checks on small graphs")
    graph_args(sp)
    sp.add_argument("--k", type=int)
    sp.add_argument("--weights")
    sp.add_argument("--check", choices=("exists", "maxcut", "minsigma"), required=True)
    sp.add_argument("--limit", type=int, default=OracleLimit().max_enumeration)
    sp.add_argument("--compare", action="store_true", help="also run the heuristic")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("bench", help="integrated coloring over a corpus directory")
    sp.add_argument("--corpus", required=True)
    sp.add_argument("--k", default="2,3,5", help="comma-separated k values")
    sp.add_argument("--seeds", default="0", help="comma-separated init seeds")
    sp.add_argument("--init", choices=("uniform", "random"), default="uniform")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--output", "-o")
    sp.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphFormatError, PreconditionError, EnumerationLimitExceeded,
            ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SolverError as exc:
        print(f"solver error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
