"""Command-line entry point.

Exit codes: 0 success, 1 a verification gate failed (report still written),
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from pathlib import Path

import numpy as np

from . import __version__
from .core import (
    SequenceError,
    VertexSubset,
    check_condition_fixed_S,
    check_condition_percolation,
    default_delta,
    is_graphical,
    koren_witness,
    load_sequence,
    load_subset,
)
from .giant import DEFAULT_EPS, giant_predicate_fixed, giant_predicate_perc
from .graphs import GraphError, components, format_edge_list
from .harness import run_suite
from .model_seq import build_dA, build_dH
from .percolation import percolated_sample
from .sampler import (
    NotGraphicalError,
    SamplerConfig,
    SamplingError,
    enumerate_graphs,
    make_rng,
    sample_with_stats,
    spawn_seeds,
)

THREADS_ENV = "INDUCEDSEQ_THREADS"

SCHEMAS = """\
file formats:
  degree sequence  whitespace-separated positive integers; sorted on load
  subset           whitespace-separated 1-based positions in the sorted sequence
  edge list        one "u v" pair per line, 1-based, written with u < v

verify config (JSON object):
  sequence   {"regular": {"n": N, "k": K}} | {"entries": [...]} | {"hist": {"k": count}}
             | {"file": path}
  subset     {"indices": [...]} | {"file": path} | {"random": {"size": s, "seed": n}}
  thm23      delta trials seed verticesPerTrial tvTol histTol minFraction method
             switchSteps c
  thm25      p delta trials seed histTol minFraction method switchSteps eps
  switching  v pair limit factorGate delta
  giant      mode eps trials seed sweep crossingWindow checks method switchSteps
             checks: [{"p", "metric", "op", "value", "minFraction"}], metric in
             largestOverNonIsolated | largestOverNp | nonIsolatedRelError
"""


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _emit(obj, out: str | None) -> None:
    text = json.dumps(obj, sort_keys=True, indent=1) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _manifest(args, extra: dict | None = None) -> dict:
    resolved = {k: v for k, v in vars(args).items() if k != "func"}
    body = {"command": args.command, "config": resolved, "version": __version__}
    if extra:
        body.update(extra)
    return body


def _method(name: str) -> str:
    return "switch_chain" if name == "switch" else name


# -- commands ---------------------------------------------------------------------------------


def cmd_check(args) -> int:
    d = load_sequence(_read(args.seq))
    out = {"graphical": is_graphical(d), **d.summary()}
    witness = koren_witness(d)
    out["korenWitness"] = None if witness is None else {"A": witness[0], "B": witness[1]}
    delta = args.delta if args.delta is not None else default_delta(d.M)
    out["delta"] = delta
    if args.subset:
        S = load_subset(_read(args.subset), d)
        out["condition"] = check_condition_fixed_S(d, S, delta, args.c).to_dict()
        out["gamma"] = S.gamma
    if args.p is not None:
        out["conditionPerc"] = check_condition_percolation(d, args.p, delta, args.c).to_dict()
    out["manifest"] = _manifest(args)
    _emit(out, args.out)
    return 0


def cmd_sample(args) -> int:
    d = load_sequence(_read(args.seq))
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    cfg = SamplerConfig(method=_method(args.method), seed=args.seed, switchSteps=args.steps,
                        maxRejections=args.max_rejections)
    seeds = spawn_seeds(args.seed, args.count)
    records = []
    for k, s in enumerate(seeds):
        G, info = sample_with_stats(d, cfg, make_rng(s))
        name = f"graph_{k:04d}.txt"
        (outdir / name).write_text(format_edge_list(G))
        records.append({"file": name, "seed": s, **info})
    manifest = _manifest(args, {"samples": records, "sampler": cfg.to_dict(),
                                "timestamp": time.strftime("%Y-%m-%dT%H:%M:%S")})
    (outdir / "manifest.json").write_text(json.dumps(manifest, sort_keys=True, indent=1) + "\n")
    return 0


def cmd_model_h(args) -> int:
    d = load_sequence(_read(args.seq))
    S = load_subset(_read(args.subset), d)
    m = build_dH(d, S, args.delta)
    if args.csv:
        Path(args.csv).write_text(m.csv())
    _emit({**m.to_dict(), "manifest": _manifest(args)}, args.out)
    return 0


def cmd_model_a(args) -> int:
    d = load_sequence(_read(args.seq))
    m = build_dA(d, args.p, args.delta)
    if args.csv:
        Path(args.csv).write_text(m.csv())
    _emit({**m.to_dict(), "manifest": _manifest(args)}, args.out)
    return 0


def cmd_percolate(args) -> int:
    d = load_sequence(_read(args.seq))
    cfg_base = {"method": _method(args.method), "switchSteps": args.steps}
    stream = open(args.out, "w") if args.out else sys.stdout
    sizes, masses, largest = [], [], []
    try:
        for s in spawn_seeds(args.seed, args.trials):
            _, out = percolated_sample(d, args.p, SamplerConfig(seed=s, **cfg_base))
            comp = components(out.inducedGraph)
            rec = {**out.summary(), "largest": comp.largest, "nonIsolated": comp.nonIsolated}
            sizes.append(out.sizeS)
            masses.append(out.degS)
            largest.append(comp.largest)
            stream.write(json.dumps(rec, sort_keys=True) + "\n")
        footer = {
            "aggregate": {
                "trials": args.trials,
                "meanSizeS": float(np.mean(sizes)) if sizes else None,
                "meanDegS": float(np.mean(masses)) if masses else None,
                "meanLargest": float(np.mean(largest)) if largest else None,
                "np": d.n * args.p,
                "pM": d.M * args.p,
            },
            "manifest": _manifest(args),
        }
        stream.write(json.dumps(footer, sort_keys=True) + "\n")
    finally:
        if stream is not sys.stdout:
            stream.close()
    return 0


def cmd_giant(args) -> int:
    d = load_sequence(_read(args.seq))
    if args.subset:
        S = load_subset(_read(args.subset), d)
        v = giant_predicate_fixed(build_dH(d, S, args.delta), args.eps, d, S)
    else:
        v = giant_predicate_perc(build_dA(d, args.p, args.delta), args.eps, d, args.p)
    _emit({**v.to_dict(), "manifest": _manifest(args)}, args.out)
    return 0


def cmd_verify(args) -> int:
    try:
        config = json.loads(_read(args.config))
    except json.JSONDecodeError as exc:
        raise InputError(f"bad config JSON: {exc}") from None
    if not isinstance(config, dict):
        raise InputError("config must be a JSON object")
    started = time.time()
    report = run_suite(args.suite, config, workers=args.threads,
                       base_dir=str(Path(args.config).parent))
    out = Path(args.out)
    out.write_text(report.to_json() + "\n")
    if report.csv is not None:
        out.with_suffix(".csv").write_text(report.csv)
    manifest = _manifest(args, {"suiteConfig": config, "passed": report.passed,
                                "timestamp": time.strftime("%Y-%m-%dT%H:%M:%S"),
                                "elapsedSeconds": round(time.time() - started, 3)})
    out.with_suffix(".manifest.json").write_text(json.dumps(manifest, sort_keys=True, indent=1) + "\n")
    for line in report.lines():
        print(line, file=sys.stderr)
    return 0 if report.passed else 1


def cmd_enumerate(args) -> int:
    d = load_sequence(_read(args.seq), allow_zero=True)
    graphs = enumerate_graphs(d, limit=args.limit)
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    names = []
    for k, G in enumerate(graphs):
        name = f"graph_{k:04d}.txt"
        (outdir / name).write_text(format_edge_list(G))
        names.append(name)
    manifest = _manifest(args, {"count": len(graphs), "files": names})
    (outdir / "manifest.json").write_text(json.dumps(manifest, sort_keys=True, indent=1) + "\n")
    print(json.dumps({"count": len(graphs)}))
    return 0


# -- parser -------------------------------------------------------------------------------------


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="inducedseq",
        description="Induced-subgraph degree sequences of uniform random graphs.",
        epilog=SCHEMAS,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="graphicality, summary stats and regime conditions")
    p.add_argument("seq")
    p.add_argument("--subset")
    p.add_argument("--p", type=float)
    p.add_argument("--delta", type=float)
    p.add_argument("--c", type=float, default=0.01)
    p.add_argument("--out")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("sample", help="draw graphs with a given degree sequence")
    p.add_argument("--seq", required=True)
    p.add_argument("--method", choices=["rejection", "switch", "auto"], default="auto")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--steps", type=int, help="swap-chain length (default 20 m log m)")
    p.add_argument("--max-rejections", type=int, default=100_000)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("model-h", help="model sequence for a fixed subset")
    p.add_argument("--seq", required=True)
    p.add_argument("--subset", required=True)
    p.add_argument("--delta", type=float)
    p.add_argument("--csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_model_h)

    p = sub.add_parser("model-a", help="model sequence for site percolation")
    p.add_argument("--seq", required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--delta", type=float)
    p.add_argument("--csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_model_a)

    p = sub.add_parser("percolate", help="site-percolation trials as JSON lines")
    p.add_argument("--seq", required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--method", choices=["rejection", "switch", "auto"], default="auto")
    p.add_argument("--steps", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_percolate)

    p = sub.add_parser("giant", help="giant-component threshold statistics")
    p.add_argument("--seq", required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--subset")
    g.add_argument("--p", type=float)
    p.add_argument("--eps", type=float, default=DEFAULT_EPS)
    p.add_argument("--delta", type=float)
    p.add_argument("--out")
    p.set_defaults(func=cmd_giant)

    p = sub.add_parser("verify", help="run a verification suite from a JSON config")
    p.add_argument("--suite", required=True, choices=["thm23", "thm25", "switching", "giant"])
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--threads", type=int, default=_default_threads())
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="all labelled graphs with a small degree sequence")
    p.add_argument("--seq", required=True)
    p.add_argument("--limit", type=int, default=8)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_enumerate)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (InputError, SequenceError, GraphError, NotGraphicalError, SamplingError,
            ValueError, TypeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
