"""Command-line interface.

Subcommands: gen-data, train-gnn, eval-gnn, build-graph, edit, evaluate,
bench.  A JSON config file may provide per-command sections; explicit flags
override file values.  Every output directory receives a manifest echoing
the resolved configuration.

Exit codes: 0 success, 1 usage error, 2 data error, 3 training divergence.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict
from pathlib import Path

import numpy as np

from . import __version__
from .assignment import (
    BACKENDS,
    CostMatrix,
    InstanceTooLarge,
    Matching,
    graph_to_cost,
    solve_exhaustive,
    solve_rlap,
    solver_backend,
)
from .classifier import LabeledDataset, load_classifier, save_classifier, train_classifier
from .data import (
    load_bundled_embeddings,
    load_bundled_taxonomy,
    load_sentiment_corpus,
    load_topic_corpus,
)
from .editor import BigramScorer, EditConfig, EditResult, Heuristic, edit_dataset
from .gnn import (
    DivergenceError,
    GnnConfig,
    TrainingSample,
    decode_assignment,
    forward_cost,
    generate_training_set,
    load_checkpoint,
    optimality_ratio,
    save_checkpoint,
    train,
)
from .lexicon import GraphBuildConfig, PosTag, build_graph, load_embeddings, load_taxonomy
from .metrics import EmptyInput, aggregate, write_csv_report, write_json_report

USAGE_ERROR, DATA_ERROR, DIVERGENCE_ERROR = 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2; we reserve that
        self.print_usage(sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _parse_range(text: str) -> tuple[int, int]:
    if ":" in text:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    value = int(text)
    return value, value


def _parse_threshold(text: str) -> tuple[str, float]:
    kind, _, value = text.partition(":")
    kind = kind.strip().lower()
    if kind == "static":
        return "static", int(value or 10)
    if kind == "dynamic":
        return "dynamic", float(value or 0.20)
    raise ValueError(f"threshold must be static:<k> or dynamic:<fraction>, got {text!r}")


def _parse_pos(text: str | None) -> frozenset[PosTag] | None:
    if not text or text.lower() == "all":
        return None
    return frozenset(PosTag.parse(p) for p in text.split(","))


def _write_manifest(out_dir: Path, command: str, resolved: dict) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    payload = {"tool": "cfedit", "version": __version__, "command": command,
               "config": resolved}
    (out_dir / "manifest.json").write_text(json.dumps(payload, indent=2), encoding="utf-8")


def _load_dataset(path: str | None, fallback: str = "sentiment") -> LabeledDataset:
    if path:
        return LabeledDataset.from_jsonl(path)
    return load_sentiment_corpus() if fallback == "sentiment" else load_topic_corpus()


def _load_providers(args):
    taxonomy = load_taxonomy(args.taxonomy) if args.taxonomy else load_bundled_taxonomy()
    embeddings = load_embeddings(args.embeddings) if args.embeddings else load_bundled_embeddings()
    return taxonomy, embeddings


def _graph_config(args) -> GraphBuildConfig:
    return GraphBuildConfig(
        pos_tags=_parse_pos(args.pos),
        weight_provider=args.weight_provider,
        target_mode=args.target_mode,
        edge_filter_enabled=args.edge_filter,
        penalty_factor=args.penalty_factor,
    )


# -- sample files -----------------------------------------------------------


def write_samples(samples: list[TrainingSample], path: Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for sample in samples:
            fh.write(json.dumps({
                "cost": sample.cost.to_text(),
                "matching": sample.ground_truth.to_text(sample.cost),
            }) + "\n")


def read_samples(path: Path) -> list[TrainingSample]:
    from .gnn.network import GraphArrays

    samples = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if not line.strip():
                continue
            rec = json.loads(line)
            cost = CostMatrix.from_text(rec["cost"])
            matching = Matching.from_text(rec["matching"])
            arrays = GraphArrays.from_cost(cost)
            in_matching = set(matching.pairs)
            labels = np.array([1.0 if p in in_matching else 0.0 for p in arrays.pairs])
            samples.append(TrainingSample(cost, matching, labels))
    return samples


# -- commands ----------------------------------------------------------------


def cmd_gen_data(args) -> int:
    n_range, m_range = _parse_range(args.n), _parse_range(args.m)
    samples = generate_training_set(args.count, n_range, m_range, args.seed)

    rng = np.random.RandomState(args.seed)
    checkable = [s for s in samples if s.cost.n <= 8 and s.cost.m <= 9]
    for idx in rng.choice(len(checkable), size=min(20, len(checkable)), replace=False):
        sample = checkable[int(idx)]
        oracle = solve_exhaustive(sample.cost)
        if abs(oracle.total_weight - sample.ground_truth.total_weight) > 1e-9:
            raise AssertionError("generated label disagrees with the exhaustive oracle")

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    write_samples(samples, out_dir / "samples.jsonl")
    _write_manifest(out_dir, "gen-data", {
        "count": args.count, "n": list(n_range), "m": list(m_range), "seed": args.seed,
        "oracle_checked": min(20, len(checkable)),
    })
    print(f"wrote {len(samples)} samples to {out_dir / 'samples.jsonl'}")
    return 0


def cmd_train_gnn(args) -> int:
    samples = read_samples(Path(args.data) / "samples.jsonl"
                           if Path(args.data).is_dir() else Path(args.data))
    config = GnnConfig(
        latent_dim=args.latent_dim, conv_iterations=args.conv_iterations,
        mlp_hidden=args.mlp_hidden, epochs=args.epochs, lr_initial=args.lr,
        lr_decay=args.lr_decay, decay_every=args.decay_every,
        loss_balance_w=args.loss_balance, seed=args.seed,
    )
    n_holdout = max(1, int(len(samples) * args.holdout_fraction))
    holdout, training = samples[:n_holdout], samples[n_holdout:]
    if not training:
        raise ValueError("holdout fraction leaves no training data")

    result = train(config, training, holdout=holdout)

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    save_checkpoint(result.model, out_dir / "checkpoint.json")
    with open(out_dir / "training_log.csv", "w", encoding="utf-8") as fh:
        fh.write("epoch,lr,mean_loss,holdout_optimality_ratio\n")
        for row in result.history:
            fh.write(f"{row.epoch},{row.lr},{row.mean_loss},{row.holdout_ratio}\n")
    _write_manifest(out_dir, "train-gnn", {
        **asdict(config), "samples": len(training), "holdout": len(holdout),
        "initial_ratio": result.initial_ratio,
        "final_ratio": result.history[-1].holdout_ratio,
    })
    print(f"trained {config.epochs} epochs; holdout optimality ratio "
          f"{result.initial_ratio:.4f} -> {result.history[-1].holdout_ratio:.4f}")
    return 0


def cmd_eval_gnn(args) -> int:
    model = load_checkpoint(args.checkpoint)
    samples = read_samples(Path(args.data) / "samples.jsonl"
                           if Path(args.data).is_dir() else Path(args.data))
    ratio = optimality_ratio(model, samples)
    print(f"mean optimality ratio over {len(samples)} samples: {ratio:.4f}")
    if args.out:
        Path(args.out).write_text(json.dumps({"samples": len(samples), "ratio": ratio}),
                                  encoding="utf-8")
    return 0


def cmd_build_graph(args) -> int:
    dataset = _load_dataset(args.dataset)
    taxonomy, embeddings = _load_providers(args)
    config = _graph_config(args)
    documents = [(iid, text) for iid, text, _ in dataset.instances]
    result = build_graph(documents, config, taxonomy, embeddings)

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "graph.json").write_text(json.dumps({
        "sources": list(result.graph.source_words),
        "targets": list(result.graph.target_words),
        "edges": [[s, t, w] for s, t, w in result.graph.edges],
        "swapped": result.swapped,
    }), encoding="utf-8")
    (out_dir / "cost.txt").write_text(graph_to_cost(result.graph).to_text(), encoding="utf-8")
    _write_manifest(out_dir, "build-graph", {
        "dataset": args.dataset or "bundled-sentiment",
        "pos": args.pos, "weight_provider": args.weight_provider,
        "target_mode": args.target_mode, "edge_filter": args.edge_filter,
        "penalty_factor": args.penalty_factor,
        "nodes": [result.graph.n, result.graph.m], "edges": len(result.graph.edges),
    })
    print(f"graph {result.graph.n}x{result.graph.m} with {len(result.graph.edges)} edges "
          f"-> {out_dir}")
    return 0


def cmd_edit(args) -> int:
    dataset = _load_dataset(args.dataset)
    taxonomy, embeddings = _load_providers(args)
    graph_config = _graph_config(args)
    mode, value = _parse_threshold(args.threshold)
    edit_config = EditConfig(
        heuristic=Heuristic.parse(args.heuristic),
        threshold_mode=mode,
        static_limit=int(value) if mode == "static" else 10,
        dynamic_fraction=value if mode == "dynamic" else 0.20,
        beam_width=args.beam_width,
        stop_on_flip=not args.no_stop_on_flip,
    )
    classifier = (load_classifier(args.classifier) if args.classifier
                  else train_classifier(dataset))
    gnn_model = load_checkpoint(args.checkpoint) if args.solver == "gnn" else None

    run = edit_dataset(dataset, graph_config, args.solver, edit_config,
                       taxonomy=taxonomy, embeddings=embeddings,
                       classifier=classifier, gnn_model=gnn_model)

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    with open(out_dir / "edits.jsonl", "w", encoding="utf-8") as fh:
        for r in run.results:
            fh.write(json.dumps(r.to_dict()) + "\n")
    scorer = BigramScorer.fit([t for _, t, _ in dataset.instances])
    report = aggregate(run.results, scorer, embeddings, run.timings)
    name = args.config_name or f"{args.solver}-{args.heuristic}"
    write_csv_report([(name, report)], out_dir / "report.csv")
    write_json_report([(name, report)], out_dir / "report.json")
    if not args.classifier:
        save_classifier(classifier, out_dir / "classifier.json")
    _write_manifest(out_dir, "edit", {
        "dataset": args.dataset or "bundled-sentiment", "solver": args.solver,
        "heuristic": args.heuristic, "threshold": args.threshold,
        "beam_width": args.beam_width, "pos": args.pos,
        "weight_provider": args.weight_provider, "target_mode": args.target_mode,
        "edge_filter": args.edge_filter, "penalty_factor": args.penalty_factor,
        "graph_shape": list(run.graph_shape),
        "timings": run.timings,
    })
    failures = sum(1 for r in run.results if r.note and r.note.startswith("edit failed"))
    print(f"edited {len(run.results)} documents ({failures} failures) -> {out_dir}")
    print(f"flip_rate={report.flip_rate:.3f} minimality={report.minimality:.3f} "
          f"closeness={report.closeness:.3f} fluency={report.fluency:.3f}")
    return 0 if failures < len(run.results) else DATA_ERROR


def cmd_evaluate(args) -> int:
    results = []
    with open(args.results, encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                results.append(EditResult.from_dict(json.loads(line)))
    if not results:
        raise EmptyInput("no edit results in input")
    _, embeddings = _load_providers(args)
    scorer = BigramScorer.fit([r.original_text for r in results])
    report = aggregate(results, scorer, embeddings)
    rows = [(args.config_name or "evaluation", report)]
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    write_csv_report(rows, out_dir / "report.csv")
    write_json_report(rows, out_dir / "report.json")
    _write_manifest(out_dir, "evaluate", {"results": args.results, "count": len(results)})
    print(f"flip_rate={report.flip_rate:.4f} minimality={report.minimality:.4f} "
          f"closeness={report.closeness:.4f} fluency={report.fluency:.4f}")
    return 0


def cmd_bench(args) -> int:
    sizes = []
    for chunk in args.sizes.split(","):
        n, _, m = chunk.partition(":")
        sizes.append((int(n), int(m or n)))
    model = load_checkpoint(args.checkpoint) if args.checkpoint else None
    rows = [("size_n", "size_m", "solver", "backend", "seconds", "optimality_ratio")]
    rng = np.random.RandomState(args.seed)

    for n, m in sizes:
        cost = CostMatrix(rng.uniform(0.0, 1.0, size=(n, m)))
        optimum = None
        try:
            t0 = time.perf_counter()
            exact = solve_exhaustive(cost)
            rows.append((n, m, "exhaustive", "-", time.perf_counter() - t0, 1.0))
            optimum = exact.total_weight
        except InstanceTooLarge:
            pass  # guard: no exhaustive rows above the size bound
        for backend in (BACKENDS if args.all_backends else (solver_backend(),)):
            t0 = time.perf_counter()
            matching = solve_rlap(cost, backend=backend)
            rows.append((n, m, "deterministic", backend, time.perf_counter() - t0, 1.0))
        optimum = matching.total_weight if optimum is None else optimum
        if model is not None:
            t0 = time.perf_counter()
            scores = forward_cost(cost, model)
            decoded = decode_assignment(scores, cost)
            rows.append((n, m, "gnn", "-", time.perf_counter() - t0,
                         decoded.total_weight / optimum))

    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", encoding="utf-8") as fh:
        for row in rows:
            fh.write(",".join(str(x) for x in row) + "\n")
    for row in rows[1:]:
        print(f"{row[0]}x{row[1]:<6} {row[2]:>13}/{row[3]:<8} {row[4]:.4f}s ratio={row[5]:.4f}"
              if isinstance(row[4], float) else row)
    return 0


# -- wiring -------------------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(prog="cfedit", description=__doc__)
    parser.add_argument("--config", help="JSON config file with per-command sections")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-data", help="generate synthetic assignment training data")
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--n", default="5", help="source count or range lo:hi")
    p.add_argument("--m", default="8", help="target count or range lo:hi")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="out/data")
    p.set_defaults(func=cmd_gen_data)

    p = sub.add_parser("train-gnn", help="train the assignment network")
    p.add_argument("--data", default="out/data")
    p.add_argument("--out", default="out/gnn")
    p.add_argument("--latent-dim", type=int, default=16)
    p.add_argument("--conv-iterations", type=int, default=2)
    p.add_argument("--mlp-hidden", type=int, default=32)
    p.add_argument("--epochs", type=int, default=20)
    p.add_argument("--lr", type=float, default=0.003)
    p.add_argument("--lr-decay", type=float, default=0.05)
    p.add_argument("--decay-every", type=int, default=5)
    p.add_argument("--loss-balance", type=float, default=0.9)
    p.add_argument("--holdout-fraction", type=float, default=0.1)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_train_gnn)

    p = sub.add_parser("eval-gnn", help="evaluate a checkpoint on sample data")
    p.add_argument("--checkpoint", required=True)
    p.add_argument("--data", default="out/data")
    p.add_argument("--out")
    p.set_defaults(func=cmd_eval_gnn)

    for name in ("build-graph", "edit"):
        p = sub.add_parser(name, help=f"{name} over a labeled corpus")
        p.add_argument("--dataset", help="JSONL with id/text/label (default: bundled sentiment)")
        p.add_argument("--taxonomy", help="taxonomy file (default: bundled)")
        p.add_argument("--embeddings", help="embedding table (default: bundled)")
        p.add_argument("--pos", help="comma list of POS tags to extract (default: all)")
        p.add_argument("--weight-provider", choices=("taxonomy", "embedding"),
                       default="taxonomy")
        p.add_argument("--target-mode", choices=("copy", "antonyms"), default="copy")
        p.add_argument("--edge-filter", action="store_true")
        p.add_argument("--penalty-factor", type=float, default=10.0)
        if name == "build-graph":
            p.add_argument("--out", default="out/graph")
            p.set_defaults(func=cmd_build_graph)
        else:
            p.add_argument("--solver", choices=("deterministic", "gnn"),
                           default="deterministic")
            p.add_argument("--checkpoint", help="GNN checkpoint (required for --solver gnn)")
            p.add_argument("--heuristic", default="contrastive",
                           choices=("fluency", "contrastive", "fluency_contrastive"))
            p.add_argument("--threshold", default="static:10")
            p.add_argument("--beam-width", type=int, default=5)
            p.add_argument("--no-stop-on-flip", action="store_true")
            p.add_argument("--classifier", help="saved classifier (default: train on dataset)")
            p.add_argument("--config-name", help="row label for the report CSV")
            p.add_argument("--out", default="out/edit")
            p.set_defaults(func=cmd_edit)

    p = sub.add_parser("evaluate", help="recompute metrics from an edits.jsonl file")
    p.add_argument("--results", required=True)
    p.add_argument("--taxonomy")
    p.add_argument("--embeddings")
    p.add_argument("--config-name")
    p.add_argument("--out", default="out/evaluate")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("bench", help="time the solvers over a size grid")
    p.add_argument("--sizes", default="5:8,50:100,200:500,500:2000",
                   help="comma list of n:m sizes")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--checkpoint", help="include GNN inference timings")
    p.add_argument("--all-backends", action="store_true",
                   help="time both the compiled and pure assignment kernels")
    p.add_argument("--out", default="out/bench.csv")
    p.set_defaults(func=cmd_bench)
    return parser


def _apply_config_file(args: argparse.Namespace, parser: _Parser, argv: list[str]) -> None:
    """Fill non-flagged options from the config file's per-command section."""
    if not args.config:
        return
    with open(args.config, encoding="utf-8") as fh:
        sections = json.load(fh)
    section = sections.get(args.command, {})
    explicit = {a.lstrip("-").split("=")[0].replace("-", "_") for a in argv if a.startswith("--")}
    for key, value in section.items():
        attr = key.replace("-", "_")
        if attr in explicit or not hasattr(args, attr):
            continue
        setattr(args, attr, value)


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _apply_config_file(args, parser, argv)
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    except DivergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DIVERGENCE_ERROR
    except (OSError, ValueError, KeyError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_ERROR


if __name__ == "__main__":
    sys.exit(main())
