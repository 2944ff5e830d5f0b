"""Command-line front end: ``hindeval score|compare|rank``.

Exit status: 0 success, 2 input/file error, 3 configuration error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .matching import BASE_STAGES, MatchStage
from .meteor import FMEAN_MODES, MeteorConfig
from .ngram import SMOOTHING_MODES
from .report import (HUMAN_MAPPINGS, METRICS, BleuConfig, RatingError, compare_metrics,
                     comparison_report, dumps_report, load_engine_ratings, load_ratings, make_report,
                     normalize_human, rank_engines, ranking_report, render_table, run_config,
                     score_metric, write_report)
from .resources import ENV_VAR, ResourceError, load_resource_dir
from .text import IngestionError, load_corpus

EXIT_OK, EXIT_INPUT, EXIT_CONFIG = 0, 2, 3


class ConfigError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def _metric_list(text: str) -> list[str]:
    names = [m.strip() for m in text.split(",") if m.strip()]
    bad = [m for m in names if m not in METRICS]
    if bad or not names:
        raise ConfigError(f"unknown metric(s) {', '.join(bad) or '(none)'}; valid metrics: {', '.join(METRICS)}")
    return names


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--ref", action="append", required=True, metavar="FILE",
                   help="reference file, line-parallel to the candidates (repeatable)")
    p.add_argument("--resources", metavar="DIR",
                   help=f"directory with stems.tsv, synsets.txt, pos.tsv, function_words.txt "
                        f"(default: ${ENV_VAR})")
    p.add_argument("--output", "-o", metavar="FILE", help="write the JSON report here")
    g = p.add_argument_group("BLEU")
    g.add_argument("--max-n", type=int, default=4)
    g.add_argument("--weights", help="comma-separated n-gram weights summing to 1 (default uniform)")
    g.add_argument("--smoothing", choices=SMOOTHING_MODES, default="none")
    g.add_argument("--bleu-variant", choices=("cumulative", "single-order"), default="cumulative")
    g = p.add_argument_group("METEOR")
    g.add_argument("--stages", default=",".join(s.label for s in BASE_STAGES),
                   help="base matcher stages (METEOR-Hindi always adds lwg,pos)")
    g.add_argument("--fmean", choices=FMEAN_MODES, default="recall-weighted")
    g.add_argument("--gamma", type=float, default=0.5, help="fragmentation penalty weight")
    g.add_argument("--beta", type=float, default=3.0, help="fragmentation penalty exponent")
    g.add_argument("--clause-weight", type=float, default=0.0,
                   help="weight of the clause-match ratio in METEOR-Hindi (0.1 is a documented alternative)")
    g.add_argument("--verb-prefix", default="V", help="POS tag prefix identifying verbs")
    p.add_argument("--human-mapping", choices=HUMAN_MAPPINGS, default="divide",
                   help="divide: mean/5; shift: (mean-1)/4")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hindeval", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("score", help="score one candidate file with one metric")
    p.add_argument("--cand", required=True, metavar="FILE")
    p.add_argument("--metric", required=True, help=f"one of: {', '.join(METRICS)}")
    _add_common(p)

    p = sub.add_parser("compare", help="side-by-side comparison of several metrics")
    p.add_argument("--cand", required=True, metavar="FILE")
    p.add_argument("--metrics", default=",".join(METRICS))
    p.add_argument("--ratings", metavar="FILE", help="human ratings, line_no<TAB>rating")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    _add_common(p)

    p = sub.add_parser("rank", help="rank several engines per metric")
    p.add_argument("--engine", action="append", required=True, metavar="LABEL=FILE")
    p.add_argument("--metrics", default=",".join(METRICS))
    p.add_argument("--ratings-per-engine", metavar="FILE",
                   help="human ratings, engine<TAB>line_no<TAB>rating")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    _add_common(p)
    return parser


def _configs(args):
    try:
        weights = None
        if args.weights:
            weights = tuple(float(w) for w in args.weights.split(","))
        bleu = BleuConfig(args.max_n, weights, args.smoothing, args.bleu_variant)
        if weights is not None and len(weights) != args.max_n:
            raise ValueError(f"expected {args.max_n} weights, got {len(weights)}")
        stages = [MatchStage.parse(s) for s in args.stages.split(",") if s.strip()]
        meteor = MeteorConfig(tuple(stages), args.fmean, args.gamma, args.beta,
                              args.clause_weight, args.verb_prefix)
    except ValueError as e:
        raise ConfigError(str(e)) from e
    return bleu, meteor


def _resources(args, metrics):
    res = load_resource_dir(args.resources)
    if "meteor-hindi" in metrics:
        if res.missing("function_words") and res.missing("pos"):
            print("warning: resources missing; degraded to base pipeline", file=sys.stderr)
        elif res.missing_tables:
            print(f"warning: resources missing: {', '.join(res.missing_tables)}", file=sys.stderr)
    return res


def _emit(report: dict, args) -> None:
    if args.output:
        write_report(report, args.output)


def run_score(args) -> int:
    metrics = _metric_list(args.metric)
    if len(metrics) != 1:
        raise ConfigError("score takes a single --metric; use compare for several")
    bleu, meteor = _configs(args)
    res = _resources(args, metrics)
    corpus = load_corpus(args.cand, args.ref)
    score, details = score_metric(corpus, metrics[0], bleu, meteor, res)
    cfg = run_config(metrics, bleu, meteor, res)
    cfg["inputs"] = {"cand": args.cand, "refs": list(args.ref)}
    print(f"metric: {metrics[0]}")
    print(f"score: {score:.4f}")
    _emit(make_report("score", cfg, metric=metrics[0], score=score, details=details), args)
    return EXIT_OK


def run_compare(args) -> int:
    metrics = _metric_list(args.metrics)
    bleu, meteor = _configs(args)
    res = _resources(args, metrics)
    corpus = load_corpus(args.cand, args.ref)
    ratings = load_ratings(args.ratings) if args.ratings else None
    rows = compare_metrics(corpus, metrics, bleu, meteor, res, ratings, args.human_mapping)
    cfg = run_config(metrics, bleu, meteor, res, args.human_mapping if ratings else None)
    cfg["inputs"] = {"cand": args.cand, "refs": list(args.ref), "ratings": args.ratings}
    report = comparison_report(rows, cfg)
    sys.stdout.write(dumps_report(report) if args.format == "json" else render_table(rows))
    _emit(report, args)
    return EXIT_OK


def _parse_engines(specs: Sequence[str]) -> dict[str, str]:
    engines = {}
    for spec in specs:
        label, sep, path = spec.partition("=")
        if not sep or not label or not path:
            raise ConfigError(f"--engine expects LABEL=FILE, got {spec!r}")
        if label in engines:
            raise ConfigError(f"duplicate engine label {label!r}")
        engines[label] = path
    if len(engines) < 2:
        raise ConfigError(f"rank needs at least 2 engines, got {len(engines)}")
    return engines


def run_rank(args) -> int:
    metrics = _metric_list(args.metrics)
    engines = _parse_engines(args.engine)
    bleu, meteor = _configs(args)
    res = _resources(args, metrics)
    human = None
    if args.ratings_per_engine:
        per_engine = load_engine_ratings(args.ratings_per_engine)
        human = {k: normalize_human(v, args.human_mapping) for k, v in per_engine.items() if k in engines}
    rankings = rank_engines(engines, args.ref, metrics, bleu, meteor, res, human)
    cfg = run_config(metrics, bleu, meteor, res, args.human_mapping if human else None)
    cfg["inputs"] = {"engines": engines, "refs": list(args.ref), "ratings_per_engine": args.ratings_per_engine}
    report = ranking_report(rankings, cfg)
    if args.format == "json":
        sys.stdout.write(dumps_report(report))
    else:
        for m, lst in rankings.items():
            print(f"# {m}")
            for k, e in enumerate(lst, 1):
                print(f"{k}\t{e.label}\t{e.scores[m]:.4f}")
        for m, rho in report.get("correlation", {}).items():
            print(f"spearman({m}, human)\t{'undefined' if rho is None else f'{rho:.4f}'}")
    _emit(report, args)
    return EXIT_OK


COMMANDS = {"score": run_score, "compare": run_compare, "rank": run_rank}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ConfigError as e:
        print(f"hindeval: configuration error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except (IngestionError, ResourceError, RatingError, OSError) as e:
        print(f"hindeval: input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as e:
        print(f"hindeval: configuration error: {e}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
