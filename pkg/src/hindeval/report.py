"""Human ratings, metric comparison tables, engine rankings and JSON reports.

Report JSON schema (``schema_version`` 1)::

    {
      "schema_version": 1,
      "kind": "score" | "compare" | "rank",
      "config": {tokenizer, bleu, meteor, resources, human_mapping, ...},
      ...kind-specific body...
    }

``score``   -> ``"metric"``, ``"score"``, ``"details"``
``compare`` -> ``"rows"``: [{"metric", "score", "details"}] ascending by score
``rank``    -> ``"rankings"``: {metric: [{"rank", "engine", "score"}]},
               optional ``"human"`` {engine: score} and ``"correlation"`` {metric: rho}

Corpus-level scores everywhere; METEOR corpus scores are recomputed from
summed match/length/chunk statistics.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Optional, Sequence

from scipy import stats

from .hindi import meteor_hindi_corpus
from .meteor import MeteorConfig, meteor_corpus
from .ngram import SMOOTHING_MODES, bleu_corpus, ngram_curve
from .resources import ResourceSet
from .text import TOKENIZER_VERSION, Corpus, IngestionError, load_corpus

SCHEMA_VERSION = 1
METRICS = ("bleu", "meteor", "meteor-hindi")
DISPLAY = {"bleu": "BLEU", "meteor": "METEOR", "meteor-hindi": "METEOR-Hindi", "human": "Human"}
HUMAN_MAPPINGS = ("divide", "shift")
RATING_LABELS = {5: "Excellent", 4: "Good", 3: "Understandable", 2: "Barely Understandable", 1: "Unacceptable"}


class RatingError(ValueError):
    pass


@dataclass(frozen=True)
class HumanRating:
    line_no: int
    rating: int

    def __post_init__(self):
        if self.rating not in RATING_LABELS:
            raise RatingError(f"rating must be an integer 1-5, got {self.rating!r}")

    @property
    def label(self) -> str:
        return RATING_LABELS[self.rating]


@dataclass(frozen=True)
class BleuConfig:
    max_n: int = 4
    weights: Optional[tuple[float, ...]] = None
    smoothing: str = "none"
    # "cumulative" is BLEU-N; "single-order" uses only the order-N precision
    variant: str = "cumulative"

    def __post_init__(self):
        if self.smoothing not in SMOOTHING_MODES:
            raise ValueError(f"unknown smoothing {self.smoothing!r}; expected one of {SMOOTHING_MODES}")
        if self.variant not in ("cumulative", "single-order"):
            raise ValueError(f"unknown BLEU variant {self.variant!r}")
        if self.max_n < 1:
            raise ValueError("max_n must be >= 1")

    def as_dict(self) -> dict:
        w = self.weights if self.weights is not None else (1.0 / self.max_n,) * self.max_n
        return {"max_n": self.max_n, "weights": list(w), "smoothing": self.smoothing, "variant": self.variant}


@dataclass(frozen=True)
class ComparisonRow:
    metric: str
    score: float
    details: dict = field(default_factory=dict)

    @property
    def name(self) -> str:
        return DISPLAY.get(self.metric, self.metric)


@dataclass
class EngineResult:
    label: str
    scores: dict = field(default_factory=dict)
    human: Optional[float] = None


def _parse_int(s: str, path, lineno: int, what: str) -> int:
    try:
        return int(s.strip())
    except ValueError:
        raise RatingError(f"{path}:{lineno}: {what} must be an integer, got {s!r}") from None


def _rating_lines(path):
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, 1):
            line = line.strip()
            if line and not line.startswith("#"):
                yield lineno, line.split("\t")


def _make_rating(line_no: int, rating: int, path, lineno: int) -> HumanRating:
    if line_no < 1:
        raise RatingError(f"{path}:{lineno}: line number must be >= 1")
    try:
        return HumanRating(line_no, rating)
    except RatingError as e:
        raise RatingError(f"{path}:{lineno}: {e}") from None


def load_ratings(path) -> list[HumanRating]:
    """Read ``line_no<TAB>rating`` lines on the 1-5 scale."""
    out = []
    seen = set()
    for lineno, parts in _rating_lines(path):
        if len(parts) != 2:
            raise RatingError(f"{path}:{lineno}: expected 'line_no<TAB>rating'")
        line_no = _parse_int(parts[0], path, lineno, "line number")
        r = _make_rating(line_no, _parse_int(parts[1], path, lineno, "rating"), path, lineno)
        if line_no in seen:
            raise RatingError(f"{path}:{lineno}: duplicate rating for line {line_no}")
        seen.add(line_no)
        out.append(r)
    return out


def load_engine_ratings(path) -> dict[str, list[HumanRating]]:
    """Read ``engine<TAB>line_no<TAB>rating`` lines, grouped by engine label."""
    out: dict[str, list[HumanRating]] = {}
    seen = set()
    for lineno, parts in _rating_lines(path):
        if len(parts) != 3:
            raise RatingError(f"{path}:{lineno}: expected 'engine<TAB>line_no<TAB>rating'")
        label = parts[0].strip()
        line_no = _parse_int(parts[1], path, lineno, "line number")
        r = _make_rating(line_no, _parse_int(parts[2], path, lineno, "rating"), path, lineno)
        if (label, line_no) in seen:
            raise RatingError(f"{path}:{lineno}: duplicate rating for {label} line {line_no}")
        seen.add((label, line_no))
        out.setdefault(label, []).append(r)
    return out


def normalize_human(ratings: Sequence, mapping: str = "divide") -> Optional[float]:
    """Map mean rating to [0, 1]: ``divide`` is mean/5, ``shift`` is (mean-1)/4.

    Returns None for an empty list.
    """
    if mapping not in HUMAN_MAPPINGS:
        raise ValueError(f"unknown human mapping {mapping!r}; expected one of {HUMAN_MAPPINGS}")
    values = [getattr(r, "rating", r) for r in ratings]
    if not values:
        return None
    mean = sum(values) / len(values)
    return mean / 5 if mapping == "divide" else (mean - 1) / 4


def score_metric(corpus: Corpus, metric: str, bleu: BleuConfig = BleuConfig(),
                 meteor: MeteorConfig = MeteorConfig(),
                 resources: Optional[ResourceSet] = None) -> tuple[float, dict]:
    """Corpus score and a details dict for one metric name."""
    if metric == "bleu":
        if bleu.variant == "single-order":
            res = ngram_curve(corpus, bleu.max_n, bleu.smoothing)[-1]
        else:
            res = bleu_corpus(corpus, bleu.max_n, bleu.weights, bleu.smoothing)
        return res.score, res.as_dict()
    if metric == "meteor":
        res = meteor_corpus(corpus, meteor, resources)
    elif metric == "meteor-hindi":
        res = meteor_hindi_corpus(corpus, meteor, resources)
    else:
        raise ValueError(f"unknown metric {metric!r}; valid metrics: {', '.join(METRICS)}")
    return res.score, res.as_dict()


def run_config(metrics: Sequence[str], bleu: BleuConfig, meteor: MeteorConfig,
               resources: Optional[ResourceSet], human_mapping: Optional[str] = None) -> dict:
    cfg = {
        "tokenizer": {"version": TOKENIZER_VERSION, "normalization": "NFC"},
        "metrics": list(metrics),
        "aggregation": "corpus",
    }
    if "bleu" in metrics:
        cfg["bleu"] = bleu.as_dict()
    if "meteor" in metrics or "meteor-hindi" in metrics:
        cfg["meteor"] = meteor.as_dict()
        cfg["meteor"]["corpus_aggregation"] = "summed-statistics"
        cfg["resources"] = (resources or ResourceSet()).describe()
    if human_mapping is not None:
        cfg["human_mapping"] = human_mapping
    return cfg


def compare_metrics(corpus: Corpus, metrics: Sequence[str] = METRICS, bleu: BleuConfig = BleuConfig(),
                    meteor: MeteorConfig = MeteorConfig(), resources: Optional[ResourceSet] = None,
                    ratings: Optional[Sequence[HumanRating]] = None,
                    human_mapping: str = "divide") -> list[ComparisonRow]:
    """One row per metric plus a Human row when ratings are given, ascending by score."""
    rows = []
    for m in metrics:
        score, details = score_metric(corpus, m, bleu, meteor, resources)
        rows.append(ComparisonRow(m, score, details))
    if ratings:
        bad = [r.line_no for r in ratings if r.line_no > len(corpus)]
        if bad:
            raise RatingError(f"ratings refer to lines beyond the corpus ({len(corpus)} lines): {bad[:5]}")
        h = normalize_human(ratings, human_mapping)
        rows.append(ComparisonRow("human", h, {"n_ratings": len(ratings), "mapping": human_mapping}))
    rows.sort(key=lambda r: r.score)
    return rows


def render_table(rows: Sequence[ComparisonRow], digits: int = 4) -> str:
    """Aligned two-column TSV: ``Metric`` and ``Scores``."""
    width = max([len("Metric")] + [len(r.name) for r in rows])
    lines = [f"{'Metric'.ljust(width)}\tScores"]
    lines += [f"{r.name.ljust(width)}\t{r.score:.{digits}f}" for r in rows]
    return "\n".join(lines) + "\n"


def rank_by_score(scores: Mapping[str, float]) -> list[str]:
    """Labels sorted by descending score; equal scores fall back to label order."""
    return sorted(scores, key=lambda k: (-scores[k], k))


def rank_correlation(metric_scores, human_scores) -> Optional[float]:
    """Spearman's rho with average ranks for ties; None when undefined.

    Accepts two equal-length sequences or two mappings keyed by engine
    (only engines present in both are used).
    """
    if isinstance(metric_scores, Mapping):
        keys = sorted(set(metric_scores) & set(human_scores))
        x = [metric_scores[k] for k in keys]
        y = [human_scores[k] for k in keys]
    else:
        x, y = list(metric_scores), list(human_scores)
        if len(x) != len(y):
            raise ValueError("score vectors differ in length")
    if len(x) < 2 or len(set(x)) < 2 or len(set(y)) < 2:
        return None
    rho = float(stats.spearmanr(x, y).statistic)
    return None if math.isnan(rho) else rho


def rank_engines(engines: Mapping, reference_paths: Sequence, metrics: Sequence[str] = METRICS,
                 bleu: BleuConfig = BleuConfig(), meteor: MeteorConfig = MeteorConfig(),
                 resources: Optional[ResourceSet] = None,
                 human: Optional[Mapping[str, float]] = None) -> dict[str, list[EngineResult]]:
    """Score every engine against shared references and rank per metric.

    ``engines`` maps label -> candidate file path (or an already loaded Corpus).
    """
    if len(engines) < 2:
        raise ValueError(f"ranking needs at least 2 engines, got {len(engines)}")
    results = {}
    for label, src in engines.items():
        if isinstance(src, Corpus):
            corpus = src
        else:
            try:
                corpus = load_corpus(src, reference_paths)
            except IngestionError as e:
                raise IngestionError(f"engine {label!r}: {e}") from e
        scores = {m: score_metric(corpus, m, bleu, meteor, resources)[0] for m in metrics}
        results[label] = EngineResult(label, scores, (human or {}).get(label))
    return {
        m: [results[k] for k in rank_by_score({k: r.scores[m] for k, r in results.items()})]
        for m in metrics
    }


def make_report(kind: str, config: dict, **body) -> dict:
    return {"schema_version": SCHEMA_VERSION, "kind": kind, "config": config, **body}


def dumps_report(report: dict) -> str:
    return json.dumps(report, ensure_ascii=False, sort_keys=True, indent=2) + "\n"


def loads_report(text: str) -> dict:
    report = json.loads(text)
    if report.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported report schema_version {report.get('schema_version')!r}")
    return report


def write_report(report: dict, path) -> None:
    Path(path).write_text(dumps_report(report), encoding="utf-8")


def comparison_report(rows: Sequence[ComparisonRow], config: dict) -> dict:
    return make_report(
        "compare", config,
        rows=[{"metric": r.metric, "name": r.name, "score": r.score, "details": r.details} for r in rows],
    )


def ranking_report(rankings: Mapping[str, Sequence[EngineResult]], config: dict) -> dict:
    body = {
        "rankings": {
            m: [{"rank": k + 1, "engine": e.label, "score": e.scores[m]} for k, e in enumerate(lst)]
            for m, lst in rankings.items()
        }
    }
    engines = next(iter(rankings.values()), [])
    human = {e.label: e.human for e in engines if e.human is not None}
    if human:
        body["human"] = human
        body["correlation"] = {
            m: rank_correlation({e.label: e.scores[m] for e in lst}, human)
            for m, lst in rankings.items()
        }
    return make_report("rank", config, **body)
