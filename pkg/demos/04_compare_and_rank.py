"""
Comparing metrics and ranking engines
=====================================

A three-metric comparison table with a human row, then a ranking of
three synthetic engines with Spearman correlation against human scores.
"""

from hindeval.report import (BleuConfig, HumanRating, comparison_report, compare_metrics,
                             dumps_report, rank_correlation, rank_engines, render_table,
                             ranking_report)
from hindeval.toy import desk_corpus, toy_resources
from hindeval import Corpus

res = toy_resources()
corpus = desk_corpus(50, seed=0)

ratings = [HumanRating(k + 1, 3 + k % 3) for k in range(20)]
rows = compare_metrics(corpus, resources=res, ratings=ratings)
print(render_table(rows))

# the single-order variant reports each n-gram order on its own
print(render_table(compare_metrics(corpus, ["bleu"], BleuConfig(variant="single-order"))))

# three "engines": perturbed candidates, the references themselves, and a truncated copy
refs_only = Corpus.from_texts([u.references[0].raw for u in corpus], [u.references[0].raw for u in corpus])
short = Corpus.from_texts([" ".join(u.candidate.words[:4]) for u in corpus], [u.references[0].raw for u in corpus])
engines = {"desk": corpus, "oracle": refs_only, "short": short}
human = {"desk": 0.7, "oracle": 0.95, "short": 0.3}

ranked = rank_engines(engines, [], resources=res, human=human)
for metric, lst in ranked.items():
    print(metric, [e.label for e in lst])
    print("  spearman:", rank_correlation({e.label: e.scores[metric] for e in lst}, human))

print(dumps_report(ranking_report(ranked, {"note": "demo"}))[:400])
