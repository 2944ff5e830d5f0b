"""
BLEU and the n-gram curve
=========================

Corpus BLEU on the synthetic Hindi desk corpus, then one score per
n-gram order to see where the candidates stop agreeing with the references.
"""

from hindeval import bleu_corpus, bleu_sentence, ngram_curve
from hindeval.toy import desk_corpus

corpus = desk_corpus(50, seed=0)
print(corpus.units[0].candidate.raw)
print(corpus.units[0].references[0].raw)

# cumulative BLEU-4 with uniform weights
b = bleu_corpus(corpus)
print("BLEU-4: %.4f  (BP %.3f, c=%d, r=%d)" % (b.score, b.bp, b.cand_len, b.ref_len))
for p in b.precisions:
    print("  p%d = %d/%d" % (p.order, p.matched, p.total))

# one-hot weight on each order
for s in ngram_curve(corpus, max_n=4):
    print("order-only score:", round(s.score, 4))

# a single short sentence has no 4-grams in common, smoothing keeps it nonzero
u = corpus.units[3]
print(bleu_sentence(u).score, bleu_sentence(u, smoothing="add-one-high-order").score)
