"""
METEOR alignment
================

Staged matching (exact, stem, synonym) followed by chunk counting and
the fragmentation penalty.
"""

from hindeval import MeteorConfig, align, meteor_corpus, meteor_unit
from hindeval.toy import desk_corpus, toy_resources

res = toy_resources()
corpus = desk_corpus(50, seed=0)
u = corpus.units[1]
cand, ref = u.candidate, u.references[0]

al = align(cand, ref, resources=res)
for c, r, stage in al.pairs:
    print("%-10s -> %-10s %s" % (cand.words[c], ref.words[r], stage.label))
print("chunks:", al.chunks, "crossings:", al.crossings)

s = meteor_unit(u, resources=res)
print("P=%.3f R=%.3f Fmean=%.3f penalty=%.3f score=%.4f" % (s.precision, s.recall, s.fmean, s.penalty, s.score))

# exact matching only, and the harmonic mean instead of the recall-weighted one
# (the two means coincide here because every candidate has its reference's length)
exact = MeteorConfig(stages=["exact"])
print("exact only:", round(meteor_corpus(corpus, exact, res).score, 4))
print("all stages:", round(meteor_corpus(corpus, resources=res).score, 4))
print("harmonic:  ", round(meteor_corpus(corpus, MeteorConfig(fmean="harmonic"), res).score, 4))
