"""
METEOR-Hindi: local word groups, POS and clauses
================================================

The Hindi pipeline adds two matcher stages after synonymy. A local word
group is a content word plus its trailing postpositions or auxiliaries.
"""

from hindeval import (MeteorConfig, clause_split, lwg_split, meteor_corpus, meteor_hindi,
                      meteor_hindi_corpus)
from hindeval.resources import ResourceSet
from hindeval.toy import desk_corpus, toy_resources

res = toy_resources()
print(res.describe())

corpus = desk_corpus(50, seed=0)
u = corpus.units[2]
print([" ".join(t.surface for t in g.tokens) for g in lwg_split(u.candidate, res)])
print(clause_split(u.candidate, res))

s = meteor_hindi(u, resources=res)
print(s.stage_histogram, "clause match:", s.clause_match)

base = meteor_corpus(corpus, resources=res).score
hindi = meteor_hindi_corpus(corpus, resources=res)
print("METEOR %.4f   METEOR-Hindi %.4f" % (base, hindi.score))
print(hindi.stage_histogram)

# blending in the clause ratio
print(meteor_hindi_corpus(corpus, MeteorConfig(clause_weight=0.1), res).score)

# without resources the extra stages have nothing to work with
bare = meteor_hindi_corpus(corpus, resources=ResourceSet())
print(bare.score == meteor_corpus(corpus).score, bare.flags)
