"""BLEU, METEOR and METEOR-Hindi scoring for machine translation output."""

from .hindi import clause_match_ratio, clause_split, meteor_hindi, meteor_hindi_corpus
from .matching import LocalWordGroup, MatchStage, lwg_match, lwg_split, match_stage, pos_match
from .meteor import (Alignment, MeteorConfig, MeteorScore, align, count_chunks, crossing_count,
                     meteor_corpus, meteor_unit, select_alignment)
from .ngram import (BleuScore, NGramCounts, PrecisionStat, bleu_corpus, bleu_sentence,
                    brevity_penalty, clipped_matches, extract_ngrams, modified_precision, ngram_curve)
from .resources import ResourceSet, load_resource_dir, load_resources, stem_of
from .text import (Corpus, EvalUnit, IngestionError, Segment, Token, detokenize, load_corpus,
                   normalize, segment, tokenize)

__version__ = "0.1.0"
