#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>

#include "tst/apply/apply.hpp"
#include "tst/apply/transforms.hpp"
#include "tst/core/token.hpp"
#include "tst/core/vocabulary.hpp"

namespace tst {

/// Per-token edit tags that move `src` toward `tgt` in one pass.
///
/// EQUAL -> KEEP, DELETE -> DELETE, SUBSTITUTE -> TRANSFORM when a recognizer
/// explains it, otherwise REPLACE. Only the first word of an insertion run
/// becomes an APPEND on the preceding source token (the sentinel for runs at
/// the front); the rest of the run is left for later iterations. With a
/// vocabulary, tags outside it degrade to KEEP.
TagSeq extract_tags(const TokenSeq& src, const TokenSeq& tgt, const TagVocabulary* vocab = nullptr,
                    const VerbLexicon& lexicon = VerbLexicon::builtin());

/// Which tags a vocabulary build counts for each pair.
enum class TagCoverage {
  /// Tags of the single extract_tags(src, tgt) pass.
  kFirstPass,
  /// Tags of every pass of the extract/apply chain from src to tgt, so that
  /// later insertions of a multi-word run are in the vocabulary too.
  kFullChain,
};

/// Upper bound on extract/apply passes when following a chain.
inline constexpr int kMaxChainSteps = 256;

/// Counts serialized tags of one (source, target) pair.
void count_tags(const TokenSeq& src, const TokenSeq& tgt, TagCounts& counts,
                const VerbLexicon& lexicon = VerbLexicon::builtin(),
                TagCoverage coverage = TagCoverage::kFirstPass);

void merge_counts(TagCounts& into, const TagCounts& from);

/// Pull-style corpus: returns false when exhausted.
using PairSource = std::function<bool(std::pair<TokenSeq, TokenSeq>&)>;

TagVocabulary build_vocab(const PairSource& corpus, std::size_t capacity,
                          const VerbLexicon& lexicon = VerbLexicon::builtin(),
                          TagCoverage coverage = TagCoverage::kFirstPass);

}  // namespace tst
