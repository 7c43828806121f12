#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "tst/align/corpus.hpp"
#include "tst/apply/transforms.hpp"
#include "tst/core/vocabulary.hpp"
#include "tst/tagger/backend.hpp"

namespace tst {

/// One-hot distributions on extract_tags(src, tgt, vocab); detect is 1 where
/// the tag is not KEEP.
TagPrediction oracle_predict(const TokenSeq& src, const TokenSeq& tgt, const TagVocabulary& vocab,
                             const VerbLexicon& lexicon = VerbLexicon::builtin());

/// Test backend that knows the gold target of every sentence it may see.
///
/// At construction it walks each pair's extract/apply chain from the source
/// to the target and remembers every intermediate sentence, so later
/// iterations of the engine still find their target. When two chains share a
/// sentence, the first pair wins. Unknown sentences get an all-KEEP answer.
class OracleBackend final : public TaggerBackend {
 public:
  OracleBackend(const std::vector<SentencePair>& pairs, TagVocabulary vocab,
                const VerbLexicon& lexicon = VerbLexicon::builtin());

  std::vector<TagPrediction> predict_batch(std::span<const TokenSeq> batch) const override;
  std::size_t num_classes() const override { return vocab_.size(); }

  const TokenSeq* target_for(const TokenSeq& seq) const;

 private:
  TagVocabulary vocab_;
  const VerbLexicon* lexicon_;
  std::unordered_map<std::string, TokenSeq> targets_;
};

}  // namespace tst
