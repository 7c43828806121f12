#include "tst/tagger/oracle.hpp"

#include "tst/align/extract.hpp"
#include "tst/apply/apply.hpp"

namespace tst {

TagPrediction oracle_predict(const TokenSeq& src, const TokenSeq& tgt, const TagVocabulary& vocab,
                             const VerbLexicon& lexicon) {
  const TagSeq tags = extract_tags(src, tgt, &vocab, lexicon);
  TagPrediction pred(src.size(), vocab.size());
  for (std::size_t i = 0; i < tags.size(); ++i) {
    const TagId id = vocab.find(tags[i]).value_or(kKeepId);
    pred.row(i)[id] = 1.0;
    pred.detect(i) = id == kKeepId ? 0.0 : 1.0;
  }
  return pred;
}

OracleBackend::OracleBackend(const std::vector<SentencePair>& pairs, TagVocabulary vocab,
                             const VerbLexicon& lexicon)
    : vocab_(std::move(vocab)), lexicon_(&lexicon) {
  for (const auto& [src, tgt] : pairs) {
    TokenSeq state = src;
    targets_.emplace(detokenize(state), tgt);
    for (int step = 0; step < kMaxChainSteps && !(state == tgt); ++step) {
      TokenSeq next = apply_tags(state, extract_tags(state, tgt, &vocab_, *lexicon_), *lexicon_);
      if (next == state) break;
      state = std::move(next);
      targets_.emplace(detokenize(state), tgt);
    }
  }
}

const TokenSeq* OracleBackend::target_for(const TokenSeq& seq) const {
  auto it = targets_.find(detokenize(seq));
  return it == targets_.end() ? nullptr : &it->second;
}

std::vector<TagPrediction> OracleBackend::predict_batch(std::span<const TokenSeq> batch) const {
  std::vector<TagPrediction> out;
  out.reserve(batch.size());
  for (const auto& seq : batch) {
    if (const TokenSeq* tgt = target_for(seq)) {
      out.push_back(oracle_predict(seq, *tgt, vocab_, *lexicon_));
    } else {
      out.push_back(oracle_predict(seq, seq, vocab_, *lexicon_));
    }
  }
  return out;
}

}  // namespace tst
