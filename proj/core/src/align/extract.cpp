#include "tst/align/extract.hpp"

#include "tst/align/align.hpp"

namespace tst {

TagSeq extract_tags(const TokenSeq& src, const TokenSeq& tgt, const TagVocabulary* vocab,
                    const VerbLexicon& lexicon) {
  TagSeq tags(src.size(), EditTag::keep());

  // Token index (sentinel = 0) that an insertion run would attach to.
  std::size_t anchor = 0;
  bool in_run = false;
  for (const AlignOp& op : align(src, tgt)) {
    if (op.kind == AlignKind::kInsert) {
      // One APPEND per token and pass; only a KEEP anchor can also carry one.
      if (!in_run && tags[anchor].is_keep()) tags[anchor] = EditTag::append(tgt[*op.tgt + 1].text);
      in_run = true;
      continue;
    }
    in_run = false;
    anchor = *op.src + 1;
    switch (op.kind) {
      case AlignKind::kEqual:
        break;
      case AlignKind::kDelete:
        tags[anchor] = EditTag::del();
        break;
      case AlignKind::kSubstitute: {
        const std::string& from = src[anchor].text;
        const std::string& to = tgt[*op.tgt + 1].text;
        if (auto kind = recognize_transform(from, to, lexicon)) {
          tags[anchor] = EditTag::transform(*kind);
        } else {
          tags[anchor] = EditTag::replace(to);
        }
        break;
      }
      case AlignKind::kInsert:
        break;
    }
  }

  if (vocab != nullptr) {
    for (auto& tag : tags) {
      if (!vocab->contains(tag)) tag = EditTag::keep();
    }
  }
  return tags;
}

void count_tags(const TokenSeq& src, const TokenSeq& tgt, TagCounts& counts, const VerbLexicon& lexicon,
                TagCoverage coverage) {
  TokenSeq state = src;
  for (int step = 0; step < kMaxChainSteps; ++step) {
    const TagSeq tags = extract_tags(state, tgt, nullptr, lexicon);
    for (const auto& tag : tags) ++counts[serialize_tag(tag)];
    if (coverage == TagCoverage::kFirstPass) return;
    TokenSeq next = apply_tags(state, tags, lexicon);
    if (next == tgt || next == state) return;
    state = std::move(next);
  }
}

void merge_counts(TagCounts& into, const TagCounts& from) {
  for (const auto& [text, n] : from) into[text] += n;
}

TagVocabulary build_vocab(const PairSource& corpus, std::size_t capacity, const VerbLexicon& lexicon,
                          TagCoverage coverage) {
  TagCounts counts;
  std::pair<TokenSeq, TokenSeq> pair;
  while (corpus(pair)) count_tags(pair.first, pair.second, counts, lexicon, coverage);
  return TagVocabulary::from_counts(counts, capacity);
}

}  // namespace tst
