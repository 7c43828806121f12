#include "tst/apply/apply.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "tst/core/errors.hpp"

namespace tst {

namespace {

class Emitter {
 public:
  void emit(std::string word) {
    if (joiner_ && !words_.empty()) {
      words_.back() += *joiner_ + word;
      joiner_.reset();
      return;
    }
    words_.push_back(std::move(word));
  }

  void pending_merge(std::string_view joiner) { joiner_ = std::string(joiner); }

  std::vector<std::string> take() && { return std::move(words_); }

 private:
  std::vector<std::string> words_;
  std::optional<std::string> joiner_;
};

}  // namespace

TokenSeq apply_tags(const TokenSeq& seq, const TagSeq& tags, const VerbLexicon& lexicon) {
  if (tags.size() != seq.size()) {
    throw LengthMismatch("got " + std::to_string(tags.size()) + " tags for " + std::to_string(seq.size()) +
                         " tokens");
  }

  Emitter out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const EditTag& tag = tags[i];
    if (seq[i].is_start) {
      if (tag.kind() == TagKind::kAppend) out.emit(tag.payload());
      continue;
    }
    const std::string& word = seq[i].text;
    switch (tag.kind()) {
      case TagKind::kKeep:
        out.emit(word);
        break;
      case TagKind::kDelete:
        break;
      case TagKind::kReplace:
        out.emit(tag.payload());
        break;
      case TagKind::kAppend:
        out.emit(word);
        out.emit(tag.payload());
        break;
      case TagKind::kTransform: {
        const TransformKind kind = tag.transform_kind();
        if (kind == TransformKind::kMergeSpace || kind == TransformKind::kMergeHyphen) {
          out.emit(word);
          out.pending_merge(kind == TransformKind::kMergeSpace ? "" : "-");
          break;
        }
        for (auto& piece : apply_transform(kind, word, lexicon)) out.emit(std::move(piece));
        break;
      }
    }
  }
  return TokenSeq(std::move(out).take());
}

bool all_keep(const TagSeq& tags) {
  return std::all_of(tags.begin(), tags.end(), [](const EditTag& t) { return t.is_keep(); });
}

}  // namespace tst
