#include "tst/core/edit_tag.hpp"

#include "tst/core/errors.hpp"
#include "tst/core/token.hpp"

namespace tst {

namespace {

constexpr std::array<std::string_view, kAllTransforms.size()> kTransformNames = {
    "CASE_CAPITAL", "CASE_LOWER", "CASE_UPPER", "VERB_VB_VBZ", "VERB_VB_VBD",  "VERB_VBZ_VB",
    "VERB_VBD_VB",  "PLURAL",     "SINGULAR",   "MERGE_SPACE", "MERGE_HYPHEN", "SPLIT_HYPHEN",
};

constexpr std::string_view kAppendPrefix = "$APPEND_";
constexpr std::string_view kReplacePrefix = "$REPLACE_";
constexpr std::string_view kTransformPrefix = "$TRANSFORM_";

void check_word(const std::string& word, std::string_view op) {
  if (word.empty()) throw MalformedTag(std::string(op) + " requires a word payload");
  if (contains_whitespace(word)) {
    throw MalformedTag(std::string(op) + " payload contains whitespace: '" + word + "'");
  }
}

}  // namespace

std::string_view transform_name(TransformKind kind) {
  return kTransformNames[static_cast<std::size_t>(kind)];
}

std::optional<TransformKind> transform_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kTransformNames.size(); ++i) {
    if (kTransformNames[i] == name) return kAllTransforms[i];
  }
  return std::nullopt;
}

EditTag EditTag::append(std::string word) {
  check_word(word, "APPEND");
  return EditTag(TagKind::kAppend, std::move(word), TransformKind::kCaseCapital);
}

EditTag EditTag::replace(std::string word) {
  check_word(word, "REPLACE");
  return EditTag(TagKind::kReplace, std::move(word), TransformKind::kCaseCapital);
}

EditTag parse_tag(std::string_view s) {
  if (s.empty() || s.front() != '$') throw MalformedTag("tag must begin with '$': '" + std::string(s) + "'");
  if (s == "$KEEP") return EditTag::keep();
  if (s == "$DELETE") return EditTag::del();
  if (s.starts_with(kAppendPrefix)) return EditTag::append(std::string(s.substr(kAppendPrefix.size())));
  if (s.starts_with(kReplacePrefix)) return EditTag::replace(std::string(s.substr(kReplacePrefix.size())));
  if (s.starts_with(kTransformPrefix)) {
    const auto name = s.substr(kTransformPrefix.size());
    if (auto kind = transform_from_name(name)) return EditTag::transform(*kind);
    throw MalformedTag("unknown transform '" + std::string(name) + "'");
  }
  throw MalformedTag("unknown operation in '" + std::string(s) + "'");
}

std::string serialize_tag(const EditTag& tag) {
  switch (tag.kind()) {
    case TagKind::kKeep:
      return "$KEEP";
    case TagKind::kDelete:
      return "$DELETE";
    case TagKind::kAppend:
      return std::string(kAppendPrefix) + tag.payload();
    case TagKind::kReplace:
      return std::string(kReplacePrefix) + tag.payload();
    case TagKind::kTransform:
      return std::string(kTransformPrefix) + std::string(transform_name(tag.transform_kind()));
  }
  return {};
}

}  // namespace tst
