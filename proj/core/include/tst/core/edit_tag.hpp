#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace tst {

/// Token-independent grammatical transforms. Enum order is also the order in
/// which tag extraction tries the recognizers.
enum class TransformKind {
  kCaseCapital,
  kCaseLower,
  kCaseUpper,
  kVerbVbVbz,
  kVerbVbVbd,
  kVerbVbzVb,
  kVerbVbdVb,
  kPlural,
  kSingular,
  kMergeSpace,
  kMergeHyphen,
  kSplitHyphen,
};

inline constexpr std::array<TransformKind, 12> kAllTransforms = {
    TransformKind::kCaseCapital, TransformKind::kCaseLower,  TransformKind::kCaseUpper,
    TransformKind::kVerbVbVbz,   TransformKind::kVerbVbVbd,  TransformKind::kVerbVbzVb,
    TransformKind::kVerbVbdVb,   TransformKind::kPlural,     TransformKind::kSingular,
    TransformKind::kMergeSpace,  TransformKind::kMergeHyphen, TransformKind::kSplitHyphen,
};

/// Name as it appears after "$TRANSFORM_", e.g. "VERB_VB_VBZ".
std::string_view transform_name(TransformKind kind);
std::optional<TransformKind> transform_from_name(std::string_view name);

enum class TagKind { kKeep, kDelete, kAppend, kReplace, kTransform };

/// One edit operation attached to a token position.
class EditTag {
 public:
  static EditTag keep() { return EditTag(TagKind::kKeep, {}, TransformKind::kCaseCapital); }
  static EditTag del() { return EditTag(TagKind::kDelete, {}, TransformKind::kCaseCapital); }
  /// Throws MalformedTag for an empty or whitespace-bearing word.
  static EditTag append(std::string word);
  static EditTag replace(std::string word);
  static EditTag transform(TransformKind kind) { return EditTag(TagKind::kTransform, {}, kind); }

  TagKind kind() const noexcept { return kind_; }
  /// Word payload; empty unless kind is APPEND or REPLACE.
  const std::string& payload() const noexcept { return payload_; }
  /// Meaningful only when kind is TRANSFORM.
  TransformKind transform_kind() const noexcept { return transform_; }

  bool is_keep() const noexcept { return kind_ == TagKind::kKeep; }

  friend bool operator==(const EditTag& a, const EditTag& b) {
    if (a.kind_ != b.kind_) return false;
    if (a.kind_ == TagKind::kTransform) return a.transform_ == b.transform_;
    return a.payload_ == b.payload_;
  }

 private:
  EditTag(TagKind kind, std::string payload, TransformKind t)
      : kind_(kind), payload_(std::move(payload)), transform_(t) {}

  TagKind kind_;
  std::string payload_;
  TransformKind transform_;
};

/// Textual forms: $KEEP, $DELETE, $APPEND_w, $REPLACE_w, $TRANSFORM_NAME.
/// The payload starts after the first underscore following the operation
/// name, so payloads may contain underscores themselves.
EditTag parse_tag(std::string_view s);
std::string serialize_tag(const EditTag& tag);

}  // namespace tst
