#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tst/core/edit_tag.hpp"

namespace tst {

using TagId = std::uint32_t;

inline constexpr TagId kKeepId = 0;
inline constexpr TagId kDeleteId = 1;

/// Frequency map keyed by serialized tag. std::map keeps iteration order
/// stable, so merging shard counts is associative and deterministic.
using TagCounts = std::map<std::string, std::uint64_t>;

/// Closed, ordered set of edit tags with stable integer ids.
///
/// Id 0 is $KEEP and id 1 is $DELETE; the rest follow descending corpus
/// frequency with ties broken by the serialized form. The on-disk form is one
/// serialized tag per line, line number = id.
class TagVocabulary {
 public:
  /// KEEP and DELETE only.
  TagVocabulary();

  /// Throws std::invalid_argument if capacity < 2; MalformedTag for a bad key.
  static TagVocabulary from_counts(const TagCounts& counts, std::size_t capacity);

  /// Throws MalformedFile for duplicates or a missing KEEP/DELETE header.
  static TagVocabulary read(std::istream& in);
  static TagVocabulary load(const std::filesystem::path& path);

  void write(std::ostream& out) const;
  void save(const std::filesystem::path& path) const;

  /// Exact bytes of write(); hashed for the external-tagger handshake.
  std::string serialized() const;
  std::string sha256_hex() const;

  std::size_t size() const noexcept { return tags_.size(); }
  const EditTag& tag(TagId id) const { return tags_.at(id); }
  const std::string& tag_text(TagId id) const { return texts_.at(id); }
  std::optional<TagId> find(const EditTag& tag) const;
  std::optional<TagId> find(const std::string& serialized) const;
  bool contains(const EditTag& tag) const { return find(tag).has_value(); }

  const std::vector<EditTag>& tags() const noexcept { return tags_; }

  friend bool operator==(const TagVocabulary& a, const TagVocabulary& b) {
    return a.texts_ == b.texts_;
  }

 private:
  void push(EditTag tag, std::string text);

  std::vector<EditTag> tags_;
  std::vector<std::string> texts_;
  std::unordered_map<std::string, TagId> index_;
};

/// Number of serialized tags present in both vocabularies.
std::size_t vocabulary_overlap(const TagVocabulary& a, const TagVocabulary& b);

std::string sha256_hex(const std::string& bytes);

}  // namespace tst
