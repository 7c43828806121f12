#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tst/core/edit_tag.hpp"
#include "tst/core/token.hpp"

namespace tst {

/// Verb-form table backing the VERB_* transforms. Lines are
/// `base<TAB>form_tag<TAB>inflected` with form_tag one of VBZ or VBD.
class VerbLexicon {
 public:
  VerbLexicon() = default;

  /// Throws MalformedFile on a line that does not have three fields or an
  /// unknown form tag.
  static VerbLexicon read(std::istream& in);
  static VerbLexicon load(const std::filesystem::path& path);

  /// A few hundred common English verbs compiled into the library.
  static const VerbLexicon& builtin();

  void add(const std::string& base, const std::string& form_tag, const std::string& inflected);

  std::optional<std::string> inflect(const std::string& base, const std::string& form_tag) const;
  std::optional<std::string> base_of(const std::string& inflected, const std::string& form_tag) const;

  std::size_t size() const noexcept { return forward_.size(); }

 private:
  // Keys are "<form_tag>\t<word>"; first entry wins on duplicates.
  std::unordered_map<std::string, std::string> forward_;
  std::unordered_map<std::string, std::string> backward_;
};

/// Applies a transform to a single token. Returns the token unchanged when
/// the transform does not apply. MERGE_* kinds need the following token and
/// are resolved by apply_tags; on their own they return the token as is.
/// Case transforms only touch ASCII letters.
std::vector<std::string> apply_transform(TransformKind kind, const std::string& word,
                                         const VerbLexicon& lexicon = VerbLexicon::builtin());

/// First transform (in enum order) that turns `src` into exactly `tgt`.
std::optional<TransformKind> recognize_transform(const std::string& src, const std::string& tgt,
                                                 const VerbLexicon& lexicon = VerbLexicon::builtin());

}  // namespace tst
