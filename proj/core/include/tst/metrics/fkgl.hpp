#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

namespace tst {

/// Vowel-group syllable estimate. Counts maximal runs of a,e,i,o,u,y, drops a
/// final silent e (but not in consonant + "le"), never returns less than 1.
/// Tokens without ASCII letters count as one syllable.
int syllables(std::string_view word);

/// Streaming Flesch-Kincaid grade level:
///   0.39 * words/sentences + 11.8 * syllables/words - 15.59
class FkglAccumulator {
 public:
  void add(std::string_view sentence);
  std::size_t sentences() const noexcept { return sentences_; }
  std::size_t words() const noexcept { return words_; }
  std::size_t syllable_count() const noexcept { return syllables_; }
  /// Throws EmptyCorpus with no sentences, NoWords with no words.
  double value() const;

 private:
  std::size_t sentences_ = 0;
  std::size_t words_ = 0;
  std::size_t syllables_ = 0;
};

double fkgl(std::span<const std::string> sentences);

}  // namespace tst
