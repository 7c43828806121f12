#include "tst/metrics/fkgl.hpp"

#include <cctype>

#include "tst/core/errors.hpp"
#include "tst/core/token.hpp"

namespace tst {

namespace {

bool is_vowel(char c) {
  switch (c) {
    case 'a':
    case 'e':
    case 'i':
    case 'o':
    case 'u':
    case 'y':
      return true;
    default:
      return false;
  }
}

}  // namespace

int syllables(std::string_view word) {
  std::string letters;
  for (char c : word) {
    if (std::isalpha(static_cast<unsigned char>(c))) letters += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  if (letters.empty()) return 1;

  int groups = 0;
  bool in_group = false;
  for (char c : letters) {
    const bool v = is_vowel(c);
    if (v && !in_group) ++groups;
    in_group = v;
  }

  const std::size_t n = letters.size();
  if (n >= 2 && letters[n - 1] == 'e' && !is_vowel(letters[n - 2])) {
    const bool consonant_le = n >= 3 && letters[n - 2] == 'l' && !is_vowel(letters[n - 3]);
    if (!consonant_le && groups > 1) --groups;
  }
  return groups < 1 ? 1 : groups;
}

void FkglAccumulator::add(std::string_view sentence) {
  ++sentences_;
  for (const auto& w : split_words(sentence)) {
    ++words_;
    syllables_ += static_cast<std::size_t>(syllables(w));
  }
}

double FkglAccumulator::value() const {
  if (sentences_ == 0) throw EmptyCorpus("no sentences");
  if (words_ == 0) throw NoWords("corpus has no words");
  const double w = static_cast<double>(words_);
  return 0.39 * (w / static_cast<double>(sentences_)) + 11.8 * (static_cast<double>(syllables_) / w) - 15.59;
}

double fkgl(std::span<const std::string> sentences) {
  FkglAccumulator acc;
  for (const auto& s : sentences) acc.add(s);
  return acc.value();
}

}  // namespace tst
