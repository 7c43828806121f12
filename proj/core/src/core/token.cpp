#include "tst/core/token.hpp"

#include <stdexcept>

namespace tst {

TokenSeq::TokenSeq() { tokens_.push_back(Token{std::string(kStartText), true}); }

TokenSeq::TokenSeq(const std::vector<std::string>& words) : TokenSeq() {
  tokens_.reserve(words.size() + 1);
  for (const auto& w : words) {
    if (w.empty()) throw std::invalid_argument("empty token");
    if (contains_whitespace(w)) throw std::invalid_argument("token contains whitespace: '" + w + "'");
    tokens_.push_back(Token{w, false});
  }
}

std::vector<std::string> TokenSeq::words() const {
  std::vector<std::string> out;
  out.reserve(tokens_.size() - 1);
  for (std::size_t i = 1; i < tokens_.size(); ++i) out.push_back(tokens_[i].text);
  return out;
}

bool is_unicode_space(std::string_view s, std::size_t pos, std::size_t& len) {
  const auto b0 = static_cast<unsigned char>(s[pos]);
  if (b0 < 0x80) {
    len = 1;
    return b0 == ' ' || (b0 >= 0x09 && b0 <= 0x0D);
  }
  auto at = [&](std::size_t k) -> unsigned {
    return pos + k < s.size() ? static_cast<unsigned char>(s[pos + k]) : 0u;
  };
  if (b0 == 0xC2) {
    // U+0085 NEL, U+00A0 NBSP
    len = 2;
    return at(1) == 0x85 || at(1) == 0xA0;
  }
  if (b0 == 0xE1) {
    // U+1680 OGHAM SPACE MARK
    len = 3;
    return at(1) == 0x9A && at(2) == 0x80;
  }
  if (b0 == 0xE2) {
    len = 3;
    const unsigned b1 = at(1), b2 = at(2);
    if (b1 == 0x80) {
      // U+2000..U+200A, U+2028, U+2029, U+202F
      return (b2 >= 0x80 && b2 <= 0x8A) || b2 == 0xA8 || b2 == 0xA9 || b2 == 0xAF;
    }
    // U+205F
    return b1 == 0x81 && b2 == 0x9F;
  }
  if (b0 == 0xE3) {
    // U+3000 IDEOGRAPHIC SPACE
    len = 3;
    return at(1) == 0x80 && at(2) == 0x80;
  }
  return false;
}

bool contains_whitespace(std::string_view word) {
  std::size_t len = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (is_unicode_space(word, i, len)) return true;
  }
  return false;
}

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::size_t start = 0;
  std::size_t i = 0;
  std::size_t len = 0;
  while (i < text.size()) {
    if (is_unicode_space(text, i, len)) {
      if (i > start) words.emplace_back(text.substr(start, i - start));
      i += len;
      start = i;
    } else {
      ++i;
    }
  }
  if (start < text.size()) words.emplace_back(text.substr(start));
  return words;
}

TokenSeq tokenize(std::string_view text) { return TokenSeq(split_words(text)); }

std::string detokenize(const TokenSeq& seq) {
  std::string out;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (i > 1) out.push_back(' ');
    out += seq[i].text;
  }
  return out;
}

}  // namespace tst
