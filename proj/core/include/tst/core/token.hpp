#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tst {

inline constexpr std::string_view kStartText = "$START";

struct Token {
  std::string text;
  bool is_start = false;

  friend bool operator==(const Token&, const Token&) = default;
};

/// A word-level sentence. Position 0 always holds the START sentinel, which
/// lets an append land before the first word; the empty sentence is the
/// sentinel alone.
class TokenSeq {
 public:
  TokenSeq();

  /// Throws std::invalid_argument if a word is empty or contains whitespace.
  explicit TokenSeq(const std::vector<std::string>& words);

  std::size_t size() const noexcept { return tokens_.size(); }
  std::size_t num_words() const noexcept { return tokens_.size() - 1; }
  bool empty_sentence() const noexcept { return tokens_.size() == 1; }

  const Token& operator[](std::size_t i) const { return tokens_[i]; }
  auto begin() const noexcept { return tokens_.begin(); }
  auto end() const noexcept { return tokens_.end(); }

  /// Non-sentinel token texts, in order.
  std::vector<std::string> words() const;

  friend bool operator==(const TokenSeq&, const TokenSeq&) = default;

 private:
  std::vector<Token> tokens_;
};

/// True for the Unicode White_Space code points, given as UTF-8 at `pos`.
/// Writes the encoded length into `len` when it returns true.
bool is_unicode_space(std::string_view text, std::size_t pos, std::size_t& len);

bool contains_whitespace(std::string_view word);

/// Splits on runs of Unicode whitespace and prepends the sentinel.
TokenSeq tokenize(std::string_view text);

/// Plain word split without the sentinel; shared by the metrics.
std::vector<std::string> split_words(std::string_view text);

/// Joins the non-sentinel tokens with single spaces.
std::string detokenize(const TokenSeq& seq);

}  // namespace tst
