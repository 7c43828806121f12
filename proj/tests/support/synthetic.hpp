#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tst/align/corpus.hpp"
#include "tst/tagger/prediction.hpp"

namespace tst::testing {

/// Random (source, target) pairs with unique sources. Targets come from
/// deletions, replacements, case/plural/verb-form changes and insertion runs
/// of up to `max_insert_run` words.
std::vector<SentencePair> synthetic_pairs(std::size_t count, std::uint64_t seed, int max_insert_run = 3);

/// The five example sentence pairs shipped as a test fixture.
std::vector<SentencePair> example_pairs();

/// Path inside tests/fixtures.
std::string fixture_path(const std::string& name);

/// Random sentence over words plus -LRB-/-RRB- tokens sprinkled in, matched
/// or not.
std::vector<std::string> bracket_noised_words(std::uint64_t seed);

/// Reference bracket filter: repeatedly delete an innermost -LRB- ... -RRB-
/// pair; then drop stray -RRB- tokens and cut at the first stray -LRB-.
std::vector<std::string> bracket_oracle(std::vector<std::string> words);

/// Number of extract/apply rounds that turn `src` into `tgt` with an
/// unrestricted vocabulary, or -1 when `limit` rounds are not enough.
int rounds_to_target(const TokenSeq& src, const TokenSeq& tgt, int limit);

/// Random prediction with `tokens` rows over `classes` classes.
TagPrediction random_prediction(std::size_t tokens, std::size_t classes, std::uint64_t seed);

}  // namespace tst::testing
