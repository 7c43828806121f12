#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <sstream>

#include "support/synthetic.hpp"
#include "tst/align/align.hpp"
#include "tst/align/brackets.hpp"
#include "tst/align/corpus.hpp"
#include "tst/align/extract.hpp"
#include "tst/apply/apply.hpp"
#include "tst/core/hash.hpp"

namespace tst {
namespace {

TokenSeq words(std::string_view text) { return tokenize(text); }

PairSource from_vector(const std::vector<SentencePair>& pairs) {
  auto pos = std::make_shared<std::size_t>(0);
  return [&pairs, pos](SentencePair& out) {
    if (*pos >= pairs.size()) return false;
    out = pairs[(*pos)++];
    return true;
  };
}

// Plain recursive edit distance, memoized.
std::size_t edit_distance(const std::vector<std::string>& a, const std::vector<std::string>& b, std::size_t i,
                          std::size_t j, std::map<std::pair<std::size_t, std::size_t>, std::size_t>& memo) {
  if (i == a.size()) return b.size() - j;
  if (j == b.size()) return a.size() - i;
  auto key = std::make_pair(i, j);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::size_t best = edit_distance(a, b, i + 1, j + 1, memo) + (a[i] == b[j] ? 0 : 1);
  best = std::min(best, edit_distance(a, b, i + 1, j, memo) + 1);
  best = std::min(best, edit_distance(a, b, i, j + 1, memo) + 1);
  memo[key] = best;
  return best;
}

TEST(Align, Examples) {
  const auto same = align(words("a b"), words("a b"));
  EXPECT_EQ(same, (std::vector<AlignOp>{{AlignKind::kEqual, 0, 0}, {AlignKind::kEqual, 1, 1}}));

  const auto del = align(words("a b c"), words("a c"));
  EXPECT_EQ(del, (std::vector<AlignOp>{
                     {AlignKind::kEqual, 0, 0}, {AlignKind::kDelete, 1, std::nullopt}, {AlignKind::kEqual, 2, 1}}));

  const auto sub = align(words("completed two collections"), words("wrote two books"));
  EXPECT_EQ(sub, (std::vector<AlignOp>{
                     {AlignKind::kSubstitute, 0, 0}, {AlignKind::kEqual, 1, 1}, {AlignKind::kSubstitute, 2, 2}}));
}

TEST(Align, EmptySides) {
  EXPECT_TRUE(align(words(""), words("")).empty());
  const auto ins = align(words(""), words("x y"));
  ASSERT_EQ(ins.size(), 2u);
  EXPECT_EQ(longest_insert_run(ins), 2u);
  EXPECT_EQ(alignment_cost(align(words("x y"), words(""))), 2u);
}

TEST(Align, CostMatchesReferenceDistance) {
  SplitMix64 rng(7);
  const std::vector<std::string> alphabet = {"a", "b", "c"};
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<std::string> a(rng.below(13)), b(rng.below(13));
    for (auto& w : a) w = alphabet[rng.below(3)];
    for (auto& w : b) w = alphabet[rng.below(3)];
    const auto ops = align(TokenSeq(a), TokenSeq(b));
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> memo;
    ASSERT_EQ(alignment_cost(ops), edit_distance(a, b, 0, 0, memo));

    // The script must walk both sides in order and reproduce the target.
    std::vector<std::string> rebuilt;
    std::size_t next_src = 0;
    for (const auto& op : ops) {
      if (op.src) {
        ASSERT_EQ(*op.src, next_src++);
      }
      if (op.kind == AlignKind::kEqual) {
        ASSERT_EQ(a[*op.src], b[*op.tgt]);
      }
      if (op.tgt) rebuilt.push_back(b[*op.tgt]);
    }
    ASSERT_EQ(next_src, a.size());
    ASSERT_EQ(rebuilt, b);
  }
}

TEST(Extract, IdenticalIsAllKeep) {
  const TokenSeq s = words("the cat sat");
  const TagSeq tags = extract_tags(s, s);
  ASSERT_EQ(tags.size(), s.size());
  EXPECT_TRUE(all_keep(tags));
}

TEST(Extract, InsertRunIsDeferred) {
  const TokenSeq src = words("a");
  const TokenSeq tgt = words("x y a");
  const TagSeq tags = extract_tags(src, tgt);
  EXPECT_EQ(tags, (TagSeq{EditTag::append("x"), EditTag::keep()}));
  const TokenSeq once = apply_tags(src, tags);
  EXPECT_EQ(once, words("x a"));
  EXPECT_EQ(testing::rounds_to_target(src, tgt, 5), 2);
}

TEST(Extract, DeletesAdverb) {
  const TagSeq tags = extract_tags(words("is theoretically possible"), words("is possible"));
  EXPECT_EQ(tags, (TagSeq{EditTag::keep(), EditTag::keep(), EditTag::del(), EditTag::keep()}));
}

TEST(Extract, SubstitutionBecomesReplaceOrTransform) {
  EXPECT_EQ(extract_tags(words("completed two"), words("wrote two"))[1], EditTag::replace("wrote"));
  EXPECT_EQ(extract_tags(words("He also"), words("he also"))[1], EditTag::transform(TransformKind::kCaseLower));
}

TEST(Extract, VocabularyFallsBackToKeep) {
  const auto vocab = TagVocabulary::from_counts({}, 10);
  const TagSeq tags = extract_tags(words("completed two x"), words("wrote two"), &vocab);
  EXPECT_EQ(tags, (TagSeq{EditTag::keep(), EditTag::keep(), EditTag::keep(), EditTag::del()}));
}

TEST(BuildVocab, Examples) {
  const std::vector<SentencePair> identical = {{words("a b"), words("a b")}, {words("c"), words("c")}};
  EXPECT_EQ(build_vocab(from_vector(identical), 5000), TagVocabulary::from_counts({}, 5000));

  TagCounts counts;
  count_tags(words("a b"), words("a"), counts);
  EXPECT_EQ(counts.at("$DELETE"), 1u);
  const std::vector<SentencePair> one = {{words("a b"), words("a")}};
  const auto v = build_vocab(from_vector(one), 5000);
  EXPECT_EQ(v.size(), 2u);
  EXPECT_TRUE(v.contains(EditTag::del()));
}

TEST(BuildVocab, ExamplePairs) {
  const auto pairs = testing::example_pairs();
  ASSERT_EQ(pairs.size(), 5u);
  const auto v = build_vocab(from_vector(pairs), 5000);
  EXPECT_TRUE(v.contains(EditTag::replace("wrote")));
  // The backtrace aligns "called" as an insertion next to the deleted
  // "entitled", so it arrives as an append rather than a replacement.
  EXPECT_TRUE(v.contains(EditTag::append("called")) || v.contains(EditTag::replace("called")));
}

TEST(BuildVocab, FullChainCoversLaterRounds) {
  const std::vector<SentencePair> pairs = {{words("a"), words("x y a")}};
  const auto first = build_vocab(from_vector(pairs), 5000);
  const auto full = build_vocab(from_vector(pairs), 5000, VerbLexicon::builtin(), TagCoverage::kFullChain);
  EXPECT_TRUE(first.contains(EditTag::append("x")));
  EXPECT_FALSE(first.contains(EditTag::append("y")));
  EXPECT_TRUE(full.contains(EditTag::append("y")));
}

TEST(Convergence, WithinInsertRunBound) {
  auto pairs = testing::synthetic_pairs(300, 11);
  for (const auto& p : testing::example_pairs()) pairs.push_back(p);
  for (const auto& [src, tgt] : pairs) {
    const int bound = static_cast<int>(std::max<std::size_t>(1, longest_insert_run(align(src, tgt))));
    const int rounds = testing::rounds_to_target(src, tgt, bound);
    ASSERT_GE(rounds, 0) << detokenize(src) << " => " << detokenize(tgt);
  }
}

TEST(Brackets, Examples) {
  EXPECT_EQ(filter_brackets(words("a -LRB- b -RRB- c")), words("a c"));
  EXPECT_EQ(filter_brackets(words("a -LRB- b -LRB- c -RRB- d -RRB- e")), words("a e"));
  EXPECT_EQ(filter_brackets(words("a -RRB- b")), words("a b"));
  EXPECT_EQ(filter_brackets(words("")), words(""));
}

TEST(Brackets, MatchesReferenceFilter) {
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    const auto noisy = testing::bracket_noised_words(seed);
    const TokenSeq out = filter_brackets(TokenSeq(noisy));
    ASSERT_EQ(out.words(), testing::bracket_oracle(noisy)) << seed;
  }
}

TEST(Corpus, ReaderSkipsMalformedLines) {
  std::istringstream in("a b\ta\n\nonly one field\nx\ty\tz\nc\td\n");
  ParallelCorpusReader reader(in);
  std::vector<SentencePair> got;
  SentencePair p;
  while (reader.next(p)) got.push_back(p);
  ASSERT_EQ(got.size(), 2u);
  EXPECT_EQ(got[0].second, words("a"));
  EXPECT_EQ(got[1].first, words("c"));
  EXPECT_GE(reader.skipped(), 2u);
}

}  // namespace
}  // namespace tst
