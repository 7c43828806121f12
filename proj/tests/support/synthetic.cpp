#include "synthetic.hpp"

#include <cctype>
#include <set>

#include "tst/align/brackets.hpp"
#include "tst/align/extract.hpp"
#include "tst/apply/apply.hpp"
#include "tst/core/hash.hpp"

#ifndef TST_FIXTURE_DIR
#error "TST_FIXTURE_DIR must be defined"
#endif

namespace tst::testing {

namespace {

const std::vector<std::string> kNouns = {
    "river", "city", "book", "garden", "teacher", "window", "market", "story", "child", "bridge",
    "letter", "forest", "island", "song", "painter", "village", "road", "school", "engine", "castle"};
const std::vector<std::string> kVerbs = {"make", "take", "write", "give", "find", "see", "come", "know", "call", "play"};
const std::vector<std::string> kOther = {
    "the", "a", "of", "in", "and", "to", "was", "is", "very", "old", "small", "green", "quickly", "later",
    "near", "with", "from", "many", "some", "often", "north", "famous", "quiet", "large", "early", "also",
    "then", "however", "which", "during", ",", ".", "well-known", "long-term"};

const std::string& pick(const std::vector<std::string>& v, SplitMix64& rng) { return v[rng.below(v.size())]; }

std::string any_word(SplitMix64& rng) {
  const auto r = rng.below(10);
  if (r < 3) return pick(kNouns, rng);
  if (r < 5) return pick(kVerbs, rng);
  return pick(kOther, rng);
}

// A word edit that a transform tag can express, or empty when none applies.
std::string transformed(const std::string& w, SplitMix64& rng) {
  for (int attempt = 0; attempt < 3; ++attempt) {
    switch (rng.below(4)) {
      case 0:
        if (std::islower(static_cast<unsigned char>(w[0]))) {
          std::string c = w;
          c[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(c[0])));
          return c;
        }
        break;
      case 1:
        for (const auto& n : kNouns) {
          if (n == w) return n == "child" ? std::string() : (n.back() == 'y' ? n.substr(0, n.size() - 1) + "ies" : n + "s");
        }
        break;
      case 2:
        for (const auto& v : kVerbs) {
          if (v == w) return v + "s";
        }
        break;
      default:
        if (w.size() > 1) {
          std::string u = w;
          for (auto& ch : u) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
          if (u != w) return u;
        }
        break;
    }
  }
  return {};
}

}  // namespace

std::vector<SentencePair> synthetic_pairs(std::size_t count, std::uint64_t seed, int max_insert_run) {
  SplitMix64 rng(seed);
  std::vector<SentencePair> out;
  std::set<std::vector<std::string>> seen;
  while (out.size() < count) {
    const std::size_t len = 4 + rng.below(14);
    std::vector<std::string> src;
    for (std::size_t i = 0; i < len; ++i) src.push_back(any_word(rng));
    if (!seen.insert(src).second) continue;

    std::vector<std::string> tgt;
    auto insert_run = [&] {
      const int run = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_insert_run)));
      for (int k = 0; k < run; ++k) tgt.push_back(any_word(rng));
    };
    if (rng.unit() < 0.05) insert_run();
    bool just_inserted = false;
    for (const auto& w : src) {
      const double r = rng.unit();
      if (r < 0.07) {
        // deleted
      } else if (r < 0.13) {
        std::string other = any_word(rng);
        tgt.push_back(other == w ? w + "s" : other);
      } else if (r < 0.19) {
        const std::string t = transformed(w, rng);
        tgt.push_back(t.empty() ? w : t);
      } else {
        tgt.push_back(w);
      }
      // Keep insertion runs apart so no two merge into one longer run.
      if (!just_inserted && rng.unit() < 0.07) {
        insert_run();
        just_inserted = true;
      } else {
        just_inserted = false;
      }
    }
    out.emplace_back(TokenSeq(src), TokenSeq(tgt));
  }
  return out;
}

std::string fixture_path(const std::string& name) { return std::string(TST_FIXTURE_DIR) + "/" + name; }

std::vector<SentencePair> example_pairs() { return read_parallel_corpus(fixture_path("example_pairs.tsv")).pairs; }

std::vector<std::string> bracket_noised_words(std::uint64_t seed) {
  SplitMix64 rng(seed);
  const std::size_t len = rng.below(25);
  std::vector<std::string> words;
  for (std::size_t i = 0; i < len; ++i) {
    const double r = rng.unit();
    if (r < 0.15) {
      words.emplace_back(kLeftBracket);
    } else if (r < 0.30) {
      words.emplace_back(kRightBracket);
    } else {
      words.push_back(any_word(rng));
    }
  }
  return words;
}

std::vector<std::string> bracket_oracle(std::vector<std::string> words) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::size_t open = words.size();
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (words[i] == kLeftBracket) {
        open = i;
      } else if (words[i] == kRightBracket && open < words.size()) {
        words.erase(words.begin() + static_cast<std::ptrdiff_t>(open), words.begin() + static_cast<std::ptrdiff_t>(i + 1));
        changed = true;
        break;
      }
    }
  }
  std::vector<std::string> out;
  for (const auto& w : words) {
    if (w == kLeftBracket) break;
    if (w != kRightBracket) out.push_back(w);
  }
  return out;
}

int rounds_to_target(const TokenSeq& src, const TokenSeq& tgt, int limit) {
  TokenSeq state = src;
  for (int round = 0; round <= limit; ++round) {
    if (state == tgt) return round;
    state = apply_tags(state, extract_tags(state, tgt));
  }
  return -1;
}

TagPrediction random_prediction(std::size_t tokens, std::size_t classes, std::uint64_t seed) {
  SplitMix64 rng(seed);
  TagPrediction p(tokens, classes);
  for (std::size_t i = 0; i < tokens; ++i) {
    p.detect(i) = rng.unit();
    auto row = p.row(i);
    double sum = 0.0;
    for (double& v : row) {
      v = rng.unit() + 1e-12;
      sum += v;
    }
    for (double& v : row) v /= sum;
  }
  return p;
}

}  // namespace tst::testing
