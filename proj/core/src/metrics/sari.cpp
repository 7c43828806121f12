#include "tst/metrics/sari.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "tst/core/errors.hpp"
#include "tst/core/hash.hpp"
#include "tst/core/token.hpp"

namespace tst {

namespace {

// Words are interned per record, so an n-gram is a short array of ids.
using Ngram = std::array<std::uint32_t, kSariMaxOrder>;

struct NgramHash {
  std::size_t operator()(const Ngram& g) const noexcept {
    std::uint64_t h = 0;
    for (auto id : g) h = hash_combine(h, id);
    return static_cast<std::size_t>(h);
  }
};

using NgramCounts = std::unordered_map<Ngram, long long, NgramHash>;

class Interner {
 public:
  std::vector<std::uint32_t> ids(const std::vector<std::string>& words) {
    std::vector<std::uint32_t> out;
    out.reserve(words.size());
    for (const auto& w : words) {
      const auto next = static_cast<std::uint32_t>(table_.size() + 1);
      out.push_back(table_.try_emplace(w, next).first->second);
    }
    return out;
  }

 private:
  std::unordered_map<std::string_view, std::uint32_t> table_;
};

NgramCounts count_ngrams(const std::vector<std::uint32_t>& words, std::size_t n) {
  NgramCounts out;
  if (words.size() < n) return out;
  out.reserve(words.size());
  for (std::size_t i = 0; i + n <= words.size(); ++i) {
    Ngram g{};
    std::copy_n(words.begin() + static_cast<std::ptrdiff_t>(i), n, g.begin());
    ++out[g];
  }
  return out;
}

long long lookup(const NgramCounts& m, const Ngram& g) {
  auto it = m.find(g);
  return it == m.end() ? 0 : it->second;
}

}  // namespace

OperationScore SariAccumulator::score(const Counts& c) {
  OperationScore s;
  if (c.candidates > 0.0) {
    s.precision = c.correct / c.candidates;
  } else {
    s.precision = c.targets > 0.0 ? 0.0 : 1.0;
  }
  if (c.targets > 0.0) {
    s.recall = c.correct / c.targets;
  } else {
    s.recall = c.candidates > 0.0 ? 0.0 : 1.0;
  }
  if (s.precision > 0.0 || s.recall > 0.0) s.f1 = 2.0 * s.precision * s.recall / (s.precision + s.recall);
  return s;
}

void SariAccumulator::add(const EvalRecord& record) {
  if (record.references.empty()) throw std::invalid_argument("evaluation record has no references");
  const auto src_words = split_words(record.source);
  const auto sys_words = split_words(record.system);
  std::vector<std::vector<std::string>> ref_words;
  ref_words.reserve(record.references.size());
  for (const auto& r : record.references) ref_words.push_back(split_words(r));

  Interner interner;
  const auto src = interner.ids(src_words);
  const auto sys = interner.ids(sys_words);
  std::vector<std::vector<std::uint32_t>> ref_ids;
  ref_ids.reserve(ref_words.size());
  for (const auto& rw : ref_words) ref_ids.push_back(interner.ids(rw));
  const long long k = static_cast<long long>(record.references.size());
  const double kd = static_cast<double>(k);

  for (std::size_t n = 1; n <= kSariMaxOrder; ++n) {
    const NgramCounts in = count_ngrams(src, n);
    const NgramCounts out = count_ngrams(sys, n);
    NgramCounts refs;  // summed over references, i.e. k times the fractional count
    for (const auto& ids : ref_ids) {
      for (const auto& [g, c] : count_ngrams(ids, n)) refs[g] += c;
    }

    OrderCounts& oc = counts_[n - 1];

    // add: set semantics
    std::unordered_set<Ngram, NgramHash> add_targets;
    for (const auto& [g, c] : refs) {
      if (lookup(in, g) == 0) add_targets.insert(g);
    }
    for (const auto& [g, c] : out) {
      if (lookup(in, g) != 0) continue;
      oc.add.candidates += 1.0;
      if (add_targets.contains(g)) oc.add.correct += 1.0;
    }
    oc.add.targets += static_cast<double>(add_targets.size());

    // keep and delete range over source n-grams only; everything is scaled by k
    long long keep_cand = 0, keep_tgt = 0, keep_ok = 0;
    long long del_cand = 0, del_tgt = 0, del_ok = 0;
    for (const auto& [g, ci] : in) {
      const long long i_k = k * ci;
      const long long o_k = k * lookup(out, g);
      const long long r_k = lookup(refs, g);
      const long long kc = std::min(i_k, o_k);
      const long long kt = std::min(i_k, r_k);
      keep_cand += kc;
      keep_tgt += kt;
      keep_ok += std::min(kc, kt);
      const long long dc = std::max<long long>(i_k - o_k, 0);
      const long long dt = std::max<long long>(i_k - r_k, 0);
      del_cand += dc;
      del_tgt += dt;
      del_ok += std::min(dc, dt);
    }
    oc.keep.candidates += static_cast<double>(keep_cand) / kd;
    oc.keep.targets += static_cast<double>(keep_tgt) / kd;
    oc.keep.correct += static_cast<double>(keep_ok) / kd;
    oc.del.candidates += static_cast<double>(del_cand) / kd;
    oc.del.targets += static_cast<double>(del_tgt) / kd;
    oc.del.correct += static_cast<double>(del_ok) / kd;
  }
  ++records_;
}

SariReport SariAccumulator::report() const {
  if (records_ == 0) throw EmptyCorpus("no records to score");
  SariReport r;
  double add = 0.0, keep = 0.0, del = 0.0;
  for (std::size_t n = 0; n < kSariMaxOrder; ++n) {
    NgramScores& s = r.per_order[n];
    s.add = score(counts_[n].add);
    s.keep = score(counts_[n].keep);
    s.del = score(counts_[n].del);
    add += s.add.f1;
    keep += s.keep.f1;
    del += s.del.f1;
  }
  const double orders = static_cast<double>(kSariMaxOrder);
  r.add_f1 = 100.0 * add / orders;
  r.keep_f1 = 100.0 * keep / orders;
  r.del_f1 = 100.0 * del / orders;
  r.sari = (r.add_f1 + r.keep_f1 + r.del_f1) / 3.0;
  return r;
}

SariReport sari(std::span<const EvalRecord> records) {
  SariAccumulator acc;
  for (const auto& r : records) acc.add(r);
  return acc.report();
}

}  // namespace tst
