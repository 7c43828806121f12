#include "tst/tagger/stat_tagger.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "tst/align/extract.hpp"
#include "tst/core/errors.hpp"
#include "tst/core/hash.hpp"

namespace tst {

namespace {

constexpr char kMagic[8] = {'T', 'S', 'T', 'S', 'T', 'A', 'T', '1'};
constexpr std::uint32_t kVersion = 1;
constexpr std::uint32_t kMaxHashBits = 28;

std::string lower_ascii(std::string s) {
  for (char& c : s) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return s;
}

// Byte offsets of code point starts, plus the end offset.
std::vector<std::size_t> code_point_offsets(const std::string& w) {
  std::vector<std::size_t> offs;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if ((static_cast<unsigned char>(w[i]) & 0xC0) != 0x80) offs.push_back(i);
  }
  offs.push_back(w.size());
  return offs;
}

template <typename T>
void put(std::ostream& out, T value) {
  static_assert(std::endian::native == std::endian::little, "model files are little-endian");
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T get(std::istream& in) {
  T value{};
  in.read(reinterpret_cast<char*>(&value), sizeof(T));
  if (!in) throw MalformedFile("truncated stat model");
  return value;
}

void put_floats(std::ostream& out, const std::vector<float>& v) {
  out.write(reinterpret_cast<const char*>(v.data()), static_cast<std::streamsize>(v.size() * sizeof(float)));
}

void get_floats(std::istream& in, std::vector<float>& v) {
  in.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(v.size() * sizeof(float)));
  if (!in) throw MalformedFile("truncated stat model");
}

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

constexpr double kProbFloor = 1e-12;

}  // namespace

StatTaggerModel::StatTaggerModel(std::size_t num_classes, std::uint32_t hash_bits, std::uint64_t seed,
                                 std::string vocab_sha256)
    : num_classes_(num_classes),
      hash_bits_(hash_bits),
      seed_(seed),
      vocab_sha256_(std::move(vocab_sha256)) {
  if (num_classes < 2) throw std::invalid_argument("stat model needs at least two classes");
  if (hash_bits == 0 || hash_bits > kMaxHashBits) throw std::invalid_argument("hash_bits must be in 1..28");
  detect_weights_.assign(std::size_t{1} << hash_bits, 0.0f);
  class_weights_.assign(std::size_t{1} << hash_bits, 0.0f);
  class_bias_.assign(num_classes, 0.0f);
}

std::size_t StatTaggerModel::detect_slot(std::uint64_t f) const noexcept {
  return static_cast<std::size_t>(mix64(f) & ((std::uint64_t{1} << hash_bits_) - 1));
}

std::size_t StatTaggerModel::class_slot(std::uint64_t f, std::size_t c) const noexcept {
  return static_cast<std::size_t>(hash_combine(f, c + 1) & ((std::uint64_t{1} << hash_bits_) - 1));
}

std::vector<std::uint64_t> StatTaggerModel::features(const TokenSeq& seq, std::size_t i) const {
  const std::string& w = seq[i].text;
  auto at = [&](std::ptrdiff_t k) -> std::string {
    const std::ptrdiff_t j = static_cast<std::ptrdiff_t>(i) + k;
    if (j < 0) return "<s>";
    if (j >= static_cast<std::ptrdiff_t>(seq.size())) return "</s>";
    return seq[static_cast<std::size_t>(j)].text;
  };

  std::vector<std::string> names;
  names.reserve(14);
  names.emplace_back("bias");
  names.push_back("w=" + w);
  names.push_back("lw=" + lower_ascii(w));
  names.push_back("w-2=" + at(-2));
  names.push_back("w-1=" + at(-1));
  names.push_back("w+1=" + at(1));
  names.push_back("w+2=" + at(2));
  const auto offs = code_point_offsets(w);
  const std::size_t cps = offs.size() - 1;
  for (std::size_t k = 1; k <= 3 && k <= cps; ++k) {
    names.push_back("p" + std::to_string(k) + "=" + w.substr(0, offs[k]));
    names.push_back("s" + std::to_string(k) + "=" + w.substr(offs[cps - k]));
  }
  names.emplace_back(seq[i].is_start ? "start=1" : "start=0");

  std::vector<std::uint64_t> hashes;
  hashes.reserve(names.size());
  for (const auto& n : names) hashes.push_back(fnv1a64(n, seed_));
  return hashes;
}

void StatTaggerModel::forward(const std::vector<std::uint64_t>& feats, double& detect,
                              std::vector<double>& probs) const {
  double z = detect_bias_;
  for (auto f : feats) z += detect_weights_[detect_slot(f)];
  detect = sigmoid(z);

  probs.resize(num_classes_);
  double max_score = -INFINITY;
  for (std::size_t c = 0; c < num_classes_; ++c) {
    double s = class_bias_[c];
    for (auto f : feats) s += class_weights_[class_slot(f, c)];
    probs[c] = s;
    max_score = std::max(max_score, s);
  }
  double total = 0.0;
  for (double& p : probs) {
    p = std::exp(p - max_score);
    total += p;
  }
  for (double& p : probs) p /= total;
}

TagPrediction StatTaggerModel::predict(const TokenSeq& seq) const {
  TagPrediction pred(seq.size(), num_classes_);
  std::vector<double> probs;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    double d = 0.0;
    forward(features(seq, i), d, probs);
    pred.detect(i) = d;
    std::copy(probs.begin(), probs.end(), pred.row(i).begin());
  }
  return pred;
}

double StatTaggerModel::loss(const TokenSeq& seq, const std::vector<TagId>& gold) const {
  double total = 0.0;
  std::vector<double> probs;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    double d = 0.0;
    forward(features(seq, i), d, probs);
    const bool edit = gold[i] != kKeepId;
    total += -std::log(std::max(probs[gold[i]], kProbFloor));
    total += -std::log(std::max(edit ? d : 1.0 - d, kProbFloor));
  }
  return total;
}

double StatTaggerModel::sgd_step(const TokenSeq& seq, const std::vector<TagId>& gold, double learning_rate) {
  const auto lr = static_cast<float>(learning_rate);
  double total = 0.0;
  std::vector<double> probs;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const auto feats = features(seq, i);
    double d = 0.0;
    forward(feats, d, probs);
    const bool edit = gold[i] != kKeepId;
    total += -std::log(std::max(probs[gold[i]], kProbFloor));
    total += -std::log(std::max(edit ? d : 1.0 - d, kProbFloor));

    const auto gd = static_cast<float>(d - (edit ? 1.0 : 0.0));
    detect_bias_ -= lr * gd;
    for (auto f : feats) detect_weights_[detect_slot(f)] -= lr * gd;

    for (std::size_t c = 0; c < num_classes_; ++c) {
      const auto g = static_cast<float>(probs[c] - (c == gold[i] ? 1.0 : 0.0));
      if (g == 0.0f) continue;
      class_bias_[c] -= lr * g;
      for (auto f : feats) class_weights_[class_slot(f, c)] -= lr * g;
    }
  }
  return total;
}

void StatTaggerModel::write(std::ostream& out) const {
  out.write(kMagic, sizeof(kMagic));
  put<std::uint32_t>(out, kVersion);
  put<std::uint32_t>(out, hash_bits_);
  put<std::uint64_t>(out, seed_);
  put<std::uint64_t>(out, num_classes_);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(vocab_sha256_.size()));
  out.write(vocab_sha256_.data(), static_cast<std::streamsize>(vocab_sha256_.size()));
  put<float>(out, detect_bias_);
  put_floats(out, detect_weights_);
  put_floats(out, class_bias_);
  put_floats(out, class_weights_);
}

StatTaggerModel StatTaggerModel::read(std::istream& in) {
  char magic[sizeof(kMagic)];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) throw MalformedFile("not a stat model file");
  const auto version = get<std::uint32_t>(in);
  if (version != kVersion) throw MalformedFile("unsupported stat model version " + std::to_string(version));
  const auto bits = get<std::uint32_t>(in);
  const auto seed = get<std::uint64_t>(in);
  const auto classes = get<std::uint64_t>(in);
  const auto sha_len = get<std::uint32_t>(in);
  if (bits == 0 || bits > kMaxHashBits || classes < 2 || sha_len > 256) {
    throw MalformedFile("corrupt stat model header");
  }
  std::string sha(sha_len, '\0');
  in.read(sha.data(), sha_len);
  if (!in) throw MalformedFile("truncated stat model");

  StatTaggerModel model(static_cast<std::size_t>(classes), bits, seed, std::move(sha));
  model.detect_bias_ = get<float>(in);
  get_floats(in, model.detect_weights_);
  get_floats(in, model.class_bias_);
  get_floats(in, model.class_weights_);
  return model;
}

void StatTaggerModel::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw MalformedFile("cannot write stat model '" + path.string() + "'");
  write(out);
}

StatTaggerModel StatTaggerModel::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedFile("cannot open stat model '" + path.string() + "'");
  return read(in);
}

StatTaggerModel stat_train(const std::vector<SentencePair>& corpus, const TagVocabulary& vocab,
                           const StatTrainOptions& options, StatTrainReport* report) {
  if (corpus.empty()) throw EmptyCorpus("stat tagger needs at least one sentence pair");
  if (options.epochs < 0) throw std::invalid_argument("epochs must be non-negative");

  std::vector<std::vector<TagId>> gold;
  gold.reserve(corpus.size());
  std::size_t num_tokens = 0;
  for (const auto& [src, tgt] : corpus) {
    std::vector<TagId> ids;
    ids.reserve(src.size());
    for (const auto& tag : extract_tags(src, tgt, &vocab)) ids.push_back(vocab.find(tag).value_or(kKeepId));
    num_tokens += ids.size();
    gold.push_back(std::move(ids));
  }

  StatTaggerModel model(vocab.size(), options.hash_bits, options.seed, vocab.sha256_hex());
  auto corpus_loss = [&] {
    double total = 0.0;
    for (std::size_t s = 0; s < corpus.size(); ++s) total += model.loss(corpus[s].first, gold[s]);
    return total / static_cast<double>(num_tokens);
  };
  if (report) report->epoch_loss = {corpus_loss()};

  std::vector<std::size_t> order(corpus.size());
  std::iota(order.begin(), order.end(), 0);
  for (int epoch = 0; epoch < options.epochs; ++epoch) {
    SplitMix64 rng(hash_combine(options.seed, static_cast<std::uint64_t>(epoch)));
    for (std::size_t k = order.size(); k > 1; --k) std::swap(order[k - 1], order[rng.below(k)]);
    for (std::size_t s : order) model.sgd_step(corpus[s].first, gold[s], options.learning_rate);
    if (report) report->epoch_loss.push_back(corpus_loss());
  }
  return model;
}

std::vector<TagPrediction> StatBackend::predict_batch(std::span<const TokenSeq> batch) const {
  std::vector<TagPrediction> out;
  out.reserve(batch.size());
  for (const auto& seq : batch) out.push_back(model_->predict(seq));
  return out;
}

}  // namespace tst
