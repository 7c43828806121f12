#include "tst/core/vocabulary.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "tst/core/errors.hpp"

namespace tst {

TagVocabulary::TagVocabulary() {
  push(EditTag::keep(), "$KEEP");
  push(EditTag::del(), "$DELETE");
}

void TagVocabulary::push(EditTag tag, std::string text) {
  index_.emplace(text, static_cast<TagId>(tags_.size()));
  tags_.push_back(std::move(tag));
  texts_.push_back(std::move(text));
}

TagVocabulary TagVocabulary::from_counts(const TagCounts& counts, std::size_t capacity) {
  if (capacity < 2) throw std::invalid_argument("vocabulary capacity must be at least 2");

  std::vector<std::pair<std::string, std::uint64_t>> ranked;
  ranked.reserve(counts.size());
  for (const auto& [text, n] : counts) {
    if (text == "$KEEP" || text == "$DELETE") continue;
    // Canonicalize so an odd key cannot alias a well-formed one.
    ranked.emplace_back(serialize_tag(parse_tag(text)), n);
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });

  TagVocabulary vocab;
  for (const auto& [text, n] : ranked) {
    if (vocab.size() >= capacity) break;
    if (vocab.index_.contains(text)) continue;
    vocab.push(parse_tag(text), text);
  }
  return vocab;
}

TagVocabulary TagVocabulary::read(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    lines.push_back(line);
  }
  if (lines.size() < 2 || lines[0] != "$KEEP" || lines[1] != "$DELETE") {
    throw MalformedFile("vocabulary must start with $KEEP and $DELETE");
  }
  TagVocabulary vocab;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    std::optional<EditTag> parsed;
    try {
      parsed = parse_tag(lines[i]);
    } catch (const MalformedTag& e) {
      throw MalformedFile("line " + std::to_string(i + 1) + ": " + e.what());
    }
    EditTag tag = std::move(*parsed);
    std::string text = serialize_tag(tag);
    if (text != lines[i]) throw MalformedFile("non-canonical tag on line " + std::to_string(i + 1));
    if (vocab.index_.contains(text)) {
      throw MalformedFile("duplicate tag '" + text + "' on line " + std::to_string(i + 1));
    }
    vocab.push(std::move(tag), std::move(text));
  }
  return vocab;
}

TagVocabulary TagVocabulary::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedFile("cannot open vocabulary '" + path.string() + "'");
  return read(in);
}

void TagVocabulary::write(std::ostream& out) const { out << serialized(); }

void TagVocabulary::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw MalformedFile("cannot write vocabulary '" + path.string() + "'");
  write(out);
}

std::string TagVocabulary::serialized() const {
  std::string out;
  for (const auto& t : texts_) {
    out += t;
    out.push_back('\n');
  }
  return out;
}

std::string TagVocabulary::sha256_hex() const { return tst::sha256_hex(serialized()); }

std::optional<TagId> TagVocabulary::find(const EditTag& tag) const {
  return find(serialize_tag(tag));
}

std::optional<TagId> TagVocabulary::find(const std::string& serialized) const {
  auto it = index_.find(serialized);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t vocabulary_overlap(const TagVocabulary& a, const TagVocabulary& b) {
  std::size_t shared = 0;
  for (TagId id = 0; id < a.size(); ++id) {
    if (b.find(a.tag_text(id))) ++shared;
  }
  return shared;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    hex.push_back(kHex[digest[i] >> 4]);
    hex.push_back(kHex[digest[i] & 0xF]);
  }
  return hex;
}

}  // namespace tst
