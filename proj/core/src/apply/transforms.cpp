#include "tst/apply/transforms.hpp"

#include <fstream>
#include <sstream>

#include "tst/core/errors.hpp"

namespace tst {

extern const char* const kBuiltinVerbForms;  // generated from data/verb_forms.tsv

namespace {

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
char to_upper(char c) { return is_lower(c) ? static_cast<char>(c - 'a' + 'A') : c; }
char to_lower(char c) { return is_upper(c) ? static_cast<char>(c - 'A' + 'a') : c; }
bool is_vowel(char c) {
  c = to_lower(c);
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}
bool is_ascii_alpha(char c) { return is_lower(c) || is_upper(c); }

std::string key(const std::string& form_tag, const std::string& word) { return form_tag + '\t' + word; }

std::string pluralize(const std::string& w) {
  if (w.empty() || !is_ascii_alpha(w.back())) return w;
  auto ends = [&](std::string_view suf) { return w.size() > suf.size() && w.ends_with(suf); };
  if (ends("s") || ends("x") || ends("z") || ends("ch") || ends("sh")) return w + "es";
  if (w.size() > 1 && to_lower(w.back()) == 'y' && !is_vowel(w[w.size() - 2])) {
    return w.substr(0, w.size() - 1) + "ies";
  }
  return w + "s";
}

std::string singularize(const std::string& w) {
  auto ends = [&](std::string_view suf) { return w.size() > suf.size() + 1 && w.ends_with(suf); };
  if (ends("ies")) return w.substr(0, w.size() - 3) + "y";
  if (ends("sses") || ends("ches") || ends("shes") || ends("xes") || ends("zes")) {
    return w.substr(0, w.size() - 2);
  }
  if (ends("s") && !ends("ss") && !ends("us") && !ends("is")) return w.substr(0, w.size() - 1);
  return w;
}

std::vector<std::string> split_hyphen(const std::string& w) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : w) {
    if (c == '-') {
      if (!cur.empty()) parts.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) parts.push_back(std::move(cur));
  if (parts.size() < 2) return {w};
  return parts;
}

}  // namespace

VerbLexicon VerbLexicon::read(std::istream& in) {
  VerbLexicon lex;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, '\t')) fields.push_back(f);
    if (fields.size() != 3 || (fields[1] != "VBZ" && fields[1] != "VBD") || fields[0].empty() ||
        fields[2].empty()) {
      throw MalformedFile("verb lexicon line " + std::to_string(lineno) + " is not base<TAB>VBZ|VBD<TAB>form");
    }
    lex.add(fields[0], fields[1], fields[2]);
  }
  return lex;
}

VerbLexicon VerbLexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MalformedFile("cannot open verb lexicon '" + path.string() + "'");
  return read(in);
}

const VerbLexicon& VerbLexicon::builtin() {
  static const VerbLexicon lex = [] {
    std::istringstream in(kBuiltinVerbForms);
    return read(in);
  }();
  return lex;
}

void VerbLexicon::add(const std::string& base, const std::string& form_tag, const std::string& inflected) {
  forward_.emplace(key(form_tag, base), inflected);
  backward_.emplace(key(form_tag, inflected), base);
}

std::optional<std::string> VerbLexicon::inflect(const std::string& base, const std::string& form_tag) const {
  auto it = forward_.find(key(form_tag, base));
  if (it == forward_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> VerbLexicon::base_of(const std::string& inflected,
                                                const std::string& form_tag) const {
  auto it = backward_.find(key(form_tag, inflected));
  if (it == backward_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> apply_transform(TransformKind kind, const std::string& word,
                                         const VerbLexicon& lexicon) {
  switch (kind) {
    case TransformKind::kCaseCapital: {
      std::string out = word;
      if (!out.empty()) out[0] = to_upper(out[0]);
      return {out};
    }
    case TransformKind::kCaseLower: {
      std::string out = word;
      for (char& c : out) c = to_lower(c);
      return {out};
    }
    case TransformKind::kCaseUpper: {
      std::string out = word;
      for (char& c : out) c = to_upper(c);
      return {out};
    }
    case TransformKind::kVerbVbVbz:
      return {lexicon.inflect(word, "VBZ").value_or(word)};
    case TransformKind::kVerbVbVbd:
      return {lexicon.inflect(word, "VBD").value_or(word)};
    case TransformKind::kVerbVbzVb:
      return {lexicon.base_of(word, "VBZ").value_or(word)};
    case TransformKind::kVerbVbdVb:
      return {lexicon.base_of(word, "VBD").value_or(word)};
    case TransformKind::kPlural:
      return {pluralize(word)};
    case TransformKind::kSingular:
      return {singularize(word)};
    case TransformKind::kMergeSpace:
    case TransformKind::kMergeHyphen:
      return {word};
    case TransformKind::kSplitHyphen:
      return split_hyphen(word);
  }
  return {word};
}

std::optional<TransformKind> recognize_transform(const std::string& src, const std::string& tgt,
                                                 const VerbLexicon& lexicon) {
  if (src == tgt) return std::nullopt;
  for (TransformKind kind : kAllTransforms) {
    if (kind == TransformKind::kMergeSpace || kind == TransformKind::kMergeHyphen ||
        kind == TransformKind::kSplitHyphen) {
      continue;  // multi-token; no single-word recognizer
    }
    const auto out = apply_transform(kind, src, lexicon);
    if (out.size() == 1 && out.front() == tgt) return kind;
  }
  return std::nullopt;
}

}  // namespace tst
