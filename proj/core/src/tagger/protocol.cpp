#include "tst/tagger/protocol.hpp"

#include <nlohmann/json.hpp>

#include "tst/core/errors.hpp"

namespace tst::protocol {

using nlohmann::json;

namespace {

json parse(const std::string& line) {
  try {
    return json::parse(line);
  } catch (const json::exception& e) {
    throw ProtocolError(std::string("invalid JSON: ") + e.what());
  }
}

std::uint64_t read_id(const json& msg) {
  auto it = msg.find("id");
  if (it == msg.end() || !it->is_number_unsigned()) throw ProtocolError("message lacks a non-negative integer id");
  return it->get<std::uint64_t>();
}

std::vector<double> read_numbers(const json& arr, const char* what) {
  if (!arr.is_array()) throw ProtocolError(std::string(what) + " is not an array");
  std::vector<double> out;
  out.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_number()) throw ProtocolError(std::string(what) + " holds a non-number");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

std::string encode_hello(const std::string& vocab_sha256) {
  return json{{"hello", {{"vocab_sha256", vocab_sha256}}}}.dump();
}

std::string decode_hello(const std::string& line) {
  const json msg = parse(line);
  if (!msg.is_object() || !msg.contains("hello") || !msg["hello"].is_object() ||
      !msg["hello"].contains("vocab_sha256") || !msg["hello"]["vocab_sha256"].is_string()) {
    throw ProtocolError("expected a hello handshake, got: " + line.substr(0, 200));
  }
  return msg["hello"]["vocab_sha256"].get<std::string>();
}

std::string encode_request(std::uint64_t id, std::span<const TokenSeq> sentences) {
  json arr = json::array();
  for (const auto& seq : sentences) {
    json toks = json::array();
    for (const auto& t : seq) toks.push_back(t.text);
    arr.push_back(std::move(toks));
  }
  return json{{"id", id}, {"sentences", std::move(arr)}}.dump();
}

Request decode_request(const std::string& line) {
  const json msg = parse(line);
  if (!msg.is_object()) throw ProtocolError("request is not an object");
  Request req;
  req.id = read_id(msg);
  auto it = msg.find("sentences");
  if (it == msg.end() || !it->is_array()) throw ProtocolError("request lacks a sentences array");
  for (const auto& s : *it) {
    if (!s.is_array() || s.empty() || !s.front().is_string() || s.front().get<std::string>() != kStartText) {
      throw ProtocolError("each sentence must be an array starting with \"$START\"");
    }
    std::vector<std::string> words;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (!s[i].is_string()) throw ProtocolError("sentence token is not a string");
      words.push_back(s[i].get<std::string>());
    }
    try {
      req.sentences.emplace_back(words);
    } catch (const std::invalid_argument& e) {
      throw ProtocolError(e.what());
    }
  }
  return req;
}

std::string encode_response(std::uint64_t id, std::span<const TagPrediction> predictions) {
  json preds = json::array();
  for (const auto& p : predictions) {
    json dist = json::array();
    for (std::size_t i = 0; i < p.num_tokens(); ++i) {
      auto row = p.row(i);
      dist.push_back(std::vector<double>(row.begin(), row.end()));
    }
    auto det = p.detect_all();
    preds.push_back(json{{"detect", std::vector<double>(det.begin(), det.end())}, {"dist", std::move(dist)}});
  }
  return json{{"id", id}, {"predictions", std::move(preds)}}.dump();
}

std::string encode_error(std::uint64_t id, const std::string& message) {
  return json{{"id", id}, {"error", message}}.dump();
}

Response decode_response(const std::string& line) {
  const json msg = parse(line);
  if (!msg.is_object()) throw ProtocolError("response is not an object");
  Response resp;
  resp.id = read_id(msg);
  if (auto err = msg.find("error"); err != msg.end()) {
    resp.error = err->is_string() ? err->get<std::string>() : err->dump();
    return resp;
  }
  auto it = msg.find("predictions");
  if (it == msg.end() || !it->is_array()) throw ProtocolError("response lacks a predictions array");
  for (const auto& p : *it) {
    if (!p.is_object() || !p.contains("detect") || !p.contains("dist")) {
      throw ProtocolError("prediction needs detect and dist");
    }
    const auto detect = read_numbers(p["detect"], "detect");
    const json& dist = p["dist"];
    if (!dist.is_array() || dist.size() != detect.size()) {
      throw ProtocolError("detect and dist lengths differ");
    }
    const std::size_t classes = dist.empty() ? 0 : dist.front().size();
    TagPrediction pred(detect.size(), classes);
    for (std::size_t i = 0; i < detect.size(); ++i) {
      pred.detect(i) = detect[i];
      const auto row = read_numbers(dist[i], "dist row");
      if (row.size() != classes) throw ProtocolError("ragged dist rows");
      std::copy(row.begin(), row.end(), pred.row(i).begin());
    }
    resp.predictions.push_back(std::move(pred));
  }
  return resp;
}

}  // namespace tst::protocol
