#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tst/core/token.hpp"
#include "tst/tagger/prediction.hpp"

namespace tst::protocol {

// Newline-delimited JSON, one message per line.
//
//   handshake  {"hello": {"vocab_sha256": "<hex>"}}          (both directions)
//   request    {"id": n, "sentences": [["$START", "he", ...], ...]}
//   response   {"id": n, "predictions": [{"detect": [...], "dist": [[...], ...]}, ...]}
//   failure    {"id": n, "error": "<message>"}
//
// The vocabulary file itself is shared out of band; the handshake only
// compares its SHA-256.

std::string encode_hello(const std::string& vocab_sha256);
/// Throws ProtocolError unless `line` is a well-formed hello.
std::string decode_hello(const std::string& line);

std::string encode_request(std::uint64_t id, std::span<const TokenSeq> sentences);

struct Request {
  std::uint64_t id = 0;
  std::vector<TokenSeq> sentences;
};
/// Throws ProtocolError. Each sentence must start with "$START".
Request decode_request(const std::string& line);

std::string encode_response(std::uint64_t id, std::span<const TagPrediction> predictions);
std::string encode_error(std::uint64_t id, const std::string& message);

struct Response {
  std::uint64_t id = 0;
  std::vector<TagPrediction> predictions;
  std::optional<std::string> error;
};
/// Structural decoding only (ProtocolError on malformed JSON, missing fields
/// or ragged rows); shapes and probability invariants are the caller's job.
Response decode_response(const std::string& line);

}  // namespace tst::protocol
