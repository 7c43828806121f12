#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>

#include "tst/tagger/backend.hpp"
#include "tst/tagger/channel.hpp"

namespace tst {

/// Client for a tagger peer speaking the line-delimited JSON protocol in
/// tst/tagger/protocol.hpp. The constructor performs the hello handshake and
/// rejects a peer whose vocabulary hash differs. Requests on one connection
/// are serialized; use several backends to pool connections.
class ExternalBackend final : public TaggerBackend {
 public:
  ExternalBackend(std::unique_ptr<LineChannel> channel, std::size_t num_classes, std::string vocab_sha256);

  /// Throws ProtocolError for malformed or mismatched responses,
  /// PeerUnavailable when the peer is gone, and InvariantViolation when a
  /// distribution row does not sum to 1 within 1e-6.
  std::vector<TagPrediction> predict_batch(std::span<const TokenSeq> batch) const override;
  std::size_t num_classes() const override { return num_classes_; }

 private:
  std::size_t num_classes_;
  std::string vocab_sha256_;
  mutable std::mutex mutex_;
  mutable std::unique_ptr<LineChannel> channel_;
  mutable std::uint64_t next_id_ = 1;
};

/// Answers handshake and prediction requests on `channel` with `backend`
/// until end of stream. Bad requests get an error message and the loop
/// continues. Returns the number of requests served.
std::size_t serve_tagger(const TaggerBackend& backend, const std::string& vocab_sha256, LineChannel& channel);

}  // namespace tst
