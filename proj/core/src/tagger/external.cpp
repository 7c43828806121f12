#include "tst/tagger/external.hpp"

#include "tst/core/errors.hpp"
#include "tst/tagger/protocol.hpp"

namespace tst {

ExternalBackend::ExternalBackend(std::unique_ptr<LineChannel> channel, std::size_t num_classes,
                                 std::string vocab_sha256)
    : num_classes_(num_classes), vocab_sha256_(std::move(vocab_sha256)), channel_(std::move(channel)) {
  if (!channel_) throw PeerUnavailable("no channel");
  channel_->send(protocol::encode_hello(vocab_sha256_));
  auto reply = channel_->receive();
  if (!reply) throw PeerUnavailable("peer closed the connection during the handshake");
  const std::string peer_sha = protocol::decode_hello(*reply);
  if (peer_sha != vocab_sha256_) {
    throw ProtocolError("vocabulary mismatch: local " + vocab_sha256_ + ", peer " + peer_sha);
  }
}

std::vector<TagPrediction> ExternalBackend::predict_batch(std::span<const TokenSeq> batch) const {
  std::lock_guard lock(mutex_);
  const std::uint64_t id = next_id_++;
  channel_->send(protocol::encode_request(id, batch));
  auto line = channel_->receive();
  if (!line) throw PeerUnavailable("peer closed the connection");

  protocol::Response resp = protocol::decode_response(*line);
  if (resp.id != id) {
    throw ProtocolError("response id " + std::to_string(resp.id) + " does not echo request " + std::to_string(id));
  }
  if (resp.error) throw ProtocolError("peer error: " + *resp.error);
  if (resp.predictions.size() != batch.size()) {
    throw ProtocolError("peer returned " + std::to_string(resp.predictions.size()) + " predictions for " +
                        std::to_string(batch.size()) + " sentences");
  }
  for (std::size_t s = 0; s < batch.size(); ++s) {
    const auto& p = resp.predictions[s];
    if (p.num_tokens() != batch[s].size() || p.num_classes() != num_classes_) {
      throw ProtocolError("prediction " + std::to_string(s) + " has shape " + std::to_string(p.num_tokens()) + "x" +
                          std::to_string(p.num_classes()) + ", expected " + std::to_string(batch[s].size()) + "x" +
                          std::to_string(num_classes_));
    }
    validate_prediction(p, batch[s].size(), num_classes_);
  }
  return std::move(resp.predictions);
}

std::size_t serve_tagger(const TaggerBackend& backend, const std::string& vocab_sha256, LineChannel& channel) {
  std::size_t served = 0;
  bool greeted = false;
  while (auto line = channel.receive()) {
    if (line->empty()) continue;
    if (!greeted) {
      try {
        protocol::decode_hello(*line);
      } catch (const ProtocolError& e) {
        channel.send(protocol::encode_error(0, e.what()));
        continue;
      }
      channel.send(protocol::encode_hello(vocab_sha256));
      greeted = true;
      continue;
    }
    std::uint64_t id = 0;
    try {
      auto req = protocol::decode_request(*line);
      id = req.id;
      auto preds = backend.predict_batch(req.sentences);
      channel.send(protocol::encode_response(id, preds));
      ++served;
    } catch (const PeerUnavailable&) {
      throw;
    } catch (const std::exception& e) {
      channel.send(protocol::encode_error(id, e.what()));
    }
  }
  return served;
}

}  // namespace tst
