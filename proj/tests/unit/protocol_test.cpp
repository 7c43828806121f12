#include <gtest/gtest.h>

#include <thread>

#include "tst/core/errors.hpp"
#include "tst/tagger/channel.hpp"
#include "tst/tagger/external.hpp"
#include "tst/tagger/protocol.hpp"

#ifndef TST_TEST_PEER
#error "TST_TEST_PEER must point at the scripted peer binary"
#endif

namespace tst {
namespace {

const std::string kSha(64, 'a');

std::unique_ptr<ExternalBackend> peer(const std::string& mode, std::size_t classes = 3) {
  return std::make_unique<ExternalBackend>(
      spawn_process({TST_TEST_PEER, mode, kSha, std::to_string(classes)}), classes, kSha);
}

// Always answers with uniform rows.
class UniformBackend final : public TaggerBackend {
 public:
  explicit UniformBackend(std::size_t classes) : classes_(classes) {}
  std::vector<TagPrediction> predict_batch(std::span<const TokenSeq> batch) const override {
    std::vector<TagPrediction> out;
    for (const auto& s : batch) {
      TagPrediction p(s.size(), classes_);
      for (std::size_t i = 0; i < s.size(); ++i) {
        for (double& v : p.row(i)) v = 1.0 / static_cast<double>(classes_);
      }
      out.push_back(std::move(p));
    }
    return out;
  }
  std::size_t num_classes() const override { return classes_; }

 private:
  std::size_t classes_;
};

TEST(Protocol, HelloRoundtrip) {
  EXPECT_EQ(protocol::decode_hello(protocol::encode_hello(kSha)), kSha);
  EXPECT_THROW(protocol::decode_hello("{\"hi\":1}"), ProtocolError);
  EXPECT_THROW(protocol::decode_hello("not json"), ProtocolError);
}

TEST(Protocol, RequestRoundtrip) {
  const std::vector<TokenSeq> batch = {tokenize("a b"), tokenize("")};
  const auto req = protocol::decode_request(protocol::encode_request(42, batch));
  EXPECT_EQ(req.id, 42u);
  ASSERT_EQ(req.sentences.size(), 2u);
  EXPECT_EQ(req.sentences[0], batch[0]);
  EXPECT_EQ(req.sentences[1], batch[1]);
}

TEST(Protocol, ResponseRoundtrip) {
  TagPrediction p(2, 2);
  p.row(0)[0] = 1.0;
  p.row(1)[1] = 1.0;
  p.detect(1) = 0.75;
  const std::vector<TagPrediction> preds = {p};
  const auto resp = protocol::decode_response(protocol::encode_response(7, preds));
  EXPECT_EQ(resp.id, 7u);
  EXPECT_FALSE(resp.error.has_value());
  ASSERT_EQ(resp.predictions.size(), 1u);
  EXPECT_EQ(resp.predictions[0], p);

  const auto err = protocol::decode_response(protocol::encode_error(8, "boom"));
  EXPECT_EQ(err.id, 8u);
  EXPECT_EQ(err.error, "boom");
  EXPECT_THROW(protocol::decode_response("[1,2]"), ProtocolError);
}

TEST(External, KeepPeerGivesIdentityRows) {
  auto backend = peer("ok");
  const std::vector<TokenSeq> batch = {tokenize("a"), tokenize("b c")};
  const auto preds = backend->predict_batch(batch);
  ASSERT_EQ(preds.size(), 2u);
  EXPECT_EQ(preds[0].num_tokens(), 2u);
  EXPECT_EQ(preds[0].detect(0), 0.0);
  EXPECT_EQ(preds[1].argmax(2), kKeepId);
  // A second request on the same connection still works.
  EXPECT_EQ(backend->predict_batch(batch).size(), 2u);
}

TEST(External, ContractViolations) {
  const std::vector<TokenSeq> batch = {tokenize("a"), tokenize("b")};
  EXPECT_THROW(peer("short")->predict_batch(batch), ProtocolError);
  EXPECT_THROW(peer("badsum")->predict_batch(batch), InvariantViolation);
  EXPECT_THROW(peer("badshape")->predict_batch(batch), ProtocolError);
  EXPECT_THROW(peer("badid")->predict_batch(batch), ProtocolError);
  EXPECT_THROW(peer("garbage")->predict_batch(batch), ProtocolError);
  EXPECT_THROW(peer("error")->predict_batch(batch), ProtocolError);
  EXPECT_THROW(peer("die")->predict_batch(batch), PeerUnavailable);
}

TEST(External, HandshakeChecksVocabulary) {
  EXPECT_THROW(peer("vocab"), ProtocolError);
  EXPECT_THROW(spawn_process({"/nonexistent/tagger"}), PeerUnavailable);
}

TEST(External, ServeOverTcp) {
  const UniformBackend local(4);
  TcpListener listener(0);
  ASSERT_GT(listener.port(), 0);
  std::size_t served = 0;
  std::thread server([&] {
    auto channel = listener.accept();
    served = serve_tagger(local, kSha, *channel);
  });
  {
    ExternalBackend remote(connect_tcp("127.0.0.1", listener.port()), 4, kSha);
    const std::vector<TokenSeq> batch = {tokenize("x y z")};
    const auto preds = remote.predict_batch(batch);
    ASSERT_EQ(preds.size(), 1u);
    EXPECT_EQ(preds[0], local.predict_batch(batch)[0]);
  }
  server.join();
  EXPECT_EQ(served, 1u);
}

}  // namespace
}  // namespace tst
