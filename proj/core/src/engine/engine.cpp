#include "tst/engine/engine.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <thread>

#include "tst/core/errors.hpp"

namespace tst {

namespace {

// Per-sentence state of the tag/apply loop.
struct Run {
  TokenSeq current;
  SimplifyTrace trace;
  bool done = false;
};

// One tagging pass for one sentence. Shared by simplify and simplify_batch so
// both paths make the same decisions.
void advance(Run& run, const TagPrediction& pred, const TagVocabulary& vocab, const InferenceConfig& cfg,
             const SimplifyOptions& options) {
  if (pred.num_tokens() != run.current.size()) {
    throw ShapeMismatch("prediction covers " + std::to_string(pred.num_tokens()) + " tokens, sentence has " +
                        std::to_string(run.current.size()));
  }
  const VerbLexicon& lexicon = options.lexicon ? *options.lexicon : VerbLexicon::builtin();
  DecodeResult decoded = decode_step(pred, vocab, cfg);
  TokenSeq output = decoded.gated ? run.current : apply_tags(run.current, decoded.tags, lexicon);
  const bool fixpoint = decoded.gated || all_keep(decoded.tags) || output == run.current;
  run.trace.push_back(SimplifyStep{run.current, std::move(decoded.tags), decoded.gated, output});
  run.current = std::move(output);
  if ((options.early_stop && fixpoint) || static_cast<int>(run.trace.size()) >= cfg.max_iterations) {
    run.done = true;
  }
}

void run_shard(std::span<const TokenSeq> batch, std::span<BatchOutcome> out, const TaggerBackend& backend,
               const TagVocabulary& vocab, const InferenceConfig& cfg, const SimplifyOptions& options) {
  std::vector<Run> runs(batch.size());
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < batch.size(); ++i) {
    runs[i].current = batch[i];
    active.push_back(i);
  }

  auto fail = [&](std::size_t i, const std::string& what) {
    out[i].error = what;
    runs[i].done = true;
  };

  while (!active.empty()) {
    std::vector<TokenSeq> inputs;
    inputs.reserve(active.size());
    for (std::size_t i : active) inputs.push_back(runs[i].current);

    std::vector<TagPrediction> preds;
    bool batched = true;
    try {
      preds = backend.predict_batch(inputs);
      if (preds.size() != inputs.size()) throw ProtocolError("backend returned a short batch");
    } catch (const std::exception&) {
      batched = false;
    }

    for (std::size_t k = 0; k < active.size(); ++k) {
      const std::size_t i = active[k];
      try {
        if (batched) {
          advance(runs[i], preds[k], vocab, cfg, options);
        } else {
          // Retry alone so one bad sentence does not sink its neighbours.
          auto single = backend.predict_batch(std::span<const TokenSeq>(&inputs[k], 1));
          if (single.size() != 1) throw ProtocolError("backend returned a short batch");
          advance(runs[i], single.front(), vocab, cfg, options);
        }
      } catch (const std::exception& e) {
        fail(i, e.what());
      }
    }

    std::erase_if(active, [&](std::size_t i) { return runs[i].done; });
  }

  for (std::size_t i = 0; i < batch.size(); ++i) {
    if (out[i].error.empty()) out[i].result = SimplifyResult{std::move(runs[i].current), std::move(runs[i].trace)};
  }
}

}  // namespace

TagId biased_argmax(std::span<const double> row, const InferenceConfig& cfg) {
  auto score = [&](std::size_t c) {
    double s = row[c];
    if (c == kKeepId) s += cfg.keep_bias;
    if (c == kDeleteId) s += cfg.delete_bias;
    return s;
  };
  std::size_t best = 0;
  double best_score = score(0);
  for (std::size_t c = 1; c < row.size(); ++c) {
    const double s = score(c);
    if (s > best_score) {
      best = c;
      best_score = s;
    }
  }
  return static_cast<TagId>(best);
}

DecodeResult decode_step(const TagPrediction& pred, const TagVocabulary& vocab, const InferenceConfig& cfg) {
  if (pred.num_classes() != vocab.size()) {
    throw ShapeMismatch("prediction has " + std::to_string(pred.num_classes()) + " classes, vocabulary has " +
                        std::to_string(vocab.size()));
  }
  DecodeResult result;
  const auto detect = pred.detect_all();
  const double max_detect = detect.empty() ? 0.0 : *std::max_element(detect.begin(), detect.end());
  if (max_detect < cfg.min_edit_prob) {
    result.tags.assign(pred.num_tokens(), EditTag::keep());
    result.gated = true;
    return result;
  }
  result.tags.reserve(pred.num_tokens());
  for (std::size_t i = 0; i < pred.num_tokens(); ++i) result.tags.push_back(vocab.tag(biased_argmax(pred.row(i), cfg)));
  return result;
}

SimplifyResult simplify(const TokenSeq& seq, const TaggerBackend& backend, const TagVocabulary& vocab,
                        const InferenceConfig& cfg, const SimplifyOptions& options) {
  validate_config(cfg);
  Run run{seq, {}, false};
  while (!run.done) {
    auto preds = backend.predict_batch(std::span<const TokenSeq>(&run.current, 1));
    if (preds.size() != 1) throw ProtocolError("backend returned " + std::to_string(preds.size()) + " predictions");
    advance(run, preds.front(), vocab, cfg, options);
  }
  return SimplifyResult{std::move(run.current), std::move(run.trace)};
}

TokenSeq replay_trace(const TokenSeq& input, const SimplifyTrace& trace, const VerbLexicon& lexicon) {
  TokenSeq cur = input;
  for (const auto& step : trace) {
    if (!step.gated) cur = apply_tags(cur, step.tags, lexicon);
  }
  return cur;
}

std::vector<BatchOutcome> simplify_batch(std::span<const TokenSeq> batch, const TaggerBackend& backend,
                                         const TagVocabulary& vocab, const InferenceConfig& cfg,
                                         std::size_t parallelism, const SimplifyOptions& options) {
  if (parallelism < 1) throw std::invalid_argument("parallelism must be at least 1");
  validate_config(cfg);
  std::vector<BatchOutcome> out(batch.size());
  if (batch.empty()) return out;

  const std::size_t shards = std::min(parallelism, batch.size());
  const std::size_t per = (batch.size() + shards - 1) / shards;
  std::span<BatchOutcome> out_span(out);
  if (shards == 1) {
    run_shard(batch, out_span, backend, vocab, cfg, options);
    return out;
  }
  std::vector<std::jthread> workers;
  workers.reserve(shards);
  for (std::size_t begin = 0; begin < batch.size(); begin += per) {
    const std::size_t len = std::min(per, batch.size() - begin);
    workers.emplace_back([&, begin, len] {
      run_shard(batch.subspan(begin, len), out_span.subspan(begin, len), backend, vocab, cfg, options);
    });
  }
  return out;
}

}  // namespace tst
