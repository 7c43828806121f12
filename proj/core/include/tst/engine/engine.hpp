#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tst/apply/apply.hpp"
#include "tst/core/vocabulary.hpp"
#include "tst/engine/config.hpp"
#include "tst/tagger/backend.hpp"

namespace tst {

/// Argmax of a distribution row after adding the KEEP and DELETE biases.
/// No renormalization; ties go to the lower id.
TagId biased_argmax(std::span<const double> row, const InferenceConfig& cfg);

struct DecodeResult {
  TagSeq tags;
  /// True when the sentence gate fired and every tag is KEEP.
  bool gated = false;
};

/// Turns one prediction into tags. If the largest detect value is below
/// cfg.min_edit_prob the whole sentence is left alone; otherwise each
/// position takes its biased argmax.
/// Throws ShapeMismatch if the prediction's classes differ from the vocabulary.
DecodeResult decode_step(const TagPrediction& pred, const TagVocabulary& vocab, const InferenceConfig& cfg);

struct SimplifyStep {
  TokenSeq input;
  TagSeq tags;
  bool gated = false;
  TokenSeq output;
};

using SimplifyTrace = std::vector<SimplifyStep>;

struct SimplifyResult {
  TokenSeq output;
  SimplifyTrace trace;
};

struct SimplifyOptions {
  /// Stop once a step is gated, all-KEEP, or leaves the sentence unchanged.
  /// Such a step is a fixpoint, so this never changes the output; turning it
  /// off makes every sentence pay for max_iterations tagging passes.
  bool early_stop = true;
  const VerbLexicon* lexicon = nullptr;
};

/// Tag, decode and apply, up to cfg.max_iterations times.
SimplifyResult simplify(const TokenSeq& seq, const TaggerBackend& backend, const TagVocabulary& vocab,
                        const InferenceConfig& cfg, const SimplifyOptions& options = {});

/// Re-applies the traced tag sequences to `input`.
TokenSeq replay_trace(const TokenSeq& input, const SimplifyTrace& trace,
                      const VerbLexicon& lexicon = VerbLexicon::builtin());

struct BatchOutcome {
  std::optional<SimplifyResult> result;
  std::string error;

  bool ok() const noexcept { return result.has_value(); }
};

/// Runs simplify over a batch, calling the backend once per iteration for
/// all still-active sentences of a shard. The batch is cut into
/// `parallelism` contiguous shards run on separate threads. Outcomes are in
/// input order and identical to per-sentence simplify for any parallelism.
/// A failing sentence records its error without stopping the others.
std::vector<BatchOutcome> simplify_batch(std::span<const TokenSeq> batch, const TaggerBackend& backend,
                                         const TagVocabulary& vocab, const InferenceConfig& cfg,
                                         std::size_t parallelism = 1, const SimplifyOptions& options = {});

}  // namespace tst
