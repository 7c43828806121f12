#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <utility>
#include <vector>

#include "tst/core/token.hpp"

namespace tst {

using SentencePair = std::pair<TokenSeq, TokenSeq>;

/// Streams a parallel corpus: UTF-8 TSV, source<TAB>target per line. Lines
/// without exactly two fields are skipped and counted.
class ParallelCorpusReader {
 public:
  explicit ParallelCorpusReader(std::istream& in) : in_(in) {}

  bool next(SentencePair& pair);

  std::size_t skipped() const noexcept { return skipped_; }
  std::size_t line_number() const noexcept { return line_; }

 private:
  std::istream& in_;
  std::size_t skipped_ = 0;
  std::size_t line_ = 0;
};

struct ParallelCorpus {
  std::vector<SentencePair> pairs;
  std::size_t skipped = 0;
};

/// Throws MalformedFile if the file cannot be opened.
ParallelCorpus read_parallel_corpus(const std::filesystem::path& path);

}  // namespace tst
