#include "tst/align/corpus.hpp"

#include <fstream>
#include <string>

#include "tst/core/errors.hpp"
#include "tst/core/tsv.hpp"

namespace tst {

bool ParallelCorpusReader::next(SentencePair& pair) {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    auto fields = split_tsv(line);
    if (fields.size() != 2) {
      ++skipped_;
      continue;
    }
    pair.first = tokenize(fields[0]);
    pair.second = tokenize(fields[1]);
    return true;
  }
  return false;
}

ParallelCorpus read_parallel_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MalformedFile("cannot open corpus '" + path.string() + "'");
  ParallelCorpusReader reader(in);
  ParallelCorpus corpus;
  SentencePair pair;
  while (reader.next(pair)) corpus.pairs.push_back(pair);
  corpus.skipped = reader.skipped();
  return corpus;
}

}  // namespace tst
