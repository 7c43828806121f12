// tst: command-line front end for the simplification-by-tagging library.

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tst/align/brackets.hpp"
#include "tst/align/corpus.hpp"
#include "tst/align/extract.hpp"
#include "tst/bench/bench.hpp"
#include "tst/core/errors.hpp"
#include "tst/core/token.hpp"
#include "tst/core/tsv.hpp"
#include "tst/engine/config.hpp"
#include "tst/engine/engine.hpp"
#include "tst/metrics/evaluate.hpp"
#include "tst/tagger/channel.hpp"
#include "tst/tagger/ensemble.hpp"
#include "tst/tagger/external.hpp"
#include "tst/tagger/noisy.hpp"
#include "tst/tagger/oracle.hpp"
#include "tst/tagger/stat_tagger.hpp"
#include "tst/tune/tune.hpp"

namespace {

using namespace tst;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitBackend = 3;

// Input/output helpers: "-" means stdin/stdout.
class Input {
 public:
  explicit Input(const std::string& path) {
    if (path == "-") return;
    file_.open(path);
    if (!file_) throw MalformedFile("cannot open '" + path + "'");
  }
  std::istream& get() { return file_.is_open() ? static_cast<std::istream&>(file_) : std::cin; }

 private:
  std::ifstream file_;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path == "-") return;
    file_.open(path, std::ios::binary);
    if (!file_) throw MalformedFile("cannot write '" + path + "'");
  }
  std::ostream& get() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

// ---- backend selection, shared by simplify, tune, bench and serve ----

struct BackendArgs {
  std::string kind = "stat";
  std::string vocab;
  std::vector<std::string> models;
  std::string pairs;
  std::string command;
  std::string connect;
  double noise = 0.0;
};

void add_backend_options(CLI::App* app, BackendArgs& args, bool allow_external = true) {
  std::vector<std::string> kinds{"oracle", "stat"};
  if (allow_external) kinds.push_back("external");
  app->add_option("--backend", args.kind, "Tagger backend")->check(CLI::IsMember(kinds))->capture_default_str();
  app->add_option("--vocab", args.vocab, "Tag vocabulary file")->required();
  app->add_option("--model", args.models, "Stat model file; repeat to ensemble several");
  app->add_option("--pairs", args.pairs, "Parallel corpus the oracle backend reads targets from");
  if (allow_external) {
    app->add_option("--command", args.command, "External tagger command line (stdio transport)");
    app->add_option("--connect", args.connect, "External tagger host:port (TCP transport)");
  }
  app->add_option("--noise", args.noise, "Replace this fraction of predicted positions with random noise")
      ->check(CLI::Range(0.0, 1.0));
}

std::vector<std::string> split_command(const std::string& command) {
  std::vector<std::string> argv;
  std::istringstream in(command);
  std::string part;
  while (in >> part) argv.push_back(part);
  return argv;
}

struct LoadedBackend {
  TagVocabulary vocab;
  std::shared_ptr<const TaggerBackend> backend;
};

LoadedBackend load_backend(const BackendArgs& args, std::uint64_t seed) {
  LoadedBackend lb{TagVocabulary::load(args.vocab), nullptr};
  if (args.kind == "oracle") {
    if (args.pairs.empty()) throw CLI::ValidationError("--pairs", "the oracle backend needs --pairs");
    lb.backend = std::make_shared<OracleBackend>(read_parallel_corpus(args.pairs).pairs, lb.vocab);
  } else if (args.kind == "stat") {
    if (args.models.empty()) throw CLI::ValidationError("--model", "the stat backend needs --model");
    std::vector<std::shared_ptr<const TaggerBackend>> members;
    for (const auto& path : args.models) {
      auto model = std::make_shared<const StatTaggerModel>(StatTaggerModel::load(path));
      if (model->num_classes() != lb.vocab.size()) {
        throw ShapeMismatch("model '" + path + "' has " + std::to_string(model->num_classes()) +
                            " classes, vocabulary has " + std::to_string(lb.vocab.size()));
      }
      members.push_back(std::make_shared<StatBackend>(std::move(model)));
    }
    lb.backend = members.size() == 1 ? members.front() : std::make_shared<EnsembleBackend>(std::move(members));
  } else {
    std::unique_ptr<LineChannel> channel;
    if (!args.command.empty()) {
      channel = spawn_process(split_command(args.command));
    } else if (!args.connect.empty()) {
      const auto colon = args.connect.rfind(':');
      if (colon == std::string::npos) throw CLI::ValidationError("--connect", "expected host:port");
      channel = connect_tcp(args.connect.substr(0, colon), std::stoi(args.connect.substr(colon + 1)));
    } else {
      throw CLI::ValidationError("--backend", "the external backend needs --command or --connect");
    }
    lb.backend = std::make_shared<ExternalBackend>(std::move(channel), lb.vocab.size(), lb.vocab.sha256_hex());
  }
  if (args.noise > 0.0) lb.backend = std::make_shared<NoisyBackend>(lb.backend, args.noise, seed);
  return lb;
}

// ---- inference config: file or preset, then flag overrides ----

struct ConfigArgs {
  std::string file;
  std::string preset;
  std::optional<double> keep_bias;
  std::optional<double> delete_bias;
  std::optional<double> min_edit_prob;
  std::optional<int> max_iterations;
};

void add_config_options(CLI::App* app, ConfigArgs& args) {
  auto* file = app->add_option("--config", args.file, "Inference config file (key = value)");
  std::vector<std::string> names;
  for (const auto& p : config_presets()) names.emplace_back(p.name);
  app->add_option("--preset", args.preset, "Published inference config")->check(CLI::IsMember(names))->excludes(file);
  app->add_option("--keep-bias", args.keep_bias, "Added to the KEEP probability");
  app->add_option("--delete-bias", args.delete_bias, "Added to the DELETE probability");
  app->add_option("--min-edit-prob", args.min_edit_prob, "Sentence-level detection threshold");
  app->add_option("--iterations", args.max_iterations, "Tagging iterations (1-5)");
}

InferenceConfig resolve_config(const ConfigArgs& args) {
  InferenceConfig cfg;
  if (!args.file.empty()) cfg = load_config(args.file);
  if (!args.preset.empty()) cfg = *find_preset(args.preset);
  if (args.keep_bias) cfg.keep_bias = *args.keep_bias;
  if (args.delete_bias) cfg.delete_bias = *args.delete_bias;
  if (args.min_edit_prob) cfg.min_edit_prob = *args.min_edit_prob;
  if (args.max_iterations) cfg.max_iterations = *args.max_iterations;
  validate_config(cfg);
  return cfg;
}

// ---- subcommands ----

struct Common {
  std::uint64_t seed = 1;
  std::size_t parallelism = 1;
};

int run_preprocess(const std::string& in_path, const std::string& out_path, int filter) {
  Input in(in_path);
  Output out(out_path);
  std::string line;
  while (std::getline(in.get(), line)) {
    auto fields = split_tsv(line);
    for (auto& f : fields) {
      TokenSeq seq = tokenize(f);
      if (filter) seq = filter_brackets(seq);
      f = detokenize(seq);
    }
    out.get() << join_tsv(fields) << '\n';
  }
  return kExitOk;
}

int run_build_vocab(const std::string& in_path, const std::string& out_path, std::size_t capacity, bool full_chain) {
  Input in(in_path);
  ParallelCorpusReader reader(in.get());
  const PairSource source = [&](std::pair<TokenSeq, TokenSeq>& p) { return reader.next(p); };
  const TagVocabulary vocab = build_vocab(source, capacity, VerbLexicon::builtin(),
                                           full_chain ? TagCoverage::kFullChain : TagCoverage::kFirstPass);
  Output out(out_path);
  vocab.write(out.get());
  if (reader.skipped() > 0) fmt::print(std::cerr, "skipped {} malformed line(s)\n", reader.skipped());
  fmt::print(std::cerr, "{} tags\n", vocab.size());
  return kExitOk;
}

int run_train_stat(const std::string& in_path, const std::string& vocab_path, const std::string& out_path,
                   const StatTrainOptions& opts) {
  const TagVocabulary vocab = TagVocabulary::load(vocab_path);
  const ParallelCorpus corpus = read_parallel_corpus(in_path);
  StatTrainReport report;
  const StatTaggerModel model = stat_train(corpus.pairs, vocab, opts, &report);
  for (std::size_t e = 0; e < report.epoch_loss.size(); ++e) {
    fmt::print(std::cerr, "epoch {} loss {:.6f}\n", e, report.epoch_loss[e]);
  }
  model.save(out_path);
  return kExitOk;
}

nlohmann::json trace_json(std::size_t line, const SimplifyResult& r) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : r.trace) {
    nlohmann::json tags = nlohmann::json::array();
    for (const auto& t : s.tags) tags.push_back(serialize_tag(t));
    steps.push_back({{"input", detokenize(s.input)}, {"tags", tags}, {"gated", s.gated}, {"output", detokenize(s.output)}});
  }
  return {{"line", line}, {"steps", steps}};
}

int run_simplify(const BackendArgs& bargs, const ConfigArgs& cargs, const Common& common, const std::string& in_path,
                 const std::string& out_path, const std::string& trace_path, std::size_t batch_size) {
  const InferenceConfig cfg = resolve_config(cargs);
  const LoadedBackend lb = load_backend(bargs, common.seed);
  Input in(in_path);
  Output out(out_path);
  std::optional<Output> trace;
  if (!trace_path.empty()) trace.emplace(trace_path);

  std::size_t line_no = 0;
  std::size_t failures = 0;
  std::vector<TokenSeq> batch;
  auto flush = [&] {
    const auto outcomes = simplify_batch(batch, *lb.backend, lb.vocab, cfg, common.parallelism);
    for (std::size_t i = 0; i < batch.size(); ++i) {
      const std::size_t n = line_no - batch.size() + i + 1;
      if (outcomes[i].ok()) {
        out.get() << detokenize(outcomes[i].result->output) << '\n';
        if (trace) trace->get() << trace_json(n, *outcomes[i].result).dump() << '\n';
      } else {
        ++failures;
        out.get() << detokenize(batch[i]) << '\n';
        fmt::print(std::cerr, "line {}: {}\n", n, outcomes[i].error);
      }
    }
    batch.clear();
  };
  std::string line;
  while (std::getline(in.get(), line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    batch.push_back(tokenize(line));
    ++line_no;
    if (batch.size() == batch_size) flush();
  }
  if (!batch.empty()) flush();
  out.get().flush();
  if (failures > 0) {
    fmt::print(std::cerr, "{} of {} sentence(s) failed and were copied unchanged\n", failures, line_no);
    return kExitBackend;
  }
  return kExitOk;
}

int run_evaluate(const std::string& in_path, const std::string& format, bool no_fkgl, const std::string& out_path) {
  Input in(in_path);
  EvalRecordReader reader(in.get());
  Evaluator ev(!no_fkgl);
  EvalRecord rec;
  while (reader.next(rec)) ev.add(rec);
  const EvalReport report = ev.report();
  Output out(out_path);
  if (format == "tsv") {
    write_report_tsv(out.get(), report);
  } else {
    write_report_table(out.get(), report);
  }
  return kExitOk;
}

std::vector<DevExample> read_dev(const std::string& path) {
  Input in(path);
  std::vector<DevExample> dev;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in.get(), line)) {
    ++n;
    auto fields = split_tsv(line);
    if (fields.size() == 1 && fields[0].empty()) continue;
    if (fields.size() < 2) throw MalformedFile("line " + std::to_string(n) + ": expected source and references");
    DevExample ex{tokenize(fields[0]), {fields.begin() + 1, fields.end()}};
    dev.push_back(std::move(ex));
  }
  return dev;
}

int run_tune(const BackendArgs& bargs, const Common& common, const std::string& dev_path, int budget,
             const std::string& out_path, const std::string& log_path) {
  const auto dev = read_dev(dev_path);
  const LoadedBackend lb = load_backend(bargs, common.seed);
  TuneOptions opts;
  opts.budget = budget;
  opts.seed = common.seed;
  opts.parallelism = common.parallelism;
  const TuneResult result = tune(dev, *lb.backend, lb.vocab, opts);
  Output out(out_path);
  write_config(out.get(), result.config);
  if (!log_path.empty()) {
    Output log(log_path);
    write_tune_log(log.get(), result);
  }
  fmt::print(std::cerr, "dev sari {:.4f} (zero tweaks {:.4f}) after {} evaluations\n", result.best_sari,
             result.baseline_sari, result.log.size());
  return kExitOk;
}

int run_bench_cmd(const BackendArgs& bargs, const ConfigArgs& cargs, const Common& common, const std::string& in_path,
                  BenchOptions opts, const std::string& format) {
  const InferenceConfig cfg = resolve_config(cargs);
  std::vector<TokenSeq> corpus;
  {
    Input in(in_path);
    for (const auto& line : read_lines(in.get())) corpus.push_back(tokenize(line));
  }
  const LoadedBackend lb = load_backend(bargs, common.seed);
  opts.parallelism = common.parallelism;
  const BenchReport report = run_bench(corpus, *lb.backend, lb.vocab, cfg, opts);
  if (format == "tsv") {
    write_bench_tsv(std::cout, report);
  } else {
    write_bench_table(std::cout, report);
  }
  return kExitOk;
}

int run_serve(const BackendArgs& bargs, const Common& common, std::optional<int> port) {
  const LoadedBackend lb = load_backend(bargs, common.seed);
  const std::string sha = lb.vocab.sha256_hex();
  if (!port) {
    FdChannel channel(0, 1, false);
    serve_tagger(*lb.backend, sha, channel);
    return kExitOk;
  }
  TcpListener listener(*port);
  fmt::print("listening on {}\n", listener.port());
  std::cout.flush();
  while (true) {
    auto channel = listener.accept();
    try {
      serve_tagger(*lb.backend, sha, *channel);
    } catch (const PeerUnavailable& e) {
      fmt::print(std::cerr, "client dropped: {}\n", e.what());
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sentence simplification by iterative edit tagging"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tst 0.1.0");

  Common common;
  app.add_option("--seed", common.seed, "Seed for every random choice")->capture_default_str();
  app.add_option("--parallelism", common.parallelism, "Worker threads for batch inference")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string input = "-";
  std::string output = "-";

  auto* pre = app.add_subcommand("preprocess", "Normalize whitespace and optionally drop bracketed spans");
  int filter = 1;
  pre->add_option("-i,--input", input, "TSV or plain text input");
  pre->add_option("-o,--output", output);
  pre->add_option("--filter-brackets", filter, "Drop -LRB- ... -RRB- spans (0 or 1)")
      ->check(CLI::IsMember({0, 1}))
      ->capture_default_str();

  auto* bv = app.add_subcommand("build-vocab", "Count extracted tags and write the tag vocabulary");
  std::size_t capacity = 5000;
  bv->add_option("-i,--input", input, "Parallel corpus (source<TAB>target)");
  bv->add_option("-o,--output", output);
  bool full_chain = false;
  bv->add_option("--capacity", capacity, "Maximum number of tags")->capture_default_str();
  bv->add_flag("--full-chain", full_chain, "Count the tags of every extract/apply pass, not just the first");

  auto* ts = app.add_subcommand("train-stat", "Train the hashed-feature statistical tagger");
  StatTrainOptions train_opts;
  std::string vocab_path;
  std::string model_out;
  ts->add_option("-i,--input", input, "Parallel corpus (source<TAB>target)")->required();
  ts->add_option("--vocab", vocab_path)->required();
  ts->add_option("-o,--output", model_out, "Model file")->required();
  ts->add_option("--epochs", train_opts.epochs)->check(CLI::NonNegativeNumber)->capture_default_str();
  ts->add_option("--lr", train_opts.learning_rate)->check(CLI::PositiveNumber)->capture_default_str();
  ts->add_option("--hash-bits", train_opts.hash_bits)->check(CLI::Range(4, 28))->capture_default_str();

  auto* simp = app.add_subcommand("simplify", "Simplify one sentence per line");
  BackendArgs simp_backend;
  ConfigArgs simp_cfg;
  std::string trace_path;
  std::size_t batch_size = 128;
  simp->add_option("-i,--input", input);
  simp->add_option("-o,--output", output);
  simp->add_option("--trace", trace_path, "Write per-sentence traces as JSON lines");
  simp->add_option("--batch-size", batch_size)->check(CLI::PositiveNumber)->capture_default_str();
  add_backend_options(simp, simp_backend);
  add_config_options(simp, simp_cfg);

  auto* ev = app.add_subcommand("evaluate", "Score source<TAB>system<TAB>refs... records");
  std::string format = "table";
  bool no_fkgl = false;
  ev->add_option("-i,--input", input);
  ev->add_option("-o,--output", output);
  ev->add_option("--format", format)->check(CLI::IsMember({"table", "tsv"}))->capture_default_str();
  ev->add_flag("--no-fkgl", no_fkgl, "Skip FKGL");

  auto* tn = app.add_subcommand("tune", "Search inference tweaks on a dev set (source<TAB>refs...)");
  BackendArgs tune_backend;
  int budget = 50;
  std::string log_path;
  tn->add_option("-i,--input", input, "Dev set")->required();
  tn->add_option("-o,--output", output, "Config file to write");
  tn->add_option("--log", log_path, "TSV log of every evaluated config");
  tn->add_option("--budget", budget)->check(CLI::PositiveNumber)->capture_default_str();
  add_backend_options(tn, tune_backend);

  auto* bn = app.add_subcommand("bench", "Time batched inference per iteration count");
  BackendArgs bench_backend;
  ConfigArgs bench_cfg;
  BenchOptions bench_opts;
  bool bench_early_stop = false;
  bn->add_option("-i,--input", input, "One sentence per line")->required();
  bn->add_option("--batch-size", bench_opts.batch_size)->check(CLI::PositiveNumber)->capture_default_str();
  bn->add_option("--runs", bench_opts.runs)->check(CLI::PositiveNumber)->capture_default_str();
  bn->add_option("--iteration-counts", bench_opts.iterations, "Rows to measure")->capture_default_str();
  bn->add_flag("--early-stop", bench_early_stop, "Let sentences stop at a fixpoint");
  bn->add_option("--format", format)->check(CLI::IsMember({"table", "tsv"}))->capture_default_str();
  add_backend_options(bn, bench_backend);
  add_config_options(bn, bench_cfg);

  auto* sv = app.add_subcommand("serve", "Answer external-tagger requests on stdio or TCP");
  BackendArgs serve_backend;
  std::optional<int> port;
  sv->add_option("--port", port, "Listen on 127.0.0.1:PORT instead of stdio (0 picks one)");
  add_backend_options(sv, serve_backend, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*pre) return run_preprocess(input, output, filter);
    if (*bv) return run_build_vocab(input, output, capacity, full_chain);
    if (*ts) {
      train_opts.seed = common.seed;
      return run_train_stat(input, vocab_path, model_out, train_opts);
    }
    if (*simp) return run_simplify(simp_backend, simp_cfg, common, input, output, trace_path, batch_size);
    if (*ev) return run_evaluate(input, format, no_fkgl, output);
    if (*tn) return run_tune(tune_backend, common, input, budget, output, log_path);
    if (*bn) {
      bench_opts.early_stop = bench_early_stop;
      return run_bench_cmd(bench_backend, bench_cfg, common, input, bench_opts, format);
    }
    if (*sv) return run_serve(serve_backend, common, port);
  } catch (const CLI::ParseError& e) {
    fmt::print(std::cerr, "tst: {}\n", e.what());
    return kExitUsage;
  } catch (const Error& e) {
    fmt::print(std::cerr, "tst: {}\n", e.what());
    return e.category() == ErrorCategory::kBackend ? kExitBackend : kExitData;
  } catch (const std::exception& e) {
    fmt::print(std::cerr, "tst: {}\n", e.what());
    return kExitData;
  }
  return kExitUsage;
}
