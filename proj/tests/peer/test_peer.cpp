// Scripted external tagger for protocol tests.
//
//   test_peer MODE VOCAB_SHA NUM_CLASSES
//
// Speaks the line protocol on stdin/stdout. In mode "ok" it answers every
// request with KEEP one-hots; the other modes break one rule each.

#include <iostream>
#include <string>

#include <nlohmann/json.hpp>

using nlohmann::json;

namespace {

json keep_prediction(std::size_t tokens, std::size_t classes, double keep_mass) {
  json detect = json::array();
  json dist = json::array();
  for (std::size_t i = 0; i < tokens; ++i) {
    detect.push_back(0.0);
    json row = json::array();
    for (std::size_t c = 0; c < classes; ++c) row.push_back(c == 0 ? keep_mass : 0.0);
    dist.push_back(row);
  }
  return {{"detect", detect}, {"dist", dist}};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 4) {
    std::cerr << "usage: test_peer MODE VOCAB_SHA NUM_CLASSES\n";
    return 2;
  }
  const std::string mode = argv[1];
  const std::string sha = argv[2];
  const std::size_t classes = std::stoul(argv[3]);

  std::string line;
  if (!std::getline(std::cin, line)) return 0;
  json hello = {{"hello", {{"vocab_sha256", mode == "vocab" ? std::string(64, '0') : sha}}}};
  std::cout << hello.dump() << std::endl;
  if (mode == "die") return 0;

  while (std::getline(std::cin, line)) {
    const json req = json::parse(line);
    const auto id = req.at("id").get<std::uint64_t>();
    const auto& sentences = req.at("sentences");
    if (mode == "garbage") {
      std::cout << "this is not json" << std::endl;
      continue;
    }
    if (mode == "error") {
      std::cout << json{{"id", id}, {"error", "model exploded"}}.dump() << std::endl;
      continue;
    }
    json preds = json::array();
    for (const auto& s : sentences) preds.push_back(keep_prediction(s.size(), classes, mode == "badsum" ? 0.5 : 1.0));
    if (mode == "short" && !preds.empty()) preds.erase(preds.size() - 1);
    if (mode == "badshape" && !preds.empty()) preds[0] = keep_prediction(sentences[0].size() + 1, classes, 1.0);
    const std::uint64_t echoed = mode == "badid" ? id + 7 : id;
    std::cout << json{{"id", echoed}, {"predictions", preds}}.dump() << std::endl;
  }
  return 0;
}
