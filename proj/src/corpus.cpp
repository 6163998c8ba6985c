#include "whyqa/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fs = std::filesystem;

namespace whyqa {

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<Document> load_directory(const fs::path& dir) {
  std::vector<Document> docs;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".txt") continue;
    docs.push_back({entry.path().stem().string(), read_file(entry.path())});
  }
  return docs;
}

std::vector<Document> load_jsonl(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot read file: " + file.string());
  std::vector<Document> docs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::runtime_error("corpus line " + std::to_string(line_no) +
                               " is not valid JSON: " + e.what());
    }
    if (!record.contains("id") || !record.contains("text"))
      throw std::runtime_error("corpus line " + std::to_string(line_no) +
                               " is missing an id or text field");
    Document doc;
    doc.id = record["id"].is_string() ? record["id"].get<std::string>()
                                      : record["id"].dump();
    std::string title = record.value("title", std::string());
    std::string body = record["text"].get<std::string>();
    doc.text = title.empty() ? body : title + "\n\n" + body;
    docs.push_back(std::move(doc));
  }
  return docs;
}

}  // namespace

std::vector<Document> load_corpus(const std::string& path) {
  fs::path p(path);
  if (!fs::exists(p)) throw std::runtime_error("corpus path does not exist: " + path);

  std::vector<Document> docs =
      fs::is_directory(p) ? load_directory(p) : load_jsonl(p);
  if (docs.empty()) throw std::runtime_error("empty corpus: " + path);

  std::sort(docs.begin(), docs.end(),
            [](const Document& a, const Document& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < docs.size(); ++i) {
    if (docs[i].id == docs[i - 1].id)
      throw std::runtime_error("duplicate document id: " + docs[i].id);
  }
  return docs;
}

}  // namespace whyqa
