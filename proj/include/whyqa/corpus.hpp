#ifndef WHYQA_CORPUS_HPP_
#define WHYQA_CORPUS_HPP_

#include <string>
#include <vector>

namespace whyqa {

struct Document {
  std::string id;
  std::string text;
};

/// Loads a corpus from either a directory of UTF-8 .txt files (doc_id =
/// filename stem) or a JSON-lines file with fields id, title, text (the
/// title, when present, becomes the first paragraph). Documents are returned
/// sorted by id. Throws std::runtime_error on unreadable input, duplicate
/// ids, or an empty corpus.
std::vector<Document> load_corpus(const std::string& path);

}  // namespace whyqa

#endif  // WHYQA_CORPUS_HPP_
