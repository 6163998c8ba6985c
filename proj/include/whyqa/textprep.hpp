#ifndef WHYQA_TEXTPREP_HPP_
#define WHYQA_TEXTPREP_HPP_

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace whyqa {

// Bumped whenever tokenize/segment rules change; recorded in stats files so
// a stats file can be rejected when the token space no longer matches.
inline constexpr std::uint32_t kTokenizerVersion = 1;

using Token = std::string;

/// Sentence- and paragraph-segmented document text.
struct SentenceList {
  std::vector<std::vector<Token>> sentences;
  std::vector<std::string> sentence_text;  // raw excerpt per sentence
  // [begin, end) sentence-index range per paragraph; contiguous, covering.
  std::vector<std::pair<std::size_t, std::size_t>> paragraph_bounds;

  std::size_t num_sentences() const { return sentences.size(); }
  std::size_t num_paragraphs() const { return paragraph_bounds.size(); }
  bool empty() const { return sentences.empty(); }

  /// All distinct tokens of the document.
  std::set<Token> vocabulary() const;
};

/// Stopword and frequent-verb lists, loaded once and immutable afterwards.
struct Lexicons {
  std::unordered_set<Token> stopwords;
  std::unordered_set<Token> frequent_verbs;
  std::string stopwords_source;  // run metadata: where each list came from
  std::string verbs_source;

  bool is_stopword(const Token& t) const { return stopwords.count(t) > 0; }
  bool is_frequent_verb(const Token& t) const { return frequent_verbs.count(t) > 0; }
};

/// Lowercases and splits on whitespace/punctuation. Tokens are maximal runs
/// of letters and digits (bytes >= 0x80 are kept, so multi-byte UTF-8
/// sequences survive intact). Empty input gives an empty list.
std::vector<Token> tokenize(std::string_view text);

/// Splits text into sentences ('.', '!' or '?' followed by whitespace or end)
/// and paragraphs (blank lines). Trailing text without terminal punctuation
/// forms a final sentence; sentences without any token are dropped.
SentenceList segment(std::string_view text);

/// Non-stopword question tokens that also occur in the document vocabulary.
std::set<Token> root_words(const std::string& question,
                           const std::set<Token>& doc_vocab,
                           const Lexicons& lex);

/// Reads a lexicon file: UTF-8, one lowercase token per line, '#' comments
/// ignored. Throws std::runtime_error if the file cannot be opened.
std::unordered_set<Token> load_lexicon_file(const std::string& path);

/// Built-in default lists, used when no file is supplied on the command line.
const std::unordered_set<Token>& default_stopwords();
const std::unordered_set<Token>& default_frequent_verbs();

/// Lexicons from files, falling back to the built-in lists for empty paths.
Lexicons load_lexicons(const std::string& stopwords_path,
                       const std::string& verbs_path);

}  // namespace whyqa

#endif  // WHYQA_TEXTPREP_HPP_
