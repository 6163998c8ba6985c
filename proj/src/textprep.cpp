#include "whyqa/textprep.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace whyqa {

namespace {

inline bool is_word_char(unsigned char c) {
  if (c >= 0x80) return true;  // inside a UTF-8 multi-byte sequence
  return std::isalnum(c) != 0;
}

inline bool is_sentence_terminator(char c) {
  return c == '.' || c == '!' || c == '?';
}

std::string_view trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  Token current;
  for (char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    if (is_word_char(c)) {
      current.push_back(c < 0x80 ? static_cast<char>(std::tolower(c)) : ch);
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::set<Token> SentenceList::vocabulary() const {
  std::set<Token> vocab;
  for (const auto& sentence : sentences) vocab.insert(sentence.begin(), sentence.end());
  return vocab;
}

namespace {

// Appends the sentence [begin, end) of `text` if it contains any token.
void emit_sentence(SentenceList& out, std::string_view text, std::size_t begin,
                   std::size_t end) {
  std::string_view raw = trim(text.substr(begin, end - begin));
  if (raw.empty()) return;
  auto tokens = tokenize(raw);
  if (tokens.empty()) return;
  out.sentences.push_back(std::move(tokens));
  out.sentence_text.emplace_back(raw);
}

// Splits one paragraph block into sentences.
void segment_block(SentenceList& out, std::string_view text, std::size_t begin,
                   std::size_t end) {
  std::size_t sentence_begin = begin;
  std::size_t i = begin;
  while (i < end) {
    if (is_sentence_terminator(text[i])) {
      std::size_t j = i;
      while (j < end && is_sentence_terminator(text[j])) ++j;
      if (j >= end || std::isspace(static_cast<unsigned char>(text[j]))) {
        emit_sentence(out, text, sentence_begin, j);
        sentence_begin = j;
      }
      i = j;
    } else {
      ++i;
    }
  }
  emit_sentence(out, text, sentence_begin, end);
}

}  // namespace

SentenceList segment(std::string_view text) {
  SentenceList out;
  std::size_t block_begin = 0;
  std::size_t i = 0;
  auto close_block = [&](std::size_t block_end) {
    std::size_t first = out.sentences.size();
    segment_block(out, text, block_begin, block_end);
    if (out.sentences.size() > first)
      out.paragraph_bounds.emplace_back(first, out.sentences.size());
  };
  while (i < text.size()) {
    if (text[i] == '\n') {
      // A line holding only whitespace ends the paragraph.
      std::size_t j = i + 1;
      while (j < text.size() && (text[j] == ' ' || text[j] == '\t' || text[j] == '\r')) ++j;
      if (j < text.size() && text[j] == '\n') {
        close_block(i);
        while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        block_begin = j;
        i = j;
        continue;
      }
    }
    ++i;
  }
  close_block(text.size());
  return out;
}

std::set<Token> root_words(const std::string& question,
                           const std::set<Token>& doc_vocab,
                           const Lexicons& lex) {
  std::set<Token> roots;
  for (const auto& token : tokenize(question)) {
    if (!lex.is_stopword(token) && doc_vocab.count(token) > 0) roots.insert(token);
  }
  return roots;
}

std::unordered_set<Token> load_lexicon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open lexicon file: " + path);
  std::unordered_set<Token> entries;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view sv = trim(line);
    if (sv.empty() || sv.front() == '#') continue;
    entries.emplace(sv);
  }
  return entries;
}

namespace {

std::unordered_set<Token> parse_builtin(const char* blob) {
  std::unordered_set<Token> entries;
  std::istringstream in(blob);
  std::string word;
  while (in >> word) entries.insert(word);
  return entries;
}

// Standard English stopword list (articles, pronouns, auxiliaries,
// prepositions, conjunctions, question words and contraction fragments).
const char* kStopwords = R"(
i me my myself we our ours ourselves you your yours yourself yourselves
he him his himself she her hers herself it its itself they them their
theirs themselves what which who whom this that these those am is are
was were be been being have has had having do does did doing a an the
and but if or because as until while of at by for with about against
between into through during before after above below to from up down
in out on off over under again further then once here there when where
why how all any both each few more most other some such no nor not only
own same so than too very s t d ll m o re ve y can will just don should
now
)";

// Common English verbs, used to split verb tokens into singleton query
// groups. Any externally supplied list overrides this one.
const char* kFrequentVerbs = R"(
go goes going went gone get gets getting got make makes making made take
takes taking took taken come comes coming came see sees seeing saw seen
know knows knowing knew known think thinks thinking thought say says
saying said tell tells telling told give gives giving gave given find
finds finding found want wants wanting wanted use uses using used work
works working worked call calls calling called try tries trying tried
ask asks asking asked need needs needing needed feel feels feeling felt
become becomes becoming became leave leaves leaving left put puts
putting mean means meaning meant keep keeps keeping kept let lets
letting begin begins beginning began begun seem seems seeming seemed
help helps helping helped talk talks talking talked turn turns turning
turned start starts starting started show shows showing showed shown
hear hears hearing heard play plays playing played run runs running ran
move moves moving moved live lives living lived believe believes
believing believed hold holds holding held bring brings bringing
brought happen happens happening happened write writes writing wrote
written sit sits sitting sat stand stands standing stood lose loses
losing lost pay pays paying paid meet meets meeting met include
includes including included continue continues continuing continued set
sets setting learn learns learning learned change changes changing
changed lead leads leading led understand understands understanding
understood watch watches watching watched follow follows following
followed stop stops stopping stopped create creates creating created
speak speaks speaking spoke spoken read reads reading allow allows
allowing allowed add adds adding added spend spends spending spent grow
grows growing grew grown open opens opening opened walk walks walking
walked win wins winning won offer offers offering offered remember
remembers remembering remembered consider considers considering
considered appear appears appearing appeared buy buys buying bought
wait waits waiting waited serve serves serving served die dies dying
died send sends sending sent expect expects expecting expected build
builds building built stay stays staying stayed fall falls falling fell
fallen cut cuts cutting reach reaches reaching reached kill kills
killing killed remain remains remaining remained
)";

}  // namespace

const std::unordered_set<Token>& default_stopwords() {
  static const std::unordered_set<Token> words = parse_builtin(kStopwords);
  return words;
}

const std::unordered_set<Token>& default_frequent_verbs() {
  static const std::unordered_set<Token> verbs = parse_builtin(kFrequentVerbs);
  return verbs;
}

Lexicons load_lexicons(const std::string& stopwords_path,
                       const std::string& verbs_path) {
  Lexicons lex;
  if (stopwords_path.empty()) {
    lex.stopwords = default_stopwords();
    lex.stopwords_source = "builtin";
  } else {
    lex.stopwords = load_lexicon_file(stopwords_path);
    lex.stopwords_source = stopwords_path;
  }
  if (verbs_path.empty()) {
    lex.frequent_verbs = default_frequent_verbs();
    lex.verbs_source = "builtin";
  } else {
    lex.frequent_verbs = load_lexicon_file(verbs_path);
    lex.verbs_source = verbs_path;
  }
  return lex;
}

}  // namespace whyqa
