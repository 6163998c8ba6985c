#include "whyqa/relatedness.hpp"

#include <cmath>
#include <fstream>
#include <future>
#include <stdexcept>
#include <thread>
#include <vector>

#include "whyqa/binio.hpp"
#include "whyqa/corpus.hpp"

namespace whyqa {

namespace {

constexpr char kMagic[4] = {'W', 'Q', 'P', 'S'};
constexpr std::uint32_t kFormatVersion = 1;

template <typename Key>
void merge_counts(std::map<Key, std::uint64_t>& into,
                  const std::map<Key, std::uint64_t>& from) {
  for (const auto& [key, count] : from) into[key] += count;
}

}  // namespace

std::uint64_t PmiStats::uni_count(const Token& t) const {
  auto it = uni.find(t);
  return it == uni.end() ? 0 : it->second;
}

std::uint64_t PmiStats::adj_count(const Token& a, const Token& b) const {
  auto it = adj.find(a <= b ? std::make_pair(a, b) : std::make_pair(b, a));
  return it == adj.end() ? 0 : it->second;
}

std::uint64_t PmiStats::big_count(const Bigram& b) const {
  auto it = big.find(b);
  return it == big.end() ? 0 : it->second;
}

std::uint64_t PmiStats::bigpair_count(const Bigram& a, const Bigram& b) const {
  if (a == b) return big_count(a);  // both-occur-twice degenerates to CW(B)
  auto it = bigpair.find(a <= b ? std::make_pair(a, b) : std::make_pair(b, a));
  return it == bigpair.end() ? 0 : it->second;
}

PmiStats count_document(const std::string& text) {
  PmiStats contribution;
  contribution.n_docs = 1;

  SentenceList doc = segment(text);
  std::map<Token, std::uint64_t> token_freq;
  std::map<std::pair<Token, Token>, std::uint64_t> pair_freq;
  std::map<Bigram, std::uint64_t> bigram_freq;
  for (const auto& sentence : doc.sentences) {
    for (std::size_t i = 0; i < sentence.size(); ++i) {
      ++token_freq[sentence[i]];
      if (i + 1 < sentence.size()) {
        const Token& a = sentence[i];
        const Token& b = sentence[i + 1];
        ++pair_freq[a <= b ? std::make_pair(a, b) : std::make_pair(b, a)];
        ++bigram_freq[{a, b}];
      }
    }
  }

  for (const auto& [token, freq] : token_freq)
    if (freq >= 2) contribution.uni[token] = 1;
  for (const auto& [pair, freq] : pair_freq)
    if (freq >= 2) contribution.adj[pair] = 1;
  for (const auto& [bigram, freq] : bigram_freq)
    if (freq >= 2) contribution.big[bigram] = 1;

  // All pairs of this document's qualifying bigrams. Restricting pairs to
  // one document keeps the table far below the full cross-product.
  for (auto it = contribution.big.begin(); it != contribution.big.end(); ++it) {
    for (auto jt = std::next(it); jt != contribution.big.end(); ++jt)
      contribution.bigpair[{it->first, jt->first}] = 1;
  }
  return contribution;
}

PmiStats build_stats(const std::string& reference_corpus_path) {
  std::vector<Document> docs = load_corpus(reference_corpus_path);

  std::size_t worker_count =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), docs.size());
  std::size_t chunk = (docs.size() + worker_count - 1) / worker_count;

  std::vector<std::future<PmiStats>> partials;
  for (std::size_t begin = 0; begin < docs.size(); begin += chunk) {
    std::size_t end = std::min(begin + chunk, docs.size());
    partials.push_back(std::async(std::launch::async, [&docs, begin, end] {
      PmiStats part;
      for (std::size_t i = begin; i < end; ++i) {
        PmiStats one = count_document(docs[i].text);
        part.n_docs += 1;
        merge_counts(part.uni, one.uni);
        merge_counts(part.adj, one.adj);
        merge_counts(part.big, one.big);
        merge_counts(part.bigpair, one.bigpair);
      }
      return part;
    }));
  }

  PmiStats stats;
  for (auto& future : partials) {
    PmiStats part = future.get();
    stats.n_docs += part.n_docs;
    merge_counts(stats.uni, part.uni);
    merge_counts(stats.adj, part.adj);
    merge_counts(stats.big, part.big);
    merge_counts(stats.bigpair, part.bigpair);
  }
  return stats;
}

namespace {

std::optional<double> pmi_value(std::uint64_t n, std::uint64_t joint,
                                std::uint64_t left, std::uint64_t right) {
  if (joint == 0 || left == 0 || right == 0) return std::nullopt;
  return std::log2(static_cast<double>(n) * static_cast<double>(joint) /
                   (static_cast<double>(left) * static_cast<double>(right)));
}

}  // namespace

std::optional<double> semantic_pmi(const PmiStats& stats, const Token& t_i,
                                   const Token& t_j) {
  return pmi_value(stats.n_docs, stats.adj_count(t_i, t_j),
                   stats.uni_count(t_i), stats.uni_count(t_j));
}

std::optional<double> topical_pmi(const PmiStats& stats, const Bigram& b1,
                                  const Bigram& b2) {
  return pmi_value(stats.n_docs, stats.bigpair_count(b1, b2),
                   stats.big_count(b1), stats.big_count(b2));
}

void save_stats(const PmiStats& stats, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write stats file: " + path);
  out.write(kMagic, 4);
  binio::write_u32(out, kFormatVersion);
  binio::write_u64(out, stats.n_docs);
  binio::write_u32(out, stats.tokenizer_version);
  binio::write_u32(out, stats.min_occurrence);

  binio::write_u64(out, stats.uni.size());
  for (const auto& [token, count] : stats.uni) {
    binio::write_string(out, token);
    binio::write_u64(out, count);
  }
  binio::write_u64(out, stats.adj.size());
  for (const auto& [pair, count] : stats.adj) {
    binio::write_string(out, pair.first);
    binio::write_string(out, pair.second);
    binio::write_u64(out, count);
  }
  binio::write_u64(out, stats.big.size());
  for (const auto& [bigram, count] : stats.big) {
    binio::write_string(out, bigram.first);
    binio::write_string(out, bigram.second);
    binio::write_u64(out, count);
  }
  binio::write_u64(out, stats.bigpair.size());
  for (const auto& [pair, count] : stats.bigpair) {
    binio::write_string(out, pair.first.first);
    binio::write_string(out, pair.first.second);
    binio::write_string(out, pair.second.first);
    binio::write_string(out, pair.second.second);
    binio::write_u64(out, count);
  }
  if (!out) throw std::runtime_error("failed writing stats file: " + path);
}

PmiStats load_stats(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open stats file: " + path);
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0)
    throw std::runtime_error("not a stats file: " + path);
  std::uint32_t version = binio::read_u32(in);
  if (version != kFormatVersion)
    throw std::runtime_error("unsupported stats file version " + std::to_string(version));

  PmiStats stats;
  stats.n_docs = binio::read_u64(in);
  stats.tokenizer_version = binio::read_u32(in);
  stats.min_occurrence = binio::read_u32(in);
  if (stats.tokenizer_version != kTokenizerVersion)
    throw std::runtime_error("stats file was built with tokenizer version " +
                             std::to_string(stats.tokenizer_version) +
                             ", expected " + std::to_string(kTokenizerVersion));

  for (std::uint64_t i = 0, n = binio::read_u64(in); i < n; ++i) {
    Token token = binio::read_string(in);
    stats.uni[std::move(token)] = binio::read_u64(in);
  }
  for (std::uint64_t i = 0, n = binio::read_u64(in); i < n; ++i) {
    Token a = binio::read_string(in);
    Token b = binio::read_string(in);
    stats.adj[{std::move(a), std::move(b)}] = binio::read_u64(in);
  }
  for (std::uint64_t i = 0, n = binio::read_u64(in); i < n; ++i) {
    Token a = binio::read_string(in);
    Token b = binio::read_string(in);
    stats.big[{std::move(a), std::move(b)}] = binio::read_u64(in);
  }
  for (std::uint64_t i = 0, n = binio::read_u64(in); i < n; ++i) {
    Token a = binio::read_string(in);
    Token b = binio::read_string(in);
    Token c = binio::read_string(in);
    Token d = binio::read_string(in);
    stats.bigpair[{{std::move(a), std::move(b)}, {std::move(c), std::move(d)}}] =
        binio::read_u64(in);
  }
  return stats;
}

}  // namespace whyqa
