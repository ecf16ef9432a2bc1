#include "eqmt/cooc.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "eqmt/io_util.hpp"

namespace eqmt {

namespace {
constexpr char kMagic[] = "COOC1";
constexpr std::size_t kMagicLen = 5;
}  // namespace

double CoocMatrix::at(std::uint32_t i, std::uint32_t j) const {
  auto it = entries.find(key(i, j));
  return it == entries.end() ? 0.0 : it->second;
}

void CoocMatrix::add(std::uint32_t i, std::uint32_t j, double w) {
  entries[key(i, j)] += w;
  if (i >= vocab_size) vocab_size = i + 1;
  if (j >= vocab_size) vocab_size = j + 1;
}

std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> CoocMatrix::sorted_entries() const {
  std::vector<std::uint64_t> keys;
  keys.reserve(entries.size());
  for (const auto& [k, w] : entries) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> out;
  out.reserve(keys.size());
  for (auto k : keys) {
    auto [i, j] = split_key(k);
    out.emplace_back(i, j, entries.at(k));
  }
  return out;
}

double CoocMatrix::total_weight() const {
  double total = 0.0;
  for (const auto& [k, w] : entries) total += w;
  return total;
}

void CoocMatrix::save(const std::filesystem::path& path) const {
  std::string buf(kMagic, kMagicLen);
  for (const auto& [i, j, w] : sorted_entries()) {
    put_u32(buf, i);
    put_u32(buf, j);
    put_f64(buf, w);
  }
  write_file(path, buf);
}

CoocMatrix CoocMatrix::load(const std::filesystem::path& path) {
  std::string buf = read_file(path);
  if (buf.size() < kMagicLen || buf.compare(0, kMagicLen, kMagic) != 0)
    throw std::runtime_error("bad co-occurrence file (missing COOC1 magic): " + path.string());
  if ((buf.size() - kMagicLen) % 16 != 0)
    throw std::runtime_error("bad co-occurrence file (truncated triple): " + path.string());
  CoocMatrix m;
  std::size_t off = kMagicLen;
  while (off < buf.size()) {
    std::uint32_t i = get_u32(buf, off);
    std::uint32_t j = get_u32(buf, off);
    double w = get_f64(buf, off);
    if (w <= 0.0) throw std::runtime_error("bad co-occurrence file (non-positive weight)");
    m.entries[key(i, j)] = w;
    if (i >= m.vocab_size) m.vocab_size = i + 1;
    if (j >= m.vocab_size) m.vocab_size = j + 1;
  }
  return m;
}

namespace {

void count_range(const std::vector<std::vector<std::string>>& corpus, const Vocabulary& vocab,
                 std::uint32_t window, bool distance_weighting, std::size_t begin, std::size_t end,
                 CoocMatrix& out) {
  std::vector<std::int64_t> ids;
  for (std::size_t s = begin; s < end; ++s) {
    const auto& sentence = corpus[s];
    ids.clear();
    ids.reserve(sentence.size());
    for (const auto& token : sentence) {
      auto id = vocab.lookup(token);
      // OOV tokens and specials keep their position but form no pairs.
      if (id && !Vocabulary::is_special(*id))
        ids.push_back(static_cast<std::int64_t>(*id));
      else
        ids.push_back(-1);
    }
    for (std::size_t p = 0; p < ids.size(); ++p) {
      if (ids[p] < 0) continue;
      std::size_t limit = std::min(ids.size(), p + window + 1);
      for (std::size_t q = p + 1; q < limit; ++q) {
        if (ids[q] < 0) continue;
        double w = distance_weighting ? 1.0 / static_cast<double>(q - p) : 1.0;
        auto i = static_cast<std::uint32_t>(ids[p]);
        auto j = static_cast<std::uint32_t>(ids[q]);
        out.entries[CoocMatrix::key(i, j)] += w;
        out.entries[CoocMatrix::key(j, i)] += w;
      }
    }
  }
}

}  // namespace

CoocMatrix count_cooccurrences(const std::vector<std::vector<std::string>>& corpus,
                               const Vocabulary& vocab, std::uint32_t window,
                               bool distance_weighting, unsigned threads) {
  if (window < 1) throw std::invalid_argument("window must be >= 1");
  CoocMatrix m;
  m.vocab_size = vocab.size();
  if (threads <= 1 || corpus.size() < 2 * threads) {
    count_range(corpus, vocab, window, distance_weighting, 0, corpus.size(), m);
    return m;
  }
  std::vector<CoocMatrix> partials(threads);
  std::vector<std::thread> workers;
  std::size_t chunk = (corpus.size() + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    std::size_t begin = std::min(corpus.size(), static_cast<std::size_t>(t) * chunk);
    std::size_t end = std::min(corpus.size(), begin + chunk);
    workers.emplace_back([&, begin, end, t] {
      count_range(corpus, vocab, window, distance_weighting, begin, end, partials[t]);
    });
  }
  for (auto& w : workers) w.join();
  // Merge in shard order so the result is deterministic for a fixed thread count.
  for (auto& partial : partials) {
    for (const auto& [k, w] : partial.entries) m.entries[k] += w;
  }
  return m;
}

}  // namespace eqmt
