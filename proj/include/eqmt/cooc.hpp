#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "eqmt/vocab.hpp"

namespace eqmt {

// Sparse symmetric word-word co-occurrence weights. Both (i,j) and (j,i) are
// stored; zero entries are absent.
struct CoocMatrix {
  std::uint32_t vocab_size = 0;
  std::unordered_map<std::uint64_t, double> entries;

  static std::uint64_t key(std::uint32_t i, std::uint32_t j) {
    return (static_cast<std::uint64_t>(i) << 32) | j;
  }
  static std::pair<std::uint32_t, std::uint32_t> split_key(std::uint64_t k) {
    return {static_cast<std::uint32_t>(k >> 32), static_cast<std::uint32_t>(k & 0xffffffffu)};
  }

  double at(std::uint32_t i, std::uint32_t j) const;
  void add(std::uint32_t i, std::uint32_t j, double w);

  // Entries ordered by (i, j); the canonical iteration/serialization order.
  std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> sorted_entries() const;

  double total_weight() const;

  void save(const std::filesystem::path& path) const;
  static CoocMatrix load(const std::filesystem::path& path);
};

// Windowed co-occurrence counting. Distances are measured over original token
// positions; out-of-vocabulary and special tokens contribute no pairs. Each
// ordered pair within the window adds 1/dist (or 1 without distance
// weighting), so the matrix is exactly symmetric. Window state never crosses
// sentence boundaries. threads > 1 shards by sentence ranges and merges the
// partial maps in shard order.
CoocMatrix count_cooccurrences(const std::vector<std::vector<std::string>>& corpus,
                               const Vocabulary& vocab, std::uint32_t window,
                               bool distance_weighting, unsigned threads = 1);

}  // namespace eqmt
