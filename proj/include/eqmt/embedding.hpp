#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace eqmt {

// Dense per-word vectors of fixed dimension. Row order is the file/export
// order and is preserved by every transform.
struct EmbeddingSet {
  std::uint32_t dim = 0;
  std::vector<std::string> words;
  std::vector<double> values;  // row-major, words.size() x dim
  std::unordered_map<std::string, std::size_t> index;
  std::optional<std::uint32_t> gender_coordinate;

  std::size_t size() const { return words.size(); }

  std::span<double> row(std::size_t i) { return {values.data() + i * dim, dim}; }
  std::span<const double> row(std::size_t i) const { return {values.data() + i * dim, dim}; }

  std::optional<std::size_t> find(const std::string& word) const;
  std::span<const double> vector_for(const std::string& word) const;  // throws if absent

  void add(const std::string& word, std::span<const double> vec);

  // GloVe-compatible text: one `word v1 .. vd` line per word, 6 significant
  // digits, no header.
  void save(const std::filesystem::path& path) const;
  // Accepts both headerless files and files with a leading `count dim` line.
  static EmbeddingSet load(const std::filesystem::path& path);
};

}  // namespace eqmt
