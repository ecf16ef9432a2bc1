#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace eqmt {

// Token-to-index map with frequency counts. Indices 0..3 are reserved for the
// special tokens; regular tokens follow ordered by descending count, ties
// broken lexicographically, so vocabulary files are byte-stable.
struct Vocabulary {
  static constexpr std::uint32_t kUnk = 0;
  static constexpr std::uint32_t kPad = 1;
  static constexpr std::uint32_t kBos = 2;
  static constexpr std::uint32_t kEos = 3;
  static constexpr std::uint32_t kNumSpecials = 4;

  static const char* special_name(std::uint32_t id);

  std::vector<std::string> tokens;       // index -> token, specials first
  std::vector<std::uint64_t> counts;     // aligned with tokens, specials 0
  std::unordered_map<std::string, std::uint32_t> index;

  std::uint32_t size() const { return static_cast<std::uint32_t>(tokens.size()); }
  bool contains(const std::string& token) const { return index.count(token) != 0; }
  std::optional<std::uint32_t> lookup(const std::string& token) const;
  std::uint32_t id_or_unk(const std::string& token) const;
  static bool is_special(std::uint32_t id) { return id < kNumSpecials; }

  static Vocabulary build(const std::vector<std::vector<std::string>>& corpus,
                          std::uint64_t min_count);

  void save(const std::filesystem::path& path) const;
  static Vocabulary load(const std::filesystem::path& path);
};

}  // namespace eqmt
