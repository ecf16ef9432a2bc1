#include "eqmt/vocab.hpp"

#include <algorithm>
#include <stdexcept>

#include "eqmt/io_util.hpp"

namespace eqmt {

const char* Vocabulary::special_name(std::uint32_t id) {
  switch (id) {
    case kUnk: return "<unk>";
    case kPad: return "<pad>";
    case kBos: return "<s>";
    case kEos: return "</s>";
    default: throw std::invalid_argument("not a special token id");
  }
}

std::optional<std::uint32_t> Vocabulary::lookup(const std::string& token) const {
  auto it = index.find(token);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::uint32_t Vocabulary::id_or_unk(const std::string& token) const {
  auto it = index.find(token);
  return it == index.end() ? kUnk : it->second;
}

Vocabulary Vocabulary::build(const std::vector<std::vector<std::string>>& corpus,
                             std::uint64_t min_count) {
  if (min_count < 1) throw std::invalid_argument("min_count must be >= 1");
  std::unordered_map<std::string, std::uint64_t> freq;
  for (const auto& sentence : corpus) {
    for (const auto& token : sentence) ++freq[token];
  }

  std::vector<std::pair<std::string, std::uint64_t>> kept;
  kept.reserve(freq.size());
  for (auto& [token, count] : freq) {
    if (count < min_count) continue;
    // A literal special token in raw text would collide with the reserved
    // indices; drop it.
    bool special = false;
    for (std::uint32_t s = 0; s < kNumSpecials; ++s) {
      if (token == special_name(s)) special = true;
    }
    if (!special) kept.emplace_back(token, count);
  }
  if (kept.empty()) throw std::runtime_error("empty vocabulary");

  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });

  Vocabulary vocab;
  for (std::uint32_t s = 0; s < kNumSpecials; ++s) {
    vocab.tokens.emplace_back(special_name(s));
    vocab.counts.push_back(0);
  }
  for (auto& [token, count] : kept) {
    vocab.tokens.push_back(token);
    vocab.counts.push_back(count);
  }
  for (std::uint32_t i = 0; i < vocab.size(); ++i) vocab.index[vocab.tokens[i]] = i;
  return vocab;
}

void Vocabulary::save(const std::filesystem::path& path) const {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    out += tokens[i];
    out.push_back(' ');
    out += std::to_string(counts[i]);
    out.push_back('\n');
  }
  write_file(path, out);
}

Vocabulary Vocabulary::load(const std::filesystem::path& path) {
  Vocabulary vocab;
  for (const auto& line : read_lines(path)) {
    if (line.empty()) continue;
    std::size_t sp = line.rfind(' ');
    if (sp == std::string::npos) throw std::runtime_error("bad vocabulary line: " + line);
    std::string token = line.substr(0, sp);
    std::uint64_t count = std::stoull(line.substr(sp + 1));
    if (vocab.index.count(token)) throw std::runtime_error("duplicate vocabulary token: " + token);
    vocab.index[token] = vocab.size();
    vocab.tokens.push_back(token);
    vocab.counts.push_back(count);
  }
  if (vocab.size() < kNumSpecials) throw std::runtime_error("vocabulary file missing special tokens");
  for (std::uint32_t s = 0; s < kNumSpecials; ++s) {
    if (vocab.tokens[s] != special_name(s))
      throw std::runtime_error("vocabulary file: index " + std::to_string(s) + " must be " +
                               std::string(special_name(s)));
  }
  return vocab;
}

}  // namespace eqmt
