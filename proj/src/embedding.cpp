#include "eqmt/embedding.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "eqmt/io_util.hpp"

namespace eqmt {

std::optional<std::size_t> EmbeddingSet::find(const std::string& word) const {
  auto it = index.find(word);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::span<const double> EmbeddingSet::vector_for(const std::string& word) const {
  auto i = find(word);
  if (!i) throw std::runtime_error("embedding not found for word: " + word);
  return row(*i);
}

void EmbeddingSet::add(const std::string& word, std::span<const double> vec) {
  if (dim == 0) dim = static_cast<std::uint32_t>(vec.size());
  if (vec.size() != dim) throw std::invalid_argument("embedding dimension mismatch for " + word);
  if (index.count(word)) throw std::invalid_argument("duplicate embedding word: " + word);
  index[word] = words.size();
  words.push_back(word);
  values.insert(values.end(), vec.begin(), vec.end());
}

void EmbeddingSet::save(const std::filesystem::path& path) const {
  std::string out;
  out.reserve(words.size() * (8 + dim * 10));
  for (std::size_t i = 0; i < words.size(); ++i) {
    out += words[i];
    auto r = row(i);
    for (std::uint32_t c = 0; c < dim; ++c) {
      out.push_back(' ');
      out += format_g6(r[c]);
    }
    out.push_back('\n');
  }
  write_file(path, out);
}

namespace {

bool is_integer_field(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

EmbeddingSet EmbeddingSet::load(const std::filesystem::path& path) {
  auto lines = read_lines(path);
  EmbeddingSet set;
  std::size_t start = 0;
  if (!lines.empty()) {
    // Optional `count dim` header.
    std::istringstream head(lines[0]);
    std::string a, b, rest;
    if ((head >> a >> b) && !(head >> rest) && is_integer_field(a) && is_integer_field(b)) {
      start = 1;
    }
  }
  std::vector<double> vec;
  for (std::size_t li = start; li < lines.size(); ++li) {
    const std::string& line = lines[li];
    if (line.empty()) continue;
    std::size_t sp = line.find(' ');
    if (sp == std::string::npos)
      throw std::runtime_error("bad embedding line " + std::to_string(li + 1) + " in " +
                               path.string());
    std::string word = line.substr(0, sp);
    vec.clear();
    const char* p = line.c_str() + sp;
    char* end = nullptr;
    while (*p) {
      double v = std::strtod(p, &end);
      if (end == p) break;
      vec.push_back(v);
      p = end;
    }
    if (vec.empty())
      throw std::runtime_error("bad embedding line " + std::to_string(li + 1) + " in " +
                               path.string());
    set.add(word, vec);
  }
  if (set.words.empty()) throw std::runtime_error("empty embedding file: " + path.string());
  return set;
}

}  // namespace eqmt
