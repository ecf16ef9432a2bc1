#include "eqmt/lexicon.hpp"

#include <stdexcept>

#include "eqmt/io_util.hpp"

namespace eqmt {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

bool skippable(const std::string& line) { return line.empty() || line[0] == '#'; }

}  // namespace

std::vector<std::pair<std::string, std::string>> GenderLexicon::load_pairs(
    const std::filesystem::path& path) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& raw : read_lines(path)) {
    std::string line = trim(raw);
    if (skippable(line)) continue;
    std::size_t comma = line.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error("bad pair line (expected 'female,male'): " + raw + " in " +
                               path.string());
    std::string female = trim(line.substr(0, comma));
    std::string male = trim(line.substr(comma + 1));
    if (female.empty() || male.empty() || female == male)
      throw std::runtime_error("bad pair line (members must be two distinct words): " + raw);
    pairs.emplace_back(female, male);
  }
  return pairs;
}

std::vector<std::string> GenderLexicon::load_words(const std::filesystem::path& path) {
  std::vector<std::string> words;
  for (const auto& raw : read_lines(path)) {
    std::string line = trim(raw);
    if (skippable(line)) continue;
    words.push_back(line);
  }
  return words;
}

std::unordered_set<std::string> GenderLexicon::gendered_words() const {
  std::unordered_set<std::string> out;
  for (const auto& w : gender_specific) out.insert(w);
  for (const auto& [f, m] : definitional_pairs) {
    out.insert(f);
    out.insert(m);
  }
  for (const auto& [f, m] : equalize_pairs) {
    out.insert(f);
    out.insert(m);
  }
  return out;
}

std::vector<std::string> GenderLexicon::neutral_words(
    const std::vector<std::string>& vocabulary) const {
  auto gendered = gendered_words();
  std::vector<std::string> neutral;
  neutral.reserve(vocabulary.size());
  for (const auto& w : vocabulary) {
    if (!gendered.count(w)) neutral.push_back(w);
  }
  return neutral;
}

GenderLexicon GenderLexicon::load(const std::filesystem::path& dir, const std::string& language) {
  GenderLexicon lex;
  lex.language = language;
  lex.definitional_pairs = load_pairs(dir / "definitional_pairs.txt");
  lex.gender_specific = load_words(dir / "gender_specific.txt");
  lex.equalize_pairs = load_pairs(dir / "equalize_pairs.txt");
  if (lex.definitional_pairs.empty())
    throw std::runtime_error("lexicon has no definitional pairs: " + dir.string());
  return lex;
}

}  // namespace eqmt
