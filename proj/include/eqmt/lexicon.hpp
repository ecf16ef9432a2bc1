#pragma once

#include <filesystem>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace eqmt {

// Word sets driving debiasing: definitional (female, male) pairs, the
// gender-specific word list, and equalize pairs. Neutral words are derived
// against a concrete vocabulary: everything not gender-specific and not a
// member of any pair.
struct GenderLexicon {
  std::string language;
  std::vector<std::pair<std::string, std::string>> definitional_pairs;  // (female, male)
  std::vector<std::string> gender_specific;
  std::vector<std::pair<std::string, std::string>> equalize_pairs;

  // All pair members plus the gender-specific list.
  std::unordered_set<std::string> gendered_words() const;

  // Preserves the order of `vocabulary`.
  std::vector<std::string> neutral_words(const std::vector<std::string>& vocabulary) const;

  // Directory layout: definitional_pairs.txt, gender_specific.txt,
  // equalize_pairs.txt. Pair files hold one `female,male` per line; blank
  // lines and lines starting with '#' are skipped.
  static GenderLexicon load(const std::filesystem::path& dir, const std::string& language);

  static std::vector<std::pair<std::string, std::string>> load_pairs(
      const std::filesystem::path& path);
  static std::vector<std::string> load_words(const std::filesystem::path& path);
};

}  // namespace eqmt
