#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "eqmt/embedding.hpp"
#include "eqmt/lexicon.hpp"

namespace eqmt {

// Unit vector along the male-female axis.
struct GenderDirection {
  std::vector<double> g;

  double dot(std::span<const double> v) const;
};

// Items skipped during debiasing, with reasons; written as TSV
// `item<TAB>reason`. Neutral-list words absent from the vocabulary are only
// counted.
struct DebiasReport {
  std::vector<std::pair<std::string, std::string>> skipped;
  std::size_t missing_neutral_words = 0;

  void save(const std::filesystem::path& path) const;
};

// Top principal component of the centered definitional-pair vectors, oriented
// so the female member of the first usable pair projects positively. Pairs
// with a member missing from the vocabulary are ignored; throws
// "no definitional pairs in vocabulary" when none survive.
GenderDirection gender_direction(const EmbeddingSet& emb,
                                 const std::vector<std::pair<std::string, std::string>>& pairs);

// Projects each neutral word off g and renormalizes. Words whose residual is
// shorter than 1e-12 are left unchanged and reported.
EmbeddingSet neutralize(const EmbeddingSet& emb, const GenderDirection& g,
                        const std::vector<std::string>& neutral_words, DebiasReport* report);

// Moves each pair to unit-norm mirror images across the hyperplane orthogonal
// to g. Pairs with a missing member are skipped; pairs whose off-g mean
// reaches the unit sphere are clamped and reported as degenerate.
EmbeddingSet equalize(const EmbeddingSet& emb, const GenderDirection& g,
                      const std::vector<std::pair<std::string, std::string>>& pairs,
                      DebiasReport* report);

struct HardDebiasResult {
  EmbeddingSet embeddings;
  GenderDirection direction;
  DebiasReport report;
};

// gender_direction -> neutralize(derived neutral words) -> equalize.
HardDebiasResult hard_debias(const EmbeddingSet& emb, const GenderLexicon& lexicon);

// Mean |cos(w, g)| over the listed words, vectors normalized on the fly.
double direct_bias(const EmbeddingSet& emb, const GenderDirection& g,
                   const std::vector<std::string>& words);

}  // namespace eqmt
