#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "eqmt/cooc.hpp"
#include "eqmt/embedding.hpp"
#include "eqmt/lexicon.hpp"
#include "eqmt/vocab.hpp"

namespace eqmt {

struct GloveConfig {
  std::uint32_t dim = 64;
  double x_max = 10.0;
  double alpha = 0.75;
  std::uint32_t max_iter = 15;
  double learning_rate = 0.05;
  std::uint64_t seed = 1;
  unsigned threads = 1;  // > 1 trades bit-reproducibility for speed

  void validate() const;
};

// Extra gender terms: the gender coordinate (last dimension) of male seed
// words is pulled toward +beta, female toward -beta, neutral toward 0.
struct GnGloveConfig {
  GloveConfig base;
  double lambda_d = 1.0;
  double lambda_e = 1.0;
  double beta = 1.0;

  void validate() const;
};

// Weighting f(x) = (x/x_max)^alpha for x < x_max, else 1.
double glove_weight(double x, double x_max, double alpha);

// Training-time parameters, exposed so tests can evaluate the objective at
// chosen points. Main/context vectors are V x dim row-major.
struct GloveParams {
  std::uint32_t dim = 0;
  std::vector<double> main_vec, ctx_vec;
  std::vector<double> main_bias, ctx_bias;
};

// Mean per-entry objective f(X)(w.w~ + b + b~ - ln X)^2 at the given point.
double glove_objective(const CoocMatrix& cooc, const GloveParams& params, const GloveConfig& cfg);

struct GloveTrainResult {
  EmbeddingSet embeddings;              // non-special words, export = w + w~
  std::vector<double> epoch_loss;       // mean objective per epoch
  std::uint32_t missing_seed_words = 0; // lexicon words absent from the vocabulary
};

GloveTrainResult train_glove(const CoocMatrix& cooc, const Vocabulary& vocab,
                             const GloveConfig& cfg);

// Same pass as train_glove plus, after each epoch, one adaptive-gradient step
// of the gender terms on the seed/neutral words' gender coordinate. With both
// lambdas zero the loss trace is bit-identical to train_glove.
GloveTrainResult train_gn_glove(const CoocMatrix& cooc, const Vocabulary& vocab,
                                const GenderLexicon& lexicon, const GnGloveConfig& cfg);

// TSV `epoch<TAB>mean_loss`.
void save_loss_trace(const std::filesystem::path& path, const std::vector<double>& losses);

}  // namespace eqmt
