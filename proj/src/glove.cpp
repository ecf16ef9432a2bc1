#include "eqmt/glove.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "eqmt/io_util.hpp"
#include "eqmt/rng.hpp"

namespace eqmt {

void GloveConfig::validate() const {
  if (dim < 2) throw std::invalid_argument("glove: dim must be >= 2");
  if (x_max <= 0) throw std::invalid_argument("glove: x_max must be > 0");
  if (alpha <= 0 || alpha > 1) throw std::invalid_argument("glove: alpha must be in (0,1]");
  if (max_iter < 1) throw std::invalid_argument("glove: max_iter must be >= 1");
  if (learning_rate <= 0) throw std::invalid_argument("glove: learning_rate must be > 0");
}

void GnGloveConfig::validate() const {
  base.validate();
  if (lambda_d < 0 || lambda_e < 0) throw std::invalid_argument("gn-glove: lambdas must be >= 0");
  if (beta <= 0) throw std::invalid_argument("gn-glove: beta must be > 0");
}

double glove_weight(double x, double x_max, double alpha) {
  if (x <= 0.0) return 0.0;
  if (x >= x_max) return 1.0;
  return std::pow(x / x_max, alpha);
}

double glove_objective(const CoocMatrix& cooc, const GloveParams& params, const GloveConfig& cfg) {
  if (cooc.entries.empty()) throw std::invalid_argument("glove: empty co-occurrence matrix");
  const std::uint32_t d = params.dim;
  double total = 0.0;
  for (const auto& [i, j, x] : cooc.sorted_entries()) {
    const double* wi = params.main_vec.data() + static_cast<std::size_t>(i) * d;
    const double* wj = params.ctx_vec.data() + static_cast<std::size_t>(j) * d;
    double dot = 0.0;
    for (std::uint32_t c = 0; c < d; ++c) dot += wi[c] * wj[c];
    double diff = dot + params.main_bias[i] + params.ctx_bias[j] - std::log(x);
    total += glove_weight(x, cfg.x_max, cfg.alpha) * diff * diff;
  }
  return total / static_cast<double>(cooc.entries.size());
}

namespace {

struct TrainState {
  GloveParams p;
  // Accumulated squared gradients, initialized to 1 so the first step is a
  // plain eta * grad and zero gradients never divide by zero.
  std::vector<double> acc_main, acc_ctx, acc_main_bias, acc_ctx_bias;

  explicit TrainState(std::uint32_t vocab_size, std::uint32_t dim, Rng& rng) {
    p.dim = dim;
    std::size_t n = static_cast<std::size_t>(vocab_size) * dim;
    double half = 0.5 / dim;
    auto fill = [&](std::vector<double>& v, std::size_t count) {
      v.resize(count);
      for (auto& x : v) x = rng.uniform(-half, half);
    };
    fill(p.main_vec, n);
    fill(p.ctx_vec, n);
    fill(p.main_bias, vocab_size);
    fill(p.ctx_bias, vocab_size);
    acc_main.assign(n, 1.0);
    acc_ctx.assign(n, 1.0);
    acc_main_bias.assign(vocab_size, 1.0);
    acc_ctx_bias.assign(vocab_size, 1.0);
  }
};

using Entry = std::tuple<std::uint32_t, std::uint32_t, double>;

// One adaptive-gradient pass over `entries[begin:end)`. Returns the summed
// objective evaluated before each update, the convention of the classic
// trainer.
double sparse_pass(TrainState& st, const std::vector<Entry>& entries, std::size_t begin,
                   std::size_t end, const GloveConfig& cfg) {
  const std::uint32_t d = st.p.dim;
  const double eta = cfg.learning_rate;
  double loss = 0.0;
  std::vector<double> grad_i(d), grad_j(d);
  for (std::size_t e = begin; e < end; ++e) {
    const auto& [i, j, x] = entries[e];
    double* wi = st.p.main_vec.data() + static_cast<std::size_t>(i) * d;
    double* wj = st.p.ctx_vec.data() + static_cast<std::size_t>(j) * d;
    double* ai = st.acc_main.data() + static_cast<std::size_t>(i) * d;
    double* aj = st.acc_ctx.data() + static_cast<std::size_t>(j) * d;

    double dot = 0.0;
    for (std::uint32_t c = 0; c < d; ++c) dot += wi[c] * wj[c];
    double diff = dot + st.p.main_bias[i] + st.p.ctx_bias[j] - std::log(x);
    double fdiff = glove_weight(x, cfg.x_max, cfg.alpha) * diff;
    loss += fdiff * diff;

    double gscale = 2.0 * fdiff;
    for (std::uint32_t c = 0; c < d; ++c) {
      grad_i[c] = gscale * wj[c];
      grad_j[c] = gscale * wi[c];
    }
    for (std::uint32_t c = 0; c < d; ++c) {
      ai[c] += grad_i[c] * grad_i[c];
      wi[c] -= eta * grad_i[c] / std::sqrt(ai[c]);
      aj[c] += grad_j[c] * grad_j[c];
      wj[c] -= eta * grad_j[c] / std::sqrt(aj[c]);
    }
    st.acc_main_bias[i] += gscale * gscale;
    st.p.main_bias[i] -= eta * gscale / std::sqrt(st.acc_main_bias[i]);
    st.acc_ctx_bias[j] += gscale * gscale;
    st.p.ctx_bias[j] -= eta * gscale / std::sqrt(st.acc_ctx_bias[j]);
  }
  return loss;
}

struct GenderSeeds {
  std::vector<std::uint32_t> male, female, neutral;
  std::uint32_t missing = 0;
};

GenderSeeds collect_seeds(const Vocabulary& vocab, const GenderLexicon& lexicon) {
  GenderSeeds seeds;
  std::unordered_set<std::uint32_t> seen;
  auto push = [&](const std::string& word, std::vector<std::uint32_t>& dest) {
    auto id = vocab.lookup(word);
    if (!id || Vocabulary::is_special(*id)) {
      ++seeds.missing;
      return;
    }
    if (seen.insert(*id).second) dest.push_back(*id);
  };
  for (const auto& [female, male] : lexicon.definitional_pairs) {
    push(female, seeds.female);
    push(male, seeds.male);
  }
  // Neutral restriction covers every non-special vocabulary word that is not
  // gendered per the lexicon.
  std::vector<std::string> regular(vocab.tokens.begin() + Vocabulary::kNumSpecials,
                                   vocab.tokens.end());
  for (const auto& word : lexicon.neutral_words(regular)) {
    auto id = vocab.lookup(word);
    if (id && !seen.count(*id)) seeds.neutral.push_back(*id);
  }
  return seeds;
}

// One adaptive-gradient step on the combined (main + context) gender
// coordinate of one word. The gradient of the quadratic term is shared by
// both halves; each keeps its own accumulator.
void gender_coordinate_step(TrainState& st, std::uint32_t word, double grad, double eta) {
  const std::uint32_t g = st.p.dim - 1;
  std::size_t off = static_cast<std::size_t>(word) * st.p.dim + g;
  st.acc_main[off] += grad * grad;
  st.p.main_vec[off] -= eta * grad / std::sqrt(st.acc_main[off]);
  st.acc_ctx[off] += grad * grad;
  st.p.ctx_vec[off] -= eta * grad / std::sqrt(st.acc_ctx[off]);
}

double gender_pass(TrainState& st, const GenderSeeds& seeds, const GnGloveConfig& cfg) {
  const std::uint32_t g = st.p.dim - 1;
  const double eta = cfg.base.learning_rate;
  double penalty = 0.0;
  auto coord = [&](std::uint32_t w) {
    std::size_t off = static_cast<std::size_t>(w) * st.p.dim + g;
    return st.p.main_vec[off] + st.p.ctx_vec[off];
  };
  for (auto w : seeds.male) {
    double s = coord(w) - cfg.beta;
    penalty += cfg.lambda_d * s * s;
    gender_coordinate_step(st, w, 2.0 * cfg.lambda_d * s, eta);
  }
  for (auto w : seeds.female) {
    double s = coord(w) + cfg.beta;
    penalty += cfg.lambda_d * s * s;
    gender_coordinate_step(st, w, 2.0 * cfg.lambda_d * s, eta);
  }
  for (auto w : seeds.neutral) {
    double s = coord(w);
    penalty += cfg.lambda_e * s * s;
    gender_coordinate_step(st, w, 2.0 * cfg.lambda_e * s, eta);
  }
  return penalty;
}

GloveTrainResult train_core(const CoocMatrix& cooc, const Vocabulary& vocab,
                            const GnGloveConfig& cfg, const GenderSeeds& seeds,
                            bool mark_gender_coordinate) {
  if (cooc.entries.empty()) throw std::invalid_argument("glove: empty co-occurrence matrix");
  if (cooc.vocab_size > vocab.size())
    throw std::invalid_argument("glove: co-occurrence indices exceed vocabulary size");

  Rng rng(cfg.base.seed);
  TrainState st(vocab.size(), cfg.base.dim, rng);
  std::vector<Entry> entries = cooc.sorted_entries();
  const double n_entries = static_cast<double>(entries.size());

  GloveTrainResult result;
  for (std::uint32_t epoch = 1; epoch <= cfg.base.max_iter; ++epoch) {
    rng.shuffle(entries);
    double loss = 0.0;
    if (cfg.base.threads <= 1 || entries.size() < 4 * cfg.base.threads) {
      loss = sparse_pass(st, entries, 0, entries.size(), cfg.base);
    } else {
      // Benignly racing updates to shared parameters; only the loss-decrease
      // property holds, not bit-reproducibility.
      unsigned threads = cfg.base.threads;
      std::vector<double> partial(threads, 0.0);
      std::vector<std::thread> workers;
      std::size_t chunk = (entries.size() + threads - 1) / threads;
      for (unsigned t = 0; t < threads; ++t) {
        std::size_t begin = std::min(entries.size(), static_cast<std::size_t>(t) * chunk);
        std::size_t end = std::min(entries.size(), begin + chunk);
        workers.emplace_back(
            [&, begin, end, t] { partial[t] = sparse_pass(st, entries, begin, end, cfg.base); });
      }
      for (auto& w : workers) w.join();
      for (double p : partial) loss += p;
    }
    loss += gender_pass(st, seeds, cfg);
    double mean_loss = loss / n_entries;
    if (!std::isfinite(mean_loss))
      throw std::runtime_error("divergence at epoch " + std::to_string(epoch));
    result.epoch_loss.push_back(mean_loss);
  }

  result.missing_seed_words = seeds.missing;
  result.embeddings.dim = cfg.base.dim;
  std::vector<double> vec(cfg.base.dim);
  for (std::uint32_t i = Vocabulary::kNumSpecials; i < vocab.size(); ++i) {
    std::size_t off = static_cast<std::size_t>(i) * cfg.base.dim;
    for (std::uint32_t c = 0; c < cfg.base.dim; ++c)
      vec[c] = st.p.main_vec[off + c] + st.p.ctx_vec[off + c];
    result.embeddings.add(vocab.tokens[i], vec);
  }
  if (mark_gender_coordinate) result.embeddings.gender_coordinate = cfg.base.dim - 1;
  return result;
}

}  // namespace

GloveTrainResult train_glove(const CoocMatrix& cooc, const Vocabulary& vocab,
                             const GloveConfig& cfg) {
  cfg.validate();
  GnGloveConfig gn;
  gn.base = cfg;
  gn.lambda_d = 0.0;
  gn.lambda_e = 0.0;
  return train_core(cooc, vocab, gn, GenderSeeds{}, /*mark_gender_coordinate=*/false);
}

GloveTrainResult train_gn_glove(const CoocMatrix& cooc, const Vocabulary& vocab,
                                const GenderLexicon& lexicon, const GnGloveConfig& cfg) {
  cfg.validate();
  GenderSeeds seeds = collect_seeds(vocab, lexicon);
  if (seeds.missing > 0)
    std::cerr << "gn-glove: " << seeds.missing << " seed words not in vocabulary, skipped\n";
  return train_core(cooc, vocab, cfg, seeds, /*mark_gender_coordinate=*/true);
}

void save_loss_trace(const std::filesystem::path& path, const std::vector<double>& losses) {
  std::string out;
  for (std::size_t i = 0; i < losses.size(); ++i) {
    out += std::to_string(i + 1);
    out.push_back('\t');
    out += format_g6(losses[i]);
    out.push_back('\n');
  }
  write_file(path, out);
}

}  // namespace eqmt
