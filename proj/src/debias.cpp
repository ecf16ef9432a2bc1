#include "eqmt/debias.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "eqmt/io_util.hpp"

namespace eqmt {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> v) { return std::sqrt(dot(v, v)); }

}  // namespace

double GenderDirection::dot(std::span<const double> v) const {
  return eqmt::dot(g, v);
}

void DebiasReport::save(const std::filesystem::path& path) const {
  std::string out;
  for (const auto& [item, reason] : skipped) {
    out += item;
    out.push_back('\t');
    out += reason;
    out.push_back('\n');
  }
  write_file(path, out);
}

GenderDirection gender_direction(const EmbeddingSet& emb,
                                 const std::vector<std::pair<std::string, std::string>>& pairs) {
  const std::uint32_t d = emb.dim;
  // Scatter matrix of the pair-centered vectors; each pair contributes
  // +-(f - m)/2.
  std::vector<double> scatter(static_cast<std::size_t>(d) * d, 0.0);
  std::vector<double> start(d, 0.0);
  std::size_t usable = 0;
  std::vector<double> centered(d);
  for (const auto& [female, male] : pairs) {
    auto fi = emb.find(female);
    auto mi = emb.find(male);
    if (!fi || !mi) continue;
    auto fv = emb.row(*fi);
    auto mv = emb.row(*mi);
    for (std::uint32_t c = 0; c < d; ++c) centered[c] = 0.5 * (fv[c] - mv[c]);
    // Both centered vectors of the pair contribute the same rank-1 term.
    for (std::uint32_t r = 0; r < d; ++r) {
      for (std::uint32_t c = 0; c < d; ++c)
        scatter[static_cast<std::size_t>(r) * d + c] += 2.0 * centered[r] * centered[c];
    }
    if (usable == 0) start = centered;
    ++usable;
  }
  if (usable == 0) throw std::runtime_error("no definitional pairs in vocabulary");

  // Power iteration for the top principal component. The start vector is the
  // first pair's centered female vector, which also fixes the outcome inside
  // a degenerate (tied-eigenvalue) subspace.
  double start_norm = norm(start);
  std::vector<double> v(d);
  if (start_norm > 1e-12) {
    for (std::uint32_t c = 0; c < d; ++c) v[c] = start[c] / start_norm;
  } else {
    double u = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::uint32_t c = 0; c < d; ++c) v[c] = u;
  }
  std::vector<double> next(d);
  for (int iter = 0; iter < 1000; ++iter) {
    for (std::uint32_t r = 0; r < d; ++r) {
      double s = 0.0;
      const double* row = scatter.data() + static_cast<std::size_t>(r) * d;
      for (std::uint32_t c = 0; c < d; ++c) s += row[c] * v[c];
      next[r] = s;
    }
    double n = norm(next);
    if (n < 1e-300) break;  // zero scatter, keep the start direction
    double delta = 0.0;
    for (std::uint32_t c = 0; c < d; ++c) {
      next[c] /= n;
      delta += std::abs(next[c] - v[c]);
    }
    // Sign flips between iterations are convergence too.
    double delta_neg = 0.0;
    for (std::uint32_t c = 0; c < d; ++c) delta_neg += std::abs(next[c] + v[c]);
    v = next;
    if (std::min(delta, delta_neg) < 1e-13) break;
  }

  if (eqmt::dot(start, v) < 0) {
    for (auto& c : v) c = -c;
  }
  double n = norm(v);
  for (auto& c : v) c /= n;
  return GenderDirection{std::move(v)};
}

EmbeddingSet neutralize(const EmbeddingSet& emb, const GenderDirection& g,
                        const std::vector<std::string>& neutral_words, DebiasReport* report) {
  EmbeddingSet out = emb;
  for (const auto& word : neutral_words) {
    auto idx = out.find(word);
    if (!idx) {
      if (report) ++report->missing_neutral_words;
      continue;
    }
    auto w = out.row(*idx);
    double proj = g.dot(w);
    double residual_sq = 0.0;
    for (std::size_t c = 0; c < w.size(); ++c) {
      double r = w[c] - proj * g.g[c];
      residual_sq += r * r;
    }
    double residual = std::sqrt(residual_sq);
    if (residual < 1e-12) {
      if (report) report->skipped.emplace_back(word, "parallel to gender direction");
      continue;
    }
    for (std::size_t c = 0; c < w.size(); ++c) w[c] = (w[c] - proj * g.g[c]) / residual;
  }
  return out;
}

EmbeddingSet equalize(const EmbeddingSet& emb, const GenderDirection& g,
                      const std::vector<std::pair<std::string, std::string>>& pairs,
                      DebiasReport* report) {
  EmbeddingSet out = emb;
  const std::uint32_t d = emb.dim;
  std::vector<double> nu(d);
  for (const auto& [a_word, b_word] : pairs) {
    auto ai = out.find(a_word);
    auto bi = out.find(b_word);
    if (!ai || !bi) {
      if (report)
        report->skipped.emplace_back(a_word + "," + b_word, "pair member not in vocabulary");
      continue;
    }
    auto a = out.row(*ai);
    auto b = out.row(*bi);
    double mu_proj = 0.0;
    for (std::uint32_t c = 0; c < d; ++c) {
      double mu_c = 0.5 * (a[c] + b[c]);
      mu_proj += mu_c * g.g[c];
      nu[c] = mu_c;
    }
    double nu_sq = 0.0;
    for (std::uint32_t c = 0; c < d; ++c) {
      nu[c] -= mu_proj * g.g[c];
      nu_sq += nu[c] * nu[c];
    }
    double radical_sq = 1.0 - nu_sq;
    if (radical_sq <= 0.0) {
      radical_sq = 0.0;
      if (report) report->skipped.emplace_back(a_word + "," + b_word, "degenerate (|nu| >= 1)");
    }
    double radical = std::sqrt(radical_sq);
    double a_proj = g.dot(a);
    double b_proj = g.dot(b);
    double a_sign = (a_proj - mu_proj) < 0 ? -1.0 : 1.0;  // sign(0) defaults to +
    double b_sign = (b_proj - mu_proj) < 0 ? -1.0 : 1.0;
    for (std::uint32_t c = 0; c < d; ++c) {
      a[c] = nu[c] + radical * a_sign * g.g[c];
      b[c] = nu[c] + radical * b_sign * g.g[c];
    }
  }
  return out;
}

HardDebiasResult hard_debias(const EmbeddingSet& emb, const GenderLexicon& lexicon) {
  HardDebiasResult result;
  result.direction = gender_direction(emb, lexicon.definitional_pairs);
  auto neutral = lexicon.neutral_words(emb.words);
  EmbeddingSet neutralized = neutralize(emb, result.direction, neutral, &result.report);
  result.embeddings = equalize(neutralized, result.direction, lexicon.equalize_pairs, &result.report);
  return result;
}

double direct_bias(const EmbeddingSet& emb, const GenderDirection& g,
                   const std::vector<std::string>& words) {
  if (words.empty()) throw std::invalid_argument("direct_bias: empty word list");
  double total = 0.0;
  std::size_t used = 0;
  for (const auto& word : words) {
    auto idx = emb.find(word);
    if (!idx) continue;
    auto w = emb.row(*idx);
    double n = norm(w);
    if (n < 1e-12) continue;
    total += std::abs(g.dot(w)) / n;
    ++used;
  }
  if (used == 0) throw std::runtime_error("direct_bias: no listed word in vocabulary");
  return total / static_cast<double>(used);
}

}  // namespace eqmt
