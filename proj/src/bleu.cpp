#include "eqmt/bleu.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "eqmt/io_util.hpp"

namespace eqmt {

namespace {

// n-grams keyed by tokens joined with an unprintable separator.
void count_ngrams(const std::vector<std::string>& tokens, std::uint32_t n,
                  std::unordered_map<std::string, std::uint64_t>& out) {
  if (tokens.size() < n) return;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key;
    for (std::uint32_t k = 0; k < n; ++k) {
      if (k) key.push_back('\x1f');
      key += tokens[i + k];
    }
    ++out[key];
  }
}

}  // namespace

BleuReport bleu(const std::vector<std::vector<std::string>>& hypotheses,
                const std::vector<std::vector<std::string>>& references, std::uint32_t max_n) {
  if (max_n < 1) throw std::invalid_argument("bleu: max_n must be >= 1");
  if (hypotheses.size() != references.size())
    throw std::invalid_argument("bleu: hypothesis/reference count mismatch (" +
                                std::to_string(hypotheses.size()) + " vs " +
                                std::to_string(references.size()) + ")");
  if (hypotheses.empty()) throw std::invalid_argument("bleu: empty corpus");

  BleuReport report;
  report.matches.assign(max_n, 0);
  report.totals.assign(max_n, 0);
  report.precisions.assign(max_n, 0.0);

  std::unordered_map<std::string, std::uint64_t> hyp_ngrams, ref_ngrams;
  for (std::size_t s = 0; s < hypotheses.size(); ++s) {
    const auto& hyp = hypotheses[s];
    const auto& ref = references[s];
    report.hyp_tokens += hyp.size();
    report.ref_tokens += ref.size();
    for (std::uint32_t n = 1; n <= max_n; ++n) {
      hyp_ngrams.clear();
      ref_ngrams.clear();
      count_ngrams(hyp, n, hyp_ngrams);
      count_ngrams(ref, n, ref_ngrams);
      for (const auto& [gram, count] : hyp_ngrams) {
        report.totals[n - 1] += count;
        auto it = ref_ngrams.find(gram);
        if (it != ref_ngrams.end()) report.matches[n - 1] += std::min(count, it->second);
      }
    }
  }

  const double c = static_cast<double>(report.hyp_tokens);
  const double r = static_cast<double>(report.ref_tokens);
  if (report.hyp_tokens == 0) {
    report.brevity_penalty = 0.0;
    report.score = 0.0;
    for (std::uint32_t n = 0; n < max_n; ++n) report.precisions[n] = report.totals[n] ? 0.0 : 1.0;
    return report;
  }
  report.brevity_penalty = c > r ? 1.0 : std::exp(1.0 - r / c);

  // Orders with no hypothesis n-grams at all carry precision 1 (vacuously
  // perfect) so that score = BP * exp(mean ln p_n) * 100 holds verbatim and a
  // corpus matching its reference always scores 100.
  double log_sum = 0.0;
  bool zero = false;
  for (std::uint32_t n = 0; n < max_n; ++n) {
    if (report.totals[n] == 0) {
      report.precisions[n] = 1.0;
      continue;
    }
    double p = static_cast<double>(report.matches[n]) / static_cast<double>(report.totals[n]);
    report.precisions[n] = p;
    if (p == 0.0)
      zero = true;
    else
      log_sum += std::log(p);
  }
  if (zero) {
    report.score = 0.0;
  } else {
    report.score = report.brevity_penalty * std::exp(log_sum / max_n) * 100.0;
  }
  return report;
}

std::string BleuReport::to_json() const {
  std::string out = "{\"bleu\": " + format_g6(score);
  out += ", \"precisions\": [";
  for (std::size_t i = 0; i < precisions.size(); ++i) {
    if (i) out += ", ";
    out += format_g6(precisions[i]);
  }
  out += "], \"brevity_penalty\": " + format_g6(brevity_penalty);
  out += ", \"hyp_tokens\": " + std::to_string(hyp_tokens);
  out += ", \"ref_tokens\": " + std::to_string(ref_tokens);
  out += ", \"matches\": [";
  for (std::size_t i = 0; i < matches.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(matches[i]);
  }
  out += "], \"totals\": [";
  for (std::size_t i = 0; i < totals.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(totals[i]);
  }
  out += "]}";
  return out;
}

}  // namespace eqmt
