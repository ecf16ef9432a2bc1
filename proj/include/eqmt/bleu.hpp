#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace eqmt {

// Corpus-level clipped n-gram precisions with brevity penalty, no smoothing.
// Orders with no hypothesis n-grams at all are vacuous and excluded from the
// geometric mean (their precision is reported as 1); any included precision
// of zero makes the score 0.
struct BleuReport {
  std::vector<double> precisions;        // p1..p_max_n
  std::vector<std::uint64_t> matches;    // clipped matches per order
  std::vector<std::uint64_t> totals;     // hypothesis n-gram counts per order
  double brevity_penalty = 0.0;
  double score = 0.0;                    // [0, 100]
  std::uint64_t hyp_tokens = 0;
  std::uint64_t ref_tokens = 0;

  std::string to_json() const;  // single line
};

BleuReport bleu(const std::vector<std::vector<std::string>>& hypotheses,
                const std::vector<std::vector<std::string>>& references,
                std::uint32_t max_n = 4);

}  // namespace eqmt
