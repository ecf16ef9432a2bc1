#include "eqmt/corpus.hpp"

#include <stdexcept>

#include "eqmt/io_util.hpp"
#include "eqmt/text.hpp"

namespace eqmt {

ParallelCorpus ParallelCorpus::load(const std::filesystem::path& source_path,
                                    const std::filesystem::path& target_path, bool lowercase) {
  auto src_lines = read_lines(source_path);
  auto tgt_lines = read_lines(target_path);
  if (src_lines.size() != tgt_lines.size())
    throw std::runtime_error("parallel corpus line count mismatch: " + source_path.string() +
                             " has " + std::to_string(src_lines.size()) + ", " +
                             target_path.string() + " has " + std::to_string(tgt_lines.size()));
  ParallelCorpus corpus;
  for (std::size_t i = 0; i < src_lines.size(); ++i) {
    auto src = tokenize(src_lines[i], lowercase);
    auto tgt = tokenize(tgt_lines[i], lowercase);
    if (src.empty() || tgt.empty()) continue;
    corpus.source.push_back(std::move(src));
    corpus.target.push_back(std::move(tgt));
  }
  return corpus;
}

}  // namespace eqmt
