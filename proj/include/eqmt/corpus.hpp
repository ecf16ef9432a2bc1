#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace eqmt {

// Line-aligned token sequences. Pairs where either side tokenizes to nothing
// are dropped together, so counts stay equal and no sentence is empty.
struct ParallelCorpus {
  std::vector<std::vector<std::string>> source;
  std::vector<std::vector<std::string>> target;

  std::size_t size() const { return source.size(); }

  static ParallelCorpus load(const std::filesystem::path& source_path,
                             const std::filesystem::path& target_path, bool lowercase);
};

}  // namespace eqmt
