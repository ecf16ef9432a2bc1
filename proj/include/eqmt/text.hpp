#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace eqmt {

// Rule-based tokenizer: whitespace split, punctuation peeled off word
// boundaries, "'ve" / "'s" clitics split, everything else (including internal
// apostrophes and hyphens) kept intact. Empty input yields an empty sequence.
std::vector<std::string> tokenize(std::string_view text, bool lowercase);

// ASCII plus Latin-1 accented letters (two-byte UTF-8).
std::string lowercase_utf8(std::string_view text);

std::string join_tokens(const std::vector<std::string>& tokens);

// One sentence per line, tokenized; empty lines dropped.
std::vector<std::vector<std::string>> read_tokenized_corpus(const std::filesystem::path& path,
                                                            bool lowercase);

}  // namespace eqmt
