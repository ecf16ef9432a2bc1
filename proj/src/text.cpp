#include "eqmt/text.hpp"

#include <cctype>

#include "eqmt/io_util.hpp"

namespace eqmt {

namespace {

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// Splittable single-byte punctuation. Apostrophes and hyphens are handled
// separately so contractions and compounds survive.
bool is_split_punct(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  if (u >= 128) return false;
  if (c == '\'') return false;
  return std::ispunct(u) != 0;
}

// Multi-byte punctuation that gets split off as its own token. Returns the
// byte length of the mark at s[i], or 0.
std::size_t multibyte_punct_len(std::string_view s, std::size_t i) {
  unsigned char b0 = static_cast<unsigned char>(s[i]);
  if (b0 == 0xC2 && i + 1 < s.size()) {
    unsigned char b1 = static_cast<unsigned char>(s[i + 1]);
    if (b1 == 0xBF || b1 == 0xA1 || b1 == 0xAB || b1 == 0xBB) return 2;  // ¿ ¡ « »
  }
  if (b0 == 0xE2 && i + 2 < s.size() && static_cast<unsigned char>(s[i + 1]) == 0x80) {
    unsigned char b2 = static_cast<unsigned char>(s[i + 2]);
    // “ ” ‘ … — –
    if (b2 == 0x9C || b2 == 0x9D || b2 == 0x98 || b2 == 0xA6 || b2 == 0x94 || b2 == 0x93)
      return 3;
  }
  return 0;
}

bool has_suffix_ci(std::string_view s, std::string_view suffix) {
  if (s.size() < suffix.size()) return false;
  std::size_t base = s.size() - suffix.size();
  for (std::size_t i = 0; i < suffix.size(); ++i) {
    char a = s[base + i];
    if (a >= 'A' && a <= 'Z') a = static_cast<char>(a + 32);
    if (a != suffix[i]) return false;
  }
  return true;
}

// Emit a whitespace-free chunk as one or more tokens.
void emit_chunk(std::string_view chunk, std::vector<std::string>& out) {
  if (chunk.empty()) return;

  // Leading punctuation, one token per mark.
  std::size_t begin = 0;
  while (begin < chunk.size()) {
    if (std::size_t n = multibyte_punct_len(chunk, begin)) {
      out.emplace_back(chunk.substr(begin, n));
      begin += n;
    } else if (is_split_punct(chunk[begin]) || chunk[begin] == '\'') {
      out.emplace_back(1, chunk[begin]);
      ++begin;
    } else {
      break;
    }
  }
  chunk.remove_prefix(begin);
  if (chunk.empty()) return;

  // Trailing punctuation, collected then emitted in order after the core.
  std::vector<std::string> tail;
  while (!chunk.empty()) {
    char back = chunk.back();
    if (is_split_punct(back) || back == '\'') {
      // Only treat a trailing apostrophe as punctuation if it is not part of
      // a clitic we are about to split ("'s" / "'ve" keep theirs).
      tail.emplace_back(1, back);
      chunk.remove_suffix(1);
      continue;
    }
    // Multi-byte trailing marks.
    bool stripped = false;
    for (std::size_t len = 2; len <= 3 && len <= chunk.size(); ++len) {
      std::size_t pos = chunk.size() - len;
      if (multibyte_punct_len(chunk, pos) == len) {
        tail.emplace_back(chunk.substr(pos, len));
        chunk.remove_suffix(len);
        stripped = true;
        break;
      }
    }
    if (!stripped) break;
  }

  if (!chunk.empty()) {
    // Clitic split: possessive "'s" and contraction "'ve".
    if (chunk.size() > 2 && has_suffix_ci(chunk, "'s")) {
      out.emplace_back(chunk.substr(0, chunk.size() - 2));
      out.emplace_back(chunk.substr(chunk.size() - 2));
    } else if (chunk.size() > 3 && has_suffix_ci(chunk, "'ve")) {
      out.emplace_back(chunk.substr(0, chunk.size() - 3));
      out.emplace_back(chunk.substr(chunk.size() - 3));
    } else {
      out.emplace_back(chunk);
    }
  }
  for (auto it = tail.rbegin(); it != tail.rend(); ++it) out.push_back(std::move(*it));
}

// Normalize U+2019 (right single quote) to an ASCII apostrophe so curly-quote
// contractions tokenize the same as plain ones.
std::string normalize_apostrophes(std::string_view text) {
  std::string result;
  result.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x80 &&
        static_cast<unsigned char>(text[i + 2]) == 0x99) {
      result.push_back('\'');
      i += 3;
    } else {
      result.push_back(text[i]);
      ++i;
    }
  }
  return result;
}

}  // namespace

std::string lowercase_utf8(std::string_view text) {
  std::string result(text);
  for (std::size_t i = 0; i < result.size(); ++i) {
    char& c = result[i];
    if (c >= 'A' && c <= 'Z') {
      c = static_cast<char>(c + 32);
    } else if (static_cast<unsigned char>(c) == 0xC3 && i + 1 < result.size()) {
      // U+00C0..U+00DE map to U+00E0..U+00FE, skipping the multiply sign.
      unsigned char b1 = static_cast<unsigned char>(result[i + 1]);
      if (b1 >= 0x80 && b1 <= 0x9E && b1 != 0x97) result[i + 1] = static_cast<char>(b1 + 0x20);
      ++i;
    }
  }
  return result;
}

std::vector<std::string> tokenize(std::string_view text, bool lowercase) {
  std::string normalized = normalize_apostrophes(text);
  std::string_view s = normalized;
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_ascii_space(s[i])) ++i;
    std::size_t start = i;
    while (i < s.size() && !is_ascii_space(s[i])) ++i;
    if (i > start) emit_chunk(s.substr(start, i - start), tokens);
  }
  if (lowercase) {
    for (auto& t : tokens) t = lowercase_utf8(t);
  }
  return tokens;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

std::vector<std::vector<std::string>> read_tokenized_corpus(const std::filesystem::path& path,
                                                            bool lowercase) {
  std::vector<std::vector<std::string>> corpus;
  for (const auto& line : read_lines(path)) {
    auto tokens = tokenize(line, lowercase);
    if (!tokens.empty()) corpus.push_back(std::move(tokens));
  }
  return corpus;
}

}  // namespace eqmt
