#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace eqmt {

struct OccupationEntry {
  std::string english;
  std::string spanish_masculine;
  std::string spanish_feminine;  // may equal the masculine form (epicene nouns)
};

// TSV `english<TAB>spanish_masc<TAB>spanish_fem`, one per line.
std::vector<OccupationEntry> load_occupations(const std::filesystem::path& path);

// "an" for vowel-sound onsets: vowels a,e,i,o,u with an exception list
// ("uni", "eu", "one", "use" -> "a"; "hour", "honest", "honor", "heir" -> "an").
std::string article_for(std::string_view occupation);

enum class OccContext : std::uint8_t { her = 0, him = 1, female_name = 2, male_name = 3 };

std::string_view occ_context_name(OccContext c);
OccContext occ_context_from_name(std::string_view name);

struct OccupationCase {
  OccContext context;
  OccupationEntry occupation;
  std::string english_source;     // tokenized, space-joined
  std::string spanish_reference;  // tokenized, space-joined
  std::string expected_friend;    // "amiga" or "amigo"
};

struct OccupationsTestSuite {
  std::string female_name = "Mary";
  std::string male_name = "John";
  std::vector<OccupationCase> cases;

  // TSV columns: context, occupation, english_source, spanish_reference,
  // expected_friend. The two name rows carry the names in a header comment.
  void save(const std::filesystem::path& path) const;
  static OccupationsTestSuite load(const std::filesystem::path& path);

  void write_sources(const std::filesystem::path& path) const;
  void write_references(const std::filesystem::path& path) const;
};

// Four cases per occupation (her / him / female name / male name), English
// sources and gender-agreeing Spanish references, all run through the corpus
// tokenizer. Deterministic: same inputs, same bytes.
OccupationsTestSuite generate_occupations_test(const std::vector<OccupationEntry>& occupations,
                                               const std::string& female_name,
                                               const std::string& male_name);

// Per-context amiga/amigo/other counts over a system's translations of the
// suite sources.
struct GenderReport {
  struct Row {
    std::uint64_t amiga = 0, amigo = 0, other = 0;
    std::uint64_t total() const { return amiga + amigo + other; }
    double pct_amiga() const;
    double pct_amigo() const;
    double pct_other() const;
  };
  std::array<Row, 4> rows;  // indexed by OccContext
  std::string female_name, male_name;

  const Row& row(OccContext c) const { return rows[static_cast<std::size_t>(c)]; }

  std::string to_tsv() const;
  std::string to_json() const;
};

GenderReport analyze_gender(const std::vector<std::vector<std::string>>& system_output,
                            const OccupationsTestSuite& suite);

}  // namespace eqmt
