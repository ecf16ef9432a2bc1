#include "eqmt/occupations.hpp"

#include <stdexcept>

#include "eqmt/io_util.hpp"
#include "eqmt/text.hpp"

namespace eqmt {

namespace {

std::vector<std::string> split_tsv(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t begin = 0;
  while (true) {
    std::size_t tab = line.find('\t', begin);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(begin));
      break;
    }
    fields.push_back(line.substr(begin, tab - begin));
    begin = tab + 1;
  }
  return fields;
}

}  // namespace

std::vector<OccupationEntry> load_occupations(const std::filesystem::path& path) {
  std::vector<OccupationEntry> out;
  std::size_t lineno = 0;
  for (const auto& line : read_lines(path)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_tsv(line);
    if (fields.size() != 3)
      throw std::runtime_error("occupations file line " + std::to_string(lineno) +
                               ": expected 3 tab-separated fields");
    if (fields[0].empty() || fields[1].empty() || fields[2].empty())
      throw std::runtime_error("occupations file line " + std::to_string(lineno) +
                               ": empty field");
    out.push_back({fields[0], fields[1], fields[2]});
  }
  return out;
}

std::string article_for(std::string_view occupation) {
  if (occupation.empty()) throw std::invalid_argument("article_for: empty occupation");
  std::string word;
  for (char c : occupation) {
    if (c == ' ') break;
    word.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c + 32) : c);
  }
  static const char* kForceA[] = {"uni", "eu", "one", "once", "use", "user", "ufo"};
  static const char* kForceAn[] = {"hour", "honest", "honor", "honour", "heir"};
  for (const char* prefix : kForceAn) {
    if (word.rfind(prefix, 0) == 0) return "an";
  }
  for (const char* prefix : kForceA) {
    if (word.rfind(prefix, 0) == 0) return "a";
  }
  char first = word.empty() ? '\0' : word[0];
  bool vowel = first == 'a' || first == 'e' || first == 'i' || first == 'o' || first == 'u';
  return vowel ? "an" : "a";
}

std::string_view occ_context_name(OccContext c) {
  switch (c) {
    case OccContext::her: return "her";
    case OccContext::him: return "him";
    case OccContext::female_name: return "female_name";
    case OccContext::male_name: return "male_name";
  }
  throw std::invalid_argument("bad context");
}

OccContext occ_context_from_name(std::string_view name) {
  if (name == "her") return OccContext::her;
  if (name == "him") return OccContext::him;
  if (name == "female_name") return OccContext::female_name;
  if (name == "male_name") return OccContext::male_name;
  throw std::runtime_error("unknown context name: " + std::string(name));
}

OccupationsTestSuite generate_occupations_test(const std::vector<OccupationEntry>& occupations,
                                               const std::string& female_name,
                                               const std::string& male_name) {
  if (occupations.empty()) throw std::invalid_argument("occupations list is empty");
  if (female_name.empty() || male_name.empty())
    throw std::invalid_argument("proper names must be non-empty");

  OccupationsTestSuite suite;
  suite.female_name = female_name;
  suite.male_name = male_name;

  for (const auto& occ : occupations) {
    std::string article = article_for(occ.english);
    auto english = [&](const std::string& who) {
      return "I've known " + who + " for a long time, my friend works as " + article + " " +
             occ.english + ".";
    };
    auto spanish_pronoun = [&](const std::string& clitic, const std::string& friend_word,
                               const std::string& occ_form) {
      return clitic + " conozco desde hace mucho tiempo, mi " + friend_word + " trabaja como " +
             occ_form + ".";
    };
    auto spanish_name = [&](const std::string& name, const std::string& friend_word,
                            const std::string& occ_form) {
      return "Conozco a " + name + " desde hace mucho tiempo, mi " + friend_word +
             " trabaja como " + occ_form + ".";
    };

    struct Item {
      OccContext context;
      std::string en, es, expected;
    };
    Item items[4] = {
        {OccContext::her, english("her"),
         spanish_pronoun("La", "amiga", occ.spanish_feminine), "amiga"},
        {OccContext::him, english("him"),
         spanish_pronoun("Lo", "amigo", occ.spanish_masculine), "amigo"},
        {OccContext::female_name, english(female_name),
         spanish_name(female_name, "amiga", occ.spanish_feminine), "amiga"},
        {OccContext::male_name, english(male_name),
         spanish_name(male_name, "amigo", occ.spanish_masculine), "amigo"},
    };
    for (auto& item : items) {
      OccupationCase c;
      c.context = item.context;
      c.occupation = occ;
      c.english_source = join_tokens(tokenize(item.en, false));
      c.spanish_reference = join_tokens(tokenize(item.es, false));
      c.expected_friend = item.expected;
      suite.cases.push_back(std::move(c));
    }
  }
  return suite;
}

void OccupationsTestSuite::save(const std::filesystem::path& path) const {
  std::string out = "# names\t" + female_name + "\t" + male_name + "\n";
  out += "context\toccupation\tenglish_source\tspanish_reference\texpected_friend\n";
  for (const auto& c : cases) {
    out += std::string(occ_context_name(c.context));
    out += '\t';
    out += c.occupation.english;
    out += '\t';
    out += c.english_source;
    out += '\t';
    out += c.spanish_reference;
    out += '\t';
    out += c.expected_friend;
    out += '\n';
  }
  write_file(path, out);
}

OccupationsTestSuite OccupationsTestSuite::load(const std::filesystem::path& path) {
  OccupationsTestSuite suite;
  auto lines = read_lines(path);
  std::size_t start = 0;
  if (!lines.empty() && lines[0].rfind("# names\t", 0) == 0) {
    auto fields = split_tsv(lines[0]);
    if (fields.size() == 3) {
      suite.female_name = fields[1];
      suite.male_name = fields[2];
    }
    start = 1;
  }
  for (std::size_t i = start; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.empty() || line.rfind("context\t", 0) == 0) continue;
    auto fields = split_tsv(line);
    if (fields.size() != 5)
      throw std::runtime_error("bad suite line " + std::to_string(i + 1) + " in " + path.string());
    OccupationCase c;
    c.context = occ_context_from_name(fields[0]);
    c.occupation.english = fields[1];
    c.english_source = fields[2];
    c.spanish_reference = fields[3];
    c.expected_friend = fields[4];
    suite.cases.push_back(std::move(c));
  }
  return suite;
}

void OccupationsTestSuite::write_sources(const std::filesystem::path& path) const {
  std::string out;
  for (const auto& c : cases) {
    out += c.english_source;
    out += '\n';
  }
  write_file(path, out);
}

void OccupationsTestSuite::write_references(const std::filesystem::path& path) const {
  std::string out;
  for (const auto& c : cases) {
    out += c.spanish_reference;
    out += '\n';
  }
  write_file(path, out);
}

double GenderReport::Row::pct_amiga() const {
  return total() ? 100.0 * static_cast<double>(amiga) / static_cast<double>(total()) : 0.0;
}
double GenderReport::Row::pct_amigo() const {
  return total() ? 100.0 * static_cast<double>(amigo) / static_cast<double>(total()) : 0.0;
}
double GenderReport::Row::pct_other() const {
  return total() ? 100.0 * static_cast<double>(other) / static_cast<double>(total()) : 0.0;
}

GenderReport analyze_gender(const std::vector<std::vector<std::string>>& system_output,
                            const OccupationsTestSuite& suite) {
  if (system_output.size() != suite.cases.size())
    throw std::runtime_error("gender analysis: output has " +
                             std::to_string(system_output.size()) + " sentences but suite has " +
                             std::to_string(suite.cases.size()) + " cases");
  GenderReport report;
  report.female_name = suite.female_name;
  report.male_name = suite.male_name;
  for (std::size_t i = 0; i < suite.cases.size(); ++i) {
    bool has_amiga = false, has_amigo = false;
    for (const auto& token : system_output[i]) {
      std::string lower = lowercase_utf8(token);
      if (lower == "amiga") has_amiga = true;
      if (lower == "amigo") has_amigo = true;
    }
    auto& row = report.rows[static_cast<std::size_t>(suite.cases[i].context)];
    if (has_amiga && !has_amigo)
      ++row.amiga;
    else if (has_amigo && !has_amiga)
      ++row.amigo;
    else
      ++row.other;
  }
  return report;
}

std::string GenderReport::to_tsv() const {
  auto label = [&](OccContext c) -> std::string {
    switch (c) {
      case OccContext::her: return "her";
      case OccContext::him: return "him";
      case OccContext::female_name: return female_name;
      case OccContext::male_name: return male_name;
    }
    return "?";
  };
  std::string out = "context\tamiga\tamigo\tother\tcases\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& r = rows[i];
    out += label(static_cast<OccContext>(i));
    out += '\t' + format_g6(r.pct_amiga());
    out += '\t' + format_g6(r.pct_amigo());
    out += '\t' + format_g6(r.pct_other());
    out += '\t' + std::to_string(r.total());
    out += '\n';
  }
  return out;
}

std::string GenderReport::to_json() const {
  auto label = [&](OccContext c) -> std::string {
    switch (c) {
      case OccContext::her: return "her";
      case OccContext::him: return "him";
      case OccContext::female_name: return female_name;
      case OccContext::male_name: return male_name;
    }
    return "?";
  };
  std::string out = "{";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& r = rows[i];
    if (i) out += ", ";
    out += "\"" + label(static_cast<OccContext>(i)) + "\": {";
    out += "\"amiga\": " + format_g6(r.pct_amiga());
    out += ", \"amigo\": " + format_g6(r.pct_amigo());
    out += ", \"other\": " + format_g6(r.pct_other());
    out += ", \"cases\": " + std::to_string(r.total());
    out += "}";
  }
  out += "}";
  return out;
}

}  // namespace eqmt
