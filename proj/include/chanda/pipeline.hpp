#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chanda/matcher.hpp"
#include "chanda/meterdb.hpp"
#include "chanda/prosody.hpp"
#include "chanda/translit.hpp"

namespace chanda {

enum class Mode { Line, Verse };
std::string_view mode_name(Mode mode);
std::optional<Mode> parse_mode(std::string_view name);

enum class Format { Compact, Detailed };

struct LineRecord {
  std::string text;     // Devanagari, trimmed
  std::string display;  // the same line in the source scheme
  std::size_t begin = 0;  // byte span in the normalized text
  std::size_t end = 0;
};

struct Document {
  Scheme scheme = Scheme::Devanagari;
  std::vector<std::vector<LineRecord>> verses;
};

struct LineResult {
  LineRecord line;
  Syllabification scan;
  LgSignature signature;
  GanaSignature gana;
  std::size_t syllable_count = 0;
  std::size_t matra_count = 0;
  std::vector<Match> direct;  // exact, then multiple, then pattern
  std::vector<Match> fuzzy;   // only computed when `direct` is empty
  std::optional<Match> chosen;

  // Chosen match first, then the remaining direct and fuzzy matches.
  std::vector<Match> ranked() const;
  // Every direct hit spans two padas, so the line stands for two of them.
  bool double_pada() const;
};

struct VerseResult {
  std::vector<LineResult> lines;
  std::optional<std::string> verse_meter;  // IAST name; verse mode only
  std::size_t verse_cost = 0;
  std::vector<std::size_t> pada_costs;  // per line under verse_meter
};

struct MeterTally {
  std::size_t exact = 0;
  std::size_t fuzzy = 0;
  bool operator==(const MeterTally&) const = default;
};

struct Stats {
  std::size_t lines_total = 0;
  std::size_t lines_exact = 0;
  std::size_t lines_fuzzy = 0;
  std::size_t lines_unidentified = 0;
  std::map<std::string, MeterTally> histogram;
  bool operator==(const Stats&) const = default;
};

struct Report {
  Mode mode = Mode::Verse;
  Scheme scheme = Scheme::Devanagari;
  std::vector<VerseResult> verses;
  Stats stats;
};

struct AnalyzeOptions {
  Mode mode = Mode::Verse;
  std::optional<Scheme> scheme;  // detected when absent
  std::size_t k = kDefaultTopK;
};

namespace pipeline {

// Lines end at newline, danda, double danda or full stop. Blank lines
// separate verses; a double danda also closes the current verse. Fragments
// holding only digits (verse numbers) are dropped.
Document split_document(const NormalizedText& text);
std::string serialize_document(const Document& document);

LineResult identify_line(const LineRecord& line, const MetricalDatabase& db,
                         std::size_t k = kDefaultTopK);

VerseResult identify_verse(const std::vector<LineRecord>& lines, const MetricalDatabase& db,
                           std::size_t k = kDefaultTopK);

Stats collect_stats(const std::vector<VerseResult>& verses);

// Throws EmptyInput on whitespace-only text.
Report analyze(std::string_view text, const MetricalDatabase& db, const AnalyzeOptions& options);

std::string export_report(const Report& report, const MetricalDatabase& db, Format format,
                          bool with_stats = false);

// Reads the detailed export back. Syllable lists and edit scripts are not
// restored. Throws ParseError.
Report parse_detailed(std::string_view json);

}  // namespace pipeline
}  // namespace chanda
