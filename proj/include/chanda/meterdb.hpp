#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chanda/prosody.hpp"

namespace chanda {

enum class Position : char { L = 'L', G = 'G', Either = '*' };

// Per-pada weight pattern. 'Either' positions accept both weights and are
// written as the class [LG] in text form.
class PadaPattern {
 public:
  PadaPattern() = default;
  explicit PadaPattern(std::vector<Position> positions);
  explicit PadaPattern(const LgSignature& signature);

  // Accepts 'L', 'G', "[LG]" and "[GL]"; throws std::invalid_argument.
  static PadaPattern parse(std::string_view text);

  const std::vector<Position>& positions() const { return positions_; }
  std::size_t size() const { return positions_.size(); }
  bool fixed() const { return fixed_; }
  std::string text() const;
  bool accepts(const LgSignature& signature) const;

  PadaPattern concat(const PadaPattern& next) const;

  bool operator==(const PadaPattern&) const = default;

 private:
  std::vector<Position> positions_;
  bool fixed_ = true;
};

inline bool admits(Position p, Weight w) {
  return p == Position::Either || static_cast<char>(p) == static_cast<char>(w);
}

struct MeterDef {
  std::string name;        // Devanagari
  std::string name_latin;  // IAST; the key used by every index
  std::vector<PadaPattern> pada_patterns;
  std::vector<std::string> gana_formulas;  // per pada, empty when positional
  std::string kind = "varnavrtta";

  std::optional<std::string> gana_formula() const;
  // Pattern for the pada at `index`, cycling over the defined patterns.
  const PadaPattern& pattern_for(std::size_t index) const;
};

// Reference to one pada (span 1) or two adjacent padas (span 2) of a meter.
// `pada` is absent for meters defined by a single pattern.
struct PadaRef {
  std::string meter;
  std::optional<std::size_t> pada;
  std::optional<std::size_t> next_pada;
  std::size_t span = 1;

  std::string label() const;              // "Anuṣṭubh (Pāda 1)"
  std::string label(const MeterDef& def) const;  // "अनुष्टुभ् (पाद 1)"
  auto operator<=>(const PadaRef&) const = default;
};

struct PatternEntry {
  PadaPattern pattern;
  PadaRef ref;
};

enum class Index { Single, Multiple };

class MetricalDatabase {
 public:
  // Tab-separated rows: name, IAST name, pada spec, kind. Throws ParseError,
  // DuplicateMeterName or InvalidGanaFormula.
  static MetricalDatabase load(std::string_view source);
  static MetricalDatabase load_file(const std::filesystem::path& path);

  std::vector<PadaRef> lookup_exact(std::string_view signature, Index which) const;
  std::vector<PadaRef> lookup_pattern(std::string_view signature) const;

  const std::map<std::string, std::vector<PadaRef>>& single() const { return single_; }
  const std::map<std::string, std::vector<PadaRef>>& multiple() const { return multiple_; }
  const std::vector<PatternEntry>& patterns() const { return patterns_; }
  // Every span-1 pada pattern, fixed or not, in meter-name order.
  const std::vector<PatternEntry>& pada_entries() const { return padas_; }
  const std::map<std::string, MeterDef>& meters() const { return meters_; }

  const MeterDef* find(std::string_view name_latin) const;
  PadaPattern pattern_of(const PadaRef& ref) const;

  bool empty() const { return meters_.empty(); }

 private:
  void add(MeterDef def);
  void finalize();

  std::map<std::string, std::vector<PadaRef>> single_;
  std::map<std::string, std::vector<PadaRef>> multiple_;
  std::vector<PatternEntry> patterns_;
  std::vector<PatternEntry> padas_;
  std::map<std::string, MeterDef> meters_;
};

// $CHANDA_DB, then data/meters.tsv under the working directory, then the
// copy shipped with the sources.
std::filesystem::path default_database_path();

}  // namespace chanda
