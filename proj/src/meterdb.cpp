#include "chanda/meterdb.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "chanda/errors.hpp"
#include "chanda/utf8.hpp"

namespace chanda {

PadaPattern::PadaPattern(std::vector<Position> positions) : positions_(std::move(positions)) {
  fixed_ = std::none_of(positions_.begin(), positions_.end(),
                        [](Position p) { return p == Position::Either; });
}

PadaPattern::PadaPattern(const LgSignature& signature) {
  positions_.reserve(signature.size());
  for (Weight w : signature.weights()) {
    positions_.push_back(w == Weight::L ? Position::L : Position::G);
  }
}

PadaPattern PadaPattern::parse(std::string_view text) {
  std::vector<Position> positions;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == 'L' || c == 'G') {
      positions.push_back(c == 'L' ? Position::L : Position::G);
      ++i;
    } else if (text.substr(i, 4) == "[LG]" || text.substr(i, 4) == "[GL]") {
      positions.push_back(Position::Either);
      i += 4;
    } else {
      throw std::invalid_argument("bad pattern '" + std::string(text) + "'");
    }
  }
  return PadaPattern(std::move(positions));
}

std::string PadaPattern::text() const {
  std::string out;
  for (Position p : positions_) {
    if (p == Position::Either) {
      out += "[LG]";
    } else {
      out.push_back(static_cast<char>(p));
    }
  }
  return out;
}

bool PadaPattern::accepts(const LgSignature& signature) const {
  if (signature.size() != positions_.size()) return false;
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    if (!admits(positions_[i], signature.weights()[i])) return false;
  }
  return true;
}

PadaPattern PadaPattern::concat(const PadaPattern& next) const {
  std::vector<Position> joined = positions_;
  joined.insert(joined.end(), next.positions_.begin(), next.positions_.end());
  return PadaPattern(std::move(joined));
}

std::optional<std::string> MeterDef::gana_formula() const {
  if (gana_formulas.empty() || gana_formulas.front().empty()) return std::nullopt;
  return gana_formulas.front();
}

const PadaPattern& MeterDef::pattern_for(std::size_t index) const {
  return pada_patterns[index % pada_patterns.size()];
}

namespace {

std::string pada_suffix(const PadaRef& ref, std::string_view word) {
  if (!ref.pada) return {};
  std::string out = " (" + std::string(word) + " " + std::to_string(*ref.pada + 1);
  if (ref.span == 2) out += "-" + std::to_string(ref.next_pada.value_or(*ref.pada) + 1);
  return out + ")";
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = text.find(sep, start);
    out.emplace_back(text.substr(start, at == std::string_view::npos ? text.npos : at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

bool is_pattern_text(std::string_view s) {
  return !s.empty() && s.find_first_not_of("LG[]") == std::string_view::npos;
}

bool is_varnavrtta(std::string kind) {
  std::transform(kind.begin(), kind.end(), kind.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return kind == "varnavrtta" || kind == "varṇavṛtta" || kind == "वर्णवृत्त";
}

void sort_unique(std::vector<PadaRef>& refs) {
  std::sort(refs.begin(), refs.end());
  refs.erase(std::unique(refs.begin(), refs.end()), refs.end());
}

}  // namespace

std::string PadaRef::label() const { return meter + pada_suffix(*this, "Pāda"); }

std::string PadaRef::label(const MeterDef& def) const {
  return def.name + pada_suffix(*this, "पाद");
}

MetricalDatabase MetricalDatabase::load(std::string_view source) {
  MetricalDatabase db;
  std::size_t line_no = 0;
  std::set<std::string> devanagari_names;
  for (std::string raw : split(source, '\n')) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const std::string trimmed = utf8::trim(raw);
    if (trimmed.empty() || trimmed.front() == '#') continue;

    const auto fields = split(raw, '\t');
    if (fields.size() != 4) {
      throw ParseError(line_no, "expected 4 tab-separated fields, found " +
                                    std::to_string(fields.size()));
    }
    MeterDef def;
    def.name = utf8::trim(fields[0]);
    def.name_latin = utf8::trim(fields[1]);
    def.kind = utf8::trim(fields[3]);
    if (def.name.empty() || def.name_latin.empty()) throw ParseError(line_no, "empty meter name");
    if (!is_varnavrtta(def.kind)) {
      throw ParseError(line_no, "unsupported meter kind '" + def.kind + "'");
    }
    for (const std::string& spec_raw : split(fields[2], ';')) {
      const std::string spec = utf8::trim(spec_raw);
      if (spec.empty()) throw ParseError(line_no, "empty pada specification");
      if (is_pattern_text(spec)) {
        try {
          def.pada_patterns.push_back(PadaPattern::parse(spec));
        } catch (const std::invalid_argument& e) {
          throw ParseError(line_no, e.what());
        }
        def.gana_formulas.emplace_back();
        continue;
      }
      LgSignature decoded;
      try {
        decoded = prosody::from_gana(spec);
      } catch (const UnknownGanaLetter&) {
        throw InvalidGanaFormula(line_no, spec);
      }
      if (prosody::to_gana(decoded).letters != spec) throw InvalidGanaFormula(line_no, spec);
      def.pada_patterns.emplace_back(decoded);
      def.gana_formulas.push_back(spec);
    }
    if (db.meters_.contains(def.name_latin) || !devanagari_names.insert(def.name).second) {
      throw DuplicateMeterName(def.name_latin);
    }
    db.add(std::move(def));
  }
  db.finalize();
  return db;
}

MetricalDatabase MetricalDatabase::load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open meter database '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load(buf.str());
}

void MetricalDatabase::add(MeterDef def) {
  const std::size_t n = def.pada_patterns.size();
  const auto pada_of = [n](std::size_t i) -> std::optional<std::size_t> {
    if (n == 1) return std::nullopt;
    return i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    const PadaPattern& p = def.pada_patterns[i];
    PadaRef ref{def.name_latin, pada_of(i), std::nullopt, 1};
    padas_.push_back({p, ref});
    if (p.fixed()) {
      single_[p.text()].push_back(ref);
    } else {
      patterns_.push_back({p, ref});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    const PadaPattern pair = def.pada_patterns[i].concat(def.pada_patterns[j]);
    PadaRef ref{def.name_latin, pada_of(i), pada_of(j), 2};
    if (pair.fixed()) {
      multiple_[pair.text()].push_back(ref);
    } else {
      patterns_.push_back({pair, ref});
    }
  }
  meters_.emplace(def.name_latin, std::move(def));
}

void MetricalDatabase::finalize() {
  for (auto& [key, refs] : single_) sort_unique(refs);
  for (auto& [key, refs] : multiple_) sort_unique(refs);
  const auto by_ref = [](const PatternEntry& a, const PatternEntry& b) { return a.ref < b.ref; };
  std::sort(patterns_.begin(), patterns_.end(), by_ref);
  std::sort(padas_.begin(), padas_.end(), by_ref);
}

std::vector<PadaRef> MetricalDatabase::lookup_exact(std::string_view signature,
                                                    Index which) const {
  const auto& index = which == Index::Single ? single_ : multiple_;
  const auto it = index.find(std::string(signature));
  if (it == index.end()) return {};
  return it->second;
}

std::vector<PadaRef> MetricalDatabase::lookup_pattern(std::string_view signature) const {
  const LgSignature sig = LgSignature::parse(signature);
  std::vector<PadaRef> out;
  for (const auto& entry : patterns_) {
    if (entry.pattern.accepts(sig)) out.push_back(entry.ref);
  }
  return out;
}

const MeterDef* MetricalDatabase::find(std::string_view name_latin) const {
  const auto it = meters_.find(std::string(name_latin));
  return it == meters_.end() ? nullptr : &it->second;
}

PadaPattern MetricalDatabase::pattern_of(const PadaRef& ref) const {
  const MeterDef* def = find(ref.meter);
  if (def == nullptr) throw Error("unknown meter '" + ref.meter + "'");
  const PadaPattern& first = def->pattern_for(ref.pada.value_or(0));
  if (ref.span == 1) return first;
  return first.concat(def->pattern_for(ref.next_pada.value_or(0)));
}

std::filesystem::path default_database_path() {
  if (const char* env = std::getenv("CHANDA_DB"); env != nullptr && *env != '\0') {
    return env;
  }
  const std::filesystem::path local = std::filesystem::path("data") / "meters.tsv";
  if (std::filesystem::exists(local)) return local;
#ifdef CHANDA_DEFAULT_DB
  return CHANDA_DEFAULT_DB;
#else
  return local;
#endif
}

}  // namespace chanda
