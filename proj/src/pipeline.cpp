#include "chanda/pipeline.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "chanda/devanagari.hpp"
#include "chanda/errors.hpp"
#include "chanda/utf8.hpp"

namespace chanda {

using Json = nlohmann::ordered_json;

std::string_view mode_name(Mode mode) { return mode == Mode::Line ? "line" : "verse"; }

std::optional<Mode> parse_mode(std::string_view name) {
  if (name == "line") return Mode::Line;
  if (name == "verse") return Mode::Verse;
  return std::nullopt;
}

std::vector<Match> LineResult::ranked() const {
  std::vector<Match> out;
  if (chosen) out.push_back(*chosen);
  const auto seen = [&](const Match& m) {
    return std::any_of(out.begin(), out.end(), [&](const Match& o) { return o.ref == m.ref; });
  };
  for (const auto* list : {&direct, &fuzzy}) {
    for (const Match& m : *list) {
      if (!seen(m)) out.push_back(m);
    }
  }
  return out;
}

bool LineResult::double_pada() const {
  return !direct.empty() &&
         std::all_of(direct.begin(), direct.end(), [](const Match& m) { return m.ref.span == 2; });
}

namespace pipeline {

namespace {

bool only_digits_or_space(std::u32string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](char32_t c) { return utf8::is_space(c) || deva::is_digit(c); });
}

std::string display_for(const std::string& devanagari, Scheme scheme) {
  if (scheme == Scheme::Devanagari) return devanagari;
  return translit::from_devanagari(devanagari, scheme);
}

// Match for `ref` whose cost under `pattern` is already known.
Match verse_match(const LgSignature& signature, const std::vector<Syllable>& syllables,
                  const PadaRef& ref, const PadaPattern& pattern) {
  Match m = matcher::fuzzy_match_for(signature, syllables, ref, pattern);
  if (m.cost > 0) return m;
  m.kind = !pattern.fixed() ? MatchKind::Pattern
           : ref.span == 2  ? MatchKind::Multiple
                            : MatchKind::Exact;
  m.similarity = 1.0;
  m.edit_ops.clear();
  m.suggestion.reset();
  return m;
}

bool counts_as_exact(const Match& m) { return m.kind != MatchKind::Fuzzy; }

}  // namespace

Document split_document(const NormalizedText& text) {
  Document doc;
  doc.scheme = text.source_scheme;
  const std::u32string cps = utf8::decode(text.devanagari);
  std::vector<std::size_t> offset(cps.size() + 1, 0);
  for (std::size_t i = 0; i < cps.size(); ++i) {
    offset[i + 1] = offset[i] + utf8::encode(cps[i]).size();
  }

  std::vector<LineRecord> verse;
  const auto close_verse = [&] {
    if (!verse.empty()) doc.verses.push_back(std::move(verse));
    verse.clear();
  };
  std::size_t start = 0;
  bool physical_line_blank = true;
  for (std::size_t i = 0; i <= cps.size(); ++i) {
    const bool at_end = i == cps.size();
    const char32_t cp = at_end ? U'\n' : cps[i];
    if (!at_end && !deva::is_line_end(cp)) {
      if (!utf8::is_space(cp)) physical_line_blank = false;
      continue;
    }
    const std::u32string_view fragment(cps.data() + start, i - start);
    if (!only_digits_or_space(fragment)) {
      std::size_t b = start;
      std::size_t e = i;
      while (b < e && utf8::is_space(cps[b])) ++b;
      while (e > b && utf8::is_space(cps[e - 1])) --e;
      LineRecord rec;
      rec.text = utf8::encode(std::u32string_view(cps.data() + b, e - b));
      rec.display = display_for(rec.text, doc.scheme);
      rec.begin = offset[b];
      rec.end = offset[e];
      verse.push_back(std::move(rec));
    }
    if (cp == deva::kDoubleDanda) close_verse();
    if (cp == U'\n') {
      if (physical_line_blank) close_verse();
      physical_line_blank = true;
    }
    start = i + 1;
  }
  close_verse();
  return doc;
}

std::string serialize_document(const Document& document) {
  std::string out;
  for (std::size_t v = 0; v < document.verses.size(); ++v) {
    if (v > 0) out += "\n";
    for (const LineRecord& line : document.verses[v]) out += line.text + "\n";
  }
  return out;
}

LineResult identify_line(const LineRecord& line, const MetricalDatabase& db, std::size_t k) {
  LineResult r;
  r.line = line;
  r.scan = prosody::syllabify(line.text);
  r.signature = prosody::weigh(r.scan.syllables);
  r.gana = prosody::to_gana(r.signature);
  r.syllable_count = r.signature.size();
  r.matra_count = prosody::matra_count(r.signature);
  if (r.signature.empty()) return r;

  for (auto&& batch : {matcher::find_direct_match(r.signature, db, Index::Single),
                       matcher::find_direct_match(r.signature, db, Index::Multiple),
                       matcher::find_pattern_match(r.signature, db)}) {
    r.direct.insert(r.direct.end(), batch.begin(), batch.end());
  }
  if (r.direct.empty()) {
    r.fuzzy = matcher::find_fuzzy_match(r.signature, r.scan.syllables, db, k);
    if (!r.fuzzy.empty()) r.chosen = r.fuzzy.front();
  } else {
    r.chosen = r.direct.front();
  }
  return r;
}

VerseResult identify_verse(const std::vector<LineRecord>& lines, const MetricalDatabase& db,
                           std::size_t k) {
  VerseResult v;
  std::set<std::string> pool;
  for (const LineRecord& line : lines) {
    v.lines.push_back(identify_line(line, db, k));
    for (const auto* list : {&v.lines.back().direct, &v.lines.back().fuzzy}) {
      for (const Match& m : *list) pool.insert(m.ref.meter);
    }
  }
  v.pada_costs.assign(v.lines.size(), 0);
  if (pool.empty()) return v;

  struct Placement {
    PadaRef ref;
    PadaPattern pattern;
  };
  const auto place = [&](const MeterDef& def) {
    std::vector<std::optional<Placement>> out;
    const std::size_t n = def.pada_patterns.size();
    const auto pada_of = [n](std::size_t i) -> std::optional<std::size_t> {
      if (n == 1) return std::nullopt;
      return i % n;
    };
    std::size_t pada = 0;
    for (const LineResult& line : v.lines) {
      if (line.signature.empty()) {
        out.emplace_back();
        continue;
      }
      if (line.double_pada()) {
        out.push_back(Placement{PadaRef{def.name_latin, pada_of(pada), pada_of(pada + 1), 2},
                                def.pattern_for(pada).concat(def.pattern_for(pada + 1))});
        pada += 2;
      } else {
        out.push_back(Placement{PadaRef{def.name_latin, pada_of(pada), std::nullopt, 1},
                                def.pattern_for(pada)});
        pada += 1;
      }
    }
    return out;
  };

  std::optional<std::size_t> best_cost;
  for (const std::string& name : pool) {
    const MeterDef* def = db.find(name);
    if (def == nullptr) continue;
    const auto placements = place(*def);
    std::size_t total = 0;
    for (std::size_t i = 0; i < v.lines.size(); ++i) {
      if (!placements[i]) continue;
      total += matcher::transform_with_fallback(v.lines[i].signature, placements[i]->pattern).cost;
    }
    // The pool is name-ordered, so the first minimum wins ties.
    if (!best_cost || total < *best_cost) {
      best_cost = total;
      v.verse_meter = name;
    }
  }
  if (!v.verse_meter) return v;
  v.verse_cost = *best_cost;

  const auto placements = place(*db.find(*v.verse_meter));
  for (std::size_t i = 0; i < v.lines.size(); ++i) {
    if (!placements[i]) continue;
    LineResult& line = v.lines[i];
    line.chosen = verse_match(line.signature, line.scan.syllables, placements[i]->ref,
                              placements[i]->pattern);
    v.pada_costs[i] = line.chosen->cost;
  }
  return v;
}

Stats collect_stats(const std::vector<VerseResult>& verses) {
  Stats s;
  for (const VerseResult& verse : verses) {
    for (const LineResult& line : verse.lines) {
      ++s.lines_total;
      if (!line.chosen) {
        ++s.lines_unidentified;
        continue;
      }
      MeterTally& tally = s.histogram[line.chosen->ref.meter];
      if (counts_as_exact(*line.chosen)) {
        ++s.lines_exact;
        ++tally.exact;
      } else {
        ++s.lines_fuzzy;
        ++tally.fuzzy;
      }
    }
  }
  return s;
}

Report analyze(std::string_view text, const MetricalDatabase& db, const AnalyzeOptions& options) {
  if (utf8::trim(text).empty()) throw EmptyInput();
  Report report;
  report.mode = options.mode;
  report.scheme = options.scheme ? *options.scheme : translit::detect_scheme(text);
  const Document doc = split_document(translit::to_devanagari(text, report.scheme));
  for (const auto& lines : doc.verses) {
    if (options.mode == Mode::Verse) {
      report.verses.push_back(identify_verse(lines, db, options.k));
      continue;
    }
    VerseResult v;
    for (const LineRecord& line : lines) v.lines.push_back(identify_line(line, db, options.k));
    v.pada_costs.assign(v.lines.size(), 0);
    report.verses.push_back(std::move(v));
  }
  report.stats = collect_stats(report.verses);
  return report;
}

namespace {

Json syllable_json(const Syllable& s, Weight w) {
  return {{"text", s.display}, {"weight", std::string(1, static_cast<char>(w))}};
}

Json match_json(const Match& m, const MetricalDatabase& db) {
  const MeterDef* def = db.find(m.ref.meter);
  Json j;
  j["name"] = def != nullptr ? def->name : m.ref.meter;
  j["name_latin"] = m.ref.meter;
  j["label"] = m.ref.label();
  j["pada"] = m.ref.pada ? Json(*m.ref.pada + 1) : Json(nullptr);
  j["next_pada"] = m.ref.next_pada ? Json(*m.ref.next_pada + 1) : Json(nullptr);
  j["span"] = m.ref.span;
  j["kind"] = match_kind_name(m.kind);
  j["cost"] = m.cost;
  j["similarity"] = m.similarity;
  j["padanta_fallback"] = m.padanta_fallback;
  j["suggestion_cells"] = m.suggestion ? Json(m.suggestion->words) : Json(nullptr);
  return j;
}

Json stats_json(const Stats& s) {
  Json histogram = Json::object();
  for (const auto& [name, tally] : s.histogram) {
    histogram[name] = {{"exact", tally.exact}, {"fuzzy", tally.fuzzy}};
  }
  return {{"lines_total", s.lines_total},
          {"lines_exact", s.lines_exact},
          {"lines_fuzzy", s.lines_fuzzy},
          {"lines_unidentified", s.lines_unidentified},
          {"histogram", histogram}};
}

std::string detailed(const Report& report, const MetricalDatabase& db) {
  Json verses = Json::array();
  for (const VerseResult& verse : report.verses) {
    Json lines = Json::array();
    for (std::size_t i = 0; i < verse.lines.size(); ++i) {
      const LineResult& line = verse.lines[i];
      Json syllables = Json::array();
      for (std::size_t s = 0; s < line.scan.syllables.size(); ++s) {
        syllables.push_back(syllable_json(line.scan.syllables[s], line.signature.weights()[s]));
      }
      Json matches = Json::array();
      for (const Match& m : line.ranked()) matches.push_back(match_json(m, db));
      lines.push_back({{"text", line.line.display},
                       {"devanagari", line.line.text},
                       {"lg", line.signature.text()},
                       {"gana", line.gana.letters},
                       {"syllable_count", line.syllable_count},
                       {"matra_count", line.matra_count},
                       {"padanta_laghu", line.signature.padanta_laghu()},
                       {"syllables", syllables},
                       {"matches", matches}});
    }
    Json v = {{"lines", lines}};
    if (report.mode == Mode::Verse && verse.verse_meter) {
      v["verse_meter"] = *verse.verse_meter;
      v["verse_cost"] = verse.verse_cost;
      v["pada_costs"] = verse.pada_costs;
    } else {
      v["verse_meter"] = nullptr;
      v["verse_cost"] = nullptr;
    }
    verses.push_back(std::move(v));
  }
  Json doc = {{"mode", mode_name(report.mode)},
              {"scheme", scheme_name(report.scheme)},
              {"verses", verses},
              {"stats", stats_json(report.stats)}};
  return doc.dump(2) + "\n";
}

std::string meter_cell(const LineResult& line, const MetricalDatabase& db, Scheme scheme) {
  if (!line.chosen) return "-";
  const Match& m = *line.chosen;
  const MeterDef* def = db.find(m.ref.meter);
  std::string out = scheme == Scheme::Devanagari && def != nullptr ? def->name : m.ref.meter;
  if (m.kind == MatchKind::Fuzzy) {
    out += " (" + std::to_string(m.cost) + (m.cost == 1 ? " edit)" : " edits)");
  }
  return out;
}

std::string compact(const Report& report, const MetricalDatabase& db, bool with_stats) {
  std::string out;
  for (std::size_t v = 0; v < report.verses.size(); ++v) {
    if (v > 0) out += "\n";
    for (const LineResult& line : report.verses[v].lines) {
      out += line.line.display + " | " + line.signature.text() + " | " + line.gana.letters +
             " | " + meter_cell(line, db, report.scheme) + "\n";
    }
  }
  if (with_stats) {
    const Stats& s = report.stats;
    out += "\nstats: total " + std::to_string(s.lines_total) + ", exact " +
           std::to_string(s.lines_exact) + ", fuzzy " + std::to_string(s.lines_fuzzy) +
           ", unidentified " + std::to_string(s.lines_unidentified) + "\n";
    for (const auto& [name, tally] : s.histogram) {
      out += "  " + name + ": exact " + std::to_string(tally.exact) + ", fuzzy " +
             std::to_string(tally.fuzzy) + "\n";
    }
  }
  return out;
}

MatchKind kind_from(const std::string& name) {
  for (MatchKind k : {MatchKind::Exact, MatchKind::Multiple, MatchKind::Pattern, MatchKind::Fuzzy}) {
    if (match_kind_name(k) == name) return k;
  }
  throw ParseError(0, "unknown match kind '" + name + "'");
}

}  // namespace

std::string export_report(const Report& report, const MetricalDatabase& db, Format format,
                          bool with_stats) {
  return format == Format::Detailed ? detailed(report, db) : compact(report, db, with_stats);
}

Report parse_detailed(std::string_view text) {
  Report report;
  try {
    const Json doc = Json::parse(text);
    report.mode = parse_mode(doc.at("mode").get<std::string>()).value_or(Mode::Verse);
    report.scheme = parse_scheme(doc.at("scheme").get<std::string>()).value_or(Scheme::Devanagari);
    for (const Json& jv : doc.at("verses")) {
      VerseResult v;
      if (!jv.at("verse_meter").is_null()) {
        v.verse_meter = jv.at("verse_meter").get<std::string>();
        v.verse_cost = jv.at("verse_cost").get<std::size_t>();
        v.pada_costs = jv.at("pada_costs").get<std::vector<std::size_t>>();
      }
      for (const Json& jl : jv.at("lines")) {
        LineResult line;
        line.line.display = jl.at("text").get<std::string>();
        line.line.text = jl.at("devanagari").get<std::string>();
        line.signature = LgSignature::parse(jl.at("lg").get<std::string>());
        line.gana.letters = jl.at("gana").get<std::string>();
        line.syllable_count = jl.at("syllable_count").get<std::size_t>();
        line.matra_count = jl.at("matra_count").get<std::size_t>();
        for (const Json& jm : jl.at("matches")) {
          Match m;
          m.ref.meter = jm.at("name_latin").get<std::string>();
          if (!jm.at("pada").is_null()) m.ref.pada = jm.at("pada").get<std::size_t>() - 1;
          if (!jm.at("next_pada").is_null()) {
            m.ref.next_pada = jm.at("next_pada").get<std::size_t>() - 1;
          }
          m.ref.span = jm.at("span").get<std::size_t>();
          m.kind = kind_from(jm.at("kind").get<std::string>());
          m.cost = jm.at("cost").get<std::size_t>();
          m.similarity = jm.at("similarity").get<double>();
          m.padanta_fallback = jm.at("padanta_fallback").get<bool>();
          if (!jm.at("suggestion_cells").is_null()) {
            m.suggestion = Suggestion{
                jm.at("suggestion_cells").get<std::vector<std::vector<std::string>>>()};
          }
          if (!line.chosen) {
            line.chosen = m;
          } else if (m.kind == MatchKind::Fuzzy) {
            line.fuzzy.push_back(std::move(m));
          } else {
            line.direct.push_back(std::move(m));
          }
        }
        v.lines.push_back(std::move(line));
      }
      report.verses.push_back(std::move(v));
    }
    const Json& js = doc.at("stats");
    report.stats.lines_total = js.at("lines_total").get<std::size_t>();
    report.stats.lines_exact = js.at("lines_exact").get<std::size_t>();
    report.stats.lines_fuzzy = js.at("lines_fuzzy").get<std::size_t>();
    report.stats.lines_unidentified = js.at("lines_unidentified").get<std::size_t>();
    for (const auto& [name, tally] : js.at("histogram").items()) {
      report.stats.histogram[name] = {tally.at("exact").get<std::size_t>(),
                                      tally.at("fuzzy").get<std::size_t>()};
    }
  } catch (const Json::exception& e) {
    throw ParseError(0, e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
  return report;
}

}  // namespace pipeline
}  // namespace chanda
