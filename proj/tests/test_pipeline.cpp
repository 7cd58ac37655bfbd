#include <doctest.h>

#include <fstream>
#include <sstream>

#include "chanda/errors.hpp"
#include "chanda/pipeline.hpp"

using namespace chanda;

namespace {

const MetricalDatabase& shipped() {
  static const MetricalDatabase db = MetricalDatabase::load_file(default_database_path());
  return db;
}

const char* kShalini =
    "माता रामो मम पिता रामचन्द्रः। स्वामी रामो मत्सखा रामचन्द्रः।\n"
    "सर्वस्वं मे रामचन्द्रो दयालुः। नान्यं जाने नैव जाने न जाने॥";

std::vector<std::vector<std::string>> texts(const Document& d) {
  std::vector<std::vector<std::string>> out;
  for (const auto& verse : d.verses) {
    out.emplace_back();
    for (const auto& line : verse) out.back().push_back(line.text);
  }
  return out;
}

Document split(std::string_view text) {
  return pipeline::split_document(translit::to_devanagari(text, Scheme::Devanagari));
}

LineRecord record(std::string text) {
  LineRecord r;
  r.text = text;
  r.display = std::move(text);
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("split_document") {
  using T = std::vector<std::vector<std::string>>;
  CHECK(texts(split("क।ख॥\n\nग")) == T{{"क", "ख"}, {"ग"}});
  CHECK(texts(split("single line")) == T{{"single line"}});
  CHECK(texts(split("क। ख। ग। घ॥")) == T{{"क", "ख", "ग", "घ"}});
  CHECK(texts(split("क\nख\n  \nग\n\n\n")) == T{{"क", "ख"}, {"ग"}});
  CHECK(texts(split("क। ख॥१॥ ग। घ॥२॥")) == T{{"क", "ख"}, {"ग", "घ"}});
  CHECK(texts(split("क. ख")) == T{{"क", "ख"}});
  CHECK(split("").verses.empty());
  CHECK(split("१२\n॥").verses.empty());
}

TEST_CASE("split_document records byte spans") {
  const NormalizedText n = translit::to_devanagari("  राम। सीता", Scheme::Devanagari);
  const Document d = pipeline::split_document(n);
  REQUIRE(d.verses.size() == 1);
  for (const auto& line : d.verses[0]) {
    CHECK(n.devanagari.substr(line.begin, line.end - line.begin) == line.text);
  }
}

TEST_CASE("split_document shows lines in the source scheme") {
  const Document d = pipeline::split_document(translit::to_devanagari("rAma | sItA", Scheme::HarvardKyoto));
  REQUIRE(d.verses.size() == 1);
  REQUIRE(d.verses[0].size() == 2);
  CHECK(d.verses[0][0].text == "राम");
  CHECK(d.verses[0][0].display == "rAma");
}

TEST_CASE("split_document is idempotent on its serialization") {
  const Document d = split(std::string(kShalini) + "\n\nक। ख\n\nग॥ घ॥");
  const std::string once = pipeline::serialize_document(d);
  const Document again = split(once);
  CHECK(texts(again) == texts(d));
  CHECK(pipeline::serialize_document(again) == once);
}

TEST_CASE("identify_line exact, fuzzy and empty") {
  const auto& db = shipped();
  const auto exact = pipeline::identify_line(record("नमस्ते सदा वत्सले मातृभूमे"), db);
  REQUIRE(exact.chosen.has_value());
  CHECK(exact.chosen->ref.meter == "Bhujāṅgaprayāta");
  CHECK(exact.chosen->kind == MatchKind::Exact);
  CHECK(exact.fuzzy.empty());

  const auto fuzzy = pipeline::identify_line(record("नमस्ते सदा वत्सले मातृभुमे"), db);
  CHECK(fuzzy.direct.empty());
  REQUIRE(fuzzy.chosen.has_value());
  CHECK(fuzzy.chosen->ref.meter == "Bhujāṅgaprayāta");
  CHECK(fuzzy.chosen->cost == 1);
  CHECK(fuzzy.gana.letters == "यययस");
  CHECK(fuzzy.syllable_count == 12);
  CHECK(fuzzy.matra_count == 19);

  const auto digits = pipeline::identify_line(record("१२३"), db);
  CHECK_FALSE(digits.chosen.has_value());
  CHECK(digits.direct.empty());
  CHECK(digits.fuzzy.empty());
}

TEST_CASE("a merged pair of padas hits the multiple index") {
  const auto& db = shipped();
  const auto line = pipeline::identify_line(
      record("स्वामी रामो मत्सखा रामचन्द्रः स्वामी रामो मत्सखा रामचन्द्रः"), db);
  REQUIRE(line.chosen.has_value());
  CHECK(line.chosen->kind == MatchKind::Multiple);
  CHECK(line.chosen->ref.meter == "Śālinī");
  CHECK(line.double_pada());
}

TEST_CASE("line and verse mode diverge on the Śālinī verse") {
  const auto& db = shipped();
  AnalyzeOptions line_opts;
  line_opts.mode = Mode::Line;
  const Report line = pipeline::analyze(kShalini, db, line_opts);
  REQUIRE(line.verses.size() == 1);
  REQUIRE(line.verses[0].lines.size() == 4);
  CHECK(line.verses[0].lines[0].chosen->ref.meter == "Vātorṃī");
  CHECK(line.verses[0].lines[0].chosen->cost == 1);

  const Report verse = pipeline::analyze(kShalini, db, {});
  const VerseResult& v = verse.verses.at(0);
  CHECK(v.verse_meter == "Śālinī");
  CHECK(v.verse_cost == 2);
  CHECK(v.pada_costs == std::vector<std::size_t>{2, 0, 0, 0});
  const auto ranked = v.lines[0].ranked();
  CHECK(ranked.front().ref.meter == "Śālinī");
  CHECK(ranked.front().cost == 2);
  REQUIRE(ranked.front().suggestion.has_value());

  // The verse meter's cumulative cost does not exceed that of any line winner.
  for (const auto& l : line.verses[0].lines) {
    const MeterDef* def = db.find(l.chosen->ref.meter);
    std::size_t total = 0;
    for (std::size_t i = 0; i < v.lines.size(); ++i) {
      total += matcher::transform_with_fallback(v.lines[i].signature, def->pattern_for(i)).cost;
    }
    CHECK(v.verse_cost <= total);
  }
}

TEST_CASE("verse mode on exact and positional verses") {
  const auto& db = shipped();
  const Report r = pipeline::analyze(
      "स्वामी रामो मत्सखा रामचन्द्रः। स्वामी रामो मत्सखा रामचन्द्रः।\n"
      "स्वामी रामो मत्सखा रामचन्द्रः। स्वामी रामो मत्सखा रामचन्द्रः॥",
      db, {});
  CHECK(r.verses.at(0).verse_meter == "Śālinī");
  CHECK(r.verses.at(0).verse_cost == 0);

  // Anuṣṭubh half-verse: pada 1 ends ...LGG, pada 2 ends ...LGL.
  const Report a = pipeline::analyze("धर्मक्षेत्रे कुरुक्षेत्रे। समवेता युयुत्सवः॥", db, {});
  const VerseResult& v = a.verses.at(0);
  CHECK(v.lines[0].signature.text() == "GGGGLGGG");
  CHECK(v.lines[1].signature.text() == "LLGGLGLG");
  CHECK(v.verse_meter == "Anuṣṭubh");
  CHECK(v.verse_cost == 0);
  CHECK(v.lines[0].chosen->ref.label() == "Anuṣṭubh (Pāda 1)");
  CHECK(v.lines[1].chosen->ref.label() == "Anuṣṭubh (Pāda 2)");
}

TEST_CASE("verse with no identifiable line") {
  const Report r = pipeline::analyze("१२३ abc", shipped(), {});
  REQUIRE(r.verses.size() == 1);
  CHECK_FALSE(r.verses[0].verse_meter.has_value());
  CHECK(r.stats.lines_unidentified == 1);
}

TEST_CASE("collect_stats") {
  CHECK(pipeline::collect_stats({}) == Stats{});

  const auto& db = shipped();
  AnalyzeOptions line;
  line.mode = Mode::Line;
  const Report r = pipeline::analyze(
      "स्वामी रामो मत्सखा रामचन्द्रः\nस्वामी रामो मत्सखा रामचन्द्रः\n"
      "स्वामी रामो मत्सखा रामचन्द्रः\nनमस्ते सदा वत्सले मातृभुमे\nxyz",
      db, line);
  CHECK(r.stats.lines_total == 5);
  CHECK(r.stats.lines_exact == 3);
  CHECK(r.stats.lines_fuzzy == 1);
  CHECK(r.stats.lines_unidentified == 1);
  CHECK(r.stats.histogram.at("Śālinī") == MeterTally{3, 0});
  CHECK(r.stats.histogram.at("Bhujāṅgaprayāta") == MeterTally{0, 1});
}

TEST_CASE("Meghadūta excerpt is all Mandākrāntā") {
  const Report r =
      pipeline::analyze(read_file(CHANDA_TEST_DATA "/meghaduta.txt"), shipped(), {});
  CHECK(r.verses.size() == 8);
  for (const auto& v : r.verses) {
    CHECK(v.verse_meter == "Mandākrāntā");
    CHECK(v.verse_cost == 0);
  }
  CHECK(r.stats.lines_total == 32);
  CHECK(r.stats.lines_exact == 32);
  CHECK(r.stats.histogram.size() == 1);
  CHECK(r.stats.histogram.at("Mandākrāntā") == MeterTally{32, 0});
}

TEST_CASE("compact export") {
  const auto& db = shipped();
  AnalyzeOptions line;
  line.mode = Mode::Line;
  const auto fuzzy = pipeline::export_report(
      pipeline::analyze("नमस्ते सदा वत्सले मातृभुमे", db, line), db, Format::Compact);
  CHECK(fuzzy == "नमस्ते सदा वत्सले मातृभुमे | LGGLGGLGGLLG | यययस | भुजङ्गप्रयात (1 edit)\n");

  const auto exact = pipeline::export_report(
      pipeline::analyze("नमस्ते सदा वत्सले मातृभूमे", db, line), db, Format::Compact);
  CHECK(exact == "नमस्ते सदा वत्सले मातृभूमे | LGGLGGLGGLGG | यययय | भुजङ्गप्रयात\n");

  const auto roman = pipeline::export_report(
      pipeline::analyze("namaste sadā vatsale mātṛbhūme", db, line), db, Format::Compact, true);
  CHECK(roman.rfind("namaste sadā vatsale mātṛbhūme | LGGLGGLGGLGG | यययय | Bhujāṅgaprayāta\n",
                    0) == 0);
  CHECK(roman.find("stats: total 1, exact 1, fuzzy 0, unidentified 0") != std::string::npos);

  const auto plural = pipeline::export_report(pipeline::analyze(kShalini, db, {}), db,
                                              Format::Compact);
  CHECK(plural.find("शालिनी (2 edits)") != std::string::npos);
}

TEST_CASE("detailed export round trip") {
  const auto& db = shipped();
  for (Mode mode : {Mode::Line, Mode::Verse}) {
    AnalyzeOptions opts;
    opts.mode = mode;
    const Report r = pipeline::analyze(std::string(kShalini) + "\n\nनमस्ते सदा वत्सले मातृभुमे\n\n१ xyz", db, opts);
    const std::string json = pipeline::export_report(r, db, Format::Detailed);
    const Report back = pipeline::parse_detailed(json);
    CHECK(back.mode == r.mode);
    CHECK(back.scheme == r.scheme);
    CHECK(back.stats == r.stats);
    REQUIRE(back.verses.size() == r.verses.size());
    for (std::size_t v = 0; v < r.verses.size(); ++v) {
      const auto& a = r.verses[v];
      const auto& b = back.verses[v];
      if (mode == Mode::Verse) {
        CHECK(a.verse_meter == b.verse_meter);
        CHECK(a.verse_cost == b.verse_cost);
        if (a.verse_meter) CHECK(a.pada_costs == b.pada_costs);
      }
      REQUIRE(a.lines.size() == b.lines.size());
      for (std::size_t i = 0; i < a.lines.size(); ++i) {
        const auto& la = a.lines[i];
        const auto& lb = b.lines[i];
        CHECK(la.line.text == lb.line.text);
        CHECK(la.signature.text() == lb.signature.text());
        CHECK(la.gana == lb.gana);
        CHECK(la.syllable_count == lb.syllable_count);
        CHECK(la.matra_count == lb.matra_count);
        const auto ra = la.ranked();
        const auto rb = lb.ranked();
        REQUIRE(ra.size() == rb.size());
        for (std::size_t m = 0; m < ra.size(); ++m) {
          CHECK(ra[m].ref.meter == rb[m].ref.meter);
          CHECK(ra[m].kind == rb[m].kind);
          CHECK(ra[m].cost == rb[m].cost);
          CHECK(ra[m].similarity == rb[m].similarity);
          CHECK(ra[m].suggestion.has_value() == rb[m].suggestion.has_value());
        }
      }
    }
    CHECK(pipeline::export_report(back, db, Format::Compact) ==
          pipeline::export_report(r, db, Format::Compact));
  }
  CHECK_THROWS_AS(pipeline::parse_detailed("{"), ParseError);
  CHECK_THROWS_AS(pipeline::parse_detailed("{}"), ParseError);
}

TEST_CASE("analyze rejects empty text") {
  CHECK_THROWS_AS(pipeline::analyze("  \n", shipped(), {}), EmptyInput);
}

TEST_CASE("explicit scheme overrides detection") {
  AnalyzeOptions opts;
  opts.scheme = Scheme::SLP1;
  const Report r = pipeline::analyze("rAmaH", shipped(), opts);
  CHECK(r.scheme == Scheme::SLP1);
  CHECK(r.verses.at(0).lines.at(0).line.text == "रामः");
}
