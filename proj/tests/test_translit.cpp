#include <doctest.h>

#include <random>

#include "chanda/errors.hpp"
#include "chanda/translit.hpp"
#include "chanda/utf8.hpp"

using namespace chanda;
using translit::detect_scheme;
using translit::from_devanagari;
using translit::to_devanagari;

TEST_CASE("detect_scheme follows the fixed priority") {
  CHECK(detect_scheme("नमस्ते") == Scheme::Devanagari);
  CHECK(detect_scheme("namaste sadā vatsale") == Scheme::IAST);
  CHECK(detect_scheme("rAmaH") == Scheme::HarvardKyoto);
  CHECK(detect_scheme("kfzRa") == Scheme::SLP1);
  CHECK(detect_scheme("kOsalyA") == Scheme::SLP1);
  CHECK(detect_scheme("rAmaH ityAha") == Scheme::HarvardKyoto);
  CHECK(detect_scheme("kRSNa") == Scheme::HarvardKyoto);
  CHECK(detect_scheme("rāma नम") == Scheme::Devanagari);
  CHECK_THROWS_AS(detect_scheme("  \n\t"), EmptyInput);
  CHECK_THROWS_AS(detect_scheme(""), EmptyInput);
}

TEST_CASE("to_devanagari examples") {
  CHECK(to_devanagari("namaste", Scheme::IAST).devanagari == "नमस्ते");
  CHECK(to_devanagari("नमस्ते", Scheme::Devanagari).devanagari == "नमस्ते");
  CHECK(to_devanagari("namaste", Scheme::SLP1).devanagari == "नमस्ते");
  CHECK(to_devanagari("bhārata", Scheme::IAST).devanagari == "भारत");
  CHECK(to_devanagari("BArata", Scheme::SLP1).devanagari == "भारत");
  CHECK(to_devanagari("bhArata", Scheme::HarvardKyoto).devanagari == "भारत");
  CHECK(to_devanagari("rāmaḥ", Scheme::IAST).devanagari == "रामः");
  CHECK(to_devanagari("kṛṣṇaṃ", Scheme::IAST).devanagari == "कृष्णं");
  CHECK(to_devanagari("aiśvaryam", Scheme::IAST).devanagari == "ऐश्वर्यम्");
  CHECK(to_devanagari("Rāma", Scheme::IAST).devanagari == "राम");
}

TEST_CASE("to_devanagari keeps the source record") {
  const NormalizedText n = to_devanagari("rAma", Scheme::HarvardKyoto);
  CHECK(n.source_scheme == Scheme::HarvardKyoto);
  CHECK(n.original == "rAma");
  CHECK(n.pass_through.empty());
}

TEST_CASE("IAST combining marks compose before lookup") {
  // a + combining macron, s + combining acute
  CHECK(to_devanagari("rāma", Scheme::IAST).devanagari == "राम");
  CHECK(to_devanagari("śiva", Scheme::IAST).devanagari == "शिव");
}

TEST_CASE("Devanagari nukta forms are normalized") {
  CHECK(to_devanagari("क़", Scheme::Devanagari).devanagari ==
        to_devanagari("क़", Scheme::Devanagari).devanagari);
}

TEST_CASE("unknown characters pass through with spans") {
  const NormalizedText n = to_devanagari("rAma#", Scheme::HarvardKyoto);
  REQUIRE(n.pass_through.size() == 1);
  const auto span = n.pass_through.front();
  CHECK(n.devanagari.substr(span.begin, span.end - span.begin) == "#");
}

TEST_CASE("from_devanagari examples") {
  CHECK(from_devanagari("नमस्ते", Scheme::IAST) == "namaste");
  CHECK(from_devanagari("नमस्ते", Scheme::Devanagari) == "नमस्ते");
  CHECK(from_devanagari("भारत", Scheme::IAST) == "bhārata");
  CHECK(from_devanagari("भारत", Scheme::HarvardKyoto) == "bhArata");
  CHECK(from_devanagari("भारत", Scheme::SLP1) == "BArata");
  CHECK(from_devanagari("रामः", Scheme::IAST) == "rāmaḥ");
}

TEST_CASE("to_devanagari is deterministic") {
  const std::string text = "kaścit kāntāvirahaguruṇā svādhikārāt pramattaḥ";
  CHECK(to_devanagari(text, Scheme::IAST).devanagari ==
        to_devanagari(text, Scheme::IAST).devanagari);
}

namespace {

// Syllable-structured Devanagari; independent vowels only open words and
// no aspirable stop is followed by a conjunct ह and ल never takes ृ, so
// Roman spellings stay unambiguous in every scheme.
std::string random_words(std::mt19937& rng) {
  static const std::u32string consonants = U"कखगघङचछजझञटठडढणतथदधनपफबभमयरलवशषसह";
  static const std::u32string plain_stops = U"कगचजटडतदपब";
  static const std::u32string vowels = U"अआइईउऊऋएऐओऔ";
  static const std::u32string signs = U"ािीुूृेैोौ";
  std::u32string out;
  const std::size_t words = 1 + rng() % 4;
  for (std::size_t w = 0; w < words; ++w) {
    if (w > 0) out.push_back(U' ');
    if (rng() % 4 == 0) out.push_back(vowels[rng() % vowels.size()]);
    const std::size_t syllables = 1 + rng() % 4;
    for (std::size_t s = 0; s < syllables; ++s) {
      char32_t c = consonants[rng() % consonants.size()];
      out.push_back(c);
      if (rng() % 4 == 0) {
        out.push_back(U'्');
        char32_t next = consonants[rng() % consonants.size()];
        if (next == U'ह' && plain_stops.find(c) != std::u32string::npos) next = U'य';
        out.push_back(next);
      }
      if (rng() % 2 == 0) {
        const char32_t sign = signs[rng() % signs.size()];
        if (!(sign == U'ृ' && out.back() == U'ल')) out.push_back(sign);
      }
      if (rng() % 8 == 0) out.push_back(rng() % 2 ? U'ं' : U'ः');
    }
    if (rng() % 6 == 0) {
      out.push_back(U'त');
      out.push_back(U'्');
    }
  }
  return utf8::encode(out);
}

}  // namespace

TEST_CASE("round trip through every scheme") {
  std::mt19937 rng(20261018);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::string d = random_words(rng);
    for (Scheme s : {Scheme::Devanagari, Scheme::IAST, Scheme::HarvardKyoto, Scheme::SLP1}) {
      INFO("scheme " << scheme_name(s) << " text " << d);
      CHECK(to_devanagari(from_devanagari(d, s), s).devanagari == d);
    }
  }
}

TEST_CASE("SLP1 round trip over unrestricted letter sequences") {
  static const std::u32string letters =
      U"कखगघङचछजझञटठडढणतथदधनपफबभमयरलवशषसहअआइईउऊऋॠएऐओऔािीुूृॄेैोौंः्";
  std::mt19937 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    std::u32string d;
    d.push_back(U'क');
    const std::size_t n = 1 + rng() % 12;
    for (std::size_t i = 0; i < n; ++i) {
      const char32_t c = letters[rng() % letters.size()];
      const bool sign = (c >= 0x093E && c <= 0x094D) || c == 0x0902 || c == 0x0903;
      const char32_t prev = d.back();
      const bool after_consonant = prev >= 0x0915 && prev <= 0x0939;
      if (sign && c != 0x0902 && c != 0x0903 && !after_consonant) continue;
      if (prev == 0x094D && !(c >= 0x0915 && c <= 0x0939)) continue;
      if ((c == 0x0902 || c == 0x0903) && (prev == 0x094D || prev == 0x0902 || prev == 0x0903)) {
        continue;
      }
      d.push_back(c);
    }
    const std::string text = utf8::encode(d);
    INFO(text);
    CHECK(to_devanagari(from_devanagari(text, Scheme::SLP1), Scheme::SLP1).devanagari == text);
  }
}

TEST_CASE("scheme names parse back") {
  for (Scheme s : {Scheme::Devanagari, Scheme::IAST, Scheme::HarvardKyoto, Scheme::SLP1}) {
    CHECK(parse_scheme(scheme_name(s)) == s);
  }
  CHECK(parse_scheme("Harvard-Kyoto") == Scheme::HarvardKyoto);
  CHECK_FALSE(parse_scheme("itrans").has_value());
}
