#include "chanda/translit.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <span>

#include "chanda/devanagari.hpp"
#include "chanda/errors.hpp"
#include "chanda/utf8.hpp"

namespace chanda {

namespace {

enum class Kind { Vowel, Consonant, Modifier, Symbol };

struct Entry {
  std::u32string_view roman;
  Kind kind;
  char32_t deva;
};

using K = Kind;

// The first entry for a Devanagari letter is the one emitted on output.
constexpr Entry kIast[] = {
    {U"a", K::Vowel, 0x0905},      {U"ā", K::Vowel, 0x0906},
    {U"i", K::Vowel, 0x0907},      {U"ī", K::Vowel, 0x0908},
    {U"u", K::Vowel, 0x0909},      {U"ū", K::Vowel, 0x090A},
    {U"ṛ", K::Vowel, 0x090B},      {U"ṝ", K::Vowel, 0x0960},
    {U"ḷ", K::Vowel, 0x090C},      {U"ḹ", K::Vowel, 0x0961},
    {U"e", K::Vowel, 0x090F},      {U"ai", K::Vowel, 0x0910},
    {U"o", K::Vowel, 0x0913},      {U"au", K::Vowel, 0x0914},
    {U"k", K::Consonant, 0x0915},  {U"kh", K::Consonant, 0x0916},
    {U"g", K::Consonant, 0x0917},  {U"gh", K::Consonant, 0x0918},
    {U"ṅ", K::Consonant, 0x0919},  {U"c", K::Consonant, 0x091A},
    {U"ch", K::Consonant, 0x091B}, {U"j", K::Consonant, 0x091C},
    {U"jh", K::Consonant, 0x091D}, {U"ñ", K::Consonant, 0x091E},
    {U"ṭ", K::Consonant, 0x091F},  {U"ṭh", K::Consonant, 0x0920},
    {U"ḍ", K::Consonant, 0x0921},  {U"ḍh", K::Consonant, 0x0922},
    {U"ṇ", K::Consonant, 0x0923},  {U"t", K::Consonant, 0x0924},
    {U"th", K::Consonant, 0x0925}, {U"d", K::Consonant, 0x0926},
    {U"dh", K::Consonant, 0x0927}, {U"n", K::Consonant, 0x0928},
    {U"p", K::Consonant, 0x092A},  {U"ph", K::Consonant, 0x092B},
    {U"b", K::Consonant, 0x092C},  {U"bh", K::Consonant, 0x092D},
    {U"m", K::Consonant, 0x092E},  {U"y", K::Consonant, 0x092F},
    {U"r", K::Consonant, 0x0930},  {U"l", K::Consonant, 0x0932},
    {U"ḻ", K::Consonant, 0x0933},  {U"v", K::Consonant, 0x0935},
    {U"ś", K::Consonant, 0x0936},  {U"ṣ", K::Consonant, 0x0937},
    {U"s", K::Consonant, 0x0938},  {U"h", K::Consonant, 0x0939},
    {U"ṃ", K::Modifier, 0x0902},   {U"ṁ", K::Modifier, 0x0902},
    {U"ḥ", K::Modifier, 0x0903},   {U"m̐", K::Modifier, 0x0901},
    {U"'", K::Symbol, 0x093D},     {U"’", K::Symbol, 0x093D},
    {U"|", K::Symbol, 0x0964},     {U"||", K::Symbol, 0x0965},
};

constexpr Entry kHarvardKyoto[] = {
    {U"a", K::Vowel, 0x0905},      {U"A", K::Vowel, 0x0906},
    {U"i", K::Vowel, 0x0907},      {U"I", K::Vowel, 0x0908},
    {U"u", K::Vowel, 0x0909},      {U"U", K::Vowel, 0x090A},
    {U"R", K::Vowel, 0x090B},      {U"RR", K::Vowel, 0x0960},
    {U"lR", K::Vowel, 0x090C},     {U"lRR", K::Vowel, 0x0961},
    {U"e", K::Vowel, 0x090F},      {U"ai", K::Vowel, 0x0910},
    {U"o", K::Vowel, 0x0913},      {U"au", K::Vowel, 0x0914},
    {U"k", K::Consonant, 0x0915},  {U"kh", K::Consonant, 0x0916},
    {U"g", K::Consonant, 0x0917},  {U"gh", K::Consonant, 0x0918},
    {U"G", K::Consonant, 0x0919},  {U"c", K::Consonant, 0x091A},
    {U"ch", K::Consonant, 0x091B}, {U"j", K::Consonant, 0x091C},
    {U"jh", K::Consonant, 0x091D}, {U"J", K::Consonant, 0x091E},
    {U"T", K::Consonant, 0x091F},  {U"Th", K::Consonant, 0x0920},
    {U"D", K::Consonant, 0x0921},  {U"Dh", K::Consonant, 0x0922},
    {U"N", K::Consonant, 0x0923},  {U"t", K::Consonant, 0x0924},
    {U"th", K::Consonant, 0x0925}, {U"d", K::Consonant, 0x0926},
    {U"dh", K::Consonant, 0x0927}, {U"n", K::Consonant, 0x0928},
    {U"p", K::Consonant, 0x092A},  {U"ph", K::Consonant, 0x092B},
    {U"b", K::Consonant, 0x092C},  {U"bh", K::Consonant, 0x092D},
    {U"m", K::Consonant, 0x092E},  {U"y", K::Consonant, 0x092F},
    {U"r", K::Consonant, 0x0930},  {U"l", K::Consonant, 0x0932},
    {U"L", K::Consonant, 0x0933},  {U"v", K::Consonant, 0x0935},
    {U"z", K::Consonant, 0x0936},  {U"S", K::Consonant, 0x0937},
    {U"s", K::Consonant, 0x0938},  {U"h", K::Consonant, 0x0939},
    {U"M", K::Modifier, 0x0902},   {U"H", K::Modifier, 0x0903},
    {U"~", K::Modifier, 0x0901},   {U"'", K::Symbol, 0x093D},
    {U"|", K::Symbol, 0x0964},     {U"||", K::Symbol, 0x0965},
};

constexpr Entry kSlp1[] = {
    {U"a", K::Vowel, 0x0905},     {U"A", K::Vowel, 0x0906},
    {U"i", K::Vowel, 0x0907},     {U"I", K::Vowel, 0x0908},
    {U"u", K::Vowel, 0x0909},     {U"U", K::Vowel, 0x090A},
    {U"f", K::Vowel, 0x090B},     {U"F", K::Vowel, 0x0960},
    {U"x", K::Vowel, 0x090C},     {U"X", K::Vowel, 0x0961},
    {U"e", K::Vowel, 0x090F},     {U"E", K::Vowel, 0x0910},
    {U"o", K::Vowel, 0x0913},     {U"O", K::Vowel, 0x0914},
    {U"k", K::Consonant, 0x0915}, {U"K", K::Consonant, 0x0916},
    {U"g", K::Consonant, 0x0917}, {U"G", K::Consonant, 0x0918},
    {U"N", K::Consonant, 0x0919}, {U"c", K::Consonant, 0x091A},
    {U"C", K::Consonant, 0x091B}, {U"j", K::Consonant, 0x091C},
    {U"J", K::Consonant, 0x091D}, {U"Y", K::Consonant, 0x091E},
    {U"w", K::Consonant, 0x091F}, {U"W", K::Consonant, 0x0920},
    {U"q", K::Consonant, 0x0921}, {U"Q", K::Consonant, 0x0922},
    {U"R", K::Consonant, 0x0923}, {U"t", K::Consonant, 0x0924},
    {U"T", K::Consonant, 0x0925}, {U"d", K::Consonant, 0x0926},
    {U"D", K::Consonant, 0x0927}, {U"n", K::Consonant, 0x0928},
    {U"p", K::Consonant, 0x092A}, {U"P", K::Consonant, 0x092B},
    {U"b", K::Consonant, 0x092C}, {U"B", K::Consonant, 0x092D},
    {U"m", K::Consonant, 0x092E}, {U"y", K::Consonant, 0x092F},
    {U"r", K::Consonant, 0x0930}, {U"l", K::Consonant, 0x0932},
    {U"L", K::Consonant, 0x0933}, {U"v", K::Consonant, 0x0935},
    {U"S", K::Consonant, 0x0936}, {U"z", K::Consonant, 0x0937},
    {U"s", K::Consonant, 0x0938}, {U"h", K::Consonant, 0x0939},
    {U"M", K::Modifier, 0x0902},  {U"H", K::Modifier, 0x0903},
    {U"~", K::Modifier, 0x0901},  {U"'", K::Symbol, 0x093D},
    {U"|", K::Symbol, 0x0964},    {U"||", K::Symbol, 0x0965},
};

struct Table {
  std::map<std::u32string, Entry, std::less<>> by_roman;
  std::map<char32_t, std::u32string_view> by_deva;
  std::size_t longest = 1;

  explicit Table(std::span<const Entry> entries) {
    for (const auto& e : entries) {
      by_roman.emplace(std::u32string(e.roman), e);
      by_deva.emplace(e.deva, e.roman);
      longest = std::max(longest, e.roman.size());
    }
  }
};

const Table& table_for(Scheme scheme) {
  static const Table iast{kIast};
  static const Table hk{kHarvardKyoto};
  static const Table slp1{kSlp1};
  switch (scheme) {
    case Scheme::IAST: return iast;
    case Scheme::HarvardKyoto: return hk;
    case Scheme::SLP1: return slp1;
    case Scheme::Devanagari: break;
  }
  return iast;  // unreachable for callers; Devanagari bypasses tables
}

// Precomposes base + combining-mark pairs used in IAST/ISO text.
std::u32string compose_latin(std::u32string_view text) {
  struct Pair {
    char32_t base;
    char32_t mark;
    char32_t composed;
  };
  static constexpr Pair kPairs[] = {
      {U'a', 0x0304, U'ā'}, {U'i', 0x0304, U'ī'}, {U'u', 0x0304, U'ū'},
      {U'r', 0x0323, U'ṛ'}, {U'r', 0x0325, U'ṛ'}, {U'ṛ', 0x0304, U'ṝ'},
      {U'l', 0x0323, U'ḷ'}, {U'l', 0x0325, U'ḷ'}, {U'ḷ', 0x0304, U'ḹ'},
      {U'm', 0x0323, U'ṃ'}, {U'm', 0x0307, U'ṁ'}, {U'h', 0x0323, U'ḥ'},
      {U's', 0x0301, U'ś'}, {U's', 0x0323, U'ṣ'}, {U't', 0x0323, U'ṭ'},
      {U'd', 0x0323, U'ḍ'}, {U'n', 0x0323, U'ṇ'}, {U'n', 0x0307, U'ṅ'},
      {U'n', 0x0303, U'ñ'}, {U'l', 0x0331, U'ḻ'},
  };
  std::u32string out;
  out.reserve(text.size());
  for (char32_t cp : text) {
    bool merged = false;
    if (!out.empty()) {
      for (const auto& p : kPairs) {
        if (p.base == out.back() && p.mark == cp) {
          out.back() = p.composed;
          merged = true;
          break;
        }
      }
    }
    if (!merged) out.push_back(cp);
  }
  return out;
}

char32_t fold_iast_case(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  if (cp == U'Ñ') return U'ñ';
  switch (cp) {
    case U'Ā': case U'Ī': case U'Ū': case U'Ś':
      return cp + 1;
    default:
      break;
  }
  // Latin Extended Additional: uppercase at even code points.
  if (cp >= 0x1E00 && cp <= 0x1EFF && cp % 2 == 0) return cp + 1;
  return cp;
}

bool is_iast_mark(char32_t cp) {
  static constexpr std::u32string_view kMarks =
      U"āīūṛṝḷḹṃḥśṣṭḍṇṅñṁḻĀĪŪṚṜḶḸṂḤŚṢṬḌṆṄÑ"
      U"\u0301\u0303\u0304\u0307\u0310\u0323\u0325\u0331";
  return kMarks.find(cp) != std::u32string_view::npos;
}

bool is_ascii_vowel(char32_t cp) {
  static constexpr std::u32string_view kVowels = U"aAiIuUeEoO";
  return kVowels.find(cp) != std::u32string_view::npos;
}

bool has_slp1_evidence(std::u32string_view text) {
  static constexpr std::u32string_view kExclusive = U"fFxXEOwWqQY";
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char32_t cp = text[i];
    if (kExclusive.find(cp) != std::u32string_view::npos) return true;
    // An intervocalic R is the SLP1 retroflex nasal; HK's vocalic R never
    // stands between two vowels.
    if (cp == U'R' && i > 0 && i + 1 < text.size() && is_ascii_vowel(text[i - 1]) &&
        is_ascii_vowel(text[i + 1])) {
      return true;
    }
  }
  return false;
}

class Encoder {
 public:
  explicit Encoder(std::u32string& out) : out_(out) {}

  void consonant(char32_t c) {
    flush();
    out_.push_back(c);
    pending_ = true;
  }

  void vowel(char32_t v) {
    if (pending_) {
      if (v != deva::kA) out_.push_back(*deva::vowel_to_sign(v));
      pending_ = false;
    } else {
      out_.push_back(v);
    }
  }

  void other(char32_t c) {
    flush();
    out_.push_back(c);
  }

  void flush() {
    if (pending_) out_.push_back(deva::kVirama);
    pending_ = false;
  }

 private:
  std::u32string& out_;
  bool pending_ = false;
};

}  // namespace

std::string_view scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::Devanagari: return "devanagari";
    case Scheme::IAST: return "iast";
    case Scheme::HarvardKyoto: return "hk";
    case Scheme::SLP1: return "slp1";
  }
  return "devanagari";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "devanagari" || lower == "deva") return Scheme::Devanagari;
  if (lower == "iast") return Scheme::IAST;
  if (lower == "hk" || lower == "harvardkyoto" || lower == "harvard-kyoto") {
    return Scheme::HarvardKyoto;
  }
  if (lower == "slp1") return Scheme::SLP1;
  return std::nullopt;
}

namespace translit {

Scheme detect_scheme(std::string_view text) {
  if (utf8::trim(text).empty()) throw EmptyInput();
  const std::u32string cps = utf8::decode(text);
  if (std::any_of(cps.begin(), cps.end(), deva::in_block)) return Scheme::Devanagari;
  if (std::any_of(cps.begin(), cps.end(), is_iast_mark)) return Scheme::IAST;
  if (has_slp1_evidence(cps)) return Scheme::SLP1;
  return Scheme::HarvardKyoto;
}

NormalizedText to_devanagari(std::string_view text, Scheme scheme) {
  NormalizedText result;
  result.original = std::string(text);
  result.source_scheme = scheme;

  std::u32string input = utf8::decode(text);
  std::u32string out;
  std::vector<std::pair<std::size_t, std::size_t>> raw_spans;  // code-point offsets

  const auto note_pass_through = [&](std::size_t begin) {
    if (!raw_spans.empty() && raw_spans.back().second == begin) {
      raw_spans.back().second = out.size();
    } else {
      raw_spans.emplace_back(begin, out.size());
    }
  };

  if (scheme == Scheme::Devanagari) {
    out = deva::compose(input);
    for (std::size_t i = 0; i < out.size(); ++i) {
      const char32_t cp = out[i];
      if (!deva::in_block(cp) && !utf8::is_space(cp) && !deva::is_digit(cp) &&
          !deva::is_line_end(cp)) {
        if (!raw_spans.empty() && raw_spans.back().second == i) {
          raw_spans.back().second = i + 1;
        } else {
          raw_spans.emplace_back(i, i + 1);
        }
      }
    }
  } else {
    if (scheme == Scheme::IAST) {
      for (auto& cp : input) cp = fold_iast_case(cp);
      input = compose_latin(input);
    }
    const Table& table = table_for(scheme);
    Encoder enc(out);
    std::size_t i = 0;
    while (i < input.size()) {
      const Entry* hit = nullptr;
      std::size_t len = std::min(table.longest, input.size() - i);
      for (; len > 0; --len) {
        const auto it = table.by_roman.find(std::u32string_view(input).substr(i, len));
        if (it != table.by_roman.end()) {
          hit = &it->second;
          break;
        }
      }
      if (hit == nullptr) {
        enc.flush();
        const std::size_t begin = out.size();
        const char32_t cp = input[i];
        out.push_back(cp);
        if (!utf8::is_space(cp) && !deva::is_digit(cp) && !deva::is_line_end(cp) &&
            !deva::in_block(cp)) {
          note_pass_through(begin);
        }
        ++i;
        continue;
      }
      switch (hit->kind) {
        case Kind::Consonant: enc.consonant(hit->deva); break;
        case Kind::Vowel: enc.vowel(hit->deva); break;
        case Kind::Modifier:
        case Kind::Symbol: enc.other(hit->deva); break;
      }
      i += len;
    }
    enc.flush();
    out = deva::compose(out);
  }

  // Convert code-point spans to byte spans.
  std::vector<std::size_t> byte_offset(out.size() + 1, 0);
  std::string encoded;
  encoded.reserve(out.size() * 3);
  for (std::size_t k = 0; k < out.size(); ++k) {
    byte_offset[k] = encoded.size();
    encoded += utf8::encode(out[k]);
  }
  byte_offset[out.size()] = encoded.size();
  for (const auto& [b, e] : raw_spans) {
    result.pass_through.push_back({byte_offset[b], byte_offset[e]});
  }
  result.devanagari = std::move(encoded);
  return result;
}

std::string from_devanagari(std::string_view devanagari, Scheme scheme) {
  if (scheme == Scheme::Devanagari) return std::string(devanagari);
  const Table& table = table_for(scheme);
  const std::u32string in = utf8::decode(devanagari);
  std::u32string out;
  out.reserve(in.size() * 2);

  const auto roman = [&](char32_t cp) -> std::optional<std::u32string_view> {
    const auto it = table.by_deva.find(cp);
    if (it == table.by_deva.end()) return std::nullopt;
    return it->second;
  };

  for (std::size_t i = 0; i < in.size(); ++i) {
    const char32_t cp = in[i];
    const auto r = roman(cp);
    if (deva::is_consonant(cp) && r) {
      out += *r;
      std::size_t next = i + 1;
      if (next < in.size() && in[next] == deva::kNukta) {
        out.push_back(deva::kNukta);
        ++next;
      }
      if (next < in.size() && in[next] == deva::kVirama) {
        i = next;
        continue;
      }
      if (next < in.size()) {
        if (const auto v = deva::sign_to_vowel(in[next])) {
          if (const auto rv = roman(*v)) {
            out += *rv;
            i = next;
            continue;
          }
        }
      }
      out += *roman(deva::kA);
      i = next - 1;
      continue;
    }
    if (r) {
      out += *r;
      continue;
    }
    out.push_back(cp);
  }
  return utf8::encode(out);
}

}  // namespace translit
}  // namespace chanda
