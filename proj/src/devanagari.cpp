#include "chanda/devanagari.hpp"

#include <array>
#include <utility>

namespace chanda::deva {

namespace {

constexpr std::array<std::pair<char32_t, char32_t>, 17> kSigns{{
    {0x093E, 0x0906},  // ा
    {0x093F, 0x0907},  // ि
    {0x0940, 0x0908},  // ी
    {0x0941, 0x0909},  // ु
    {0x0942, 0x090A},  // ू
    {0x0943, 0x090B},  // ृ
    {0x0944, 0x0960},  // ॄ
    {0x0945, 0x090D},
    {0x0946, 0x090E},
    {0x0947, 0x090F},  // े
    {0x0948, 0x0910},  // ै
    {0x0949, 0x0911},
    {0x094A, 0x0912},
    {0x094B, 0x0913},  // ो
    {0x094C, 0x0914},  // ौ
    {0x0962, 0x090C},  // ॢ
    {0x0963, 0x0961},  // ॣ
}};

// Precomposed nukta letters excluded from NFC composition.
constexpr std::array<std::pair<char32_t, char32_t>, 8> kNuktaExcluded{{
    {0x0958, 0x0915},
    {0x0959, 0x0916},
    {0x095A, 0x0917},
    {0x095B, 0x091C},
    {0x095C, 0x0921},
    {0x095D, 0x0922},
    {0x095E, 0x092B},
    {0x095F, 0x092F},
}};

constexpr std::array<std::pair<char32_t, char32_t>, 3> kNuktaComposed{{
    {0x0928, 0x0929},
    {0x0930, 0x0931},
    {0x0933, 0x0934},
}};

}  // namespace

bool in_block(char32_t cp) { return cp >= 0x0900 && cp <= 0x097F; }

bool is_consonant(char32_t cp) {
  return (cp >= 0x0915 && cp <= 0x0939) || (cp >= 0x0958 && cp <= 0x095F) ||
         (cp >= 0x0978 && cp <= 0x097F);
}

bool is_independent_vowel(char32_t cp) {
  return (cp >= 0x0904 && cp <= 0x0914) || cp == 0x0960 || cp == 0x0961 ||
         (cp >= 0x0972 && cp <= 0x0977);
}

bool is_vowel_sign(char32_t cp) { return sign_to_vowel(cp).has_value(); }

bool is_modifier(char32_t cp) {
  return cp == kCandrabindu || cp == kAnusvara || cp == kVisarga;
}

bool is_digit(char32_t cp) {
  return (cp >= U'0' && cp <= U'9') || (cp >= 0x0966 && cp <= 0x096F);
}

bool is_line_end(char32_t cp) {
  return cp == U'\n' || cp == kDanda || cp == kDoubleDanda || cp == U'.';
}

std::optional<char32_t> sign_to_vowel(char32_t sign) {
  for (const auto& [s, v] : kSigns) {
    if (s == sign) return v;
  }
  return std::nullopt;
}

std::optional<char32_t> vowel_to_sign(char32_t vowel) {
  for (const auto& [s, v] : kSigns) {
    if (v == vowel) return s;
  }
  return std::nullopt;
}

bool is_long_vowel(char32_t v) {
  switch (v) {
    case 0x0906:  // आ
    case 0x0908:  // ई
    case 0x090A:  // ऊ
    case 0x0960:  // ॠ
    case 0x0961:  // ॡ
    case 0x090F:  // ए
    case 0x0910:  // ऐ
    case 0x0913:  // ओ
    case 0x0914:  // औ
    case 0x090D:  // candra e
    case 0x0911:  // candra o
      return true;
    default:
      return false;
  }
}

std::optional<char32_t> toggle_length(char32_t v) {
  switch (v) {
    case 0x0907: return 0x0908;
    case 0x0908: return 0x0907;
    case 0x0909: return 0x090A;
    case 0x090A: return 0x0909;
    case 0x090B: return 0x0960;
    case 0x0960: return 0x090B;
    default: return std::nullopt;
  }
}

std::u32string compose(std::u32string_view text) {
  std::u32string out;
  out.reserve(text.size() + 4);
  for (char32_t cp : text) {
    bool decomposed = false;
    for (const auto& [pre, base] : kNuktaExcluded) {
      if (cp == pre) {
        out.push_back(base);
        out.push_back(kNukta);
        decomposed = true;
        break;
      }
    }
    if (decomposed) continue;
    if (cp == kNukta && !out.empty()) {
      bool composed = false;
      for (const auto& [base, pre] : kNuktaComposed) {
        if (out.back() == base) {
          out.back() = pre;
          composed = true;
          break;
        }
      }
      if (composed) continue;
    }
    out.push_back(cp);
  }
  return out;
}

}  // namespace chanda::deva
