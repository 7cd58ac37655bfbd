#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chanda {

enum class Scheme { Devanagari, IAST, HarvardKyoto, SLP1 };

std::string_view scheme_name(Scheme scheme);
// Accepts "devanagari", "iast", "hk", "harvardkyoto", "harvard-kyoto", "slp1"
// (case-insensitive).
std::optional<Scheme> parse_scheme(std::string_view name);

// Byte range [begin, end) in NormalizedText::devanagari holding characters
// that had no mapping and were copied through unchanged.
struct PassThroughSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  bool operator==(const PassThroughSpan&) const = default;
};

struct NormalizedText {
  std::string devanagari;
  Scheme source_scheme = Scheme::Devanagari;
  std::string original;
  std::vector<PassThroughSpan> pass_through;
};

namespace translit {

// Priority: Devanagari code points, IAST diacritics, SLP1-only letters,
// otherwise Harvard-Kyoto. Throws EmptyInput on whitespace-only text.
Scheme detect_scheme(std::string_view text);

NormalizedText to_devanagari(std::string_view text, Scheme scheme);

std::string from_devanagari(std::string_view devanagari, Scheme scheme);

}  // namespace translit
}  // namespace chanda
