#pragma once

#include <optional>
#include <string>
#include <string_view>

// Code-point classification for the Devanagari block.

namespace chanda::deva {

inline constexpr char32_t kVirama = 0x094D;
inline constexpr char32_t kNukta = 0x093C;
inline constexpr char32_t kCandrabindu = 0x0901;
inline constexpr char32_t kAnusvara = 0x0902;
inline constexpr char32_t kVisarga = 0x0903;
inline constexpr char32_t kAvagraha = 0x093D;
inline constexpr char32_t kDanda = 0x0964;
inline constexpr char32_t kDoubleDanda = 0x0965;
inline constexpr char32_t kOm = 0x0950;
inline constexpr char32_t kA = 0x0905;

bool in_block(char32_t cp);
bool is_consonant(char32_t cp);
bool is_independent_vowel(char32_t cp);
bool is_vowel_sign(char32_t cp);
bool is_modifier(char32_t cp);  // candrabindu, anusvara, visarga
bool is_digit(char32_t cp);     // ASCII or Devanagari
bool is_line_end(char32_t cp);  // newline, danda, double danda, full stop

// Vowel sign (matra) -> independent vowel, and back. Nullopt when absent.
std::optional<char32_t> sign_to_vowel(char32_t sign);
std::optional<char32_t> vowel_to_sign(char32_t vowel);

bool is_long_vowel(char32_t independent_vowel);

// Short <-> long counterpart for इ/उ/ऋ and their long forms.
std::optional<char32_t> toggle_length(char32_t independent_vowel);

// Canonical composition restricted to the Devanagari block: nukta forms
// are decomposed or composed exactly as Unicode NFC prescribes.
std::u32string compose(std::u32string_view text);

}  // namespace chanda::deva
