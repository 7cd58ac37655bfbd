#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chanda {

enum class Weight : char { L = 'L', G = 'G' };

enum class VarnaKind { Consonant, Vowel, Modifier };

struct Varna {
  VarnaKind kind = VarnaKind::Vowel;
  std::string glyph;  // consonants carry the halanta; vowels are independent forms
  bool operator==(const Varna&) const = default;
};

// A character that is neither Devanagari, whitespace nor a digit.
// `position` counts code points from the start of the scanned text.
struct UnknownCharacter {
  std::size_t position = 0;
  std::string character;
};

struct Syllable {
  std::vector<Varna> varnas;
  std::string display;
  std::size_t index = 0;
  std::size_t word = 0;          // whitespace-delimited word holding the vowel
  char32_t vowel = 0;            // independent form of the nucleus
  std::size_t onset = 0;         // consonants before the vowel
  std::size_t coda = 0;          // line-final consonants without a vowel
  bool has_modifier = false;     // anusvara, visarga or candrabindu
};

struct Syllabification {
  std::vector<Syllable> syllables;
  std::vector<UnknownCharacter> warnings;
  // Varnas that could not join any syllable (text without a vowel).
  std::vector<Varna> unattached;
};

// L/G weights of one pada. `padanta_laghu` records that the last syllable
// was weighed laghu; no final-guru rule is applied here.
class LgSignature {
 public:
  LgSignature() = default;
  explicit LgSignature(std::vector<Weight> weights);

  // Throws std::invalid_argument on characters other than 'L'/'G'.
  static LgSignature parse(std::string_view text);

  const std::vector<Weight>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  bool empty() const { return weights_.empty(); }
  bool padanta_laghu() const { return padanta_laghu_; }
  std::string text() const;

  // Copy with the final weight forced to guru.
  LgSignature with_final_guru() const;

  bool operator==(const LgSignature&) const = default;

 private:
  std::vector<Weight> weights_;
  bool padanta_laghu_ = false;
};

struct GanaSignature {
  std::string letters;  // Devanagari gana letters, then residual ल/ग
  bool operator==(const GanaSignature&) const = default;
};

namespace prosody {

struct VarnaSplit {
  std::vector<Varna> varnas;
  std::vector<UnknownCharacter> warnings;
};

VarnaSplit split_varnas(std::string_view text);

// Whitespace is transparent: a consonant cluster before a space opens the
// next word's first syllable.
Syllabification syllabify(std::string_view text);

LgSignature weigh(std::span<const Syllable> syllables);

GanaSignature to_gana(const LgSignature& signature);

// Throws UnknownGanaLetter.
LgSignature from_gana(std::string_view letters);

std::size_t matra_count(const LgSignature& signature);

}  // namespace prosody
}  // namespace chanda
