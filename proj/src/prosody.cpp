#include "chanda/prosody.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>

#include "chanda/devanagari.hpp"
#include "chanda/errors.hpp"
#include "chanda/utf8.hpp"

namespace chanda {

LgSignature::LgSignature(std::vector<Weight> weights)
    : weights_(std::move(weights)),
      padanta_laghu_(!weights_.empty() && weights_.back() == Weight::L) {}

LgSignature LgSignature::parse(std::string_view text) {
  std::vector<Weight> weights;
  weights.reserve(text.size());
  for (char c : text) {
    if (c == 'L') {
      weights.push_back(Weight::L);
    } else if (c == 'G') {
      weights.push_back(Weight::G);
    } else {
      throw std::invalid_argument("lg-signature may only contain 'L' and 'G'");
    }
  }
  return LgSignature(std::move(weights));
}

std::string LgSignature::text() const {
  std::string out;
  out.reserve(weights_.size());
  for (Weight w : weights_) out.push_back(static_cast<char>(w));
  return out;
}

LgSignature LgSignature::with_final_guru() const {
  LgSignature copy = *this;
  if (!copy.weights_.empty()) copy.weights_.back() = Weight::G;
  return copy;
}

namespace prosody {

namespace {

bool is_silent(char32_t cp) {
  return cp == deva::kAvagraha || cp == deva::kDanda || cp == deva::kDoubleDanda ||
         cp == U'.' || cp == U'|' || deva::is_digit(cp) || (cp >= 0x0951 && cp <= 0x0954) ||
         cp == 0x200C || cp == 0x200D || cp == 0x0970 || cp == 0x0971;
}

Varna consonant_varna(char32_t cp, bool nukta) {
  std::u32string glyph{cp};
  if (nukta) glyph.push_back(deva::kNukta);
  glyph.push_back(deva::kVirama);
  return {VarnaKind::Consonant, utf8::encode(glyph)};
}

Varna vowel_varna(char32_t v) { return {VarnaKind::Vowel, utf8::encode(v)}; }

class Scanner {
 public:
  Syllabification run(std::string_view text) {
    const std::u32string cps = utf8::decode(text);
    std::size_t word = 0;
    bool in_word = false;
    for (std::size_t pos = 0; pos < cps.size(); ++pos) {
      const char32_t cp = cps[pos];
      if (utf8::is_space(cp)) {
        if (in_word) ++word;
        in_word = false;
        continue;
      }
      in_word = true;
      word_ = word;
      const std::size_t at = visible_.size();
      visible_.push_back(cp);

      if (deva::is_consonant(cp)) {
        if (live_) close_inherent();
        if (onset_.empty()) onset_start_ = at;
        onset_.push_back(cp);
        onset_nukta_.push_back(false);
        live_ = true;
        live_word_ = word;
      } else if (cp == deva::kNukta) {
        if (!onset_nukta_.empty()) onset_nukta_.back() = true;
      } else if (cp == deva::kVirama) {
        live_ = false;
      } else if (const auto sign = deva::sign_to_vowel(cp)) {
        live_ = false;
        close(*sign, at);
      } else if (deva::is_independent_vowel(cp)) {
        if (live_) close_inherent();
        close(cp, at);
      } else if (cp == deva::kOm) {
        if (live_) close_inherent();
        close(0x0913, at);
        add_modifier(deva::kAnusvara);
      } else if (deva::is_modifier(cp)) {
        if (live_) close_inherent();
        add_modifier(cp);
      } else if (is_silent(cp) || deva::in_block(cp)) {
        // structural marks carry no sound
      } else {
        result_.warnings.push_back({pos, utf8::encode(cp)});
      }
    }
    if (live_) close_inherent();
    finish();
    return std::move(result_);
  }

 private:
  void close_inherent() {
    live_ = false;
    const std::size_t saved_word = word_;
    word_ = live_word_;
    close(deva::kA, std::nullopt);
    word_ = saved_word;
  }

  void close(char32_t vowel, std::optional<std::size_t> vowel_at) {
    Syllable s;
    s.vowel = vowel;
    s.word = word_;
    s.onset = onset_.size();
    for (std::size_t i = 0; i < onset_.size(); ++i) {
      s.varnas.push_back(consonant_varna(onset_[i], onset_nukta_[i]));
    }
    s.varnas.push_back(vowel_varna(vowel));
    const std::size_t start = !onset_.empty() ? onset_start_ : vowel_at.value_or(visible_.size() - 1);
    starts_.push_back(start);
    onset_.clear();
    onset_nukta_.clear();
    result_.syllables.push_back(std::move(s));
  }

  void add_modifier(char32_t cp) {
    if (result_.syllables.empty()) {
      result_.unattached.push_back({VarnaKind::Modifier, utf8::encode(cp)});
      return;
    }
    Syllable& last = result_.syllables.back();
    last.varnas.push_back({VarnaKind::Modifier, utf8::encode(cp)});
    last.has_modifier = true;
  }

  void finish() {
    auto& syllables = result_.syllables;
    if (syllables.empty()) {
      for (std::size_t i = 0; i < onset_.size(); ++i) {
        result_.unattached.push_back(consonant_varna(onset_[i], onset_nukta_[i]));
      }
      return;
    }
    // A cluster with no vowel after it closes the last syllable.
    Syllable& last = syllables.back();
    for (std::size_t i = 0; i < onset_.size(); ++i) {
      last.varnas.push_back(consonant_varna(onset_[i], onset_nukta_[i]));
    }
    last.coda = onset_.size();
    starts_.front() = 0;
    for (std::size_t i = 0; i < syllables.size(); ++i) {
      const std::size_t b = starts_[i];
      const std::size_t e = i + 1 < syllables.size() ? starts_[i + 1] : visible_.size();
      syllables[i].display = utf8::encode(std::u32string_view(visible_).substr(b, e - b));
      syllables[i].index = i;
    }
  }

  Syllabification result_;
  std::u32string visible_;
  std::vector<std::size_t> starts_;
  std::vector<char32_t> onset_;
  std::vector<bool> onset_nukta_;
  std::size_t onset_start_ = 0;
  bool live_ = false;
  std::size_t word_ = 0;
  std::size_t live_word_ = 0;
};

struct Gana {
  std::string_view letter;
  std::array<Weight, 3> weights;
};

constexpr Weight L = Weight::L;
constexpr Weight G = Weight::G;

constexpr std::array<Gana, 8> kGanas{{
    {"म", {G, G, G}},
    {"य", {L, G, G}},
    {"र", {G, L, G}},
    {"स", {L, L, G}},
    {"त", {G, G, L}},
    {"ज", {L, G, L}},
    {"भ", {G, L, L}},
    {"न", {L, L, L}},
}};

constexpr std::string_view kResidualLaghu = "ल";
constexpr std::string_view kResidualGuru = "ग";

}  // namespace

VarnaSplit split_varnas(std::string_view text) {
  Syllabification s = syllabify(text);
  VarnaSplit out;
  for (auto& syllable : s.syllables) {
    for (auto& v : syllable.varnas) out.varnas.push_back(std::move(v));
  }
  for (auto& v : s.unattached) out.varnas.push_back(std::move(v));
  out.warnings = std::move(s.warnings);
  return out;
}

Syllabification syllabify(std::string_view text) { return Scanner{}.run(text); }

LgSignature weigh(std::span<const Syllable> syllables) {
  std::vector<Weight> weights;
  weights.reserve(syllables.size());
  for (std::size_t i = 0; i < syllables.size(); ++i) {
    const Syllable& s = syllables[i];
    const bool heavy_onset_next = i + 1 < syllables.size() && syllables[i + 1].onset >= 2;
    const bool heavy = deva::is_long_vowel(s.vowel) || s.has_modifier || heavy_onset_next ||
                       s.coda > 0;
    weights.push_back(heavy ? Weight::G : Weight::L);
  }
  return LgSignature(std::move(weights));
}

GanaSignature to_gana(const LgSignature& signature) {
  const auto& w = signature.weights();
  GanaSignature out;
  std::size_t i = 0;
  for (; i + 3 <= w.size(); i += 3) {
    for (const auto& g : kGanas) {
      if (g.weights[0] == w[i] && g.weights[1] == w[i + 1] && g.weights[2] == w[i + 2]) {
        out.letters += g.letter;
        break;
      }
    }
  }
  for (; i < w.size(); ++i) {
    out.letters += w[i] == Weight::L ? kResidualLaghu : kResidualGuru;
  }
  return out;
}

LgSignature from_gana(std::string_view letters) {
  std::vector<Weight> weights;
  const std::u32string cps = utf8::decode(letters);
  for (char32_t cp : cps) {
    const std::string letter = utf8::encode(cp);
    if (letter == kResidualLaghu) {
      weights.push_back(Weight::L);
      continue;
    }
    if (letter == kResidualGuru) {
      weights.push_back(Weight::G);
      continue;
    }
    const auto it = std::find_if(kGanas.begin(), kGanas.end(),
                                 [&](const Gana& g) { return g.letter == letter; });
    if (it == kGanas.end()) throw UnknownGanaLetter(letter);
    weights.insert(weights.end(), it->weights.begin(), it->weights.end());
  }
  return LgSignature(std::move(weights));
}

std::size_t matra_count(const LgSignature& signature) {
  std::size_t count = 0;
  for (Weight w : signature.weights()) count += w == Weight::L ? 1 : 2;
  return count;
}

}  // namespace prosody
}  // namespace chanda
