#include "chanda/matcher.hpp"

#include <algorithm>

#include "chanda/devanagari.hpp"
#include "chanda/errors.hpp"
#include "chanda/utf8.hpp"

namespace chanda {

std::vector<std::string> Suggestion::cells() const {
  std::vector<std::string> out;
  for (const auto& word : words) out.insert(out.end(), word.begin(), word.end());
  return out;
}

std::string_view match_kind_name(MatchKind kind) {
  switch (kind) {
    case MatchKind::Exact: return "exact";
    case MatchKind::Multiple: return "multiple";
    case MatchKind::Pattern: return "pattern";
    case MatchKind::Fuzzy: return "fuzzy";
  }
  return "exact";
}

namespace matcher {

namespace {

char weight_char(Weight w) { return static_cast<char>(w); }

// Display form of `s` with its short/long vowel swapped, when that applies.
std::optional<std::string> toggled_display(const Syllable& s, Weight target) {
  const bool lengthen = target == Weight::G && !deva::is_long_vowel(s.vowel);
  const bool shorten = target == Weight::L && deva::is_long_vowel(s.vowel);
  if (!lengthen && !shorten) return std::nullopt;
  const auto other = deva::toggle_length(s.vowel);
  if (!other) return std::nullopt;
  std::u32string text = utf8::decode(s.display);
  const char32_t sign = deva::vowel_to_sign(s.vowel).value_or(0);
  for (std::size_t i = text.size(); i-- > 0;) {
    if (text[i] == sign) {
      text[i] = *deva::vowel_to_sign(*other);
      return utf8::encode(text);
    }
    if (text[i] == s.vowel) {
      text[i] = *other;
      return utf8::encode(text);
    }
  }
  return std::nullopt;
}

std::vector<Match> wrap(const std::vector<PadaRef>& refs, MatchKind kind, bool fallback,
                        const MetricalDatabase& db) {
  std::vector<Match> out;
  out.reserve(refs.size());
  for (const auto& ref : refs) {
    Match m;
    m.ref = ref;
    m.kind = kind;
    m.target_length = db.pattern_of(ref).size();
    m.padanta_fallback = fallback;
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

TransformResult transform(const LgSignature& query, const PadaPattern& target) {
  const auto& q = query.weights();
  const auto& t = target.positions();
  const std::size_t m = q.size();
  const std::size_t n = t.size();
  std::vector<std::vector<std::size_t>> dp(m + 1, std::vector<std::size_t>(n + 1, 0));
  for (std::size_t i = 0; i <= m; ++i) dp[i][0] = i;
  for (std::size_t j = 0; j <= n; ++j) dp[0][j] = j;
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const std::size_t sub = admits(t[j - 1], q[i - 1]) ? 0 : 1;
      dp[i][j] = std::min({dp[i - 1][j - 1] + sub, dp[i - 1][j] + 1, dp[i][j - 1] + 1});
    }
  }

  TransformResult result;
  result.cost = dp[m][n];
  std::size_t i = m;
  std::size_t j = n;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0) {
      const std::size_t sub = admits(t[j - 1], q[i - 1]) ? 0 : 1;
      if (dp[i][j] == dp[i - 1][j - 1] + sub) {
        if (sub == 1) {
          result.ops.push_back({EditOp::Kind::Replace, i - 1,
                                t[j - 1] == Position::L ? Weight::L : Weight::G});
        }
        --i;
        --j;
        continue;
      }
    }
    if (i > 0 && dp[i][j] == dp[i - 1][j] + 1) {
      result.ops.push_back({EditOp::Kind::Delete, i - 1, std::nullopt});
      --i;
      continue;
    }
    // An 'either' slot is filled with a laghu; any weight would do.
    result.ops.push_back({EditOp::Kind::Insert, i, t[j - 1] == Position::G ? Weight::G : Weight::L});
    --j;
  }
  std::reverse(result.ops.begin(), result.ops.end());
  return result;
}

TransformResult transform_with_fallback(const LgSignature& query, const PadaPattern& target,
                                        bool* used_fallback) {
  TransformResult plain = transform(query, target);
  if (used_fallback != nullptr) *used_fallback = false;
  if (!query.padanta_laghu() || plain.cost == 0) return plain;
  TransformResult forced = transform(query.with_final_guru(), target);
  if (forced.cost < plain.cost) {
    if (used_fallback != nullptr) *used_fallback = true;
    return forced;
  }
  return plain;
}

double similarity(std::size_t cost, std::size_t target_length) {
  if (target_length == 0) throw ZeroTargetLength();
  const double s = 1.0 - static_cast<double>(cost) / static_cast<double>(target_length);
  return std::clamp(s, 0.0, 1.0);
}

std::vector<Match> find_direct_match(const LgSignature& signature, const MetricalDatabase& db,
                                     Index which) {
  const MatchKind kind = which == Index::Single ? MatchKind::Exact : MatchKind::Multiple;
  auto primary = db.lookup_exact(signature.text(), which);
  if (!primary.empty() || !signature.padanta_laghu()) return wrap(primary, kind, false, db);
  return wrap(db.lookup_exact(signature.with_final_guru().text(), which), kind, true, db);
}

std::vector<Match> find_pattern_match(const LgSignature& signature, const MetricalDatabase& db) {
  auto primary = db.lookup_pattern(signature.text());
  if (!primary.empty() || !signature.padanta_laghu()) {
    return wrap(primary, MatchKind::Pattern, false, db);
  }
  return wrap(db.lookup_pattern(signature.with_final_guru().text()), MatchKind::Pattern, true,
              db);
}

Match fuzzy_match_for(const LgSignature& signature, std::span<const Syllable> syllables,
                      const PadaRef& ref, const PadaPattern& pattern) {
  bool fallback = false;
  TransformResult t = transform_with_fallback(signature, pattern, &fallback);
  Match m;
  m.ref = ref;
  m.kind = MatchKind::Fuzzy;
  m.cost = t.cost;
  m.target_length = pattern.size();
  m.similarity = pattern.size() == 0 ? 0.0 : similarity(t.cost, pattern.size());
  m.padanta_fallback = fallback;
  m.suggestion = render_suggestion(syllables, t.ops, pattern);
  m.edit_ops = std::move(t.ops);
  return m;
}

std::vector<Match> find_fuzzy_match(const LgSignature& signature,
                                    std::span<const Syllable> syllables,
                                    const MetricalDatabase& db, std::size_t k) {
  struct Scored {
    const PatternEntry* entry;
    std::size_t cost;
    double similarity;
  };
  std::vector<Scored> scored;
  scored.reserve(db.pada_entries().size());
  for (const auto& entry : db.pada_entries()) {
    if (entry.pattern.size() == 0) continue;
    const std::size_t cost = transform_with_fallback(signature, entry.pattern).cost;
    scored.push_back({&entry, cost, similarity(cost, entry.pattern.size())});
  }
  const auto by_rank = [](const Scored& a, const Scored& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    if (a.similarity != b.similarity) return a.similarity > b.similarity;
    return a.entry->ref.label() < b.entry->ref.label();
  };
  const std::size_t keep = std::min(k, scored.size());
  std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(keep),
                    scored.end(), by_rank);
  std::vector<Match> out;
  out.reserve(keep);
  for (std::size_t i = 0; i < keep; ++i) {
    out.push_back(fuzzy_match_for(signature, syllables, scored[i].entry->ref,
                                  scored[i].entry->pattern));
  }
  return out;
}

Suggestion render_suggestion(std::span<const Syllable> syllables, std::span<const EditOp> ops,
                             const PadaPattern& /*target*/) {
  Suggestion out;
  std::optional<std::size_t> current_word;
  const auto emit = [&](std::size_t word, std::string cell) {
    if (!current_word || *current_word != word) {
      out.words.emplace_back();
      current_word = word;
    }
    out.words.back().push_back(std::move(cell));
  };
  const auto word_at = [&](std::size_t i) -> std::size_t {
    if (syllables.empty()) return 0;
    return syllables[std::min(i, syllables.size() - 1)].word;
  };

  std::size_t op = 0;
  for (std::size_t i = 0; i <= syllables.size(); ++i) {
    while (op < ops.size() && ops[op].kind == EditOp::Kind::Insert && ops[op].src_index == i) {
      emit(word_at(i), std::string("i(") + weight_char(*ops[op].target_weight) + ")");
      ++op;
    }
    if (i == syllables.size()) break;
    const Syllable& s = syllables[i];
    if (op < ops.size() && ops[op].src_index == i && ops[op].kind != EditOp::Kind::Insert) {
      const EditOp& e = ops[op++];
      if (e.kind == EditOp::Kind::Delete) {
        emit(s.word, "d(" + s.display + ")");
      } else {
        std::string cell = "r(" + s.display + ")[" + weight_char(*e.target_weight) + "]";
        if (const auto alt = toggled_display(s, *e.target_weight)) cell += "{" + *alt + "}";
        emit(s.word, std::move(cell));
      }
      continue;
    }
    emit(s.word, s.display);
  }
  return out;
}

}  // namespace matcher
}  // namespace chanda
