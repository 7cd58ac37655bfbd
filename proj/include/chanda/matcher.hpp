#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chanda/meterdb.hpp"
#include "chanda/prosody.hpp"

namespace chanda {

inline constexpr std::size_t kDefaultTopK = 10;

struct EditOp {
  enum class Kind { Replace, Insert, Delete };
  Kind kind = Kind::Replace;
  // Query position for replace/delete; insertion point for insert.
  std::size_t src_index = 0;
  std::optional<Weight> target_weight;  // absent for delete
  bool operator==(const EditOp&) const = default;
};

struct TransformResult {
  std::size_t cost = 0;
  std::vector<EditOp> ops;
};

// Suggestion cells grouped by the word they fall in.
struct Suggestion {
  std::vector<std::vector<std::string>> words;
  std::vector<std::string> cells() const;
};

enum class MatchKind { Exact, Multiple, Pattern, Fuzzy };
std::string_view match_kind_name(MatchKind kind);

struct Match {
  PadaRef ref;
  MatchKind kind = MatchKind::Exact;
  std::size_t cost = 0;
  double similarity = 1.0;
  std::size_t target_length = 0;
  std::vector<EditOp> edit_ops;
  std::optional<Suggestion> suggestion;
  bool padanta_fallback = false;  // matched only after forcing the final guru
};

namespace matcher {

// Unit-cost edit distance where substituting at a pattern position is free
// when the position admits the query weight. Ties in the backtrace prefer
// replace/match, then delete, then insert.
TransformResult transform(const LgSignature& query, const PadaPattern& target);

// transform(), retried with the final syllable as guru when the query ends
// in laghu; the cheaper reading wins and the unmodified one wins ties.
TransformResult transform_with_fallback(const LgSignature& query, const PadaPattern& target,
                                        bool* used_fallback = nullptr);

// Throws ZeroTargetLength.
double similarity(std::size_t cost, std::size_t target_length);

std::vector<Match> find_direct_match(const LgSignature& signature, const MetricalDatabase& db,
                                     Index which);

std::vector<Match> find_pattern_match(const LgSignature& signature, const MetricalDatabase& db);

std::vector<Match> find_fuzzy_match(const LgSignature& signature,
                                    std::span<const Syllable> syllables,
                                    const MetricalDatabase& db, std::size_t k = kDefaultTopK);

Suggestion render_suggestion(std::span<const Syllable> syllables, std::span<const EditOp> ops,
                             const PadaPattern& target);

// Builds a fuzzy-kind Match for one pattern, with its suggestion.
Match fuzzy_match_for(const LgSignature& signature, std::span<const Syllable> syllables,
                      const PadaRef& ref, const PadaPattern& pattern);

}  // namespace matcher
}  // namespace chanda
