#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "twistbt/label_group.hpp"

namespace twistbt {

/// <generators | relators> with freely reduced non-empty relators.
class FinitePresentation {
 public:
  FinitePresentation(std::vector<std::string> generators, std::vector<Word> relators);
  /// Relators given as text words over the generator names.
  static FinitePresentation parse(std::vector<std::string> generators, const std::vector<std::string>& relators);

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }

  Word parse_word(std::string_view text) const { return twistbt::parse_word(generators_, text); }
  std::string format_word(const Word& w) const { return twistbt::format_word(generators_, w); }
  void check_word(const Word& w) const;

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

struct KuznetsovBudget {
  std::size_t max_length = 24;
  std::size_t max_states = 200000;
};

/// Insert `inserted` (a cyclic conjugate of a relator or its inverse) at
/// `position`, then freely reduce, giving `result`.
struct RewriteStep {
  Word inserted;
  std::size_t position = 0;
  Word result;
};

using RewriteTrace = std::vector<RewriteStep>;

struct Verdict {
  enum class Kind { trivial, nontrivial, budget_exhausted };
  Kind kind = Kind::budget_exhausted;
  /// For trivial: rewriting of w to the empty word over R.
  RewriteTrace day_trace;
  /// For nontrivial: for each generator, a rewriting of it to the empty
  /// word over R and w.
  std::vector<RewriteTrace> night_traces;
  std::size_t rounds = 0;
  std::size_t states_explored = 0;
  std::size_t last_state_cap = 0;
};

std::string to_string(Verdict::Kind kind);

/// Day and night search in rounds with a doubling state cap.  Trivial and
/// Nontrivial come with traces; Nontrivial is sound when the presented
/// group is non-trivial and w lies in a subgroup meeting every non-trivial
/// normal subgroup (for instance when the group is simple).
Verdict decide_word(const FinitePresentation& p, const Word& w, const KuznetsovBudget& budget = {});

/// Mechanical check that `trace` rewrites `start` to the empty word using
/// only cyclic conjugates of `relators` and their inverses.
bool replay_trace(const std::vector<Word>& relators, const Word& start, const RewriteTrace& trace);

/// Replays every trace a verdict carries.
bool verify_verdict(const FinitePresentation& p, const Word& w, const Verdict& verdict);

}  // namespace twistbt
