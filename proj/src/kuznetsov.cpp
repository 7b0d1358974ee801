#include "twistbt/kuznetsov.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>

namespace twistbt {

FinitePresentation::FinitePresentation(std::vector<std::string> generators, std::vector<Word> relators)
    : generators_(std::move(generators)), relators_(std::move(relators)) {
  if (generators_.empty()) throw Error("a presentation needs at least one generator");
  for (const Word& r : relators_) {
    check_word(r);
    if (r.empty()) throw Error("relators must be non-empty");
    if (free_reduce(r) != r) throw Error("relator '" + format_word(r) + "' is not freely reduced");
  }
}

FinitePresentation FinitePresentation::parse(std::vector<std::string> generators,
                                             const std::vector<std::string>& relators) {
  std::vector<Word> words;
  for (const std::string& text : relators) words.push_back(twistbt::parse_word(generators, text));
  return FinitePresentation(std::move(generators), std::move(words));
}

void FinitePresentation::check_word(const Word& w) const {
  for (const Letter& a : w) {
    if (a.generator >= generators_.size() || (a.exponent != 1 && a.exponent != -1)) {
      throw Error("word uses an unknown generator");
    }
  }
}

std::string to_string(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::trivial:
      return "trivial";
    case Verdict::Kind::nontrivial:
      return "nontrivial";
    case Verdict::Kind::budget_exhausted:
      return "budget_exhausted";
  }
  return "?";
}

namespace {

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (Letter& a : out) a.exponent = -a.exponent;
  return out;
}

/// Freely reduced cyclic conjugates of every relator and its inverse.
std::vector<Word> relator_variants(const std::vector<Word>& relators) {
  std::set<Word> seen;
  std::vector<Word> out;
  for (const Word& r : relators) {
    for (const Word& base : {r, inverse_word(r)}) {
      for (std::size_t i = 0; i < base.size(); ++i) {
        Word rotated(base.begin() + static_cast<std::ptrdiff_t>(i), base.end());
        rotated.insert(rotated.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(i));
        rotated = free_reduce(rotated);
        if (!rotated.empty() && seen.insert(rotated).second) out.push_back(std::move(rotated));
      }
    }
  }
  return out;
}

Word insert_at(const Word& w, std::size_t position, const Word& inserted) {
  Word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(position));
  out.insert(out.end(), inserted.begin(), inserted.end());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(position), w.end());
  return free_reduce(out);
}

struct SearchResult {
  std::optional<RewriteTrace> trace;
  std::size_t states = 0;
};

// Breadth first over freely reduced words of length <= max_length.
SearchResult search_empty(const std::vector<Word>& variants, const Word& start, std::size_t max_length,
                          std::size_t max_states) {
  struct State {
    Word word;
    std::size_t parent;
    std::size_t variant;
    std::size_t position;
  };
  SearchResult out;
  const Word first = free_reduce(start);
  if (first.empty()) {
    out.trace = RewriteTrace{};
    if (start != first) out.trace->push_back(RewriteStep{{}, 0, {}});
    return out;
  }
  std::vector<State> states{State{first, 0, 0, 0}};
  std::map<Word, std::size_t> index{{first, 0}};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t at = queue.front();
    queue.pop_front();
    const Word current = states[at].word;
    for (std::size_t v = 0; v < variants.size(); ++v) {
      for (std::size_t pos = 0; pos <= current.size(); ++pos) {
        Word next = insert_at(current, pos, variants[v]);
        if (next.size() > max_length || index.count(next)) continue;
        states.push_back(State{next, at, v, pos});
        index.emplace(next, states.size() - 1);
        if (next.empty()) {
          out.states = states.size();
          RewriteTrace trace;
          for (std::size_t i = states.size() - 1; i != 0; i = states[i].parent) {
            trace.push_back(RewriteStep{variants[states[i].variant], states[i].position, states[i].word});
          }
          std::reverse(trace.begin(), trace.end());
          out.trace = std::move(trace);
          return out;
        }
        if (states.size() >= max_states) {
          out.states = states.size();
          return out;
        }
        queue.push_back(states.size() - 1);
      }
    }
  }
  out.states = states.size();
  return out;
}

bool is_cyclic_variant(const std::vector<Word>& relators, const Word& inserted) {
  const std::vector<Word> variants = relator_variants(relators);
  return std::find(variants.begin(), variants.end(), inserted) != variants.end();
}

}  // namespace

Verdict decide_word(const FinitePresentation& p, const Word& w, const KuznetsovBudget& budget) {
  p.check_word(w);
  if (budget.max_states == 0) throw Error("state budget must be positive");
  const std::vector<Word> day_variants = relator_variants(p.relators());
  std::vector<Word> night_relators = p.relators();
  if (!free_reduce(w).empty()) night_relators.push_back(free_reduce(w));
  const std::vector<Word> night_variants = relator_variants(night_relators);

  Verdict verdict;
  std::size_t cap = std::min<std::size_t>(64, budget.max_states);
  while (true) {
    ++verdict.rounds;
    verdict.last_state_cap = cap;
    SearchResult day = search_empty(day_variants, w, budget.max_length, cap);
    verdict.states_explored += day.states;
    if (day.trace) {
      verdict.kind = Verdict::Kind::trivial;
      verdict.day_trace = std::move(*day.trace);
      return verdict;
    }
    std::vector<RewriteTrace> night;
    for (std::size_t x = 0; x < p.generators().size(); ++x) {
      SearchResult r = search_empty(night_variants, Word{Letter{x, 1}}, budget.max_length, cap);
      verdict.states_explored += r.states;
      if (!r.trace) break;
      night.push_back(std::move(*r.trace));
    }
    if (night.size() == p.generators().size()) {
      verdict.kind = Verdict::Kind::nontrivial;
      verdict.night_traces = std::move(night);
      return verdict;
    }
    if (cap >= budget.max_states) break;
    cap = std::min(cap * 2, budget.max_states);
  }
  verdict.kind = Verdict::Kind::budget_exhausted;
  return verdict;
}

bool replay_trace(const std::vector<Word>& relators, const Word& start, const RewriteTrace& trace) {
  Word current = free_reduce(start);
  for (const RewriteStep& step : trace) {
    if (step.inserted.empty()) {
      // Free reduction of the start word only.
      if (!step.result.empty() || !current.empty()) return false;
      continue;
    }
    if (step.position > current.size() || !is_cyclic_variant(relators, step.inserted)) return false;
    current = insert_at(current, step.position, step.inserted);
    if (current != step.result) return false;
  }
  return current.empty();
}

bool verify_verdict(const FinitePresentation& p, const Word& w, const Verdict& verdict) {
  switch (verdict.kind) {
    case Verdict::Kind::trivial:
      return replay_trace(p.relators(), w, verdict.day_trace);
    case Verdict::Kind::nontrivial: {
      if (verdict.night_traces.size() != p.generators().size()) return false;
      std::vector<Word> night = p.relators();
      if (!free_reduce(w).empty()) night.push_back(free_reduce(w));
      for (std::size_t x = 0; x < p.generators().size(); ++x) {
        if (!replay_trace(night, Word{Letter{x, 1}}, verdict.night_traces[x])) return false;
      }
      return true;
    }
    case Verdict::Kind::budget_exhausted:
      return true;
  }
  return false;
}

}  // namespace twistbt
