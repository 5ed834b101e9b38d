#include "roundsim/oracles.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace roundsim {

namespace {

// Distinct rearrangements of each k-block of w, via sorted next_permutation.
std::vector<std::vector<Word>> round_permutations(const Word& w, uint32_t k) {
  std::vector<std::vector<Word>> per_round;
  for (const Word& r : rounds(w, k)) {
    Word sorted = r;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Word> perms;
    do {
      perms.push_back(sorted);
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    per_round.push_back(std::move(perms));
  }
  return per_round;
}

// Calls fn(w') for every per-round recombination; fn returns true to stop
// early. Returns false if the enumeration budget ran out.
template <typename Fn>
bool for_each_recombination(const std::vector<std::vector<Word>>& per_round, uint32_t k,
                            uint64_t& remaining, Fn fn, bool* stopped) {
  std::vector<size_t> idx(per_round.size(), 0);
  Word w(per_round.size() * k);
  *stopped = false;
  while (true) {
    if (remaining == 0) return false;
    --remaining;
    for (size_t r = 0; r < per_round.size(); ++r) {
      std::copy(per_round[r][idx[r]].begin(), per_round[r][idx[r]].end(), w.begin() + r * k);
    }
    if (fn(w)) {
      *stopped = true;
      return true;
    }
    size_t r = 0;
    for (; r < per_round.size(); ++r) {
      if (++idx[r] < per_round[r].size()) break;
      idx[r] = 0;
    }
    if (r == per_round.size()) return true;  // wrapped around: done
  }
}

}  // namespace

OracleResult oracle_fixed_simulation(const Transducer& t1, const Transducer& t2,
                                     const Nfa* lambda, uint32_t k, const OracleBudget& budget) {
  if (k == 0) throw std::invalid_argument("oracle_fixed_simulation: k must be positive");
  if (!(t1.input == t2.input) || !(t1.output == t2.output)) {
    throw std::invalid_argument("oracle_fixed_simulation: alphabet mismatch");
  }
  uint64_t remaining = budget.max_enumerations;
  const size_t nl = t1.input.size();

  for (uint32_t r = 1; r <= budget.max_rounds; ++r) {
    const size_t len = static_cast<size_t>(r) * k;
    if (len > budget.max_word_length) break;
    // Odometer over all inputs of this length.
    Word x(len, 0);
    while (true) {
      bool in_lambda = !lambda || nfa_membership(*lambda, x);
      if (in_lambda) {
        if (remaining == 0) return {OracleStatus::budget_exceeded, {}};
        Word y1 = run_transducer(t1, x);
        auto per_round = round_permutations(x, k);
        bool matched = false;
        bool ok = for_each_recombination(
            per_round, k, remaining,
            [&](const Word& xp) { return round_equivalent(run_transducer(t2, xp), y1, k, t1.output.size()); },
            &matched);
        if (!ok) return {OracleStatus::budget_exceeded, {}};
        if (!matched) return {OracleStatus::refuted, x};
      }
      size_t i = 0;
      for (; i < len; ++i) {
        if (++x[i] < nl) break;
        x[i] = 0;
      }
      if (i == len) break;
    }
  }
  return {OracleStatus::holds, {}};
}

OracleResult oracle_perm_membership(const Nfa& n, const ProductAlphabet& pa, uint32_t k,
                                    const Word& x, const Word& y, const OracleBudget& budget) {
  if (k == 0) throw std::invalid_argument("oracle_perm_membership: k must be positive");
  if (x.size() != y.size()) return {OracleStatus::refuted, {}};
  if (x.empty()) return {nfa_membership(n, {}) ? OracleStatus::holds : OracleStatus::refuted, {}};
  if (x.size() % k != 0) return {OracleStatus::refuted, {}};

  uint64_t remaining = budget.max_enumerations;
  auto xs = round_permutations(x, k);
  auto ys = round_permutations(y, k);
  bool found = false;
  bool ok_outer = true;
  bool ok = for_each_recombination(
      xs, k, remaining,
      [&](const Word& xp) {
        bool inner_found = false;
        if (!for_each_recombination(
                ys, k, remaining,
                [&](const Word& yp) { return nfa_membership(n, pa.zip(xp, yp)); }, &inner_found)) {
          ok_outer = false;
          return true;  // stop: budget gone
        }
        found = inner_found;
        return inner_found;
      },
      &found);
  if (!ok || !ok_outer) return {OracleStatus::budget_exceeded, {}};
  return {found ? OracleStatus::holds : OracleStatus::refuted, {}};
}

OracleResult oracle_nfa_universality(const Nfa& n, uint64_t cutoff) {
  // Reachable subsets of the subset construction; a reachable subset disjoint
  // from the accepting states witnesses a rejected word.
  std::set<std::vector<State>> seen;
  std::deque<std::vector<State>> queue;
  auto disjoint = [&](const std::vector<State>& s) {
    for (State q : s) {
      if (n.accepting[q]) return false;
    }
    return true;
  };
  std::vector<State> init{n.initial};
  if (disjoint(init)) return {OracleStatus::refuted, Word{}};
  seen.insert(init);
  queue.push_back(std::move(init));
  while (!queue.empty()) {
    if (seen.size() > cutoff) return {OracleStatus::budget_exceeded, {}};
    std::vector<State> s = std::move(queue.front());
    queue.pop_front();
    for (Symbol a = 0; a < n.alphabet.size(); ++a) {
      std::set<State> next_set;
      for (State q : s) {
        for (State to : n.successors(q, a)) next_set.insert(to);
      }
      std::vector<State> next(next_set.begin(), next_set.end());
      if (disjoint(next)) return {OracleStatus::refuted, {}};
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {OracleStatus::holds, {}};
}

}  // namespace roundsim
