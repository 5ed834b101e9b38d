#ifndef ROUNDSIM_ORACLES_HPP_
#define ROUNDSIM_ORACLES_HPP_

#include <optional>

#include "roundsim/nfa.hpp"
#include "roundsim/rounds.hpp"
#include "roundsim/transducer.hpp"

namespace roundsim {

/// Brute-force reference implementations, deliberately naive and kept apart
/// from the optimized kernels; they only touch words, runs, and memberships.
/// Budgets are enforced with an explicit "exceeded" outcome, never by silent
/// truncation.
struct OracleBudget {
  uint32_t max_rounds = 2;
  uint32_t max_word_length = 12;
  uint64_t max_enumerations = 2000000;
};

enum class OracleStatus { holds, refuted, budget_exceeded };

struct OracleResult {
  OracleStatus status = OracleStatus::budget_exceeded;
  /// Input word witnessing the refutation, when status == refuted and the
  /// oracle has one.
  std::optional<Word> witness;

  bool exceeded() const { return status == OracleStatus::budget_exceeded; }
};

/// The simulation definition run literally: every k-round input x in lambda
/// with at most budget.max_rounds rounds; for each, every per-round multiset
/// permutation x' of x; holds when some x' gives t2(x') round-equivalent to
/// t1(x). lambda == nullptr means unrestricted.
OracleResult oracle_fixed_simulation(const Transducer& t1, const Transducer& t2,
                                     const Nfa* lambda, uint32_t k, const OracleBudget& budget);

/// Membership of (x, y) in the k-round permutation closure of n (an acceptor
/// over the product alphabet pa), by enumerating all per-round permutations of
/// both words. holds = member, refuted = non-member.
OracleResult oracle_perm_membership(const Nfa& n, const ProductAlphabet& pa, uint32_t k,
                                    const Word& x, const Word& y, const OracleBudget& budget);

/// Exact NFA universality via subset construction; `cutoff` bounds the number
/// of explored subsets.
OracleResult oracle_nfa_universality(const Nfa& n, uint64_t cutoff);

}  // namespace roundsim

#endif  // ROUNDSIM_ORACLES_HPP_
