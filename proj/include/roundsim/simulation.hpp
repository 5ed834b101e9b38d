#ifndef ROUNDSIM_SIMULATION_HPP_
#define ROUNDSIM_SIMULATION_HPP_

#include <optional>

#include "roundsim/perm_closure.hpp"
#include "roundsim/trace.hpp"

namespace roundsim {

struct ContainmentOptions {
  bool antichain = true;
  uint64_t quotient_cap = 1000000;  // max Parikh pairs per round length
};

struct ContainmentStats {
  uint64_t configs_explored = 0;
  uint64_t quotient_letters = 0;
  uint64_t distinct_letter_types = 0;
  bool vacuous = false;  // L(a1) is empty, containment holds trivially
};

struct SimulationVerdict {
  bool holds = false;
  uint32_t k = 0;
  /// Present iff !holds: a k-round word in L(a1) \ L(a2), un-quotiented to the
  /// canonical representative of each round. first = input word, second =
  /// output word.
  std::optional<std::pair<Word, Word>> counterexample;
  ContainmentStats stats;
};

/// Raised when the quotient alphabet at some round length exceeds the cap.
struct QuotientCapExceeded : std::runtime_error {
  QuotientCapExceeded(uint32_t k, uint64_t count, uint64_t cap);
  uint32_t k;
  uint64_t count;
  uint64_t cap;
};

/// Decides L(a1) ⊆ L(a2) over the shared quotient alphabet by an on-the-fly
/// product of a1 with the determinized complement of a2. BFS yields a
/// shortest counterexample; ties break by quotient-letter enumeration order.
SimulationVerdict quotient_containment(const PermClosureAutomaton& a1,
                                       const PermClosureAutomaton& a2,
                                       const ContainmentOptions& opts = {});

/// T1 ≺_{k,Λ} T2. lambda == nullptr means Λ = Σ_I*.
SimulationVerdict fixed_round_simulates(const Transducer& t1, const Transducer& t2,
                                        const Nfa* lambda, uint32_t k,
                                        const ContainmentOptions& opts = {});

/// Both directions; equivalent iff both verdicts hold.
std::pair<SimulationVerdict, SimulationVerdict> fixed_round_equivalent(
    const Transducer& t1, const Transducer& t2, const Nfa* lambda, uint32_t k,
    const ContainmentOptions& opts = {});

/// The two permutation-closure views of a redundant product, sharing one type
/// table. Exposed so that callers sweeping several round lengths reuse the DP.
struct ContainmentInstance {
  std::shared_ptr<const Nfa> b1;
  std::shared_ptr<const Nfa> b2;
  std::shared_ptr<ParikhTypeTable> table;

  static ContainmentInstance from(RedundantProduct rp);
  PermClosureAutomaton a1(uint32_t k) const { return {b1, table, k}; }
  PermClosureAutomaton a2(uint32_t k) const { return {b2, table, k}; }
};

}  // namespace roundsim

#endif  // ROUNDSIM_SIMULATION_HPP_
