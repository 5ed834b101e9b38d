#ifndef ROUNDSIM_GENERATORS_HPP_
#define ROUNDSIM_GENERATORS_HPP_

#include <optional>

#include "roundsim/nfa.hpp"
#include "roundsim/transducer.hpp"

namespace roundsim {

/// Verdict metadata attached to a generated instance. `source` records how the
/// value was obtained: "stated" (taken from the construction's analysis) or
/// "computed" (reproduced by running a checker).
struct ExpectedVerdict {
  std::optional<uint32_t> k;
  std::optional<bool> holds;
  std::string source;
  std::string note;
};

struct InstanceBundle {
  Transducer t1;
  Transducer t2;
  std::optional<Nfa> lambda;  // nullopt = unrestricted input language
  ExpectedVerdict expected;
};

/// Round-robin scheduler with m processes over the subset alphabet 2^{0..m-1}:
/// states q_i (grant, labelled {i}) and q'_i (skip, labelled {}); from either
/// i-state, reading sigma moves to q_{(i+1)%m} when (i+1)%m is in sigma, else
/// to q'_{(i+1)%m}. `start` is the first process that may be granted.
Transducer gen_round_robin(uint32_t m, uint32_t start);

/// Adversarial pair with exponential minimal round length. T1 copies inputs in
/// (1 2 ... m)* to outputs; T2 repeats each letter i for p_i steps, where p_i
/// is the i-th prime. lambda = (1 2 ... m)*. The minimal k for T1 to be
/// simulated by T2 is m * p_1 * ... * p_m. m <= 4.
InstanceBundle gen_prime_family(uint32_t m);

/// Encodes NFA universality into round equivalence. `n` must have every state
/// accepting and at most two successors per state and letter (use
/// reduce_branching first otherwise). Each input letter gets a two-letter
/// block that can be read in either order; the order picks the
/// nondeterministic branch. For the {0,1} alphabet the blocks are ab/ba and
/// cd/dc and lambda = (ab+cd)* as a 4-state complete DFA.
///
/// Unpadded (padded=false): L(n) is universal iff t1 and t2 are 2-round
/// equivalent under lambda. Padded (padded=true): a fresh symbol '#' with
/// ##-cycles on every non-sink state extends this to "iff equivalent at some
/// round length"; lambda becomes a 5-state DFA for (ab+cd+##)*.
InstanceBundle gen_universality_reduction(const Nfa& n, bool padded);

/// Splits transitions with more than two successors into binary trees over a
/// fresh auxiliary letter "$", so every state has at most two successors per
/// letter; the fresh internal states are accepting. Already-compliant inputs
/// are returned unchanged (same alphabet, no "$").
Nfa reduce_branching(const Nfa& n);

}  // namespace roundsim

#endif  // ROUNDSIM_GENERATORS_HPP_
