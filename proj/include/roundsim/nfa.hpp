#ifndef ROUNDSIM_NFA_HPP_
#define ROUNDSIM_NFA_HPP_

#include <string>
#include <vector>

#include "roundsim/alphabet.hpp"
#include "roundsim/bitmatrix.hpp"

namespace roundsim {

using State = uint32_t;

/// Nondeterministic finite acceptor. Transitions may be partial; there are no
/// epsilon transitions. States are dense indices with display names.
struct Nfa {
  Alphabet alphabet;
  std::vector<std::string> state_names;
  State initial = 0;
  std::vector<bool> accepting;
  // transitions[q * |alphabet| + a] = successor states, sorted, no duplicates
  std::vector<std::vector<State>> transitions;

  size_t num_states() const { return state_names.size(); }

  const std::vector<State>& successors(State q, Symbol a) const {
    return transitions[q * alphabet.size() + a];
  }
  void add_transition(State q, Symbol a, State q2);

  bool is_accepting(State q) const { return accepting[q]; }

  /// Checks the structural invariants; throws std::invalid_argument on
  /// violation. Called by loaders and generators.
  void validate() const;
};

Nfa make_nfa(Alphabet alphabet, std::vector<std::string> state_names, State initial,
             std::vector<State> accepting);

/// Acceptor of all words over `alphabet` (single accepting state, self-loops).
Nfa universal_nfa(Alphabet alphabet);

BitMatrix letter_type(const Nfa& n, Symbol sym);
BitMatrix word_type(const Nfa& n, const Word& w);
bool nfa_membership(const Nfa& n, const Word& w);

/// Reachable product automaton; L(result) = L(a) ∩ L(b).
Nfa nfa_intersection(const Nfa& a, const Nfa& b);

}  // namespace roundsim

#endif  // ROUNDSIM_NFA_HPP_
