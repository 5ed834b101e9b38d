#ifndef ROUNDSIM_TRACE_HPP_
#define ROUNDSIM_TRACE_HPP_

#include "roundsim/nfa.hpp"
#include "roundsim/transducer.hpp"

namespace roundsim {

/// Deterministic acceptor over the input/output product alphabet of exactly
/// the pairs (x, T(x)). A rejecting sink absorbs every mismatched pair, so the
/// automaton is total.
Nfa trace_dfa(const Transducer& t, const ProductAlphabet& pa);

/// Convenience: builds the product alphabet from the transducer's alphabets.
ProductAlphabet trace_alphabet(const Transducer& t);

/// Lifts an acceptor over the input alphabet to the product alphabet by
/// ignoring the output component. Reuses the state set of `lambda`.
Nfa lift_lambda(const Nfa& lambda, const ProductAlphabet& pa);

/// One product automaton, two acceptance conditions. b1 and b2 share the state
/// set and the transition relation bit for bit; b1 accepts L(Tr(t1) ∩ Λ), b2
/// accepts L(Tr(t2)).
struct RedundantProduct {
  ProductAlphabet pa;
  Nfa b1;
  Nfa b2;
};

/// lambda == nullptr means the unrestricted input language.
RedundantProduct build_redundant_product(const Transducer& t1, const Transducer& t2,
                                         const Nfa* lambda);

}  // namespace roundsim

#endif  // ROUNDSIM_TRACE_HPP_
