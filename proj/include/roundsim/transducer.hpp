#ifndef ROUNDSIM_TRANSDUCER_HPP_
#define ROUNDSIM_TRANSDUCER_HPP_

#include <string>
#include <vector>

#include "roundsim/alphabet.hpp"

namespace roundsim {

using State = uint32_t;

/// Deterministic, complete letter-to-letter transducer. The output on a word
/// is the sequence of labels of the states entered along the run; the label of
/// the initial state is not part of any output.
struct Transducer {
  Alphabet input;
  Alphabet output;
  std::vector<std::string> state_names;
  State initial = 0;
  std::vector<State> delta;    // delta[q * |input| + a]
  std::vector<Symbol> labels;  // labels[q]

  size_t num_states() const { return state_names.size(); }
  State step(State q, Symbol a) const { return delta[q * input.size() + a]; }
  Symbol label(State q) const { return labels[q]; }

  void validate() const;
};

Word run_transducer(const Transducer& t, const Word& x);

}  // namespace roundsim

#endif  // ROUNDSIM_TRANSDUCER_HPP_
