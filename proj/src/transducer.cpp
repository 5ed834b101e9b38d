#include "roundsim/transducer.hpp"

#include <stdexcept>

namespace roundsim {

void Transducer::validate() const {
  size_t n = num_states();
  if (n == 0) throw std::invalid_argument("transducer has no states");
  if (initial >= n) throw std::invalid_argument("initial state out of range");
  if (delta.size() != n * input.size()) {
    throw std::invalid_argument("transition function must be total");
  }
  for (State q2 : delta) {
    if (q2 >= n) throw std::invalid_argument("transition target out of range");
  }
  if (labels.size() != n) throw std::invalid_argument("labelling must be total");
  for (Symbol s : labels) {
    if (s >= output.size()) throw std::invalid_argument("label symbol out of range");
  }
}

Word run_transducer(const Transducer& t, const Word& x) {
  Word y;
  y.reserve(x.size());
  State q = t.initial;
  for (Symbol a : x) {
    if (a >= t.input.size()) throw std::invalid_argument("run_transducer: unknown symbol");
    q = t.step(q, a);
    y.push_back(t.label(q));
  }
  return y;
}

}  // namespace roundsim
