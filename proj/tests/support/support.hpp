#ifndef ROUNDSIM_TESTS_SUPPORT_HPP_
#define ROUNDSIM_TESTS_SUPPORT_HPP_

#include <optional>
#include <random>
#include <string>

#include "roundsim/nfa.hpp"
#include "roundsim/transducer.hpp"

namespace roundsim::testing {

// The worked five-state pair over {a,b} -> {0,1}: identical transition
// structures, labels chosen so t1 outputs 01 on both ab and ba while t2
// outputs 00 on ab and 10 on ba. t1 is 2-round simulated by t2 but not the
// other way around.
inline std::pair<Transducer, Transducer> worked_pair() {
  Alphabet in({"a", "b"}), out({"0", "1"});
  std::vector<std::string> names = {"q0", "qb", "qa", "qbb", "qsink"};
  // state indices:      q0=0  qb=1  qa=2  qbb=3  qsink=4
  std::vector<State> delta = {
      2, 1,  // q0:   a->qa,   b->qb
      0, 3,  // qb:   a->q0,   b->qbb
      4, 0,  // qa:   a->sink, b->q0
      4, 4,  // qbb
      4, 4,  // qsink
  };
  Transducer t1{in, out, names, 0, delta, {1, 0, 0, 1, 1}};
  Transducer t2{in, out, names, 0, delta, {0, 1, 0, 0, 1}};
  t1.validate();
  t2.validate();
  return {t1, t2};
}

inline Alphabet numbered_alphabet(const std::string& prefix, size_t n) {
  std::vector<std::string> names;
  for (size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return Alphabet(names);
}

struct RandomNfaOptions {
  size_t max_states = 4;
  size_t alphabet_size = 2;
  bool all_accepting = false;
  size_t max_degree = 4;  // successors per (state, letter)
  double edge_prob = 0.5;
  std::optional<Alphabet> alphabet;  // overrides alphabet_size when set
};

inline Nfa random_nfa(std::mt19937& rng, const RandomNfaOptions& opts = {}) {
  std::uniform_int_distribution<size_t> n_dist(1, opts.max_states);
  size_t n = n_dist(rng);
  Nfa nfa;
  nfa.alphabet = opts.alphabet ? *opts.alphabet : numbered_alphabet("", opts.alphabet_size);
  size_t sigma = nfa.alphabet.size();
  for (size_t q = 0; q < n; ++q) nfa.state_names.push_back("s" + std::to_string(q));
  nfa.initial = 0;
  nfa.accepting.assign(n, opts.all_accepting);
  if (!opts.all_accepting) {
    std::bernoulli_distribution acc(0.5);
    bool any = false;
    for (size_t q = 0; q < n; ++q) {
      nfa.accepting[q] = acc(rng);
      any = any || nfa.accepting[q];
    }
    if (!any) nfa.accepting[0] = true;
  }
  nfa.transitions.resize(n * sigma);
  std::bernoulli_distribution edge(opts.edge_prob);
  std::uniform_int_distribution<State> target(0, static_cast<State>(n - 1));
  for (State q = 0; q < n; ++q) {
    for (Symbol a = 0; a < sigma; ++a) {
      for (size_t d = 0; d < opts.max_degree; ++d) {
        if (edge(rng)) nfa.add_transition(q, a, target(rng));
      }
    }
  }
  nfa.validate();
  return nfa;
}

struct RandomTransducerOptions {
  size_t max_states = 4;
  size_t in_size = 2;
  size_t out_size = 2;
};

inline Transducer random_transducer(std::mt19937& rng, const RandomTransducerOptions& opts = {}) {
  std::uniform_int_distribution<size_t> n_dist(1, opts.max_states);
  size_t n = n_dist(rng);
  Transducer t;
  t.input = numbered_alphabet("i", opts.in_size);
  t.output = numbered_alphabet("o", opts.out_size);
  for (size_t q = 0; q < n; ++q) t.state_names.push_back("q" + std::to_string(q));
  t.initial = 0;
  std::uniform_int_distribution<State> target(0, static_cast<State>(n - 1));
  std::uniform_int_distribution<Symbol> label(0, static_cast<Symbol>(opts.out_size - 1));
  for (size_t q = 0; q < n; ++q) {
    t.labels.push_back(label(rng));
    for (size_t a = 0; a < opts.in_size; ++a) t.delta.push_back(target(rng));
  }
  t.validate();
  return t;
}

inline Word random_word(std::mt19937& rng, size_t length, size_t alphabet_size) {
  std::uniform_int_distribution<Symbol> d(0, static_cast<Symbol>(alphabet_size - 1));
  Word w(length);
  for (auto& s : w) s = d(rng);
  return w;
}

}  // namespace roundsim::testing

#endif  // ROUNDSIM_TESTS_SUPPORT_HPP_
