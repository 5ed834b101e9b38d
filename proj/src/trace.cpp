#include "roundsim/trace.hpp"

#include <deque>
#include <map>
#include <stdexcept>

namespace roundsim {

ProductAlphabet trace_alphabet(const Transducer& t) {
  return ProductAlphabet::make(t.input, t.output);
}

Nfa trace_dfa(const Transducer& t, const ProductAlphabet& pa) {
  if (pa.input != t.input || pa.output != t.output) {
    throw std::invalid_argument("trace_dfa: product alphabet mismatch");
  }
  size_t n = t.num_states();
  std::vector<std::string> names = t.state_names;
  names.push_back("_bot");
  State bot = static_cast<State>(n);

  std::vector<State> accepting;
  for (State q = 0; q < n; ++q) accepting.push_back(q);  // all of Q, not the sink

  Nfa tr = make_nfa(pa.combined, std::move(names), t.initial, std::move(accepting));
  for (State q = 0; q < n; ++q) {
    for (Symbol a = 0; a < t.input.size(); ++a) {
      State q2 = t.step(q, a);
      for (Symbol b = 0; b < t.output.size(); ++b) {
        tr.add_transition(q, pa.pair(a, b), b == t.label(q2) ? q2 : bot);
      }
    }
  }
  for (Symbol p = 0; p < pa.combined.size(); ++p) tr.add_transition(bot, p, bot);
  return tr;
}

Nfa lift_lambda(const Nfa& lambda, const ProductAlphabet& pa) {
  if (lambda.alphabet != pa.input) {
    throw std::invalid_argument("lift_lambda: lambda must be over the input alphabet");
  }
  Nfa lifted;
  lifted.alphabet = pa.combined;
  lifted.state_names = lambda.state_names;
  lifted.initial = lambda.initial;
  lifted.accepting = lambda.accepting;
  lifted.transitions.assign(lifted.num_states() * pa.combined.size(), {});
  for (State q = 0; q < lambda.num_states(); ++q) {
    for (Symbol a = 0; a < pa.input.size(); ++a) {
      for (State q2 : lambda.successors(q, a)) {
        for (Symbol b = 0; b < pa.output.size(); ++b) {
          lifted.add_transition(q, pa.pair(a, b), q2);
        }
      }
    }
  }
  return lifted;
}

namespace {

// Add a rejecting sink wherever a successor set is empty. Keeping the first
// component total is what lets the pairwise product below share one transition
// relation without the restriction leaking into the second component.
Nfa complete_nfa(Nfa n) {
  bool partial = false;
  for (State q = 0; q < n.num_states() && !partial; ++q) {
    for (Symbol a = 0; a < n.alphabet.size() && !partial; ++a) {
      partial = n.successors(q, a).empty();
    }
  }
  if (!partial) return n;
  State sink = static_cast<State>(n.num_states());
  n.state_names.push_back("_dead");
  n.accepting.push_back(false);
  n.transitions.resize(n.num_states() * n.alphabet.size());
  for (State q = 0; q < n.num_states(); ++q) {
    for (Symbol a = 0; a < n.alphabet.size(); ++a) {
      if (n.successors(q, a).empty()) n.add_transition(q, a, sink);
    }
  }
  return n;
}

}  // namespace

RedundantProduct build_redundant_product(const Transducer& t1, const Transducer& t2,
                                         const Nfa* lambda) {
  if (t1.input != t2.input || t1.output != t2.output) {
    throw std::invalid_argument("redundant product: transducer alphabet mismatch");
  }
  if (lambda != nullptr && lambda->alphabet != t1.input) {
    throw std::invalid_argument("redundant product: lambda alphabet mismatch");
  }

  ProductAlphabet pa = trace_alphabet(t1);
  Nfa d1 = trace_dfa(t1, pa);
  if (lambda != nullptr) d1 = complete_nfa(nfa_intersection(d1, lift_lambda(*lambda, pa)));
  Nfa d2 = trace_dfa(t2, pa);

  // Reachable pairwise product with shared transitions and two accepting sets.
  std::map<std::pair<State, State>, State> ids;
  std::vector<std::pair<State, State>> pairs;
  auto intern = [&](State qa, State qb) {
    auto [it, inserted] = ids.emplace(std::make_pair(qa, qb), static_cast<State>(pairs.size()));
    if (inserted) pairs.emplace_back(qa, qb);
    return it->second;
  };

  std::deque<State> queue;
  queue.push_back(intern(d1.initial, d2.initial));
  std::vector<std::vector<std::vector<State>>> trans;
  while (!queue.empty()) {
    State id = queue.front();
    queue.pop_front();
    if (id >= trans.size()) trans.resize(pairs.size());
    auto [qa, qb] = pairs[id];
    trans[id].assign(pa.combined.size(), {});
    for (Symbol sym = 0; sym < pa.combined.size(); ++sym) {
      for (State qa2 : d1.successors(qa, sym)) {
        for (State qb2 : d2.successors(qb, sym)) {
          size_t before = pairs.size();
          State id2 = intern(qa2, qb2);
          if (pairs.size() != before) queue.push_back(id2);
          trans[id][sym].push_back(id2);
        }
      }
    }
  }
  trans.resize(pairs.size());

  RedundantProduct rp;
  rp.pa = pa;

  Nfa shared;
  shared.alphabet = pa.combined;
  shared.initial = 0;
  for (auto [qa, qb] : pairs) {
    shared.state_names.push_back("(" + d1.state_names[qa] + "," + d2.state_names[qb] + ")");
  }
  shared.transitions.assign(pairs.size() * pa.combined.size(), {});
  for (State id = 0; id < pairs.size(); ++id) {
    for (Symbol sym = 0; sym < pa.combined.size(); ++sym) {
      for (State id2 : trans[id][sym]) shared.add_transition(id, sym, id2);
    }
  }

  rp.b1 = shared;
  rp.b2 = std::move(shared);
  rp.b1.accepting.reserve(pairs.size());
  rp.b2.accepting.reserve(pairs.size());
  for (auto [qa, qb] : pairs) {
    rp.b1.accepting.push_back(d1.accepting[qa]);
    rp.b2.accepting.push_back(d2.accepting[qb]);
  }
  return rp;
}

}  // namespace roundsim
