#include "roundsim/nfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace roundsim {

void Nfa::add_transition(State q, Symbol a, State q2) {
  auto& succ = transitions[q * alphabet.size() + a];
  auto it = std::lower_bound(succ.begin(), succ.end(), q2);
  if (it == succ.end() || *it != q2) succ.insert(it, q2);
}

void Nfa::validate() const {
  size_t n = num_states();
  if (n == 0) throw std::invalid_argument("NFA has no states");
  if (initial >= n) throw std::invalid_argument("initial state out of range");
  if (accepting.size() != n) throw std::invalid_argument("accepting flags size mismatch");
  if (transitions.size() != n * alphabet.size()) {
    throw std::invalid_argument("transition table size mismatch");
  }
  for (const auto& succ : transitions) {
    for (State q2 : succ) {
      if (q2 >= n) throw std::invalid_argument("transition target out of range");
    }
  }
}

Nfa make_nfa(Alphabet alphabet, std::vector<std::string> state_names, State initial,
             std::vector<State> accepting) {
  Nfa n;
  n.alphabet = std::move(alphabet);
  n.state_names = std::move(state_names);
  n.initial = initial;
  n.accepting.assign(n.state_names.size(), false);
  for (State q : accepting) {
    if (q >= n.num_states()) throw std::invalid_argument("accepting state out of range");
    n.accepting[q] = true;
  }
  n.transitions.assign(n.num_states() * n.alphabet.size(), {});
  return n;
}

Nfa universal_nfa(Alphabet alphabet) {
  Nfa n = make_nfa(std::move(alphabet), {"u"}, 0, {0});
  for (Symbol a = 0; a < n.alphabet.size(); ++a) n.add_transition(0, a, 0);
  return n;
}

BitMatrix letter_type(const Nfa& n, Symbol sym) {
  if (sym >= n.alphabet.size()) throw std::invalid_argument("letter_type: unknown symbol");
  BitMatrix m(n.num_states());
  for (State q = 0; q < n.num_states(); ++q) {
    for (State q2 : n.successors(q, sym)) m.set(q, q2);
  }
  return m;
}

BitMatrix word_type(const Nfa& n, const Word& w) {
  BitMatrix m = BitMatrix::identity(n.num_states());
  for (Symbol sym : w) m = m * letter_type(n, sym);
  return m;
}

bool nfa_membership(const Nfa& n, const Word& w) {
  BitMatrix m = word_type(n, w);
  for (State f = 0; f < n.num_states(); ++f) {
    if (n.accepting[f] && m.get(n.initial, f)) return true;
  }
  return false;
}

Nfa nfa_intersection(const Nfa& a, const Nfa& b) {
  if (a.alphabet != b.alphabet) {
    throw std::invalid_argument("nfa_intersection: alphabet mismatch");
  }
  std::map<std::pair<State, State>, State> ids;
  std::vector<std::pair<State, State>> pairs;
  auto intern = [&](State qa, State qb) {
    auto [it, inserted] = ids.emplace(std::make_pair(qa, qb), static_cast<State>(pairs.size()));
    if (inserted) pairs.emplace_back(qa, qb);
    return it->second;
  };

  Nfa result;
  result.alphabet = a.alphabet;
  std::deque<State> queue;
  queue.push_back(intern(a.initial, b.initial));
  result.initial = 0;

  std::vector<std::vector<std::vector<State>>> trans;  // [id][symbol]
  while (!queue.empty()) {
    State id = queue.front();
    queue.pop_front();
    if (id >= trans.size()) trans.resize(pairs.size());
    auto [qa, qb] = pairs[id];
    trans[id].assign(a.alphabet.size(), {});
    for (Symbol sym = 0; sym < a.alphabet.size(); ++sym) {
      for (State qa2 : a.successors(qa, sym)) {
        for (State qb2 : b.successors(qb, sym)) {
          size_t before = pairs.size();
          State id2 = intern(qa2, qb2);
          if (pairs.size() != before) queue.push_back(id2);
          trans[id][sym].push_back(id2);
        }
      }
    }
  }
  trans.resize(pairs.size());

  result.state_names.reserve(pairs.size());
  result.accepting.reserve(pairs.size());
  for (auto [qa, qb] : pairs) {
    result.state_names.push_back("(" + a.state_names[qa] + "," + b.state_names[qb] + ")");
    result.accepting.push_back(a.accepting[qa] && b.accepting[qb]);
  }
  result.transitions.assign(pairs.size() * result.alphabet.size(), {});
  for (State id = 0; id < pairs.size(); ++id) {
    for (Symbol sym = 0; sym < result.alphabet.size(); ++sym) {
      for (State id2 : trans[id][sym]) result.add_transition(id, sym, id2);
    }
  }
  return result;
}

}  // namespace roundsim
