#include "roundsim/rounds.hpp"

#include <stdexcept>

namespace roundsim {

ParikhVector parikh(const Word& w, size_t alphabet_size) {
  ParikhVector p;
  p.counts.assign(alphabet_size, 0);
  for (Symbol s : w) {
    if (s >= alphabet_size) throw std::invalid_argument("parikh: unknown symbol");
    ++p.counts[s];
  }
  return p;
}

std::vector<Word> rounds(const Word& w, uint32_t k) {
  if (k == 0) throw std::invalid_argument("rounds: k must be positive");
  if (w.size() % k != 0) {
    throw std::invalid_argument("rounds: word length not divisible by k");
  }
  std::vector<Word> result;
  result.reserve(w.size() / k);
  for (size_t r = 0; r < w.size() / k; ++r) {
    result.emplace_back(w.begin() + r * k, w.begin() + (r + 1) * k);
  }
  return result;
}

bool round_equivalent(const Word& x, const Word& y, uint32_t k, size_t alphabet_size) {
  if (k == 0 || x.size() != y.size() || x.size() % k != 0) return false;
  std::vector<int64_t> diff(alphabet_size, 0);
  for (size_t r = 0; r < x.size() / k; ++r) {
    for (size_t i = r * k; i < (r + 1) * k; ++i) {
      ++diff[x[i]];
      --diff[y[i]];
    }
    for (int64_t d : diff) {
      if (d != 0) return false;
    }
  }
  return true;
}

Word canonical_representative(const ParikhVector& p) {
  Word w;
  w.reserve(p.norm());
  for (Symbol s = 0; s < p.counts.size(); ++s) {
    w.insert(w.end(), p.counts[s], s);
  }
  return w;
}

}  // namespace roundsim
