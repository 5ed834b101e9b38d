#ifndef ROUNDSIM_ROUNDS_HPP_
#define ROUNDSIM_ROUNDS_HPP_

#include <cstdint>
#include <vector>

#include "roundsim/alphabet.hpp"

namespace roundsim {

/// Letter-occurrence counts of a word, indexed by symbol.
struct ParikhVector {
  std::vector<uint32_t> counts;

  uint32_t norm() const {
    uint32_t s = 0;
    for (uint32_t c : counts) s += c;
    return s;
  }
  bool operator==(const ParikhVector& o) const { return counts == o.counts; }
  bool operator!=(const ParikhVector& o) const { return !(*this == o); }
};

ParikhVector parikh(const Word& w, size_t alphabet_size);

/// Splits a k-round word into its rounds. Throws std::invalid_argument when k
/// does not divide |w| or k == 0.
std::vector<Word> rounds(const Word& w, uint32_t k);

/// True iff |x| == |y|, k divides |x|, and corresponding rounds have equal
/// Parikh images. Total: mismatched lengths yield false, never an error.
bool round_equivalent(const Word& x, const Word& y, uint32_t k, size_t alphabet_size);

/// The unique word with Parikh image p whose symbols appear in alphabet order.
Word canonical_representative(const ParikhVector& p);

}  // namespace roundsim

#endif  // ROUNDSIM_ROUNDS_HPP_
