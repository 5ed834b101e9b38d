#ifndef ROUNDSIM_PERM_CLOSURE_HPP_
#define ROUNDSIM_PERM_CLOSURE_HPP_

#include <memory>
#include <unordered_map>

#include "roundsim/nfa.hpp"
#include "roundsim/rounds.hpp"

namespace roundsim {

/// A letter of the Parikh-quotiented k-round alphabet: the pair of input and
/// output letter counts of one round.
struct ParikhPair {
  ParikhVector in;
  ParikhVector out;
};

/// All pairs of compositions of k into |Σ_I| and |Σ_O| parts, in a fixed
/// deterministic order. Count is C(k+|Σ_I|-1, |Σ_I|-1) · C(k+|Σ_O|-1, |Σ_O|-1).
std::vector<ParikhPair> enumerate_parikh_pairs(size_t n_in, size_t n_out, uint32_t k);

/// The count the enumeration would produce, without materializing it.
/// Saturates at UINT64_MAX.
uint64_t count_parikh_pairs(size_t n_in, size_t n_out, uint32_t k);

/// Memoized types of Parikh vector pairs for one base automaton over a product
/// alphabet. The memo covers the whole sub-vector lattice and is shared across
/// quotient letters and round lengths.
///
/// The result depends only on the transition relation of the base automaton,
/// so a table built on one member of a redundant product is valid for both.
///
/// Not thread-safe: confine a table to one worker or guard it externally.
class ParikhTypeTable {
 public:
  ParikhTypeTable(std::shared_ptr<const Nfa> base, ProductAlphabet pa);

  /// bits[s1][s2] = 1 iff some word with the given input/output Parikh images
  /// runs s1 -> s2 in the base automaton. Throws when |p| != |o|.
  const BitMatrix& type_of(const ParikhVector& p, const ParikhVector& o);

  const Nfa& base() const { return *base_; }
  const ProductAlphabet& product_alphabet() const { return pa_; }
  size_t memo_size() const { return memo_.size(); }

 private:
  std::shared_ptr<const Nfa> base_;
  ProductAlphabet pa_;
  std::vector<BitMatrix> letter_types_;  // by combined symbol
  BitMatrix identity_;
  std::unordered_map<std::string, BitMatrix> memo_;
};

/// View of Perm_k(N) over the quotient alphabet. The concrete exponential
/// alphabet is never materialized; membership and containment go through
/// Parikh pairs and their type matrices.
struct PermClosureAutomaton {
  std::shared_ptr<const Nfa> base;
  std::shared_ptr<ParikhTypeTable> table;
  uint32_t k = 1;

  const ProductAlphabet& product_alphabet() const { return table->product_alphabet(); }
};

PermClosureAutomaton perm_closure(const Nfa& n, const ProductAlphabet& pa, uint32_t k);

/// Membership of a concrete word over the combined alphabet: true iff some
/// per-round permutation of it is in L(base). Words whose length is not a
/// multiple of k are rejected.
bool perm_membership(const PermClosureAutomaton& a, const Word& xy);

/// The set of types of all Parikh pairs of norm k, deduplicated and sorted by
/// canonical bytes.
struct TypeProfile {
  std::vector<BitMatrix> matrices;

  bool operator==(const TypeProfile& o) const { return matrices == o.matrices; }
  bool operator!=(const TypeProfile& o) const { return !(*this == o); }
};

TypeProfile type_profile(ParikhTypeTable& table, uint32_t k);

/// Hex dump, one matrix per line.
void dump_profile(std::ostream& out, const TypeProfile& profile);

}  // namespace roundsim

#endif  // ROUNDSIM_PERM_CLOSURE_HPP_
