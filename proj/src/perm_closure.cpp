#include "roundsim/perm_closure.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace roundsim {

namespace {

// All compositions of k into n parts, lexicographically by count vector.
void compositions(uint32_t k, size_t n, std::vector<std::vector<uint32_t>>& out) {
  std::vector<uint32_t> cur(n, 0);
  // Recursive enumeration: position i gets 0..remaining.
  auto rec = [&](auto&& self, size_t i, uint32_t remaining) -> void {
    if (i + 1 == n) {
      cur[i] = remaining;
      out.push_back(cur);
      return;
    }
    for (uint32_t c = 0; c <= remaining; ++c) {
      cur[i] = c;
      self(self, i + 1, remaining - c);
    }
  };
  rec(rec, 0, k);
}

uint64_t binom_saturating(uint64_t n, uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  uint64_t result = 1;
  for (uint64_t i = 1; i <= r; ++i) {
    uint64_t num = n - r + i;
    if (result > UINT64_MAX / num) return UINT64_MAX;
    result = result * num / i;
  }
  return result;
}

std::string memo_key(const ParikhVector& p, const ParikhVector& o) {
  std::string key;
  key.reserve((p.counts.size() + o.counts.size()) * 4);
  auto append = [&](uint32_t v) {
    for (int b = 0; b < 4; ++b) key.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
  };
  for (uint32_t c : p.counts) append(c);
  for (uint32_t c : o.counts) append(c);
  return key;
}

}  // namespace

std::vector<ParikhPair> enumerate_parikh_pairs(size_t n_in, size_t n_out, uint32_t k) {
  if (k == 0) throw std::invalid_argument("enumerate_parikh_pairs: k must be positive");
  std::vector<std::vector<uint32_t>> ins, outs;
  compositions(k, n_in, ins);
  compositions(k, n_out, outs);
  std::vector<ParikhPair> pairs;
  pairs.reserve(ins.size() * outs.size());
  for (const auto& p : ins) {
    for (const auto& o : outs) {
      pairs.push_back(ParikhPair{ParikhVector{p}, ParikhVector{o}});
    }
  }
  return pairs;
}

uint64_t count_parikh_pairs(size_t n_in, size_t n_out, uint32_t k) {
  uint64_t a = binom_saturating(k + n_in - 1, n_in - 1);
  uint64_t b = binom_saturating(k + n_out - 1, n_out - 1);
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

ParikhTypeTable::ParikhTypeTable(std::shared_ptr<const Nfa> base, ProductAlphabet pa)
    : base_(std::move(base)), pa_(std::move(pa)) {
  if (base_->alphabet != pa_.combined) {
    throw std::invalid_argument("ParikhTypeTable: base automaton not over product alphabet");
  }
  letter_types_.reserve(pa_.combined.size());
  for (Symbol s = 0; s < pa_.combined.size(); ++s) {
    letter_types_.push_back(letter_type(*base_, s));
  }
  identity_ = BitMatrix::identity(base_->num_states());
}

const BitMatrix& ParikhTypeTable::type_of(const ParikhVector& p, const ParikhVector& o) {
  if (p.counts.size() != pa_.input.size() || o.counts.size() != pa_.output.size()) {
    throw std::invalid_argument("type_of: Parikh vector over wrong alphabet");
  }
  if (p.norm() != o.norm()) {
    throw std::invalid_argument("type_of: input and output norms differ");
  }
  if (p.norm() == 0) return identity_;

  std::string key = memo_key(p, o);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  // Peel the last letter (a,b) of a word realizing (p,o).
  BitMatrix result(base_->num_states());
  ParikhVector p2 = p, o2 = o;
  for (Symbol a = 0; a < p.counts.size(); ++a) {
    if (p.counts[a] == 0) continue;
    --p2.counts[a];
    for (Symbol b = 0; b < o.counts.size(); ++b) {
      if (o.counts[b] == 0) continue;
      --o2.counts[b];
      result.or_with(type_of(p2, o2) * letter_types_[pa_.pair(a, b)]);
      ++o2.counts[b];
    }
    ++p2.counts[a];
  }
  return memo_.emplace(std::move(key), std::move(result)).first->second;
}

PermClosureAutomaton perm_closure(const Nfa& n, const ProductAlphabet& pa, uint32_t k) {
  if (k == 0) throw std::invalid_argument("perm_closure: k must be positive");
  PermClosureAutomaton a;
  a.base = std::make_shared<const Nfa>(n);
  a.table = std::make_shared<ParikhTypeTable>(a.base, pa);
  a.k = k;
  return a;
}

bool perm_membership(const PermClosureAutomaton& a, const Word& xy) {
  if (xy.size() % a.k != 0) return false;
  const Nfa& base = *a.base;
  const ProductAlphabet& pa = a.product_alphabet();
  BitMatrix m = BitMatrix::identity(base.num_states());
  for (size_t r = 0; r < xy.size() / a.k; ++r) {
    Word x(a.k), y(a.k);
    for (uint32_t i = 0; i < a.k; ++i) {
      x[i] = pa.in_of(xy[r * a.k + i]);
      y[i] = pa.out_of(xy[r * a.k + i]);
    }
    m = m * a.table->type_of(parikh(x, pa.input.size()), parikh(y, pa.output.size()));
  }
  for (State f = 0; f < base.num_states(); ++f) {
    if (base.accepting[f] && m.get(base.initial, f)) return true;
  }
  return false;
}

TypeProfile type_profile(ParikhTypeTable& table, uint32_t k) {
  if (k == 0) throw std::invalid_argument("type_profile: k must be positive");
  TypeProfile profile;
  for (const ParikhPair& pp :
       enumerate_parikh_pairs(table.product_alphabet().input.size(),
                              table.product_alphabet().output.size(), k)) {
    profile.matrices.push_back(table.type_of(pp.in, pp.out));
  }
  std::sort(profile.matrices.begin(), profile.matrices.end());
  profile.matrices.erase(std::unique(profile.matrices.begin(), profile.matrices.end()),
                         profile.matrices.end());
  return profile;
}

void dump_profile(std::ostream& out, const TypeProfile& profile) {
  for (const BitMatrix& m : profile.matrices) out << m.hex() << "\n";
}

}  // namespace roundsim
