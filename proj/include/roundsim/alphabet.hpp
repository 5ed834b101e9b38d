#ifndef ROUNDSIM_ALPHABET_HPP_
#define ROUNDSIM_ALPHABET_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace roundsim {

using Symbol = uint32_t;
using Word = std::vector<Symbol>;

/// An ordered finite set of named symbols. The order is fixed at construction
/// and is used everywhere for vector indexing and canonical words.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  size_t size() const { return symbols_.size(); }
  const std::string& name(Symbol s) const { return symbols_.at(s); }
  const std::vector<std::string>& names() const { return symbols_; }

  bool contains(std::string_view name) const;
  /// Throws std::invalid_argument on unknown symbol.
  Symbol index_of(std::string_view name) const;

  Word parse_word(const std::vector<std::string>& names) const;
  std::string format_word(const Word& w, const std::string& sep = " ") const;

  bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }
  bool operator!=(const Alphabet& other) const { return !(*this == other); }

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, Symbol> index_;
};

/// The alphabet of input/output pairs, enumerated lexicographically
/// (input-major). Combined symbol names are "in/out".
struct ProductAlphabet {
  Alphabet input;
  Alphabet output;
  Alphabet combined;

  static ProductAlphabet make(Alphabet in, Alphabet out);

  Symbol pair(Symbol in, Symbol out) const {
    return in * static_cast<Symbol>(output.size()) + out;
  }
  Symbol in_of(Symbol p) const { return p / static_cast<Symbol>(output.size()); }
  Symbol out_of(Symbol p) const { return p % static_cast<Symbol>(output.size()); }

  /// Zips an input word and an output word of equal length into a word over
  /// the combined alphabet.
  Word zip(const Word& x, const Word& y) const;
  std::pair<Word, Word> unzip(const Word& xy) const;

  bool operator==(const ProductAlphabet& o) const {
    return input == o.input && output == o.output;
  }
};

}  // namespace roundsim

#endif  // ROUNDSIM_ALPHABET_HPP_
