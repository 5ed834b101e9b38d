#include "roundsim/alphabet.hpp"

#include <sstream>
#include <stdexcept>

namespace roundsim {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) {
    throw std::invalid_argument("alphabet must be non-empty");
  }
  for (Symbol i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].empty()) {
      throw std::invalid_argument("empty symbol name");
    }
    auto [it, inserted] = index_.emplace(symbols_[i], i);
    if (!inserted) {
      throw std::invalid_argument("duplicate symbol name: " + symbols_[i]);
    }
  }
}

bool Alphabet::contains(std::string_view name) const {
  return index_.find(std::string(name)) != index_.end();
}

Symbol Alphabet::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) {
    throw std::invalid_argument("unknown symbol: " + std::string(name));
  }
  return it->second;
}

Word Alphabet::parse_word(const std::vector<std::string>& names) const {
  Word w;
  w.reserve(names.size());
  for (const auto& n : names) w.push_back(index_of(n));
  return w;
}

std::string Alphabet::format_word(const Word& w, const std::string& sep) const {
  std::ostringstream out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out << sep;
    out << name(w[i]);
  }
  return out.str();
}

ProductAlphabet ProductAlphabet::make(Alphabet in, Alphabet out) {
  ProductAlphabet pa;
  std::vector<std::string> names;
  names.reserve(in.size() * out.size());
  for (Symbol i = 0; i < in.size(); ++i) {
    for (Symbol o = 0; o < out.size(); ++o) {
      names.push_back(in.name(i) + "/" + out.name(o));
    }
  }
  pa.input = std::move(in);
  pa.output = std::move(out);
  pa.combined = Alphabet(std::move(names));
  return pa;
}

Word ProductAlphabet::zip(const Word& x, const Word& y) const {
  if (x.size() != y.size()) {
    throw std::invalid_argument("zip: length mismatch");
  }
  Word xy(x.size());
  for (size_t i = 0; i < x.size(); ++i) xy[i] = pair(x[i], y[i]);
  return xy;
}

std::pair<Word, Word> ProductAlphabet::unzip(const Word& xy) const {
  Word x(xy.size()), y(xy.size());
  for (size_t i = 0; i < xy.size(); ++i) {
    x[i] = in_of(xy[i]);
    y[i] = out_of(xy[i]);
  }
  return {std::move(x), std::move(y)};
}

}  // namespace roundsim
