#include "helpers.hpp"

#include <cctype>
#include <stdexcept>

#include "mg/field.hpp"

namespace mgtest {
namespace {

class Reader {
 public:
  Reader(const mg::BlockRing& ring, const std::string& text) : ring_(ring), text_(text) {}

  mg::Polynomial polynomial() {
    const auto p = ring_.characteristic();
    mg::Polynomial result(p);
    bool negative = false;
    skip();
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    while (true) {
      auto t = term();
      result = negative ? result - t : result + t;
      skip();
      if (pos_ >= text_.size()) break;
      const char c = text_[pos_++];
      if (c == '+') {
        negative = false;
      } else if (c == '-') {
        negative = true;
      } else {
        throw std::invalid_argument("bad polynomial: " + text_);
      }
    }
    return result;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  int integer() {
    int value = 0;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw std::invalid_argument("expected digit: " + text_);
    while (std::isdigit(static_cast<unsigned char>(peek()))) value = value * 10 + (text_[pos_++] - '0');
    return value;
  }

  mg::Polynomial term() {
    const auto p = ring_.characteristic();
    std::int64_t coeff = 1;
    mg::Monomial m;
    while (true) {
      skip();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= integer();
      } else if (peek() == 'x') {
        ++pos_;
        const int block = text_[pos_++] - '0';
        const int position = text_[pos_++] - '0';
        int power = 1;
        if (peek() == '^') {
          ++pos_;
          power = integer();
        }
        const auto v = ring_.var(static_cast<std::size_t>(block - 1), static_cast<std::size_t>(position - 1));
        m.set(v, m[v] + power);
      } else {
        throw std::invalid_argument("bad term: " + text_);
      }
      skip();
      if (peek() != '*') break;
      ++pos_;
    }
    return mg::Polynomial::monomial(p, m, mg::field::reduce(coeff, p));
  }

  const mg::BlockRing& ring_;
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

mg::Polynomial poly(const mg::BlockRing& ring, const std::string& text) { return Reader(ring, text).polynomial(); }

mg::Monomial mono(const mg::BlockRing& ring, const std::string& text) {
  const auto f = poly(ring, text);
  if (f.size() != 1) throw std::invalid_argument("not a monomial: " + text);
  return f.terms()[0].monomial;
}

mg::Ideal ideal(const mg::BlockRing& ring, const std::vector<std::string>& generators) {
  std::vector<mg::Polynomial> gens;
  for (const auto& g : generators) gens.push_back(poly(ring, g));
  return mg::Ideal(ring, gens);
}

mg::MonomialIdeal monomial_ideal(const mg::BlockRing& ring, const std::vector<std::string>& generators) {
  std::vector<mg::Monomial> gens;
  for (const auto& g : generators) gens.push_back(mono(ring, g));
  if (gens.empty()) return mg::MonomialIdeal(ring);
  return mg::MonomialIdeal(ring, gens);
}

}  // namespace mgtest
