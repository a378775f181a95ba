#include "mg/polynomial.hpp"

#include <algorithm>

#include "mg/errors.hpp"

namespace mg {
namespace {

void check_same_field(const Polynomial& a, const Polynomial& b) {
  if (a.prime() != b.prime()) throw StructuralError("polynomials over different fields");
}

// Merges two storage-sorted term lists, b scaled by `scale`.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, Coefficient scale,
                        Coefficient p) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].monomial > b[j].monomial) {
      out.push_back(a[i++]);
    } else if (b[j].monomial > a[i].monomial) {
      out.push_back({b[j].monomial, field::mul(b[j].coefficient, scale, p)});
      ++j;
    } else {
      const auto c = field::add(a[i].coefficient, field::mul(b[j].coefficient, scale, p), p);
      if (c) out.push_back({a[i].monomial, c});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].monomial, field::mul(b[j].coefficient, scale, p)});
  return out;
}

}  // namespace

Polynomial Polynomial::from_terms(Coefficient prime, std::vector<Term> terms) {
  Polynomial f(prime);
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
  for (auto& t : terms) {
    const Coefficient c = t.coefficient % prime;
    if (!f.terms_.empty() && f.terms_.back().monomial == t.monomial) {
      f.terms_.back().coefficient = field::add(f.terms_.back().coefficient, c, prime);
      if (f.terms_.back().coefficient == 0) f.terms_.pop_back();
    } else if (c) {
      f.terms_.push_back({t.monomial, c});
    }
  }
  return f;
}

Polynomial Polynomial::monomial(Coefficient prime, const Monomial& m, Coefficient c) {
  Polynomial f(prime);
  if (c % prime) f.terms_.push_back({m, c % prime});
  return f;
}

Polynomial Polynomial::constant(Coefficient prime, std::int64_t c) {
  return monomial(prime, Monomial{}, field::reduce(c, prime));
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.monomial.total_degree());
  return d;
}

bool Polynomial::is_linear_form() const {
  if (terms_.empty()) return false;
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.monomial.total_degree() == 1; });
}

Homogeneity Polynomial::multihomogeneity(const BlockRing& ring) const {
  Homogeneity h;
  if (terms_.empty()) {
    h.homogeneous = true;
    h.zero = true;
    return h;
  }
  const auto d = ring.multidegree_of(terms_.front().monomial);
  for (const auto& t : terms_) {
    if (ring.multidegree_of(t.monomial) != d) return h;
  }
  h.homogeneous = true;
  h.degree = d;
  return h;
}

const Term& Polynomial::leading_term(const TermOrder& order) const {
  if (terms_.empty()) throw PreconditionError("the zero polynomial has no leading term");
  const Term* best = &terms_.front();
  for (const auto& t : terms_) {
    if (order.greater(t.monomial, best->monomial)) best = &t;
  }
  return *best;
}

Polynomial Polynomial::monic(const TermOrder& order) const {
  if (terms_.empty()) return *this;
  return scaled(field::inverse(leading_term(order).coefficient, prime_));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  check_same_field(*this, other);
  Polynomial r(prime_);
  r.terms_ = merge(terms_, other.terms_, 1, prime_);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  check_same_field(*this, other);
  Polynomial r(prime_);
  r.terms_ = merge(terms_, other.terms_, prime_ - 1, prime_);
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(prime_ - 1); }

Polynomial Polynomial::scaled(Coefficient c) const {
  c %= prime_;
  Polynomial r(prime_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial, field::mul(t.coefficient, c, prime_)});
  return r;
}

Polynomial Polynomial::times(const Monomial& m, Coefficient c) const {
  c %= prime_;
  Polynomial r(prime_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the lexicographic storage order.
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, field::mul(t.coefficient, c, prime_)});
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_same_field(*this, other);
  const auto& small = terms_.size() <= other.terms_.size() ? *this : other;
  const auto& large = terms_.size() <= other.terms_.size() ? other : *this;
  std::vector<Term> all;
  all.reserve(small.terms_.size() * large.terms_.size());
  for (const auto& s : small.terms_) {
    for (const auto& l : large.terms_) {
      all.push_back({s.monomial * l.monomial, field::mul(s.coefficient, l.coefficient, prime_)});
    }
  }
  return from_terms(prime_, std::move(all));
}

Polynomial Polynomial::pow(int exponent) const {
  if (exponent < 0) throw PreconditionError("negative exponent");
  Polynomial result = constant(prime_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  // powers[v][e] caches images[v]^e
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](VarIndex v, int e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(constant(prime_, 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[v]);
    return cache[static_cast<std::size_t>(e)];
  };
  std::vector<Term> all;
  for (const auto& t : terms_) {
    Polynomial product = constant(prime_, t.coefficient);
    for (std::size_t v = 0; v < kMaxVariables; ++v) {
      const int e = t.monomial[static_cast<VarIndex>(v)];
      if (!e) continue;
      if (v >= images.size()) throw StructuralError("substitution does not cover every variable");
      product = product * power(static_cast<VarIndex>(v), e);
    }
    all.insert(all.end(), product.terms_.begin(), product.terms_.end());
  }
  return from_terms(prime_, std::move(all));
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  check_same_field(*this, divisor);
  if (divisor.is_zero()) throw PreconditionError("division by the zero polynomial");
  // Storage order is a term order, so leading terms are the front terms.
  const Term lead = divisor.terms_.front();
  const Coefficient inv = field::inverse(lead.coefficient, prime_);
  Polynomial remainder = *this;
  std::vector<Term> quotient;
  while (!remainder.is_zero()) {
    const Term& r = remainder.terms_.front();
    if (!lead.monomial.divides(r.monomial)) return std::nullopt;
    const Term q{r.monomial / lead.monomial, field::mul(r.coefficient, inv, prime_)};
    quotient.push_back(q);
    remainder.terms_ = merge(remainder.terms_, divisor.times(q.monomial).terms_,
                             field::neg(q.coefficient, prime_), prime_);
  }
  return from_terms(prime_, std::move(quotient));
}

std::string Polynomial::to_string(const BlockRing& ring) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    std::int64_t c = field::lift(t.coefficient, prime_);
    if (i == 0) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    c = c < 0 ? -c : c;
    const bool one = t.monomial.is_one();
    if (c != 1 || one) {
      s += std::to_string(c);
      if (!one) s += "*";
    }
    if (!one) s += ring.monomial_to_string(t.monomial);
  }
  return s;
}

}  // namespace mg
