#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mg/field.hpp"
#include "mg/ring.hpp"
#include "mg/term_order.hpp"

namespace mg {

struct Term {
  Monomial monomial;
  Coefficient coefficient = 0;

  bool operator==(const Term&) const = default;
};

/// Result of a multihomogeneity test. The zero polynomial is homogeneous of
/// every degree and reports `zero` with no degree.
struct Homogeneity {
  bool homogeneous = false;
  bool zero = false;
  std::optional<Multidegree> degree;
};

/// Sparse polynomial over F_p. Terms are kept strictly decreasing in the
/// storage order (see Monomial) with nonzero coefficients.
class Polynomial {
 public:
  explicit Polynomial(Coefficient prime = kDefaultCharacteristic) : prime_(prime) {}

  /// Sorts, merges duplicates and drops zero coefficients.
  static Polynomial from_terms(Coefficient prime, std::vector<Term> terms);
  static Polynomial monomial(Coefficient prime, const Monomial& m, Coefficient c = 1);
  static Polynomial constant(Coefficient prime, std::int64_t c);
  static Polynomial variable(Coefficient prime, VarIndex var) {
    return monomial(prime, Monomial::variable(var));
  }

  Coefficient prime() const { return prime_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  /// Max total degree of a term; -1 for zero.
  int total_degree() const;
  /// Nonzero with every term of total degree one.
  bool is_linear_form() const;

  Homogeneity multihomogeneity(const BlockRing& ring) const;

  /// Leading term under an order. Requires a nonzero polynomial.
  const Term& leading_term(const TermOrder& order) const;
  Monomial leading_monomial(const TermOrder& order) const { return leading_term(order).monomial; }

  /// Divides by the leading coefficient under `order`.
  Polynomial monic(const TermOrder& order) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(Coefficient c) const;
  Polynomial times(const Monomial& m, Coefficient c = 1) const;
  Polynomial pow(int exponent) const;

  /// Replaces each variable v by images[v]. `images` covers every variable
  /// used by this polynomial.
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  /// Exact quotient this / divisor, or nullopt when the division leaves a
  /// remainder.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

  std::string to_string(const BlockRing& ring) const;

  bool operator==(const Polynomial& other) const {
    return prime_ == other.prime_ && terms_ == other.terms_;
  }

 private:
  Coefficient prime_;
  std::vector<Term> terms_;
};

}  // namespace mg
