#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "mg/polynomial.hpp"
#include "mg/ring.hpp"
#include "mg/term_order.hpp"

namespace mg {

/// Caps that turn a runaway Groebner computation into a ResourceLimitError.
struct GroebnerLimits {
  std::size_t max_basis = 5000;
  std::size_t max_terms = 100000;

  /// Process-wide defaults used by Ideal::groebner_basis.
  static GroebnerLimits defaults();
  static void set_defaults(const GroebnerLimits& limits);
};

/// Reduced Groebner basis: monic, interreduced, sorted by leading monomial.
class GroebnerBasis {
 public:
  /// `order_sorted` holds monic elements whose terms are sorted decreasingly
  /// under `order`; they must already form a reduced basis.
  GroebnerBasis(BlockRing ring, TermOrder order, std::vector<std::vector<Term>> order_sorted);

  const BlockRing& ring() const { return ring_; }
  const TermOrder& order() const { return order_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  const std::vector<Monomial>& leading_monomials() const { return leads_; }
  std::size_t size() const { return elements_.size(); }
  bool is_unit() const { return leads_.size() == 1 && leads_[0].is_one(); }

  /// Remainder with no term divisible by a leading monomial.
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

  /// Terms of element i sorted under the basis order.
  const std::vector<Term>& sorted_terms(std::size_t i) const { return sorted_[i]; }

  bool operator==(const GroebnerBasis& other) const { return elements_ == other.elements_; }

 private:
  BlockRing ring_;
  TermOrder order_;
  std::vector<std::vector<Term>> sorted_;
  std::vector<Polynomial> elements_;
  std::vector<Monomial> leads_;
};

/// Ideal given by generators, with reduced Groebner bases cached per order.
/// Copies share the cache. Zero generators are dropped on construction.
class Ideal {
 public:
  explicit Ideal(BlockRing ring);
  Ideal(BlockRing ring, std::vector<Polynomial> generators);

  static Ideal unit(const BlockRing& ring);

  const BlockRing& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  /// Every generator multihomogeneous.
  bool is_multigraded() const;
  bool has_monomial_generators() const;

  /// Degrevlex with block 1 first, positions increasing.
  TermOrder default_order() const { return TermOrder::degrevlex(ring_); }

  std::shared_ptr<const GroebnerBasis> groebner_basis(const TermOrder& order) const;
  std::shared_ptr<const GroebnerBasis> groebner_basis() const { return groebner_basis(default_order()); }

  std::string to_string() const;

 private:
  struct Cache;

  BlockRing ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace mg
