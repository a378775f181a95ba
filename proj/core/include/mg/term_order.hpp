#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mg/ring.hpp"

namespace mg {

/// A monomial order on a BlockRing.
///
/// Every order is described by a variable priority (a permutation listing the
/// variables from largest to smallest) plus one of four recipes:
///   - lex: compare exponents in priority sequence;
///   - degrevlex: total degree first, then the smaller exponent on the
///     smallest variable wins;
///   - weight: weight vector first, lex or degrevlex tie-break;
///   - elimination: degree in a set of front variables first, then an inner
///     order.
///
/// Orders used for generic initial ideals must satisfy x[i,j] > x[i,k] for
/// j < k inside every block. Orders sampled for universal Groebner basis
/// checks may be flagged unrestricted, since universality quantifies over
/// every term order.
class TermOrder {
 public:
  enum class Kind { Lex, DegRevLex, Weight, Elimination };

  static TermOrder lex(const BlockRing& ring);
  static TermOrder degrevlex(const BlockRing& ring);
  static TermOrder lex(const BlockRing& ring, std::vector<VarIndex> priority);
  static TermOrder degrevlex(const BlockRing& ring, std::vector<VarIndex> priority);
  /// Weights must be non-negative. `tie_break` is Lex or DegRevLex.
  static TermOrder weight(const BlockRing& ring, std::vector<std::int64_t> weights,
                          Kind tie_break = Kind::DegRevLex);
  static TermOrder weight(const BlockRing& ring, std::vector<std::int64_t> weights,
                          Kind tie_break, std::vector<VarIndex> priority);
  /// Any monomial involving a front variable is larger than every monomial
  /// free of them.
  static TermOrder elimination(const BlockRing& ring, const std::vector<VarIndex>& front,
                               const TermOrder& inner);

  Kind kind() const { return kind_; }
  std::size_t num_variables() const { return nvars_; }
  const std::vector<VarIndex>& priority() const { return priority_; }
  const std::vector<std::int64_t>& weights() const { return weights_; }

  TermOrder unrestricted() const;
  bool is_unrestricted() const { return unrestricted_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// Whether x[i,j] > x[i,j+1] for every block i and position j.
  bool respects_block_convention(const BlockRing& ring) const;

  /// Canonical serialization; equal strings mean equal orders.
  std::string canonical() const;
  /// Readable description using variable names.
  std::string describe(const BlockRing& ring) const;

  bool operator==(const TermOrder& other) const { return canonical() == other.canonical(); }

 private:
  TermOrder() = default;
  void finish();
  std::strong_ordering tie_compare(const Monomial& a, const Monomial& b) const;

  Kind kind_ = Kind::DegRevLex;
  Kind tie_break_ = Kind::DegRevLex;
  std::size_t nvars_ = 0;
  std::vector<VarIndex> priority_;
  std::vector<std::int64_t> weights_;
  std::vector<VarIndex> front_;
  std::shared_ptr<const TermOrder> inner_;
  bool unrestricted_ = false;
  bool identity_priority_ = false;
  std::string canonical_;
};

}  // namespace mg
