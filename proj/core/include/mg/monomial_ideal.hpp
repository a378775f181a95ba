#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mg/ring.hpp"

namespace mg {

class Ideal;

/// Integer polynomial in y_1..y_v. As the numerator of a Hilbert series it
/// stands for K(y) / prod_i (1 - y_i)^{n_i}.
class HilbertNumerator {
 public:
  explicit HilbertNumerator(std::size_t v = 0) : v_(v) {}

  static HilbertNumerator one(std::size_t v);
  /// c * y^degree
  static HilbertNumerator monomial(const Multidegree& degree, std::int64_t c = 1);

  std::size_t num_blocks() const { return v_; }
  const std::map<Multidegree, std::int64_t>& coefficients() const { return coeffs_; }
  std::int64_t coefficient(const Multidegree& degree) const;
  bool is_zero() const { return coeffs_.empty(); }

  HilbertNumerator operator+(const HilbertNumerator& other) const;
  HilbertNumerator operator-(const HilbertNumerator& other) const;
  HilbertNumerator operator*(const HilbertNumerator& other) const;
  /// Multiplies by y^shift.
  HilbertNumerator shifted(const Multidegree& shift) const;

  /// Coefficient of y^a in the expanded Hilbert series K(y) / prod (1-y_i)^{n_i},
  /// that is dim_K (S/I)_a.
  std::int64_t series_coefficient(const Multidegree& a, const std::vector<int>& block_sizes) const;

  std::string to_string() const;

  bool operator==(const HilbertNumerator& other) const = default;

 private:
  void add_term(const Multidegree& degree, std::int64_t c);

  std::size_t v_;
  std::map<Multidegree, std::int64_t> coeffs_;
};

/// Monomial ideal stored by its minimal generators, sorted in storage order.
/// The zero ideal has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(BlockRing ring) : ring_(std::move(ring)) {}
  MonomialIdeal(BlockRing ring, std::vector<Monomial> generators);

  static MonomialIdeal unit(const BlockRing& ring) { return MonomialIdeal(ring, {Monomial{}}); }

  const BlockRing& ring() const { return ring_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  bool is_squarefree() const;

  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& other) const;

  Ideal to_ideal() const;

  std::string to_string() const;

  bool operator==(const MonomialIdeal& other) const {
    return ring_ == other.ring_ && gens_ == other.gens_;
  }

 private:
  BlockRing ring_;
  std::vector<Monomial> gens_;
};

/// Divisibility antichain generating the same ideal, sorted in storage order.
std::vector<Monomial> minimalize(std::vector<Monomial> generators);

/// K-polynomial of S/I by pivot splitting
///   K(S/I) = K(S/(I + (x))) + y^{deg x} K(S/(I : x))
/// on the most frequent variable among non-coprime generators.
HilbertNumerator hilbert_numerator(const MonomialIdeal& ideal);

bool is_radical_monomial(const MonomialIdeal& ideal);

/// Exchange test with binomial coefficients in characteristic p.
bool is_borel_fixed(const MonomialIdeal& ideal, Coefficient characteristic);
bool is_borel_fixed(const MonomialIdeal& ideal);

/// Single-step exchange test x[i,k] * u / x[i,j] in I for k < j.
bool is_strongly_stable(const MonomialIdeal& ideal);

/// Requires squarefree generators.
MonomialIdeal alexander_dual(const MonomialIdeal& ideal);

/// Polarization inside the ambient ring. Every variable of block i keeps its
/// own slot; extra copies needed for higher powers take the unused positions
/// of block i in increasing order. For ideals extended from T this maps
/// x[i,1]^a to x[i,1] x[i,2] ... x[i,a].
MonomialIdeal polarize(const MonomialIdeal& ideal);

/// Every minimal generator involves only the first variable of each block.
bool is_extended_from_T(const MonomialIdeal& ideal);

/// Castelnuovo-Mumford regularity of a strongly stable ideal: the largest
/// total degree of a minimal generator. Throws PreconditionError otherwise.
int regularity_strongly_stable(const MonomialIdeal& ideal);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m);

/// Multidegrees of the minimal generators.
std::vector<Multidegree> generator_degrees(const MonomialIdeal& ideal);

}  // namespace mg
