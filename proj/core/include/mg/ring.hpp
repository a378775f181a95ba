#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mg/field.hpp"

namespace mg {

using VarIndex = std::uint32_t;

/// Hard capacity of the dense exponent vector, auxiliary variables included.
inline constexpr std::size_t kMaxVariables = 32;

/// A degree in Z^v.
class Multidegree {
 public:
  Multidegree() = default;
  explicit Multidegree(std::size_t v) : entries_(v, 0) {}
  Multidegree(std::initializer_list<int> entries) : entries_(entries) {}
  explicit Multidegree(std::vector<int> entries) : entries_(std::move(entries)) {}

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  int& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }
  int total() const;

  /// Coordinatewise order on Z^v.
  bool leq(const Multidegree& other) const;

  Multidegree operator+(const Multidegree& other) const;
  Multidegree operator-(const Multidegree& other) const;

  /// Sum of the first k unit vectors e_1 + ... + e_k in Z^v.
  static Multidegree ones(std::size_t v, std::size_t k);
  static Multidegree ones(std::size_t v) { return ones(v, v); }

  auto operator<=>(const Multidegree&) const = default;
  bool operator==(const Multidegree&) const = default;

  std::string to_string() const;

 private:
  std::vector<int> entries_;
};

/// Dense exponent vector. Comparison operators implement the storage order:
/// lexicographic with variable 0 largest.
class Monomial {
 public:
  using Exponent = std::uint8_t;

  Monomial() = default;

  static Monomial variable(VarIndex var, int power = 1);

  int operator[](VarIndex var) const { return exps_[var]; }
  void set(VarIndex var, int exponent);

  int total_degree() const;
  bool is_one() const;
  bool is_squarefree() const;
  /// Largest index with a nonzero exponent plus one; 0 for the monomial 1.
  std::size_t support_end() const;
  std::vector<VarIndex> support() const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// this / divisor; requires divisor | this.
  Monomial operator/(const Monomial& divisor) const;

  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  std::size_t hash() const;

  const std::array<Exponent, kMaxVariables>& exponents() const { return exps_; }

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::array<Exponent, kMaxVariables> exps_{};
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// The Z^v-graded polynomial ring: v blocks, block i holding variables
/// x[i,1..n_i] of degree e_i, over F_p. Variables are indexed block by block.
/// A ring may carry auxiliary variables of degree zero after the graded ones;
/// those exist only inside elimination and are never exposed in reports.
class BlockRing {
 public:
  explicit BlockRing(std::vector<int> block_sizes,
                     Coefficient characteristic = kDefaultCharacteristic);

  std::size_t num_blocks() const { return block_sizes_.size(); }
  const std::vector<int>& block_sizes() const { return block_sizes_; }
  int block_size(std::size_t block) const { return block_sizes_[block]; }
  Coefficient characteristic() const { return characteristic_; }

  /// Graded variables only.
  std::size_t num_graded_variables() const { return graded_vars_; }
  std::size_t num_auxiliary() const { return aux_vars_; }
  std::size_t num_variables() const { return graded_vars_ + aux_vars_; }

  /// 0-based block and position.
  VarIndex var(std::size_t block, std::size_t position) const;
  /// Block of a variable, or -1 for auxiliary variables.
  int block_of(VarIndex var) const;
  int position_of(VarIndex var) const;
  VarIndex auxiliary(std::size_t k) const { return static_cast<VarIndex>(graded_vars_ + k); }

  BlockRing with_auxiliary_variable() const;
  BlockRing without_auxiliary() const;

  Multidegree multidegree_of(const Monomial& m) const;
  Multidegree unit_degree(std::size_t block) const;

  /// Human-readable names: x[i,j] with 1-based indices, t1.. for auxiliaries.
  std::string variable_name(VarIndex var) const;
  std::string monomial_to_string(const Monomial& m) const;

  /// Checks that a monomial does not use variables beyond this ring.
  bool contains(const Monomial& m) const;

  std::string to_string() const;

  bool operator==(const BlockRing& other) const;

 private:
  std::vector<int> block_sizes_;
  Coefficient characteristic_;
  std::size_t graded_vars_ = 0;
  std::size_t aux_vars_ = 0;
  std::vector<int> block_of_;
  std::vector<int> position_of_;
  std::vector<VarIndex> block_start_;
};

}  // namespace mg
