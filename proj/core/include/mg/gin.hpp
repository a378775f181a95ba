#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mg/ideal.hpp"
#include "mg/monomial_ideal.hpp"

namespace mg {

/// An element of B_{n_1} x ... x B_{n_v}: one upper-triangular invertible
/// matrix per block, stored row-major. It acts on variables by
///   x[i,j] -> sum_{k <= j} b_i(k, j) x[i,k],
/// so each variable moves into the span of the earlier (larger) variables of
/// its block and leading terms drift toward x[i,1].
class BorelElement {
 public:
  static BorelElement identity(const BlockRing& ring);

  std::size_t num_blocks() const { return blocks_.size(); }
  std::size_t block_size(std::size_t block) const { return sizes_[block]; }
  Coefficient entry(std::size_t block, std::size_t row, std::size_t col) const {
    return blocks_[block][row * sizes_[block] + col];
  }
  void set_entry(std::size_t block, std::size_t row, std::size_t col, Coefficient value) {
    blocks_[block][row * sizes_[block] + col] = value;
  }

  /// Images of every variable of `ring` as linear forms.
  std::vector<Polynomial> images(const BlockRing& ring) const;

  bool operator==(const BorelElement&) const = default;

 private:
  std::vector<std::size_t> sizes_;
  std::vector<std::vector<Coefficient>> blocks_;
};

/// Reproducible per-trial seeds: splitmix64 over (run seed, counter).
std::uint64_t derive_seed(std::uint64_t run_seed, std::uint64_t counter);

/// Entries above the diagonal uniform in F_p, diagonal uniform in F_p \ {0}.
BorelElement random_borel(const BlockRing& ring, std::uint64_t seed);

Polynomial apply_change(const BorelElement& g, const Polynomial& f, const BlockRing& ring);
Ideal apply_change(const BorelElement& g, const Ideal& ideal);

struct GinOptions {
  int trials = 3;
  std::uint64_t seed = 1;
};

struct GinReport {
  MonomialIdeal result;
  int trials = 0;
  /// Every trial produced the same ideal and that ideal is Borel fixed.
  bool agreement = false;
  bool borel_fixed = false;
  std::vector<std::uint64_t> seeds{};
  /// One initial ideal per trial, in seed order.
  std::vector<MonomialIdeal> candidates{};
  std::string order{};
};

/// Generic initial ideal in_order(b(I)) for `trials` random Borel elements.
/// The order must satisfy x[i,j] > x[i,k] for j < k within each block.
GinReport gin(const Ideal& ideal, const TermOrder& order, const GinOptions& options = {});

struct OrderIndependenceReport {
  bool independent = false;
  std::vector<GinReport> runs;
  /// Indices into the order list of two orders whose gins differ.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

OrderIndependenceReport gin_order_independence(const Ideal& ideal, const std::vector<TermOrder>& orders,
                                               const GinOptions& options = {});

/// Weight orders with weights uniform in {1..1000}, made non-increasing inside
/// each block and broken by degrevlex, so they respect the block convention.
std::vector<TermOrder> random_convention_orders(const BlockRing& ring, std::size_t count,
                                                std::uint64_t seed);

}  // namespace mg
