#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mg/cs_theory.hpp"
#include "mg/polynomial.hpp"
#include "mg/ring.hpp"

namespace mg {

enum class Grading { Row, Column };

std::string to_string(Grading g);

/// m x n matrix of linear forms. Column mode: n <= v and every nonzero entry
/// of column j has degree e_j. Row mode: m <= v and every nonzero entry of
/// row i has degree e_i.
class GradedMatrix {
 public:
  /// Entries row-major. Throws StructuralError on a shape or grading violation.
  GradedMatrix(BlockRing ring, std::size_t rows, std::size_t cols, std::vector<Polynomial> entries, Grading mode);

  const BlockRing& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Grading mode() const { return mode_; }
  const Polynomial& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<Polynomial>& entries() const { return entries_; }

  std::string to_string() const;

  bool operator==(const GradedMatrix& other) const;

 private:
  BlockRing ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> entries_;
  Grading mode_;
};

/// Dense matrix over F_p, row-major.
struct CoefficientMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Coefficient> values;

  Coefficient at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
};

std::size_t rank_mod_p(const CoefficientMatrix& a, Coefficient p);

/// Uniform entries in F_p, resampled until the rank is min(rows, cols).
CoefficientMatrix random_full_rank(std::size_t rows, std::size_t cols, Coefficient p, std::uint64_t seed);

/// Column j is A_j x_j with A_j of shape m x n_j. One block per column.
GradedMatrix build_column_graded(std::size_t m, const std::vector<int>& block_sizes,
                                 const std::vector<CoefficientMatrix>& coefficients,
                                 Coefficient characteristic = kDefaultCharacteristic);
GradedMatrix build_column_graded(std::size_t m, const std::vector<int>& block_sizes, std::uint64_t seed,
                                 Coefficient characteristic = kDefaultCharacteristic);

/// Row i is (B_i x_i)^T with B_i of shape n x n_i. One block per row.
GradedMatrix build_row_graded(std::size_t n, const std::vector<int>& block_sizes,
                              const std::vector<CoefficientMatrix>& coefficients,
                              Coefficient characteristic = kDefaultCharacteristic);
GradedMatrix build_row_graded(std::size_t n, const std::vector<int>& block_sizes, std::uint64_t seed,
                              Coefficient characteristic = kDefaultCharacteristic);

/// The m x n matrix of variables with a_{ij} = x[i,j], row-graded in blocks
/// of size n.
GradedMatrix generic_matrix(std::size_t m, std::size_t n, Coefficient characteristic = kDefaultCharacteristic);

/// Nonzero t-minors by cofactor expansion, ordered by (row tuple, column
/// tuple) lexicographically.
std::vector<Polynomial> minors(const GradedMatrix& a, std::size_t t);

/// Determinant of a square submatrix by cofactor expansion along its first row.
Polynomial determinant(const GradedMatrix& a, const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols);

struct MainTheoremOptions {
  std::size_t orders = 200;
  std::uint64_t seed = 1;
  int trials = 3;
  bool with_permutations = true;
};

struct MainTheoremReport {
  Transcript transcript;
  std::vector<std::string> orders;
  std::vector<std::uint64_t> gin_seeds;
  bool passed() const { return transcript.passed(); }
};

/// (a) sampled initial ideals of I_m(A) squarefree, generated in degree m;
/// (b) column mode: the maximal minors are a universal GB on the sample; row
///     mode: every sampled GB element has degree e_1 + ... + e_m;
/// (c) sampled initial ideals of I_2(A) squarefree;
/// (d) I_2(A) generated and sampled GBs bounded by the sum of the e_i;
/// (e) I_m(A) and I_2(A) in CS, and column-mode I_m(A) in CS*;
/// (f) the regularity of gin(I_m(A)) equals m.
MainTheoremReport verify_main_theorem(const GradedMatrix& a, const MainTheoremOptions& options = {});

}  // namespace mg
