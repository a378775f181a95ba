#include "mg/determinantal.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "mg/errors.hpp"
#include "mg/groebner.hpp"

namespace mg {
namespace {

/// Increasing k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current(k);
  for (std::size_t i = 0; i < k; ++i) current[i] = i;
  if (k > n) return out;
  while (true) {
    out.push_back(current);
    std::size_t i = k;
    while (i > 0 && current[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++current[i - 1];
    for (std::size_t j = i; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

CoefficientMatrix sample_matrix(std::size_t rows, std::size_t cols, Coefficient p, std::mt19937_64& rng) {
  while (true) {
    CoefficientMatrix a{rows, cols, std::vector<Coefficient>(rows * cols)};
    for (auto& x : a.values) x = static_cast<Coefficient>(rng() % p);
    if (rank_mod_p(a, p) == std::min(rows, cols)) return a;
  }
}

Polynomial linear_combination(const BlockRing& ring, std::size_t block, const CoefficientMatrix& a, std::size_t row) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < a.cols; ++k) {
    if (a.at(row, k) != 0) terms.push_back({Monomial::variable(ring.var(block, k)), a.at(row, k)});
  }
  return Polynomial::from_terms(ring.characteristic(), std::move(terms));
}

void check_shapes(const std::vector<int>& block_sizes, const std::vector<CoefficientMatrix>& coefficients,
                  std::size_t rows) {
  if (coefficients.size() != block_sizes.size()) throw StructuralError("one coefficient matrix per block is needed");
  for (std::size_t b = 0; b < block_sizes.size(); ++b) {
    const auto& c = coefficients[b];
    if (c.rows != rows || c.cols != static_cast<std::size_t>(block_sizes[b]) || c.values.size() != c.rows * c.cols) {
      throw StructuralError("coefficient matrix " + std::to_string(b + 1) + " has the wrong shape");
    }
  }
}

bool all_squarefree(const std::vector<GroebnerBasis>& bases, std::string& witness) {
  for (const auto& b : bases) {
    const MonomialIdeal in(b.ring(), b.leading_monomials());
    if (!in.is_squarefree()) {
      witness = b.order().describe(b.ring()) + " gives " + in.to_string();
      return false;
    }
  }
  return true;
}

}  // namespace

std::string to_string(Grading g) { return g == Grading::Row ? "rowgraded" : "colgraded"; }

GradedMatrix::GradedMatrix(BlockRing ring, std::size_t rows, std::size_t cols, std::vector<Polynomial> entries,
                           Grading mode)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)), mode_(mode) {
  if (rows_ == 0 || cols_ == 0) throw StructuralError("matrix must have at least one row and column");
  if (entries_.size() != rows_ * cols_) throw StructuralError("matrix has the wrong number of entries");
  const auto v = ring_.num_blocks();
  if (mode_ == Grading::Column && cols_ > v) throw StructuralError("column-graded matrix needs n <= v");
  if (mode_ == Grading::Row && rows_ > v) throw StructuralError("row-graded matrix needs m <= v");
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& f = at(r, c);
      if (f.is_zero()) continue;
      if (f.prime() != ring_.characteristic()) throw StructuralError("entry over another field");
      const auto h = f.multihomogeneity(ring_);
      const auto expected = ring_.unit_degree(mode_ == Grading::Row ? r : c);
      if (!f.is_linear_form() || !h.homogeneous || *h.degree != expected) {
        throw StructuralError("entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") = " +
                              f.to_string(ring_) + " is not a linear form of degree " + expected.to_string());
      }
    }
  }
}

std::string GradedMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out << (r ? "\n" : "") << "[";
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? ", " : "") << at(r, c).to_string(ring_);
    out << "]";
  }
  return out.str();
}

bool GradedMatrix::operator==(const GradedMatrix& other) const {
  return ring_ == other.ring_ && rows_ == other.rows_ && cols_ == other.cols_ && mode_ == other.mode_ &&
         entries_ == other.entries_;
}

std::size_t rank_mod_p(const CoefficientMatrix& a, Coefficient p) {
  auto m = a.values;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols && rank < a.rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < a.rows && m[pivot * a.cols + c] == 0) ++pivot;
    if (pivot == a.rows) continue;
    for (std::size_t k = 0; k < a.cols; ++k) std::swap(m[pivot * a.cols + k], m[rank * a.cols + k]);
    const auto inv = field::inverse(m[rank * a.cols + c], p);
    for (std::size_t r = rank + 1; r < a.rows; ++r) {
      const auto factor = field::mul(m[r * a.cols + c], inv, p);
      if (factor == 0) continue;
      for (std::size_t k = c; k < a.cols; ++k) {
        m[r * a.cols + k] = field::sub(m[r * a.cols + k], field::mul(factor, m[rank * a.cols + k], p), p);
      }
    }
    ++rank;
  }
  return rank;
}

CoefficientMatrix random_full_rank(std::size_t rows, std::size_t cols, Coefficient p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_matrix(rows, cols, p, rng);
}

GradedMatrix build_column_graded(std::size_t m, const std::vector<int>& block_sizes,
                                 const std::vector<CoefficientMatrix>& coefficients, Coefficient characteristic) {
  check_shapes(block_sizes, coefficients, m);
  const BlockRing ring(block_sizes, characteristic);
  const auto n = block_sizes.size();
  std::vector<Polynomial> entries(m * n, Polynomial(characteristic));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < n; ++j) entries[r * n + j] = linear_combination(ring, j, coefficients[j], r);
  }
  return GradedMatrix(ring, m, n, std::move(entries), Grading::Column);
}

GradedMatrix build_column_graded(std::size_t m, const std::vector<int>& block_sizes, std::uint64_t seed,
                                 Coefficient characteristic) {
  std::mt19937_64 rng(seed);
  std::vector<CoefficientMatrix> coefficients;
  for (int nj : block_sizes) {
    coefficients.push_back(sample_matrix(m, static_cast<std::size_t>(std::max(nj, 0)), characteristic, rng));
  }
  return build_column_graded(m, block_sizes, coefficients, characteristic);
}

GradedMatrix build_row_graded(std::size_t n, const std::vector<int>& block_sizes,
                              const std::vector<CoefficientMatrix>& coefficients, Coefficient characteristic) {
  check_shapes(block_sizes, coefficients, n);
  const BlockRing ring(block_sizes, characteristic);
  const auto m = block_sizes.size();
  std::vector<Polynomial> entries(m * n, Polynomial(characteristic));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t c = 0; c < n; ++c) entries[i * n + c] = linear_combination(ring, i, coefficients[i], c);
  }
  return GradedMatrix(ring, m, n, std::move(entries), Grading::Row);
}

GradedMatrix build_row_graded(std::size_t n, const std::vector<int>& block_sizes, std::uint64_t seed,
                              Coefficient characteristic) {
  std::mt19937_64 rng(seed);
  std::vector<CoefficientMatrix> coefficients;
  for (int ni : block_sizes) {
    coefficients.push_back(sample_matrix(n, static_cast<std::size_t>(std::max(ni, 0)), characteristic, rng));
  }
  return build_row_graded(n, block_sizes, coefficients, characteristic);
}

GradedMatrix generic_matrix(std::size_t m, std::size_t n, Coefficient characteristic) {
  const BlockRing ring(std::vector<int>(m, static_cast<int>(n)), characteristic);
  std::vector<Polynomial> entries;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) entries.push_back(Polynomial::variable(characteristic, ring.var(i, j)));
  }
  return GradedMatrix(ring, m, n, std::move(entries), Grading::Row);
}

Polynomial determinant(const GradedMatrix& a, const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols) {
  const auto p = a.ring().characteristic();
  if (rows.size() != cols.size()) throw StructuralError("determinant of a non-square submatrix");
  if (rows.empty()) return Polynomial::constant(p, 1);
  if (rows.size() == 1) return a.at(rows[0], cols[0]);
  const std::vector<std::size_t> rest(rows.begin() + 1, rows.end());
  Polynomial det(p);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const auto& entry = a.at(rows[0], cols[k]);
    if (entry.is_zero()) continue;
    std::vector<std::size_t> minor_cols;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c != k) minor_cols.push_back(cols[c]);
    }
    const auto term = entry * determinant(a, rest, minor_cols);
    det = k % 2 == 0 ? det + term : det - term;
  }
  return det;
}

std::vector<Polynomial> minors(const GradedMatrix& a, std::size_t t) {
  if (t < 1 || t > std::min(a.rows(), a.cols())) {
    throw PreconditionError("minor size " + std::to_string(t) + " out of range");
  }
  std::vector<Polynomial> out;
  for (const auto& rows : subsets(a.rows(), t)) {
    for (const auto& cols : subsets(a.cols(), t)) {
      auto d = determinant(a, rows, cols);
      if (!d.is_zero()) out.push_back(std::move(d));
    }
  }
  return out;
}

MainTheoremReport verify_main_theorem(const GradedMatrix& a, const MainTheoremOptions& options) {
  const auto& ring = a.ring();
  const auto m = a.rows();
  const auto n = a.cols();
  const auto v = ring.num_blocks();
  const bool column = a.mode() == Grading::Column;
  MainTheoremReport report;
  auto& log = report.transcript;

  const auto orders = sample_orders(ring, options.orders, options.seed, options.with_permutations);
  for (const auto& o : orders) report.orders.push_back(o.canonical());
  const CsOptions cs_options{options.trials, options.seed, std::nullopt};
  const auto note_seeds = [&](const MembershipReport& r) {
    report.gin_seeds.insert(report.gin_seeds.end(), r.seeds.begin(), r.seeds.end());
  };
  const auto sampled = std::to_string(orders.size()) + " sampled orders";

  std::optional<Ideal> maximal;
  std::vector<GroebnerBasis> maximal_bases;
  if (m <= n) {
    const auto gens = minors(a, m);
    maximal.emplace(ring, gens);
    maximal_bases = sampled_bases(*maximal, orders);

    std::string witness;
    bool ok = all_squarefree(maximal_bases, witness);
    for (const auto& b : maximal_bases) {
      for (const auto& lead : b.leading_monomials()) {
        if (ok && lead.total_degree() != static_cast<int>(m)) {
          ok = false;
          witness = b.order().describe(ring) + " has a leading term of degree " + std::to_string(lead.total_degree());
        }
      }
    }
    log.add("(a) in(I_m) squarefree, generated in degree m", ok, ok ? sampled : witness);

    if (column) {
      const auto ugb = ugb_check(gens, *maximal, maximal_bases);
      log.add("(b) maximal minors form a universal GB", ugb.pass(),
              std::to_string(ugb.failures.size()) + " failures over " + sampled + ", " + ugb.note);
    } else {
      const auto bound = degree_bound_check(*maximal, Multidegree::ones(v, m), maximal_bases, BoundMode::Exactly);
      log.add("(b) GB elements of I_m have degree e_1+...+e_m", bound.passed,
              bound.passed ? sampled : bound.violations.front());
    }
  } else {
    log.add("(a) maximal minors", false, "hypothesis m <= n fails");
  }

  std::optional<Ideal> two;
  if (std::min(m, n) >= 2) {
    two.emplace(ring, minors(a, 2));
    const auto bases = m == 2 && maximal ? maximal_bases : sampled_bases(*two, orders);
    std::string witness;
    const bool ok = all_squarefree(bases, witness);
    log.add("(c) in(I_2) squarefree", ok, ok ? sampled : witness);
    const auto bound = degree_bound_check(*two, Multidegree::ones(v, column ? n : m), bases, BoundMode::AtMost);
    log.add("(d) I_2 degree bound", bound.passed, bound.passed ? sampled : bound.violations.front());
  }

  if (maximal) {
    const auto cs = is_cs(*maximal, cs_options);
    note_seeds(cs);
    log.add("(e) I_m in CS", cs.verdict == Verdict::Yes, to_string(cs.verdict) + ", " + cs.detail);
    if (two && m != 2) {
      const auto cs2 = is_cs(*two, cs_options);
      note_seeds(cs2);
      log.add("(e) I_2 in CS", cs2.verdict == Verdict::Yes, to_string(cs2.verdict) + ", " + cs2.detail);
    }
    if (column) {
      const auto cstar = is_csstar(*maximal, cs_options);
      note_seeds(cstar);
      log.add("(e) I_m in CS*", cstar.verdict == Verdict::Yes, to_string(cstar.verdict) + ", " + cstar.detail);
    }
    if (cs.gin) {
      const int reg = regularity_strongly_stable(*cs.gin);
      const bool ok = reg == static_cast<int>(m) && m <= v;
      log.add("(f) reg gin(I_m) = m <= v", ok, "reg = " + std::to_string(reg) + ", v = " + std::to_string(v));
    } else {
      log.add("(f) reg gin(I_m) = m <= v", false, "gin unavailable");
    }
  } else if (two) {
    const auto cs2 = is_cs(*two, cs_options);
    note_seeds(cs2);
    log.add("(e) I_2 in CS", cs2.verdict == Verdict::Yes, to_string(cs2.verdict) + ", " + cs2.detail);
  }
  return report;
}

}  // namespace mg
