#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mg/gin.hpp"
#include "mg/ideal.hpp"
#include "mg/monomial_ideal.hpp"

namespace mg {

enum class Verdict { Yes, No, Inconclusive };

std::string to_string(Verdict v);

struct CsOptions {
  int trials = 3;
  std::uint64_t seed = 1;
  /// Primary order for gins; the ring's default degrevlex when empty.
  std::optional<TermOrder> order;
};

/// Evidence-graded verdict. `Yes`/`No` always name the decisive criterion;
/// `Inconclusive` only arises from disagreeing gin trials.
struct MembershipReport {
  Verdict verdict = Verdict::Inconclusive;
  std::string criterion;
  std::vector<std::string> orders;
  std::vector<std::uint64_t> seeds;
  std::optional<MonomialIdeal> gin;
  std::string detail;
};

/// CS membership: the gin is radical. Cross-checked under lex.
MembershipReport is_cs(const Ideal& ideal, const CsOptions& options = {});

/// CS* membership: the gin is extended from T. For monomial generators the
/// Gamma regular-sequence criterion is evaluated too; the two must agree or a
/// ConsistencyError is thrown.
MembershipReport is_csstar(const Ideal& ideal, const CsOptions& options = {});

/// The unique Borel fixed ideal with the Hilbert series of a CS* ideal.
/// Throws PreconditionError when the ideal is not verified CS*.
MonomialIdeal csstar_canonical_C(const Ideal& ideal, const CsOptions& options = {});

/// Multidegrees of a minimal multigraded generating set are pairwise
/// incomparable (equal degrees count as comparable).
bool check_incomparable_degrees(const Ideal& ideal);

struct DualTheoremReport {
  bool holds = false;
  bool inconclusive = false;
  Verdict ideal_in_cs = Verdict::Inconclusive;
  Verdict dual_in_csstar = Verdict::Inconclusive;
  MonomialIdeal dual;
  std::optional<MonomialIdeal> gin_ideal{};
  std::optional<MonomialIdeal> gin_dual{};
  /// gin(I)^* and pol(gin(I^*)), present when I is CS.
  std::optional<MonomialIdeal> dual_of_gin{};
  std::optional<MonomialIdeal> polarized_gin_of_dual{};
  std::optional<bool> identity_holds{};
  std::vector<std::string> transcript{};
};

/// Checks I in CS <=> I^* in CS*, and gin(I)^* = pol(gin(I^*)) when I is CS.
DualTheoremReport verify_dual_theorem(const MonomialIdeal& ideal, const CsOptions& options = {});

struct CheckLine {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Transcript {
  std::vector<CheckLine> lines;

  void add(std::string name, bool passed, std::string detail = {});
  bool passed() const;
  std::string to_string() const;
};

/// Graded change of coordinates taking a linear form L of degree e_i to the
/// last variable of block i, with the identification S/(L) = K[other
/// variables].
class LinearSection {
 public:
  LinearSection(const BlockRing& ring, const Polynomial& linear_form);

  const BlockRing& ring() const { return ring_; }
  std::size_t block() const { return block_; }
  /// Variable equal to L in the new coordinates.
  VarIndex pivot() const { return pivot_; }
  /// Empty when S/(L) is the coefficient field.
  const std::optional<BlockRing>& quotient_ring() const { return quotient_ring_; }

  /// The ideal rewritten in coordinates where L is the pivot variable.
  Ideal to_new_coordinates(const Ideal& ideal) const;
  /// (I + (L)) / (L) inside quotient_ring().
  Ideal quotient(const Ideal& ideal) const;
  /// I ∩ R with R generated by the non-pivot coordinates, inside quotient_ring().
  Ideal subring_section(const Ideal& ideal) const;

 private:
  Polynomial drop_pivot(const Polynomial& f) const;

  BlockRing ring_;
  std::size_t block_ = 0;
  VarIndex pivot_ = 0;
  std::vector<Polynomial> substitution_;
  std::optional<BlockRing> quotient_ring_;
  std::vector<long> rename_;
};

/// Instance checks of the closure properties under a graded linear form L:
/// CS* is kept by (1) I+(L)/(L), (2) I:L, (3) I ∩ (L); CS is kept by
/// (4) I:L, (5) I+(L) and I+(L)/(L), (6) I ∩ R.
/// Throws PreconditionError when L is not a graded linear form or when I is
/// in neither family.
Transcript closure_suite(const Ideal& ideal, const Polynomial& linear_form, const CsOptions& options = {});

struct UgbFailure {
  std::string order;
  Polynomial element;
};

struct UgbReport {
  std::size_t orders_tested = 0;
  std::vector<std::string> orders;
  std::vector<UgbFailure> failures;
  /// Multidegree of each candidate -> how many candidates have it.
  std::map<Multidegree, int> degree_profile;
  /// in_o(I) for each sampled order, parallel to `orders`.
  std::vector<MonomialIdeal> initial_ideals;
  /// Reduced GB multidegrees seen across all sampled orders.
  std::vector<Multidegree> basis_degrees;
  std::string note = "sampled, not certified";

  bool pass() const { return failures.empty(); }
};

/// Random weight orders (weights uniform in {1..1000}, degrevlex tie-break,
/// unrestricted) de-duplicated by canonical form. When `with_permutations`
/// is set and the ring has at most 8 variables, lex and degrevlex under
/// every interleaving of the blocks that keeps each block's internal order
/// are appended, provided there are at most 5040 interleavings.
std::vector<TermOrder> sample_orders(const BlockRing& ring, std::size_t n_weight_orders, std::uint64_t seed,
                                     bool with_permutations = true);

/// Reduced Groebner bases of I under each order, computed in parallel.
std::vector<GroebnerBasis> sampled_bases(const Ideal& ideal, const std::vector<TermOrder>& orders);

/// Checks that the leading terms of `candidates` generate in_o(I) for each
/// order. Throws PreconditionError unless the candidates generate I.
UgbReport ugb_check(const std::vector<Polynomial>& candidates, const Ideal& ideal,
                    const std::vector<GroebnerBasis>& bases);
UgbReport ugb_check(const std::vector<Polynomial>& candidates, const Ideal& ideal,
                    const std::vector<TermOrder>& orders);
UgbReport ugb_check(const std::vector<Polynomial>& candidates, const Ideal& ideal, std::size_t n_orders,
                    std::uint64_t seed);

enum class BoundMode { AtMost, Exactly };

struct DegreeBoundReport {
  bool passed = true;
  BoundMode mode = BoundMode::AtMost;
  std::size_t orders_tested = 0;
  std::vector<std::string> violations;
};

/// Every reduced GB element under every order, and every minimal generator,
/// has multidegree <= bound (or == bound).
DegreeBoundReport degree_bound_check(const Ideal& ideal, const Multidegree& bound,
                                     const std::vector<GroebnerBasis>& bases,
                                     BoundMode mode = BoundMode::AtMost);
DegreeBoundReport degree_bound_check(const Ideal& ideal, const Multidegree& bound,
                                     const std::vector<TermOrder>& orders,
                                     BoundMode mode = BoundMode::AtMost);
DegreeBoundReport degree_bound_check(const Ideal& ideal, const Multidegree& bound, std::size_t n_orders,
                                     std::uint64_t seed, BoundMode mode = BoundMode::AtMost);

}  // namespace mg
