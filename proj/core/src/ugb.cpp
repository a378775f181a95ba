#include <algorithm>
#include <random>
#include <set>

#include "mg/cs_theory.hpp"
#include "mg/errors.hpp"
#include "mg/groebner.hpp"
#include "mg/parallel.hpp"

namespace mg {
namespace {

constexpr std::size_t kMaxPermutationVariables = 8;
constexpr std::size_t kMaxInterleavings = 5040;

std::size_t interleaving_count(const std::vector<int>& sizes) {
  std::size_t count = 1;
  int placed = 0;
  for (int n : sizes) {
    for (int k = 1; k <= n; ++k) {
      ++placed;
      count = count * static_cast<std::size_t>(placed) / static_cast<std::size_t>(k);
    }
  }
  return count;
}

/// Every variable priority that lists each block's variables in their own
/// order.
void interleavings(const BlockRing& ring, std::vector<int>& next, std::vector<VarIndex>& prefix,
                   std::vector<std::vector<VarIndex>>& out) {
  if (prefix.size() == ring.num_graded_variables()) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t b = 0; b < ring.num_blocks(); ++b) {
    if (next[b] == ring.block_size(b)) continue;
    prefix.push_back(ring.var(b, static_cast<std::size_t>(next[b])));
    ++next[b];
    interleavings(ring, next, prefix, out);
    --next[b];
    prefix.pop_back();
  }
}

}  // namespace

std::vector<TermOrder> sample_orders(const BlockRing& ring, std::size_t n_weight_orders, std::uint64_t seed,
                                     bool with_permutations) {
  std::mt19937_64 rng(seed);
  std::vector<TermOrder> orders;
  std::set<std::string> seen;
  const auto add = [&](TermOrder o) {
    if (seen.insert(o.canonical()).second) orders.push_back(std::move(o));
  };
  std::size_t attempts = 0;
  while (orders.size() < n_weight_orders && attempts < 50 * (n_weight_orders + 1)) {
    ++attempts;
    std::vector<std::int64_t> w(ring.num_variables());
    for (auto& x : w) x = 1 + static_cast<std::int64_t>(rng() % 1000);
    add(TermOrder::weight(ring, std::move(w), TermOrder::Kind::DegRevLex).unrestricted());
  }
  const auto n = ring.num_graded_variables();
  if (with_permutations && ring.num_auxiliary() == 0 && n <= kMaxPermutationVariables &&
      interleaving_count(ring.block_sizes()) <= kMaxInterleavings) {
    std::vector<int> next(ring.num_blocks(), 0);
    std::vector<VarIndex> prefix;
    std::vector<std::vector<VarIndex>> priorities;
    interleavings(ring, next, prefix, priorities);
    for (const auto& p : priorities) {
      add(TermOrder::lex(ring, p).unrestricted());
      add(TermOrder::degrevlex(ring, p).unrestricted());
    }
  }
  return orders;
}

std::vector<GroebnerBasis> sampled_bases(const Ideal& ideal, const std::vector<TermOrder>& orders) {
  return parallel_map<GroebnerBasis>(orders.size(), [&](std::size_t k) {
    return buchberger(ideal.ring(), ideal.generators(), orders[k]);
  });
}

UgbReport ugb_check(const std::vector<Polynomial>& candidates, const Ideal& ideal,
                    const std::vector<GroebnerBasis>& bases) {
  const auto& ring = ideal.ring();
  const Ideal generated(ring, candidates);
  if (!contains(ideal, generated) || !contains(generated, ideal)) {
    throw PreconditionError("candidates do not generate the ideal");
  }
  UgbReport report;
  for (const auto& c : generated.generators()) ++report.degree_profile[*c.multihomogeneity(ring).degree];
  std::set<Multidegree> degrees;
  for (const auto& basis : bases) {
    const auto& o = basis.order();
    const auto description = o.describe(ring);
    std::vector<Monomial> leads;
    for (const auto& c : generated.generators()) leads.push_back(c.leading_monomial(o));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto& lead = basis.leading_monomials()[i];
      const bool hit = std::any_of(leads.begin(), leads.end(), [&](const Monomial& m) { return m.divides(lead); });
      if (!hit) report.failures.push_back({description, basis.elements()[i]});
      const auto h = basis.elements()[i].multihomogeneity(ring);
      if (h.degree) degrees.insert(*h.degree);
    }
    report.orders.push_back(description);
    report.initial_ideals.emplace_back(ring, basis.leading_monomials());
  }
  report.orders_tested = bases.size();
  report.basis_degrees.assign(degrees.begin(), degrees.end());
  return report;
}

UgbReport ugb_check(const std::vector<Polynomial>& candidates, const Ideal& ideal,
                    const std::vector<TermOrder>& orders) {
  return ugb_check(candidates, ideal, sampled_bases(ideal, orders));
}

UgbReport ugb_check(const std::vector<Polynomial>& candidates, const Ideal& ideal, std::size_t n_orders,
                    std::uint64_t seed) {
  return ugb_check(candidates, ideal, sample_orders(ideal.ring(), n_orders, seed));
}

}  // namespace mg
