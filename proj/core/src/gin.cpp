#include "mg/gin.hpp"

#include <algorithm>
#include <random>

#include "mg/errors.hpp"
#include "mg/groebner.hpp"
#include "mg/parallel.hpp"

namespace mg {

BorelElement BorelElement::identity(const BlockRing& ring) {
  BorelElement g;
  for (std::size_t b = 0; b < ring.num_blocks(); ++b) {
    const auto n = static_cast<std::size_t>(ring.block_size(b));
    g.sizes_.push_back(n);
    g.blocks_.emplace_back(n * n, 0);
    for (std::size_t k = 0; k < n; ++k) g.blocks_.back()[k * n + k] = 1;
  }
  return g;
}

std::vector<Polynomial> BorelElement::images(const BlockRing& ring) const {
  if (ring.num_blocks() != sizes_.size()) throw StructuralError("Borel element is for another ring");
  const auto p = ring.characteristic();
  std::vector<Polynomial> images;
  for (VarIndex x = 0; x < ring.num_variables(); ++x) {
    if (ring.block_of(x) < 0) {
      images.push_back(Polynomial::variable(p, x));
      continue;
    }
    const auto b = static_cast<std::size_t>(ring.block_of(x));
    const auto j = static_cast<std::size_t>(ring.position_of(x));
    std::vector<Term> terms;
    for (std::size_t k = 0; k <= j; ++k) {
      terms.push_back({Monomial::variable(ring.var(b, k)), entry(b, k, j)});
    }
    images.push_back(Polynomial::from_terms(p, std::move(terms)));
  }
  return images;
}

std::uint64_t derive_seed(std::uint64_t run_seed, std::uint64_t counter) {
  std::uint64_t z = run_seed + 0x9e3779b97f4a7c15ULL * (counter + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

BorelElement random_borel(const BlockRing& ring, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto p = ring.characteristic();
  BorelElement g = BorelElement::identity(ring);
  for (std::size_t b = 0; b < ring.num_blocks(); ++b) {
    const auto n = static_cast<std::size_t>(ring.block_size(b));
    for (std::size_t row = 0; row < n; ++row) {
      for (std::size_t col = row; col < n; ++col) {
        const auto value = row == col ? static_cast<Coefficient>(1 + rng() % (p - 1))
                                      : static_cast<Coefficient>(rng() % p);
        g.set_entry(b, row, col, value);
      }
    }
  }
  return g;
}

Polynomial apply_change(const BorelElement& g, const Polynomial& f, const BlockRing& ring) {
  return f.substitute(g.images(ring));
}

Ideal apply_change(const BorelElement& g, const Ideal& ideal) {
  const auto images = g.images(ideal.ring());
  std::vector<Polynomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& f : ideal.generators()) gens.push_back(f.substitute(images));
  return Ideal(ideal.ring(), std::move(gens));
}

GinReport gin(const Ideal& ideal, const TermOrder& order, const GinOptions& options) {
  const auto& ring = ideal.ring();
  if (options.trials < 1) throw PreconditionError("gin needs at least one trial");
  if (!order.respects_block_convention(ring)) {
    throw PreconditionError("gin requires an order with x[i,j] > x[i,k] for j < k: " + order.describe(ring));
  }
  if (!ideal.is_multigraded()) throw PreconditionError("gin requires a multigraded ideal");

  GinReport report{MonomialIdeal(ring)};
  report.trials = options.trials;
  report.order = order.canonical();
  for (int k = 0; k < options.trials; ++k) {
    report.seeds.push_back(derive_seed(options.seed, static_cast<std::uint64_t>(k)));
  }
  report.candidates = parallel_map<MonomialIdeal>(report.seeds.size(), [&](std::size_t k) {
    const auto g = random_borel(ring, report.seeds[k]);
    return initial_ideal(apply_change(g, ideal), order);
  });
  report.result = report.candidates.front();
  const bool identical = std::all_of(report.candidates.begin(), report.candidates.end(),
                                     [&](const MonomialIdeal& c) { return c == report.result; });
  report.borel_fixed = is_borel_fixed(report.result);
  report.agreement = identical && report.borel_fixed;
  return report;
}

OrderIndependenceReport gin_order_independence(const Ideal& ideal, const std::vector<TermOrder>& orders,
                                               const GinOptions& options) {
  OrderIndependenceReport report;
  for (const auto& o : orders) report.runs.push_back(gin(ideal, o, options));
  report.independent = true;
  for (std::size_t k = 1; k < report.runs.size(); ++k) {
    if (!(report.runs[k].result == report.runs[0].result) || !report.runs[k].agreement) {
      report.independent = false;
      report.witness = std::make_pair(std::size_t{0}, k);
      break;
    }
  }
  if (!report.runs.empty() && !report.runs[0].agreement) report.independent = false;
  return report;
}

std::vector<TermOrder> random_convention_orders(const BlockRing& ring, std::size_t count,
                                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<TermOrder> orders;
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<std::int64_t> w(ring.num_variables());
    for (auto& x : w) x = 1 + static_cast<std::int64_t>(rng() % 1000);
    for (std::size_t b = 0; b < ring.num_blocks(); ++b) {
      const auto first = ring.var(b, 0);
      std::sort(w.begin() + first, w.begin() + first + ring.block_size(b), std::greater<>());
    }
    orders.push_back(TermOrder::weight(ring, std::move(w), TermOrder::Kind::DegRevLex));
  }
  return orders;
}

}  // namespace mg
