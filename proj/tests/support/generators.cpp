#include "generators.hpp"

#include <algorithm>

namespace mgtest {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

mg::BlockRing random_ring(Rng& rng, int max_blocks, int max_block_size, int max_vars) {
  const int v = uniform(rng, 1, max_blocks);
  std::vector<int> sizes;
  int remaining = max_vars;
  for (int i = 0; i < v; ++i) {
    const int left_for_others = v - i - 1;
    const int cap = std::min(max_block_size, remaining - left_for_others);
    const int n = uniform(rng, 1, std::max(1, cap));
    sizes.push_back(n);
    remaining -= n;
  }
  return mg::BlockRing(sizes);
}

mg::Monomial random_monomial(Rng& rng, const mg::BlockRing& ring, int max_exponent, int max_degree) {
  while (true) {
    mg::Monomial m;
    int total = 0;
    for (mg::VarIndex x = 0; x < ring.num_graded_variables(); ++x) {
      // Sparse: most variables stay absent.
      if (uniform(rng, 0, 2) != 0) continue;
      const int e = uniform(rng, 1, max_exponent);
      if (total + e > max_degree) continue;
      m.set(x, e);
      total += e;
    }
    if (!m.is_one()) return m;
  }
}

mg::MonomialIdeal random_monomial_ideal(Rng& rng, const mg::BlockRing& ring, int max_gens, int max_exponent,
                                        int max_degree) {
  const int k = uniform(rng, 1, max_gens);
  std::vector<mg::Monomial> gens;
  for (int i = 0; i < k; ++i) gens.push_back(random_monomial(rng, ring, max_exponent, max_degree));
  return mg::MonomialIdeal(ring, gens);
}

mg::MonomialIdeal random_squarefree_ideal(Rng& rng, const mg::BlockRing& ring, int max_gens, int max_degree) {
  return random_monomial_ideal(rng, ring, max_gens, 1, max_degree);
}

mg::Polynomial random_form(Rng& rng, const mg::BlockRing& ring, const mg::Multidegree& degree, int max_terms) {
  const auto p = ring.characteristic();
  std::uniform_int_distribution<mg::Coefficient> coeff(1, p - 1);
  while (true) {
    mg::Polynomial f(p);
    const int k = uniform(rng, 1, max_terms);
    for (int t = 0; t < k; ++t) {
      mg::Monomial m;
      for (std::size_t b = 0; b < ring.num_blocks(); ++b) {
        for (int d = 0; d < degree[b]; ++d) {
          const auto x = ring.var(b, static_cast<std::size_t>(uniform(rng, 0, ring.block_size(b) - 1)));
          m.set(x, m[x] + 1);
        }
      }
      f = f + mg::Polynomial::monomial(p, m, coeff(rng));
    }
    if (!f.is_zero()) return f;
  }
}

mg::Ideal random_multigraded_ideal(Rng& rng, const mg::BlockRing& ring, int max_gens, int max_block_degree,
                                   int max_terms) {
  const int k = uniform(rng, 1, max_gens);
  std::vector<mg::Polynomial> gens;
  for (int i = 0; i < k; ++i) {
    mg::Multidegree d(ring.num_blocks());
    while (d.total() == 0) {
      for (std::size_t b = 0; b < ring.num_blocks(); ++b) d[b] = uniform(rng, 0, max_block_degree);
    }
    gens.push_back(random_form(rng, ring, d, max_terms));
  }
  return mg::Ideal(ring, gens);
}

mg::MonomialIdeal random_squarefree_borel(Rng& rng, const mg::BlockRing& ring, int max_gens) {
  const int k = uniform(rng, 1, max_gens);
  std::vector<mg::Monomial> seeds;
  for (int i = 0; i < k; ++i) {
    mg::Monomial m;
    for (std::size_t b = 0; b < ring.num_blocks(); ++b) {
      if (uniform(rng, 0, 1) == 0) continue;
      m.set(ring.var(b, static_cast<std::size_t>(uniform(rng, 0, ring.block_size(b) - 1))), 1);
    }
    if (m.is_one()) m.set(ring.var(0, static_cast<std::size_t>(uniform(rng, 0, ring.block_size(0) - 1))), 1);
    seeds.push_back(m);
  }
  // Closure: every move of a variable to an earlier one in its block.
  std::vector<mg::Monomial> closed;
  for (const auto& s : seeds) {
    std::vector<mg::Monomial> frontier{mg::Monomial{}};
    for (std::size_t b = 0; b < ring.num_blocks(); ++b) {
      int position = -1;
      for (int j = 0; j < ring.block_size(b); ++j) {
        if (s[ring.var(b, static_cast<std::size_t>(j))]) position = j;
      }
      if (position < 0) continue;
      std::vector<mg::Monomial> next;
      for (const auto& f : frontier) {
        for (int j = 0; j <= position; ++j) {
          auto g = f;
          g.set(ring.var(b, static_cast<std::size_t>(j)), 1);
          next.push_back(g);
        }
      }
      frontier = std::move(next);
    }
    closed.insert(closed.end(), frontier.begin(), frontier.end());
  }
  return mg::MonomialIdeal(ring, closed);
}

mg::MonomialIdeal random_extended_from_T(Rng& rng, const mg::BlockRing& ring, int max_gens, int max_exponent) {
  const int k = uniform(rng, 1, max_gens);
  std::vector<mg::Monomial> gens;
  for (int i = 0; i < k; ++i) {
    mg::Monomial m;
    while (m.is_one()) {
      for (std::size_t b = 0; b < ring.num_blocks(); ++b) {
        const int e = uniform(rng, 0, max_exponent);
        if (e) m.set(ring.var(b, 0), e);
      }
    }
    gens.push_back(m);
  }
  return mg::MonomialIdeal(ring, gens);
}

mg::Polynomial random_linear_form(Rng& rng, const mg::BlockRing& ring, std::size_t block) {
  const auto p = ring.characteristic();
  std::uniform_int_distribution<mg::Coefficient> coeff(0, p - 1);
  while (true) {
    mg::Polynomial f(p);
    for (int j = 0; j < ring.block_size(block); ++j) {
      f = f + mg::Polynomial::monomial(p, mg::Monomial::variable(ring.var(block, static_cast<std::size_t>(j))),
                                       coeff(rng));
    }
    if (!f.is_zero()) return f;
  }
}

std::vector<mg::MonomialIdeal> all_squarefree_ideals(const mg::BlockRing& ring, bool multilinear) {
  const auto n = ring.num_graded_variables();
  std::vector<mg::Monomial> squarefree;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    mg::Monomial m;
    for (std::size_t v = 0; v < n; ++v) {
      if (mask >> v & 1) m.set(static_cast<mg::VarIndex>(v), 1);
    }
    if (multilinear) {
      const auto d = ring.multidegree_of(m);
      if (std::any_of(d.entries().begin(), d.entries().end(), [](int e) { return e > 1; })) continue;
    }
    squarefree.push_back(m);
  }
  std::vector<mg::MonomialIdeal> result;
  const auto k = squarefree.size();
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << k); ++pick) {
    std::vector<mg::Monomial> gens;
    bool antichain = true;
    for (std::size_t a = 0; a < k && antichain; ++a) {
      if (!(pick >> a & 1)) continue;
      for (const auto& g : gens) {
        if (g.divides(squarefree[a]) || squarefree[a].divides(g)) antichain = false;
      }
      gens.push_back(squarefree[a]);
    }
    if (!antichain) continue;
    result.push_back(gens.empty() ? mg::MonomialIdeal(ring) : mg::MonomialIdeal(ring, gens));
  }
  return result;
}

}  // namespace mgtest
