#include "mg/monomial_ideal.hpp"

#include <algorithm>
#include <sstream>

#include "mg/errors.hpp"
#include "mg/ideal.hpp"

namespace mg {
namespace {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

struct NumeratorContext {
  const BlockRing& ring;

  Multidegree degree(const Monomial& m) const { return ring.multidegree_of(m); }

  HilbertNumerator compute(std::vector<Monomial> gens) const {
    const std::size_t v = ring.num_blocks();
    if (gens.empty()) return HilbertNumerator::one(v);
    for (const auto& g : gens) {
      if (g.is_one()) return HilbertNumerator(v);
    }
    // Pairwise coprime generators form a regular sequence.
    std::array<int, kMaxVariables> count{};
    bool coprime = true;
    for (const auto& g : gens) {
      for (std::size_t x = 0; x < kMaxVariables; ++x) {
        if (g[static_cast<VarIndex>(x)]) coprime &= ++count[x] == 1;
      }
    }
    if (coprime) {
      HilbertNumerator k = HilbertNumerator::one(v);
      for (const auto& g : gens) {
        k = k * (HilbertNumerator::one(v) - HilbertNumerator::monomial(degree(g)));
      }
      return k;
    }
    std::size_t pivot = 0;
    for (std::size_t x = 1; x < kMaxVariables; ++x) {
      if (count[x] > count[pivot]) pivot = x;
    }
    const auto x = Monomial::variable(static_cast<VarIndex>(pivot));

    std::vector<Monomial> with_x;
    with_x.reserve(gens.size() + 1);
    with_x.push_back(x);
    std::vector<Monomial> quotient;
    quotient.reserve(gens.size());
    for (const auto& g : gens) {
      if (!x.divides(g)) {
        with_x.push_back(g);
        quotient.push_back(g);
      } else {
        quotient.push_back(g / x);
      }
    }
    return compute(minimalize(std::move(with_x))) +
           compute(minimalize(std::move(quotient))).shifted(degree(x));
  }
};

void require_ring_member(const BlockRing& ring, const Monomial& m) {
  if (!ring.contains(m)) throw StructuralError("monomial uses variables outside the ring");
}

}  // namespace

HilbertNumerator HilbertNumerator::one(std::size_t v) {
  HilbertNumerator h(v);
  h.coeffs_[Multidegree(v)] = 1;
  return h;
}

HilbertNumerator HilbertNumerator::monomial(const Multidegree& degree, std::int64_t c) {
  HilbertNumerator h(degree.size());
  h.add_term(degree, c);
  return h;
}

std::int64_t HilbertNumerator::coefficient(const Multidegree& degree) const {
  auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? 0 : it->second;
}

void HilbertNumerator::add_term(const Multidegree& degree, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.emplace(degree, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

HilbertNumerator HilbertNumerator::operator+(const HilbertNumerator& other) const {
  HilbertNumerator r(*this);
  for (const auto& [d, c] : other.coeffs_) r.add_term(d, c);
  return r;
}

HilbertNumerator HilbertNumerator::operator-(const HilbertNumerator& other) const {
  HilbertNumerator r(*this);
  for (const auto& [d, c] : other.coeffs_) r.add_term(d, -c);
  return r;
}

HilbertNumerator HilbertNumerator::operator*(const HilbertNumerator& other) const {
  HilbertNumerator r(v_);
  for (const auto& [d1, c1] : coeffs_) {
    for (const auto& [d2, c2] : other.coeffs_) r.add_term(d1 + d2, c1 * c2);
  }
  return r;
}

HilbertNumerator HilbertNumerator::shifted(const Multidegree& shift) const {
  HilbertNumerator r(v_);
  for (const auto& [d, c] : coeffs_) r.coeffs_.emplace(d + shift, c);
  return r;
}

std::int64_t HilbertNumerator::series_coefficient(const Multidegree& a,
                                                  const std::vector<int>& block_sizes) const {
  if (a.size() != v_ || block_sizes.size() != v_) throw StructuralError("multidegree length mismatch");
  std::int64_t total = 0;
  for (const auto& [b, c] : coeffs_) {
    std::int64_t term = c;
    for (std::size_t i = 0; i < v_ && term; ++i) {
      const int gap = a[i] - b[i];
      term *= gap < 0 ? 0 : binomial(gap + block_sizes[i] - 1, block_sizes[i] - 1);
    }
    total += term;
  }
  return total;
}

std::string HilbertNumerator::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [d, c] : coeffs_) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (!d[i]) continue;
      if (!mono.empty()) mono += '*';
      mono += "y" + std::to_string(i + 1);
      if (d[i] != 1) mono += "^" + std::to_string(d[i]);
    }
    if (mono.empty()) {
      out << mag;
    } else {
      if (mag != 1) out << mag << '*';
      out << mono;
    }
  }
  return out.str();
}

std::vector<Monomial> minimalize(std::vector<Monomial> generators) {
  // Lower total degree first, so a generator can only be divided by earlier ones.
  std::sort(generators.begin(), generators.end(), [](const Monomial& a, const Monomial& b) {
    const int da = a.total_degree(), db = b.total_degree();
    return da != db ? da < db : a > b;
  });
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  std::vector<Monomial> kept;
  for (const auto& g : generators) {
    const bool redundant =
        std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(g);
  }
  std::sort(kept.begin(), kept.end(), std::greater<>());
  return kept;
}

MonomialIdeal::MonomialIdeal(BlockRing ring, std::vector<Monomial> generators)
    : ring_(std::move(ring)) {
  for (const auto& g : generators) require_ring_member(ring_, g);
  gens_ = minimalize(std::move(generators));
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

Ideal MonomialIdeal::to_ideal() const {
  std::vector<Polynomial> polys;
  polys.reserve(gens_.size());
  for (const auto& g : gens_) polys.push_back(Polynomial::monomial(ring_.characteristic(), g));
  return Ideal(ring_, std::move(polys));
}

std::string MonomialIdeal::to_string() const {
  if (gens_.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += ring_.monomial_to_string(gens_[i]);
  }
  return s + ")";
}

HilbertNumerator hilbert_numerator(const MonomialIdeal& ideal) {
  if (ideal.ring().num_auxiliary()) {
    throw PreconditionError("Hilbert numerators are defined on graded rings only");
  }
  return NumeratorContext{ideal.ring()}.compute(ideal.generators());
}

bool is_radical_monomial(const MonomialIdeal& ideal) { return ideal.is_squarefree(); }

bool is_borel_fixed(const MonomialIdeal& ideal, Coefficient characteristic) {
  const auto& ring = ideal.ring();
  for (const auto& u : ideal.generators()) {
    for (VarIndex x = 0; x < ring.num_graded_variables(); ++x) {
      const int c = u[x];
      if (!c) continue;
      const auto block = static_cast<std::size_t>(ring.block_of(x));
      const int j = ring.position_of(x);
      for (int k = 0; k < j; ++k) {
        const VarIndex target = ring.var(block, static_cast<std::size_t>(k));
        for (int d = 1; d <= c; ++d) {
          if (!field::binomial_nonzero_mod(static_cast<std::uint64_t>(c), static_cast<std::uint64_t>(d),
                                           characteristic)) {
            continue;
          }
          Monomial moved = u;
          moved.set(x, c - d);
          moved.set(target, u[target] + d);
          if (!ideal.contains(moved)) return false;
        }
      }
    }
  }
  return true;
}

bool is_borel_fixed(const MonomialIdeal& ideal) {
  return is_borel_fixed(ideal, ideal.ring().characteristic());
}

bool is_strongly_stable(const MonomialIdeal& ideal) {
  const auto& ring = ideal.ring();
  for (const auto& u : ideal.generators()) {
    for (VarIndex x = 0; x < ring.num_graded_variables(); ++x) {
      if (!u[x]) continue;
      const auto block = static_cast<std::size_t>(ring.block_of(x));
      for (int k = 0; k < ring.position_of(x); ++k) {
        const VarIndex target = ring.var(block, static_cast<std::size_t>(k));
        Monomial moved = u;
        moved.set(x, u[x] - 1);
        moved.set(target, u[target] + 1);
        if (!ideal.contains(moved)) return false;
      }
    }
  }
  return true;
}

MonomialIdeal alexander_dual(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) throw PreconditionError("alexander dual requires squarefree generators");
  // Intersection of the support primes, one generator at a time.
  std::vector<Monomial> current{Monomial{}};
  for (const auto& g : ideal.generators()) {
    const auto support = g.support();
    std::vector<Monomial> next;
    next.reserve(current.size() * support.size());
    for (const auto& a : current) {
      for (auto x : support) next.push_back(Monomial::lcm(a, Monomial::variable(x)));
    }
    current = minimalize(std::move(next));
  }
  return MonomialIdeal(ideal.ring(), std::move(current));
}

MonomialIdeal polarize(const MonomialIdeal& ideal) {
  const auto& ring = ideal.ring();
  std::vector<int> max_exp(ring.num_variables(), 0);
  for (const auto& g : ideal.generators()) {
    for (VarIndex x = 0; x < ring.num_variables(); ++x) max_exp[x] = std::max(max_exp[x], g[x]);
  }
  // slots[x][c] is the variable carrying the (c+1)-th copy of x.
  std::vector<std::vector<VarIndex>> slots(ring.num_variables());
  for (std::size_t b = 0; b < ring.num_blocks(); ++b) {
    std::vector<VarIndex> free;
    for (int j = 0; j < ring.block_size(b); ++j) {
      const VarIndex x = ring.var(b, static_cast<std::size_t>(j));
      if (max_exp[x] == 0) free.push_back(x);
    }
    std::size_t next_free = 0;
    for (int j = 0; j < ring.block_size(b); ++j) {
      const VarIndex x = ring.var(b, static_cast<std::size_t>(j));
      if (max_exp[x] == 0) continue;
      slots[x].push_back(x);
      for (int c = 1; c < max_exp[x]; ++c) {
        if (next_free == free.size()) {
          throw PreconditionError("ring too small to polarize: block " + std::to_string(b + 1) +
                                  " has " + std::to_string(ring.block_size(b)) + " variables");
        }
        slots[x].push_back(free[next_free++]);
      }
    }
  }
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    Monomial p;
    for (VarIndex x = 0; x < ring.num_variables(); ++x) {
      for (int c = 0; c < g[x]; ++c) p.set(slots[x][static_cast<std::size_t>(c)], 1);
    }
    gens.push_back(p);
  }
  return MonomialIdeal(ring, std::move(gens));
}

bool is_extended_from_T(const MonomialIdeal& ideal) {
  const auto& ring = ideal.ring();
  for (const auto& g : ideal.generators()) {
    for (VarIndex x = 0; x < ring.num_variables(); ++x) {
      if (g[x] && (ring.block_of(x) < 0 || ring.position_of(x) != 0)) return false;
    }
  }
  return true;
}

int regularity_strongly_stable(const MonomialIdeal& ideal) {
  if (!is_strongly_stable(ideal)) throw PreconditionError("ideal is not strongly stable");
  int reg = 0;
  for (const auto& g : ideal.generators()) reg = std::max(reg, g.total_degree());
  return reg;
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!(a.ring() == b.ring())) throw StructuralError("ideals live in different rings");
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!(a.ring() == b.ring())) throw StructuralError("ideals live in different rings");
  std::vector<Monomial> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(Monomial::lcm(f, g));
  }
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g / Monomial::gcd(g, m));
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

std::vector<Multidegree> generator_degrees(const MonomialIdeal& ideal) {
  std::vector<Multidegree> d;
  for (const auto& g : ideal.generators()) d.push_back(ideal.ring().multidegree_of(g));
  return d;
}

}  // namespace mg
