#include "mg/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <unordered_map>

#include "mg/errors.hpp"

namespace mg {
namespace {

using TermList = std::vector<Term>;

std::atomic<std::size_t> g_max_basis{GroebnerLimits{}.max_basis};
std::atomic<std::size_t> g_max_terms{GroebnerLimits{}.max_terms};

std::uint32_t support_mask(const Monomial& m) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (m[static_cast<VarIndex>(i)]) mask |= 1u << i;
  }
  return mask;
}

TermList sort_by(const Polynomial& f, const TermOrder& order) {
  TermList t = f.terms();
  std::sort(t.begin(), t.end(),
            [&](const Term& a, const Term& b) { return order.greater(a.monomial, b.monomial); });
  return t;
}

Polynomial to_storage(const TermList& terms, Coefficient p) { return Polynomial::from_terms(p, terms); }

void make_monic(TermList& f, Coefficient p) {
  if (f.empty() || f.front().coefficient == 1) return;
  const auto inv = field::inverse(f.front().coefficient, p);
  for (auto& t : f) t.coefficient = field::mul(t.coefficient, inv, p);
}

/// Reduction machinery shared by the engine and GroebnerBasis::normal_form.
class Reducer {
 public:
  Reducer(const TermOrder& order, Coefficient p, std::size_t max_terms)
      : order_(order), p_(p), max_terms_(max_terms) {}

  void add(const TermList* g) {
    basis_.push_back(g);
    leads_.push_back(g->front().monomial);
    masks_.push_back(support_mask(g->front().monomial));
  }

  void set_active(std::vector<bool> active) { active_ = std::move(active); }

  /// Index of a basis element whose lead divides m, or -1.
  long find_divisor(const Monomial& m, std::uint32_t mask) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (!active_.empty() && !active_[i]) continue;
      if ((masks_[i] & ~mask) == 0 && leads_[i].divides(m)) return static_cast<long>(i);
    }
    return -1;
  }

  /// Full reduction: every term of the result is irreducible.
  TermList reduce(TermList f) const {
    TermList done;
    std::size_t pos = 0;
    while (pos < f.size()) {
      const Term lead = f[pos];
      const long d = find_divisor(lead.monomial, support_mask(lead.monomial));
      if (d < 0) {
        done.push_back(lead);
        ++pos;
        continue;
      }
      const TermList& g = *basis_[static_cast<std::size_t>(d)];
      const Monomial shift = lead.monomial / g.front().monomial;
      const Coefficient scale = field::neg(lead.coefficient, p_);  // g is monic
      f = merge_scaled(f, pos + 1, g, 1, shift, scale);
      pos = 0;
      if (f.size() + done.size() > max_terms_) {
        throw ResourceLimitError("polynomial support exceeded " + std::to_string(max_terms_) + " terms");
      }
    }
    return done;
  }

  /// a[a_from..] + scale * shift * b[b_from..], all sorted under the order.
  TermList merge_scaled(const TermList& a, std::size_t a_from, const TermList& b, std::size_t b_from,
                        const Monomial& shift, Coefficient scale) const {
    TermList out;
    out.reserve(a.size() - a_from + b.size() - b_from);
    std::size_t i = a_from, j = b_from;
    Monomial bj;
    if (j < b.size()) bj = b[j].monomial * shift;
    while (i < a.size() && j < b.size()) {
      const auto c = order_.compare(a[i].monomial, bj);
      if (c > 0) {
        out.push_back(a[i++]);
      } else if (c < 0) {
        out.push_back({bj, field::mul(b[j].coefficient, scale, p_)});
        if (++j < b.size()) bj = b[j].monomial * shift;
      } else {
        const auto s = field::add(a[i].coefficient, field::mul(b[j].coefficient, scale, p_), p_);
        if (s) out.push_back({a[i].monomial, s});
        ++i;
        if (++j < b.size()) bj = b[j].monomial * shift;
      }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back({b[j].monomial * shift, field::mul(b[j].coefficient, scale, p_)});
    return out;
  }

 private:
  const TermOrder& order_;
  Coefficient p_;
  std::size_t max_terms_;
  std::vector<const TermList*> basis_;
  std::vector<Monomial> leads_;
  std::vector<std::uint32_t> masks_;
  std::vector<bool> active_;
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  int degree;
};

class Engine {
 public:
  Engine(const BlockRing& ring, const TermOrder& order, const GroebnerLimits& limits)
      : ring_(ring), order_(order), limits_(limits), p_(ring.characteristic()) {}

  GroebnerBasis run(const std::vector<Polynomial>& generators) {
    std::vector<TermList> inputs;
    for (const auto& g : generators) {
      if (g.is_zero()) continue;
      if (g.prime() != p_) throw StructuralError("generator over a different field");
      for (const auto& t : g.terms()) {
        if (!ring_.contains(t.monomial)) throw StructuralError("generator uses variables outside the ring");
      }
      inputs.push_back(sort_by(g, order_));
    }
    std::sort(inputs.begin(), inputs.end(), [&](const TermList& a, const TermList& b) {
      const int da = a.front().monomial.total_degree(), db = b.front().monomial.total_degree();
      if (da != db) return da < db;
      return order_.greater(b.front().monomial, a.front().monomial);
    });
    // Each element is stored once; the vector of unique_ptr keeps addresses stable.
    for (auto& f : inputs) {
      if (insert(std::move(f))) return unit_basis();
    }
    while (!pairs_.empty()) {
      const Pair pair = select_pair();
      TermList s = s_polynomial(pair);
      if (insert(std::move(s))) return unit_basis();
    }
    return finish();
  }

 private:
  // Reduces f against the active basis; returns true when the ideal is the unit ideal.
  bool insert(TermList f) {
    Reducer reducer(order_, p_, limits_.max_terms);
    for (std::size_t i = 0; i < basis_.size(); ++i) reducer.add(basis_[i].get());
    reducer.set_active(active_);
    TermList r = reducer.reduce(std::move(f));
    if (r.empty()) return false;
    make_monic(r, p_);
    if (r.front().monomial.is_one()) return true;
    if (basis_.size() + 1 > limits_.max_basis) {
      throw ResourceLimitError("Groebner basis exceeded " + std::to_string(limits_.max_basis) + " elements");
    }
    basis_.push_back(std::make_unique<TermList>(std::move(r)));
    leads_.push_back(basis_.back()->front().monomial);
    active_.push_back(true);
    update(basis_.size() - 1);
    return false;
  }

  void update(std::size_t h) {
    const Monomial& lh = leads_[h];
    struct Candidate {
      std::size_t g;
      Monomial lcm;
      bool coprime;
      bool removed = false;
    };
    std::vector<Candidate> c;
    for (std::size_t g = 0; g < h; ++g) {
      if (!active_[g]) continue;
      c.push_back({g, Monomial::lcm(lh, leads_[g]), lh.coprime(leads_[g])});
    }
    // Criterion M: keep a pair unless another pending or kept pair's lcm divides it.
    std::vector<std::size_t> kept;
    for (std::size_t a = 0; a < c.size(); ++a) {
      c[a].removed = true;
      bool keep = c[a].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = 0; b < c.size() && keep; ++b) {
          if (!c[b].removed && c[b].lcm.divides(c[a].lcm)) keep = false;
        }
        for (std::size_t k = 0; k < kept.size() && keep; ++k) {
          if (c[kept[k]].lcm.divides(c[a].lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(a);
    }
    // Criterion B on old pairs.
    std::vector<Pair> next;
    next.reserve(pairs_.size() + kept.size());
    for (auto& p : pairs_) {
      const bool drop = lh.divides(p.lcm) && Monomial::lcm(leads_[p.i], lh) != p.lcm &&
                        Monomial::lcm(lh, leads_[p.j]) != p.lcm;
      if (!drop) next.push_back(std::move(p));
    }
    // Coprime pairs reduce to zero (product criterion).
    for (auto k : kept) {
      if (c[k].coprime) continue;
      next.push_back({c[k].g, h, c[k].lcm, c[k].lcm.total_degree()});
    }
    pairs_ = std::move(next);
    for (std::size_t g = 0; g < h; ++g) {
      if (active_[g] && lh.divides(leads_[g])) active_[g] = false;
    }
  }

  Pair select_pair() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const auto& a = pairs_[k];
      const auto& b = pairs_[best];
      if (a.degree < b.degree || (a.degree == b.degree && order_.compare(a.lcm, b.lcm) < 0)) best = k;
    }
    Pair p = pairs_[best];
    pairs_[best] = pairs_.back();
    pairs_.pop_back();
    return p;
  }

  TermList s_polynomial(const Pair& pair) const {
    Reducer merger(order_, p_, limits_.max_terms);
    const TermList& f = *basis_[pair.i];
    const TermList& g = *basis_[pair.j];
    const Monomial sf = pair.lcm / leads_[pair.i];
    const Monomial sg = pair.lcm / leads_[pair.j];
    TermList lhs;
    lhs.reserve(f.size() - 1);
    for (std::size_t k = 1; k < f.size(); ++k) lhs.push_back({f[k].monomial * sf, f[k].coefficient});
    return merger.merge_scaled(lhs, 0, g, 1, sg, p_ - 1);
  }

  GroebnerBasis unit_basis() const {
    return GroebnerBasis(ring_, order_, {TermList{Term{Monomial{}, 1}}});
  }

  GroebnerBasis finish() const {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (active_[i]) idx.push_back(i);
    }
    Reducer reducer(order_, p_, limits_.max_terms);
    for (auto i : idx) reducer.add(basis_[i].get());
    std::vector<TermList> reduced;
    reduced.reserve(idx.size());
    for (auto i : idx) {
      const TermList& g = *basis_[i];
      TermList tail(g.begin() + 1, g.end());
      TermList r{g.front()};
      for (auto& t : reducer.reduce(std::move(tail))) r.push_back(t);
      reduced.push_back(std::move(r));
    }
    return GroebnerBasis(ring_, order_, std::move(reduced));
  }

  const BlockRing& ring_;
  const TermOrder& order_;
  GroebnerLimits limits_;
  Coefficient p_;
  std::vector<std::unique_ptr<TermList>> basis_;
  std::vector<Monomial> leads_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

GroebnerLimits GroebnerLimits::defaults() {
  return GroebnerLimits{g_max_basis.load(), g_max_terms.load()};
}

void GroebnerLimits::set_defaults(const GroebnerLimits& limits) {
  g_max_basis = limits.max_basis;
  g_max_terms = limits.max_terms;
}

GroebnerBasis::GroebnerBasis(BlockRing ring, TermOrder order, std::vector<std::vector<Term>> order_sorted)
    : ring_(std::move(ring)), order_(std::move(order)), sorted_(std::move(order_sorted)) {
  std::sort(sorted_.begin(), sorted_.end(),
            [](const TermList& a, const TermList& b) { return a.front().monomial > b.front().monomial; });
  for (const auto& s : sorted_) {
    elements_.push_back(to_storage(s, ring_.characteristic()));
    leads_.push_back(s.front().monomial);
  }
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (f.prime() != ring_.characteristic()) throw StructuralError("polynomial over a different field");
  Reducer reducer(order_, ring_.characteristic(), GroebnerLimits::defaults().max_terms);
  for (const auto& s : sorted_) reducer.add(&s);
  return to_storage(reducer.reduce(sort_by(f, order_)), ring_.characteristic());
}

GroebnerBasis buchberger(const BlockRing& ring, const std::vector<Polynomial>& generators,
                         const TermOrder& order, const GroebnerLimits& limits) {
  if (order.num_variables() != ring.num_variables()) throw StructuralError("order is for another ring");
  return Engine(ring, order, limits).run(generators);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) { return basis.normal_form(f); }

bool satisfies_buchberger_criterion(const GroebnerBasis& basis) {
  const auto& order = basis.order();
  const auto p = basis.ring().characteristic();
  Reducer reducer(order, p, GroebnerLimits::defaults().max_terms);
  for (std::size_t i = 0; i < basis.size(); ++i) reducer.add(&basis.sorted_terms(i));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const auto& f = basis.sorted_terms(i);
      const auto& g = basis.sorted_terms(j);
      const Monomial l = Monomial::lcm(f.front().monomial, g.front().monomial);
      TermList lhs;
      for (std::size_t k = 1; k < f.size(); ++k) {
        lhs.push_back({f[k].monomial * (l / f.front().monomial), f[k].coefficient});
      }
      TermList s = reducer.merge_scaled(lhs, 0, g, 1, l / g.front().monomial, p - 1);
      if (!reducer.reduce(std::move(s)).empty()) return false;
    }
  }
  return true;
}

struct Ideal::Cache {
  std::mutex mutex;
  std::unordered_map<std::string, std::shared_ptr<const GroebnerBasis>> bases;
};

Ideal::Ideal(BlockRing ring) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {}

Ideal::Ideal(BlockRing ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (g.prime() != ring_.characteristic()) throw StructuralError("generator over a different field");
    for (const auto& t : g.terms()) {
      if (!ring_.contains(t.monomial)) throw StructuralError("generator uses variables outside the ring");
    }
    gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(const BlockRing& ring) {
  return Ideal(ring, {Polynomial::constant(ring.characteristic(), 1)});
}

bool Ideal::is_multigraded() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [&](const Polynomial& g) { return g.multihomogeneity(ring_).homogeneous; });
}

bool Ideal::has_monomial_generators() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_monomial(); });
}

std::shared_ptr<const GroebnerBasis> Ideal::groebner_basis(const TermOrder& order) const {
  const std::string key = order.canonical();
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->bases.find(key);
    if (it != cache_->bases.end()) return it->second;
  }
  auto basis = std::make_shared<const GroebnerBasis>(buchberger(ring_, gens_, order));
  std::lock_guard lock(cache_->mutex);
  return cache_->bases.emplace(key, std::move(basis)).first->second;
}

std::string Ideal::to_string() const {
  if (gens_.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string(ring_);
  }
  return s + ")";
}

}  // namespace mg
