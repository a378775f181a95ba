#include <algorithm>

#include "mg/errors.hpp"
#include "mg/groebner.hpp"

namespace mg {
namespace {

void require_same_ring(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring())) throw StructuralError("ideals live in different rings");
}

bool all_monomials(const std::vector<Polynomial>& polys) {
  return std::all_of(polys.begin(), polys.end(), [](const Polynomial& p) { return p.is_monomial(); });
}

MonomialIdeal as_monomial_ideal(const Ideal& ideal) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.terms().front().monomial);
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

}  // namespace

MonomialIdeal initial_ideal(const Ideal& ideal, const TermOrder& order) {
  const auto basis = ideal.groebner_basis(order);
  return MonomialIdeal(ideal.ring(), basis->leading_monomials());
}

bool ideal_membership(const Polynomial& f, const Ideal& ideal) {
  return ideal.groebner_basis()->contains(f);
}

bool contains(const Ideal& outer, const Ideal& inner) {
  require_same_ring(outer, inner);
  const auto basis = outer.groebner_basis();
  return std::all_of(inner.generators().begin(), inner.generators().end(),
                     [&](const Polynomial& g) { return basis->contains(g); });
}

bool same_ideal(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  return *a.groebner_basis() == *b.groebner_basis();
}

Ideal sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  return sum(a, b.generators());
}

Ideal sum(const Ideal& a, const std::vector<Polynomial>& extra) {
  auto gens = a.generators();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  const auto& ring = a.ring();
  const auto p = ring.characteristic();
  if (a.is_zero() || b.is_zero()) return Ideal(ring);
  const BlockRing extended = ring.with_auxiliary_variable();
  const VarIndex t = extended.auxiliary(extended.num_auxiliary() - 1);
  const auto tpoly = Polynomial::variable(p, t);
  const auto one_minus_t = Polynomial::constant(p, 1) - tpoly;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(f * tpoly);
  for (const auto& g : b.generators()) gens.push_back(g * one_minus_t);
  const auto order = TermOrder::elimination(extended, {t}, TermOrder::degrevlex(extended));
  const auto basis = buchberger(extended, gens, order);
  std::vector<Polynomial> kept;
  for (const auto& g : basis.elements()) {
    const bool uses_t = std::any_of(g.terms().begin(), g.terms().end(),
                                    [&](const Term& term) { return term.monomial[t] != 0; });
    if (!uses_t) kept.push_back(g);
  }
  return Ideal(ring, std::move(kept));
}

Ideal colon(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("colon by the zero polynomial");
  const auto& ring = ideal.ring();
  if (f.is_constant() || ideal.is_zero()) return ideal;
  const Ideal principal(ring, {f});
  const Ideal meet = intersect(ideal, principal);
  std::vector<Polynomial> gens;
  for (const auto& g : meet.generators()) {
    auto q = g.divide_exact(f);
    if (!q) throw ConsistencyError("element of I ∩ (f) is not divisible by f");
    gens.push_back(std::move(*q));
  }
  return Ideal(ring, std::move(gens));
}

Ideal eliminate(const Ideal& ideal, const std::vector<VarIndex>& vars) {
  const auto& ring = ideal.ring();
  const auto order = TermOrder::elimination(ring, vars, TermOrder::degrevlex(ring));
  const auto basis = ideal.groebner_basis(order);
  std::vector<Polynomial> kept;
  for (const auto& g : basis->elements()) {
    const bool uses = std::any_of(g.terms().begin(), g.terms().end(), [&](const Term& term) {
      return std::any_of(vars.begin(), vars.end(), [&](VarIndex v) { return term.monomial[v] != 0; });
    });
    if (!uses) kept.push_back(g);
  }
  return Ideal(ring, std::move(kept));
}

HilbertNumerator hilbert_series(const Ideal& ideal, const TermOrder& order) {
  if (!ideal.is_multigraded()) throw PreconditionError("Hilbert series requires a multigraded ideal");
  return hilbert_numerator(initial_ideal(ideal, order));
}

HilbertNumerator hilbert_series(const Ideal& ideal) { return hilbert_series(ideal, ideal.default_order()); }

std::vector<Polynomial> minimal_generators(const Ideal& ideal) {
  if (!ideal.is_multigraded()) throw PreconditionError("minimal generators require a multigraded ideal");
  auto gens = ideal.generators();
  std::stable_sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.total_degree() < b.total_degree();
  });
  if (all_monomials(gens)) {
    std::vector<Polynomial> out;
    const MonomialIdeal monomials = as_monomial_ideal(Ideal(ideal.ring(), gens));
    for (const auto& m : monomials.generators()) {
      out.push_back(Polynomial::monomial(ideal.ring().characteristic(), m));
    }
    return out;
  }
  std::vector<Polynomial> kept;
  for (const auto& g : gens) {
    if (!kept.empty() && ideal_membership(g, Ideal(ideal.ring(), kept))) continue;
    kept.push_back(g);
  }
  return kept;
}

}  // namespace mg
