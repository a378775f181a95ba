#pragma once

#include <vector>

#include "mg/ideal.hpp"
#include "mg/monomial_ideal.hpp"

namespace mg {

/// Buchberger's algorithm with the normal selection strategy and the
/// Gebauer-Moeller criteria. Returns the reduced Groebner basis.
GroebnerBasis buchberger(const BlockRing& ring, const std::vector<Polynomial>& generators,
                         const TermOrder& order,
                         const GroebnerLimits& limits = GroebnerLimits::defaults());

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

/// Minimal generators of in_order(I).
MonomialIdeal initial_ideal(const Ideal& ideal, const TermOrder& order);

bool ideal_membership(const Polynomial& f, const Ideal& ideal);
/// Every generator of `inner` lies in `outer`.
bool contains(const Ideal& outer, const Ideal& inner);
/// Equality through reduced Groebner bases under the default order.
bool same_ideal(const Ideal& a, const Ideal& b);

Ideal sum(const Ideal& a, const Ideal& b);
Ideal sum(const Ideal& a, const std::vector<Polynomial>& extra);

/// I : f, computed as (I ∩ (f)) / f.
Ideal colon(const Ideal& ideal, const Polynomial& f);
/// I ∩ J by eliminating t from t*I + (1 - t)*J.
Ideal intersect(const Ideal& a, const Ideal& b);
/// I ∩ K[remaining variables], via an elimination order with `vars` in front.
Ideal eliminate(const Ideal& ideal, const std::vector<VarIndex>& vars);

/// K-polynomial of S/I through in_order(I). Requires a multigraded ideal.
HilbertNumerator hilbert_series(const Ideal& ideal, const TermOrder& order);
HilbertNumerator hilbert_series(const Ideal& ideal);

/// Minimal multihomogeneous generating set of a multigraded ideal, extracted
/// from its generators by increasing total degree.
std::vector<Polynomial> minimal_generators(const Ideal& ideal);

/// Whether every S-pair of the basis reduces to zero against it.
bool satisfies_buchberger_criterion(const GroebnerBasis& basis);

}  // namespace mg
