#include <algorithm>

#include "mg/cs_theory.hpp"
#include "mg/errors.hpp"
#include "mg/groebner.hpp"

namespace mg {
namespace {

/// Block of a graded linear form, or -1.
int linear_form_block(const BlockRing& ring, const Polynomial& f) {
  if (f.is_zero() || !f.is_linear_form()) return -1;
  const auto h = f.multihomogeneity(ring);
  if (!h.homogeneous || !h.degree || h.degree->total() != 1) return -1;
  for (std::size_t i = 0; i < ring.num_blocks(); ++i) {
    if ((*h.degree)[i] == 1) return static_cast<int>(i);
  }
  return -1;
}

std::string verdict_line(const MembershipReport& r) {
  return to_string(r.verdict) + (r.criterion.empty() ? "" : " (" + r.criterion + ")") +
         (r.gin ? ", gin = " + r.gin->to_string() : "");
}

}  // namespace

LinearSection::LinearSection(const BlockRing& ring, const Polynomial& linear_form) : ring_(ring) {
  if (ring.num_auxiliary() != 0) throw StructuralError("linear sections need a ring without auxiliary variables");
  const int block = linear_form_block(ring, linear_form);
  if (block < 0) throw PreconditionError("L must be a multigraded linear form");
  block_ = static_cast<std::size_t>(block);
  const auto n = static_cast<std::size_t>(ring.block_size(block_));
  const auto p = ring.characteristic();

  std::vector<Coefficient> c(n, 0);
  for (const auto& t : linear_form.terms()) {
    c[static_cast<std::size_t>(ring.position_of(t.monomial.support().front()))] = t.coefficient;
  }
  std::size_t chosen = n;
  for (std::size_t j = n; j-- > 0;) {
    if (c[j] != 0) {
      chosen = j;
      break;
    }
  }
  pivot_ = ring.var(block_, n - 1);
  const auto new_var = [&](std::size_t j) { return ring.var(block_, j < chosen ? j : j - 1); };

  for (VarIndex x = 0; x < ring.num_variables(); ++x) substitution_.push_back(Polynomial::variable(p, x));
  Polynomial image = Polynomial::variable(p, pivot_);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == chosen) continue;
    substitution_[ring.var(block_, j)] = Polynomial::variable(p, new_var(j));
    if (c[j] != 0) image = image - Polynomial::variable(p, new_var(j)).scaled(c[j]);
  }
  substitution_[ring.var(block_, chosen)] = image.scaled(field::inverse(c[chosen], p));

  auto sizes = ring.block_sizes();
  --sizes[block_];
  if (sizes[block_] == 0) sizes.erase(sizes.begin() + static_cast<long>(block_));
  long next = 0;
  for (VarIndex x = 0; x < ring.num_variables(); ++x) rename_.push_back(x == pivot_ ? -1 : next++);
  if (!sizes.empty()) quotient_ring_.emplace(sizes, p);
}

Ideal LinearSection::to_new_coordinates(const Ideal& ideal) const {
  if (!(ideal.ring() == ring_)) throw StructuralError("ideal lives in another ring");
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.substitute(substitution_));
  return Ideal(ring_, std::move(gens));
}

Polynomial LinearSection::drop_pivot(const Polynomial& f) const {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    if (t.monomial[pivot_] != 0) continue;
    Monomial m;
    for (VarIndex x = 0; x < ring_.num_variables(); ++x) {
      if (t.monomial[x] != 0) m.set(static_cast<VarIndex>(rename_[x]), t.monomial[x]);
    }
    terms.push_back({m, t.coefficient});
  }
  return Polynomial::from_terms(f.prime(), std::move(terms));
}

Ideal LinearSection::quotient(const Ideal& ideal) const {
  if (!quotient_ring_) throw PreconditionError("S/(L) is the coefficient field");
  std::vector<Polynomial> gens;
  const Ideal moved = to_new_coordinates(ideal);
  for (const auto& g : moved.generators()) gens.push_back(drop_pivot(g));
  return Ideal(*quotient_ring_, std::move(gens));
}

Ideal LinearSection::subring_section(const Ideal& ideal) const {
  if (!quotient_ring_) throw PreconditionError("the subring is the coefficient field");
  const Ideal section = eliminate(to_new_coordinates(ideal), {pivot_});
  std::vector<Polynomial> gens;
  for (const auto& g : section.generators()) gens.push_back(drop_pivot(g));
  return Ideal(*quotient_ring_, std::move(gens));
}

Transcript closure_suite(const Ideal& ideal, const Polynomial& linear_form, const CsOptions& options) {
  const auto& ring = ideal.ring();
  if (linear_form_block(ring, linear_form) < 0) {
    throw PreconditionError("closure operations need a multigraded linear form, got " + linear_form.to_string(ring));
  }
  const auto cs = is_cs(ideal, options);
  const auto cstar = is_csstar(ideal, options);
  if (cs.verdict != Verdict::Yes && cstar.verdict != Verdict::Yes) {
    throw PreconditionError("hypothesis not satisfied: CS " + to_string(cs.verdict) + ", CS* " +
                            to_string(cstar.verdict));
  }
  const LinearSection section(ring, linear_form);
  const Ideal principal(ring, {linear_form});
  Transcript transcript;
  const auto expect = [&](const std::string& name, const MembershipReport& r) {
    transcript.add(name, r.verdict == Verdict::Yes, verdict_line(r));
  };
  const auto field_quotient = [&](const std::string& name) {
    transcript.add(name, true, "S/(L) is the coefficient field");
  };

  if (cstar.verdict == Verdict::Yes) {
    if (section.quotient_ring()) {
      expect("(1) I+(L)/(L) in CS*", is_csstar(section.quotient(ideal), options));
    } else {
      field_quotient("(1) I+(L)/(L) in CS*");
    }
    expect("(2) I:L in CS*", is_csstar(colon(ideal, linear_form), options));
    expect("(3) I ∩ (L) in CS*", is_csstar(intersect(ideal, principal), options));
  }
  if (cs.verdict == Verdict::Yes) {
    expect("(4) I:L in CS", is_cs(colon(ideal, linear_form), options));
    expect("(5) I+(L) in CS", is_cs(sum(ideal, {linear_form}), options));
    if (section.quotient_ring()) {
      expect("(5) I+(L)/(L) in CS", is_cs(section.quotient(ideal), options));
      expect("(6) I ∩ R in CS", is_cs(section.subring_section(ideal), options));
    } else {
      field_quotient("(5) I+(L)/(L) in CS");
      field_quotient("(6) I ∩ R in CS");
    }
  }
  return transcript;
}

}  // namespace mg
