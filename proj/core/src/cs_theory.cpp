#include "mg/cs_theory.hpp"

#include <sstream>

#include "mg/errors.hpp"
#include "mg/groebner.hpp"
#include "mg/regular_sequence.hpp"

namespace mg {
namespace {

TermOrder primary_order(const Ideal& ideal, const CsOptions& options) {
  return options.order ? *options.order : ideal.default_order();
}

GinOptions gin_options(const CsOptions& options) { return GinOptions{options.trials, options.seed}; }

void record(MembershipReport& report, const GinReport& run) {
  report.orders.push_back(run.order);
  report.seeds.insert(report.seeds.end(), run.seeds.begin(), run.seeds.end());
}

std::string disagreement(const GinReport& run) {
  if (!run.borel_fixed) return "gin candidate under " + run.order + " is not Borel fixed";
  return "gin trials under " + run.order + " disagree";
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

MembershipReport is_cs(const Ideal& ideal, const CsOptions& options) {
  if (!ideal.is_multigraded()) throw PreconditionError("CS membership requires a multigraded ideal");
  MembershipReport report;
  const auto first = gin(ideal, primary_order(ideal, options), gin_options(options));
  record(report, first);
  if (!first.agreement) {
    report.detail = disagreement(first);
    return report;
  }
  report.gin = first.result;
  const auto second = gin(ideal, TermOrder::lex(ideal.ring()), gin_options(options));
  record(report, second);
  if (!second.agreement) {
    report.detail = disagreement(second);
    return report;
  }
  const bool radical = first.result.is_squarefree();
  if (radical != second.result.is_squarefree()) {
    report.detail = "gin radical under " + first.order + " but not under " + second.order;
    return report;
  }
  report.verdict = radical ? Verdict::Yes : Verdict::No;
  report.criterion = radical ? "gin is radical" : "gin is not radical";
  report.detail = "gin = " + first.result.to_string();
  return report;
}

MembershipReport is_csstar(const Ideal& ideal, const CsOptions& options) {
  if (!ideal.is_multigraded()) throw PreconditionError("CS* membership requires a multigraded ideal");
  MembershipReport report;
  const auto run = gin(ideal, primary_order(ideal, options), gin_options(options));
  record(report, run);
  if (!run.agreement) {
    report.detail = disagreement(run);
    return report;
  }
  report.gin = run.result;
  const bool extended = is_extended_from_T(run.result);
  report.verdict = extended ? Verdict::Yes : Verdict::No;
  report.criterion = extended ? "gin is extended from T" : "gin is not extended from T";
  report.detail = "gin = " + run.result.to_string();
  if (ideal.has_monomial_generators()) {
    const bool unit = ideal.groebner_basis()->is_unit();
    const bool regular = regular_sequence_test(ideal, gamma_sequence(ideal.ring()), unit);
    if (regular != extended) {
      throw ConsistencyError("gin criterion and Gamma regular-sequence criterion disagree on " +
                             ideal.to_string());
    }
    report.criterion += regular ? "; Gamma is a regular sequence" : "; Gamma is not a regular sequence";
  }
  return report;
}

MonomialIdeal csstar_canonical_C(const Ideal& ideal, const CsOptions& options) {
  const auto report = is_csstar(ideal, options);
  if (report.verdict != Verdict::Yes) {
    throw PreconditionError("ideal is not verified CS* (" + to_string(report.verdict) + ")");
  }
  return *report.gin;
}

bool check_incomparable_degrees(const Ideal& ideal) {
  std::vector<Multidegree> degrees;
  for (const auto& g : minimal_generators(ideal)) {
    degrees.push_back(*g.multihomogeneity(ideal.ring()).degree);
  }
  for (std::size_t a = 0; a < degrees.size(); ++a) {
    for (std::size_t b = a + 1; b < degrees.size(); ++b) {
      if (degrees[a].leq(degrees[b]) || degrees[b].leq(degrees[a])) return false;
    }
  }
  return true;
}

DualTheoremReport verify_dual_theorem(const MonomialIdeal& ideal, const CsOptions& options) {
  if (!ideal.is_squarefree()) throw PreconditionError("dual theorem needs a squarefree ideal");
  DualTheoremReport report{.dual = alexander_dual(ideal)};
  auto& log = report.transcript;
  log.push_back("I = " + ideal.to_string());
  log.push_back("I* = " + report.dual.to_string());

  const auto cs = is_cs(ideal.to_ideal(), options);
  const auto cstar = is_csstar(report.dual.to_ideal(), options);
  report.ideal_in_cs = cs.verdict;
  report.dual_in_csstar = cstar.verdict;
  report.gin_ideal = cs.gin;
  report.gin_dual = cstar.gin;
  log.push_back("I in CS: " + to_string(cs.verdict) + " (" + cs.detail + ")");
  log.push_back("I* in CS*: " + to_string(cstar.verdict) + " (" + cstar.detail + ")");
  if (cs.verdict == Verdict::Inconclusive || cstar.verdict == Verdict::Inconclusive) {
    report.inconclusive = true;
    log.push_back("inconclusive");
    return report;
  }
  const bool biconditional = cs.verdict == cstar.verdict;
  log.push_back(std::string("biconditional: ") + (biconditional ? "holds" : "fails"));
  report.holds = biconditional;
  if (cs.verdict == Verdict::Yes) {
    report.dual_of_gin = alexander_dual(*cs.gin);
    report.polarized_gin_of_dual = polarize(*cstar.gin);
    report.identity_holds = *report.dual_of_gin == *report.polarized_gin_of_dual;
    log.push_back("gin(I)* = " + report.dual_of_gin->to_string());
    log.push_back("pol(gin(I*)) = " + report.polarized_gin_of_dual->to_string());
    log.push_back(std::string("identity: ") + (*report.identity_holds ? "holds" : "fails"));
    report.holds = report.holds && *report.identity_holds;
  }
  return report;
}

void Transcript::add(std::string name, bool passed, std::string detail) {
  lines.push_back({std::move(name), passed, std::move(detail)});
}

bool Transcript::passed() const {
  for (const auto& line : lines) {
    if (!line.passed) return false;
  }
  return true;
}

std::string Transcript::to_string() const {
  std::ostringstream out;
  for (const auto& line : lines) {
    out << (line.passed ? "[pass] " : "[FAIL] ") << line.name;
    if (!line.detail.empty()) out << ": " << line.detail;
    out << '\n';
  }
  return out.str();
}

DegreeBoundReport degree_bound_check(const Ideal& ideal, const Multidegree& bound,
                                     const std::vector<GroebnerBasis>& bases, BoundMode mode) {
  const auto& ring = ideal.ring();
  if (bound.size() != ring.num_blocks()) throw StructuralError("bound has the wrong number of entries");
  DegreeBoundReport report;
  report.mode = mode;
  const auto within = [&](const Multidegree& d) { return mode == BoundMode::AtMost ? d.leq(bound) : d == bound; };
  const auto check = [&](const Polynomial& f, const std::string& where) {
    const auto h = f.multihomogeneity(ring);
    if (!h.homogeneous || !within(*h.degree)) {
      report.passed = false;
      report.violations.push_back(where + ": " + f.to_string(ring) + " of degree " +
                                  (h.degree ? h.degree->to_string() : std::string("mixed")));
    }
  };
  for (const auto& g : minimal_generators(ideal)) check(g, "minimal generator");
  for (const auto& basis : bases) {
    for (const auto& g : basis.elements()) check(g, basis.order().describe(ring));
    ++report.orders_tested;
  }
  return report;
}

DegreeBoundReport degree_bound_check(const Ideal& ideal, const Multidegree& bound,
                                     const std::vector<TermOrder>& orders, BoundMode mode) {
  return degree_bound_check(ideal, bound, sampled_bases(ideal, orders), mode);
}

DegreeBoundReport degree_bound_check(const Ideal& ideal, const Multidegree& bound, std::size_t n_orders,
                                     std::uint64_t seed, BoundMode mode) {
  return degree_bound_check(ideal, bound, sample_orders(ideal.ring(), n_orders, seed, false), mode);
}

}  // namespace mg
