#include <gtest/gtest.h>

#include <algorithm>

#include "generators.hpp"
#include "helpers.hpp"
#include "mg/determinantal.hpp"
#include "mg/errors.hpp"
#include "mg/groebner.hpp"
#include "oracles.hpp"

using mgtest::ideal;
using mgtest::mono;
using mgtest::monomial_ideal;
using mgtest::poly;

namespace {

const mg::BlockRing kR22({2, 2});
const mg::BlockRing kR333({3, 3, 3});

mg::HilbertNumerator y(std::initializer_list<int> degree, std::int64_t c = 1) {
  return mg::HilbertNumerator::monomial(mg::Multidegree(degree), c);
}

/// Rows (x11 x12 x13), (x21 x22 0), (0 0 x33).
mg::Ideal remark_ideal() {
  const auto& r = kR333;
  const auto z = mg::Polynomial(r.characteristic());
  mg::GradedMatrix x(r, 3, 3,
                     {poly(r, "x11"), poly(r, "x12"), poly(r, "x13"), poly(r, "x21"), poly(r, "x22"), z, z, z,
                      poly(r, "x33")},
                     mg::Grading::Row);
  return mg::Ideal(r, mg::minors(x, 2));
}

TEST(NormalForm, OneReductionStep) {
  const auto g = mg::buchberger(kR22, {poly(kR22, "x11*x22 - x12*x21")}, mg::TermOrder::lex(kR22));
  EXPECT_EQ(g.normal_form(poly(kR22, "x11*x22")), poly(kR22, "x12*x21"));
  EXPECT_TRUE(g.normal_form(poly(kR22, "x12*x22*x11 - x12^2*x21")).is_zero());
  EXPECT_EQ(g.normal_form(poly(kR22, "x12*x21")), poly(kR22, "x12*x21"));
}

TEST(Buchberger, PrincipalIdealIsItselfMonic) {
  for (const auto& o : {mg::TermOrder::lex(kR22), mg::TermOrder::degrevlex(kR22)}) {
    const auto g = mg::buchberger(kR22, {poly(kR22, "3*x11*x22 - 3*x12*x21")}, o);
    ASSERT_EQ(g.size(), 1u);
    EXPECT_EQ(g.elements()[0].monic(o), g.elements()[0]);
    EXPECT_EQ(g.normal_form(poly(kR22, "x11*x22 - x12*x21")), mg::Polynomial());
  }
}

TEST(Buchberger, CoprimeLeads) {
  const auto g = mg::buchberger(kR22, {poly(kR22, "x11"), poly(kR22, "x12")}, mg::TermOrder::degrevlex(kR22));
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g.leading_monomials(), (std::vector<mg::Monomial>{mono(kR22, "x11"), mono(kR22, "x12")}));
}

TEST(Buchberger, TwoMinorsOfColumnGradedTwoByThree) {
  const auto a = mg::build_column_graded(2, {2, 2, 2}, 5);
  const auto ms = mg::minors(a, 2);
  ASSERT_EQ(ms.size(), 3u);
  const mg::Ideal i(a.ring(), ms);
  const auto g = i.groebner_basis();
  EXPECT_EQ(g->size(), 3u);
  EXPECT_TRUE(mg::satisfies_buchberger_criterion(*g));
  for (const auto& m : ms) EXPECT_TRUE(g->contains(m));
  // The minors themselves are already a GB: their leads generate in(I).
  std::vector<mg::Monomial> leads;
  for (const auto& m : ms) leads.push_back(m.leading_monomial(g->order()));
  EXPECT_EQ(mg::MonomialIdeal(a.ring(), leads), mg::initial_ideal(i, g->order()));
  for (const auto& f : g->elements()) EXPECT_EQ(f.total_degree(), 2);
}

TEST(Buchberger, ResourceGuardAborts) {
  const mg::BlockRing r({4, 4});
  std::vector<mg::Polynomial> gens{poly(r, "x11*x21 + x12*x22 + x13*x23"), poly(r, "x12*x21 - x14*x24"),
                                   poly(r, "x13*x22 + x11*x24")};
  mg::GroebnerLimits tight{.max_basis = 2, .max_terms = 100000};
  EXPECT_THROW(mg::buchberger(r, gens, mg::TermOrder::lex(r), tight), mg::ResourceLimitError);
}

TEST(InitialIdeal, LexLeadTerm) {
  const auto i = ideal(kR22, {"x11*x22 - x12*x21"});
  EXPECT_EQ(mg::initial_ideal(i, mg::TermOrder::lex(kR22)), monomial_ideal(kR22, {"x11*x22"}));
}

TEST(InitialIdeal, MonomialIdealIsItsOwn) {
  const auto m = monomial_ideal(kR22, {"x11*x21", "x12^2", "x22"});
  for (const auto& o : {mg::TermOrder::lex(kR22), mg::TermOrder::degrevlex(kR22)}) {
    EXPECT_EQ(mg::initial_ideal(m.to_ideal(), o), m);
  }
}

TEST(InitialIdeal, WorkedExampleUnderDefaultOrder) {
  const auto j = monomial_ideal(kR333, {"x12*x21", "x13*x21", "x13*x22", "x11*x33", "x12*x33", "x21*x33", "x22*x33"});
  const auto i = remark_ideal();
  EXPECT_EQ(mg::initial_ideal(i, i.default_order()), j);
  EXPECT_TRUE(mg::is_radical_monomial(j));
}

TEST(Membership, Basics) {
  EXPECT_TRUE(mg::ideal_membership(poly(kR22, "x11*x22 - x12*x21"), ideal(kR22, {"x11*x22 - x12*x21"})));
  EXPECT_FALSE(mg::ideal_membership(poly(kR22, "x11"), ideal(kR22, {"x11*x22"})));
}

TEST(Membership, ColonOfWorkedExample) {
  const auto i = remark_ideal();
  const auto expected = mg::sum(i, {poly(kR333, "x12*x13"), poly(kR333, "x11*x13")});
  EXPECT_TRUE(mg::ideal_membership(poly(kR333, "x11*x13*x22"), expected));
}

TEST(Colon, Monomial) {
  const auto c = mg::colon(ideal(kR22, {"x11*x21"}), poly(kR22, "x21"));
  EXPECT_TRUE(mg::same_ideal(c, ideal(kR22, {"x11"})));
}

TEST(Colon, WorkedExample) {
  const auto i = remark_ideal();
  const auto f = poly(kR333, "x11*x21*x32 + x13*x23*x33");
  const auto c = mg::colon(i, f);
  EXPECT_TRUE(mg::same_ideal(c, mg::sum(i, {poly(kR333, "x12*x13"), poly(kR333, "x11*x13")})));
  const auto gens = mg::minimal_generators(c);
  const bool has_200 = std::any_of(gens.begin(), gens.end(), [](const mg::Polynomial& g) {
    return kR333.multidegree_of(g.terms()[0].monomial) == mg::Multidegree{2, 0, 0};
  });
  EXPECT_TRUE(has_200);
}

TEST(Intersect, Examples) {
  EXPECT_TRUE(mg::same_ideal(mg::intersect(ideal(kR22, {"x11"}), ideal(kR22, {"x21"})), ideal(kR22, {"x11*x21"})));
  const auto i = ideal(kR22, {"x11*x22 - x12*x21", "x12^2"});
  EXPECT_TRUE(mg::same_ideal(mg::intersect(i, i), i));
  // x11*x21 already lies in (x11, x12).
  EXPECT_TRUE(mg::same_ideal(mg::intersect(ideal(kR22, {"x11", "x12"}), ideal(kR22, {"x11*x21"})),
                             ideal(kR22, {"x11*x21"})));
}

TEST(Eliminate, Examples) {
  EXPECT_TRUE(mg::eliminate(ideal(kR22, {"x11 - x21"}), {kR22.var(0, 0)}).is_zero());
  EXPECT_TRUE(mg::same_ideal(mg::eliminate(ideal(kR22, {"x11", "x21"}), {kR22.var(0, 0)}), ideal(kR22, {"x21"})));
}

TEST(Eliminate, AuxiliaryVariableGivesIntersection) {
  const auto rt = kR22.with_auxiliary_variable();
  const auto t = mg::Polynomial::variable(rt.characteristic(), rt.auxiliary(0));
  const auto one = mg::Polynomial::constant(rt.characteristic(), 1);
  const mg::Ideal mixed(rt, {t * poly(rt, "x11"), (one - t) * poly(rt, "x21")});
  const auto e = mg::eliminate(mixed, {rt.auxiliary(0)});
  bool found = false;
  for (const auto& g : e.groebner_basis()->elements()) found |= g == poly(rt, "x11*x21");
  EXPECT_TRUE(found);
  EXPECT_EQ(e.groebner_basis()->size(), 1u);
}

TEST(Hilbert, Examples) {
  const auto one = mg::HilbertNumerator::one(2);
  EXPECT_EQ(mg::hilbert_series(ideal(kR22, {"x11"})), one - y({1, 0}));
  EXPECT_EQ(mg::hilbert_series(ideal(kR22, {"x11*x21"})), one - y({1, 1}));
  EXPECT_EQ(mg::hilbert_series(ideal(kR22, {"x11*x22 - x12*x21"})), one - y({1, 1}));
}

TEST(Hilbert, RejectsUngradedIdeal) {
  EXPECT_THROW(mg::hilbert_series(ideal(kR22, {"x11 + x21"})), mg::PreconditionError);
}

// Properties ---------------------------------------------------------------

TEST(GroebnerProperties, ReducedBasisIgnoresGeneratorOrder) {
  mgtest::Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const auto ring = mgtest::random_ring(rng, 2, 3, 5);
    const auto i = mgtest::random_multigraded_ideal(rng, ring, 4, 2, 3);
    auto gens = i.generators();
    std::shuffle(gens.begin(), gens.end(), rng);
    // Scaling generators must not matter either.
    for (auto& g : gens) g = g.scaled(static_cast<mg::Coefficient>(mgtest::uniform(rng, 1, 1000)));
    for (const auto& o : {mg::TermOrder::lex(ring), mg::TermOrder::degrevlex(ring)}) {
      const auto a = mg::buchberger(ring, i.generators(), o);
      const auto b = mg::buchberger(ring, gens, o);
      EXPECT_EQ(a, b);
      EXPECT_TRUE(mg::satisfies_buchberger_criterion(a));
    }
  }
}

TEST(GroebnerProperties, MacaulayInvariance) {
  mgtest::Rng rng(22);
  for (int trial = 0; trial < 30; ++trial) {
    const auto ring = mgtest::random_ring(rng, 3, 3, 6);
    const auto i = mgtest::random_multigraded_ideal(rng, ring, 3, 2, 3);
    const auto reference = mg::hilbert_series(i, mg::TermOrder::degrevlex(ring));
    EXPECT_EQ(mg::hilbert_series(i, mg::TermOrder::lex(ring)), reference);
    std::vector<std::int64_t> w(ring.num_variables());
    for (auto& x : w) x = mgtest::uniform(rng, 1, 1000);
    EXPECT_EQ(mg::hilbert_series(i, mg::TermOrder::weight(ring, w)), reference);
  }
}

TEST(GroebnerProperties, ColonMatchesGcdOracle) {
  mgtest::Rng rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const auto ring = mgtest::random_ring(rng, 3, 3, 6);
    const auto i = mgtest::random_monomial_ideal(rng, ring, 4, 2, 4);
    const auto f = mgtest::random_monomial(rng, ring, 2, 3);
    const auto expected = mgtest::gcd_colon(i, f);
    EXPECT_EQ(mg::colon(i, f), expected);
    const auto p = mg::Polynomial::monomial(ring.characteristic(), f);
    EXPECT_EQ(mg::initial_ideal(mg::colon(i.to_ideal(), p), mg::TermOrder::degrevlex(ring)), expected);
  }
}

TEST(GroebnerProperties, IntersectionIsContainedInBoth) {
  mgtest::Rng rng(24);
  for (int trial = 0; trial < 30; ++trial) {
    const auto ring = mgtest::random_ring(rng, 2, 3, 5);
    const auto a = mgtest::random_multigraded_ideal(rng, ring, 2, 2, 3);
    const auto b = mgtest::random_multigraded_ideal(rng, ring, 2, 2, 3);
    const auto c = mg::intersect(a, b);
    EXPECT_TRUE(mg::contains(a, c));
    EXPECT_TRUE(mg::contains(b, c));
  }
}

TEST(GroebnerProperties, MonomialIntersectionMatchesLcmOracle) {
  mgtest::Rng rng(25);
  for (int trial = 0; trial < 60; ++trial) {
    const auto ring = mgtest::random_ring(rng, 3, 3, 6);
    const auto a = mgtest::random_monomial_ideal(rng, ring, 3, 2, 4);
    const auto b = mgtest::random_monomial_ideal(rng, ring, 3, 2, 4);
    const auto expected = mgtest::lcm_intersection(a, b);
    EXPECT_EQ(mg::intersect(a, b), expected);
    EXPECT_EQ(mg::initial_ideal(mg::intersect(a.to_ideal(), b.to_ideal()), mg::TermOrder::degrevlex(ring)), expected);
  }
}

}  // namespace
