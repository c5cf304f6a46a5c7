#include <gtest/gtest.h>

#include "csp/harmonics.hpp"
#include "csp/kostka_foulkes.hpp"

using namespace csp;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

Monomial M(std::initializer_list<int> e) { return Monomial(e); }

SparsePoly power(const SparsePoly& p, int e) {
  SparsePoly r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

}  // namespace

TEST(Grevlex, Ordering) {
  EXPECT_TRUE(grevlex_less(M({0, 0}), M({1, 0})));
  EXPECT_TRUE(grevlex_less(M({0, 1}), M({1, 0})));
  EXPECT_TRUE(grevlex_less(M({1, 0, 1}), M({0, 2, 0})));
  EXPECT_FALSE(grevlex_less(M({2, 0}), M({2, 0})));
}

TEST(VanishingIdeal, SinglePoint) {
  const std::vector<Word> pts{Word({2}, 3)};
  const auto gb = vanishing_ideal(pts, 1, 3);
  ASSERT_EQ(gb.size(), 1u);
  const auto& f = gb.field();
  MultiPoly expected = MultiPoly::variable(1, f, 0);
  expected.add_term(M({0}), -CycloElement::root_power(f, 2));
  EXPECT_EQ(gb.generators()[0], expected);
}

TEST(VanishingIdeal, AllRootsOfUnity) {
  for (int k = 1; k <= 6; ++k) {
    const auto gb = vanishing_ideal(enumerate_locus(LocusSpec::x(1, k)));
    ASSERT_EQ(gb.size(), 1u);
    const auto& f = gb.field();
    MultiPoly expected = MultiPoly::monomial(1, f, M({k}));
    expected.add_term(M({0}), -CycloElement::one(f));
    EXPECT_EQ(gb.generators()[0], expected);
  }
}

TEST(VanishingIdeal, X22StandardMonomials) {
  const auto gb = vanishing_ideal(enumerate_locus(LocusSpec::x(2, 2)));
  const auto qb = gb.quotient_basis();
  EXPECT_EQ(qb.monomials(), (std::vector<Monomial>{M({0, 0}), M({0, 1}), M({1, 0}), M({1, 1})}));
}

TEST(VanishingIdeal, EmptyLocusIsDomainError) {
  EXPECT_THROW(vanishing_ideal(enumerate_locus(LocusSpec::y(3, 2))), DomainError);
}

TEST(VanishingIdeal, BudgetIsEnforced) {
  EXPECT_THROW(vanishing_ideal(enumerate_locus(LocusSpec::x(6, 2))), ResourceError);
  EXPECT_THROW(vanishing_ideal(enumerate_locus(LocusSpec::x(4, 6))), ResourceError);
}

TEST(VanishingIdeal, GeneratorsVanishAndDimensionMatches) {
  for (auto spec : {LocusSpec::x(2, 3), LocusSpec::y(3, 4), LocusSpec::z(4, 2), LocusSpec::springer(4),
                    LocusSpec::tanisaki(WeakComposition({2, 0, 2, 0}), 2)}) {
    const auto l = enumerate_locus(spec);
    const auto gb = vanishing_ideal(l);
    EXPECT_TRUE(vanishes_on(gb, l.elements(), l.k())) << spec.to_string();
    EXPECT_EQ(gb.quotient_basis().size(), l.size()) << spec.to_string();
  }
}

TEST(VanishingIdeal, MatchesProductOfMaximalIdeals) {
  for (auto spec : {LocusSpec::x(2, 2), LocusSpec::y(2, 3), LocusSpec::z(3, 2), LocusSpec::springer(3),
                    LocusSpec::tanisaki(WeakComposition({2, 1}), 2), LocusSpec::x(1, 5)}) {
    const auto l = enumerate_locus(spec);
    ASSERT_LE(l.size(), 8u);
    const auto bm = vanishing_ideal(l);
    const auto products = vanishing_ideal_by_products(l.elements(), l.n(), l.k());
    EXPECT_EQ(bm.generators(), products.generators()) << spec.to_string();
  }
}

TEST(VanishingIdeal, IrregularPointSet) {
  const std::vector<Word> pts{Word({1, 2, 3}, 4), Word({4, 4, 1}, 4), Word({2, 2, 2}, 4), Word({3, 1, 4}, 4),
                              Word({1, 1, 2}, 4)};
  const auto bm = vanishing_ideal(pts, 3, 4);
  EXPECT_TRUE(vanishes_on(bm, pts, 4));
  EXPECT_EQ(bm.quotient_basis().size(), pts.size());
  EXPECT_EQ(bm.generators(), vanishing_ideal_by_products(pts, 3, 4).generators());
}

TEST(AssociatedGraded, Examples) {
  const std::vector<Word> pt{Word({1}, 4)};
  const auto tau = associated_graded(vanishing_ideal(pt, 1, 4));
  ASSERT_EQ(tau.size(), 1u);
  EXPECT_EQ(tau.generators()[0], MultiPoly::variable(1, tau.field(), 0));
  const auto x13 = associated_graded(vanishing_ideal(enumerate_locus(LocusSpec::x(1, 3))));
  EXPECT_EQ(x13.generators()[0], MultiPoly::monomial(1, x13.field(), M({3})));
  const auto x22 = associated_graded(vanishing_ideal(enumerate_locus(LocusSpec::x(2, 2))));
  EXPECT_EQ(x22.leading_monomials(), (std::vector<Monomial>{M({0, 2}), M({2, 0})}));
  EXPECT_EQ(x22.quotient_basis().size(), 4u);
}

TEST(Buchberger, Examples) {
  const auto& f = CycloField::get(1);
  const std::vector<MultiPoly> squares{MultiPoly::monomial(2, f, M({2, 0})), MultiPoly::monomial(2, f, M({0, 2}))};
  const auto gb = buchberger(squares, 2, f);
  EXPECT_EQ(gb.generators().size(), 2u);
  EXPECT_EQ(buchberger(gb.generators(), 2, f).generators(), gb.generators());

  const std::vector<MultiPoly> h{complete_homogeneous(2, f, 1), complete_homogeneous(2, f, 2)};
  const auto hb = buchberger(h, 2, f);
  EXPECT_EQ(hilbert_series(hb.quotient_basis()), SparsePoly(1) + SparsePoly::q());

  const auto z32 = buchberger(stated_generators(LocusSpec::z(3, 2), PresentationRecipe::Hrs), 3, CycloField::get(2));
  EXPECT_EQ(z32.quotient_basis().size(), 6u);
}

TEST(Buchberger, PairBudget) {
  const auto& f = CycloField::get(1);
  std::vector<MultiPoly> gens;
  for (int d = 1; d <= 4; ++d) gens.push_back(complete_homogeneous(4, f, d) + MultiPoly::constant(4, f, CycloElement::from_integer(f, d)));
  EXPECT_THROW(buchberger(gens, 4, f, BuchbergerOptions{2}), ResourceError);
}

TEST(HilbertSeries, Examples) {
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 3; ++k) {
      const auto gb = associated_graded(vanishing_ideal(enumerate_locus(LocusSpec::x(n, k))));
      EXPECT_EQ(hilbert_series(gb.quotient_basis()), power(q_integer(k), n));
    }
  const auto y22 = associated_graded(vanishing_ideal(enumerate_locus(LocusSpec::y(2, 2))));
  EXPECT_EQ(hilbert_series(y22.quotient_basis()), SparsePoly(1) + SparsePoly::q());
  const std::vector<Word> pt{Word({1, 2}, 3)};
  EXPECT_EQ(hilbert_series(associated_graded(vanishing_ideal(pt, 2, 3)).quotient_basis()), SparsePoly(1));
}

TEST(HilbertSeries, YLocusFactorization) {
  for (int n = 1; n <= 3; ++n)
    for (int k = n; k <= 5; ++k) {
      SparsePoly expected = 1;
      for (int i = k - n + 1; i <= k; ++i) expected *= q_integer(i);
      const auto gb = associated_graded(vanishing_ideal(enumerate_locus(LocusSpec::y(n, k))));
      EXPECT_EQ(hilbert_series(gb.quotient_basis()), expected) << n << "," << k;
    }
}

TEST(GradedCharacter, Examples) {
  const auto gb = associated_graded(vanishing_ideal(enumerate_locus(LocusSpec::x(2, 2))));
  EXPECT_EQ(graded_character(gb, {0, 1}), SparsePoly(1) + SparsePoly::q() * mpz_class(2) + SparsePoly::q(2));
  EXPECT_EQ(graded_character(gb, {1, 0}), SparsePoly(1) + SparsePoly::q(2));
  const auto z = associated_graded(vanishing_ideal(enumerate_locus(LocusSpec::z(4, 3))));
  EXPECT_EQ(graded_character(z, {0, 1, 2, 3}), hilbert_series(z.quotient_basis()));
}

TEST(GradedFrobenius, Examples) {
  SchurVector x22(2);
  x22.add(P({2}), SparsePoly(1) + SparsePoly::q() + SparsePoly::q(2));
  x22.add(P({1, 1}), SparsePoly::q());
  EXPECT_EQ(graded_frobenius(enumerate_locus(LocusSpec::x(2, 2))), x22);
  SchurVector y22(2);
  y22.add(P({2}), 1);
  y22.add(P({1, 1}), SparsePoly::q());
  EXPECT_EQ(graded_frobenius(enumerate_locus(LocusSpec::y(2, 2))), y22);
  EXPECT_EQ(graded_frobenius(enumerate_locus(LocusSpec::tanisaki(WeakComposition({1, 1}), 2))), y22);
}

TEST(GradedFrobenius, TrivialComponentCountsOrbits) {
  for (auto spec : {LocusSpec::x(3, 3), LocusSpec::y(3, 4), LocusSpec::z(4, 2), LocusSpec::springer(3)}) {
    const auto l = enumerate_locus(spec);
    const auto v = graded_frobenius(l);
    for (auto g : {Subgroup::Sn, Subgroup::Cn, Subgroup::Hr}) {
      if (g == Subgroup::Hr && l.n() % 2 != 0) continue;
      EXPECT_EQ(invariant_hilbert(v, g).value_at_one(), static_cast<long>(orbit_set(l, g).size())) << spec.to_string();
    }
  }
}

TEST(GradedFrobenius, SpringerIsCoinvariantAlgebra) {
  for (int n = 1; n <= 4; ++n) {
    SchurVector expected(n);
    for (const auto& lambda : partitions_of(n)) expected.add(lambda, fake_degree(lambda));
    EXPECT_EQ(graded_frobenius(enumerate_locus(LocusSpec::springer(n))), expected);
  }
}

TEST(VerifyPresentation, Examples) {
  EXPECT_TRUE(verify_presentation(enumerate_locus(LocusSpec::x(2, 3)), PresentationRecipe::Powers));
  EXPECT_TRUE(verify_presentation(enumerate_locus(LocusSpec::y(2, 3)), PresentationRecipe::CompleteHomogeneous));
  EXPECT_TRUE(verify_presentation(enumerate_locus(LocusSpec::z(3, 2)), PresentationRecipe::Hrs));
  EXPECT_THROW(verify_presentation(enumerate_locus(LocusSpec::y(2, 3)), PresentationRecipe::Powers), DomainError);
}

TEST(VerifyPresentation, DetectsWrongPresentation) {
  // The powers recipe describes X_{2,3}, not the smaller Y_{2,3}; reusing its
  // generators must fail the equality check.
  const auto y = enumerate_locus(LocusSpec::y(2, 3));
  const auto graded = associated_graded(vanishing_ideal(y));
  const auto powers = buchberger(stated_generators(LocusSpec::x(2, 3), PresentationRecipe::Powers), 2, CycloField::get(3));
  EXPECT_NE(hilbert_series(powers.quotient_basis()), hilbert_series(graded.quotient_basis()));
}

TEST(GroebnerJson, Dump) {
  const auto gb = vanishing_ideal(enumerate_locus(LocusSpec::x(2, 2)));
  const auto j = groebner_to_json(gb);
  EXPECT_EQ(j["standard_monomials"].size(), 4u);
  EXPECT_EQ(j["generators"].size(), 2u);
  EXPECT_EQ(j["order"], "grevlex");
}
