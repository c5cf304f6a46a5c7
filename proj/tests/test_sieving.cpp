#include <gtest/gtest.h>

#include "csp/sieving.hpp"

using namespace csp;

namespace {

SparsePoly poly(Family f, int n, int k) { return sieving_polynomial(f, SievingParams::nk(n, k)); }

const ReportRow& row_at(const Report& rep, int r, int s) {
  for (const auto& row : rep.rows)
    if (row.r == r && row.s == s) return row;
  throw std::out_of_range("row missing");
}

SparsePoly one_plus_qt() { return SparsePoly(1) + SparsePoly::monomial(1, 1, 1); }

}  // namespace

TEST(SievingPolynomial, SmallClosedForms) {
  EXPECT_EQ(poly(Family::WordBicspY, 2, 2), one_plus_qt());
  EXPECT_EQ(poly(Family::WCompCsp, 2, 2), SparsePoly(1) + SparsePoly::q() + SparsePoly::q(2));
  EXPECT_EQ(sieving_polynomial(Family::SpringerBicsp, SievingParams::nk(2, 0)), one_plus_qt());
  EXPECT_EQ(poly(Family::WordBicspZ, 2, 2), one_plus_qt());
  EXPECT_EQ(poly(Family::WCompCsp, 2, 2).to_string(), "1 + q + q^2");
}

TEST(SievingPolynomial, InfeasibleParametersRejected) {
  EXPECT_THROW(poly(Family::WordBicspY, 3, 2), DomainError);
  EXPECT_THROW(poly(Family::CompCsp, 2, 3), DomainError);
  EXPECT_THROW(poly(Family::GraphX, 3, 2), DomainError);
  EXPECT_THROW(sieving_polynomial(Family::TanisakiBicsp, SievingParams::tanisaki(WeakComposition({2, 1}), 1)),
               DomainError);
  EXPECT_THROW(parse_family("no-such-family"), DomainError);
}

TEST(SievingPolynomial, ParseFamilyAcceptsPrefix) {
  EXPECT_EQ(parse_family("thm-word-bicsp-Y"), Family::WordBicspY);
  EXPECT_EQ(parse_family("necklace-Z"), Family::NecklaceZ);
  for (const auto& info : family_table()) EXPECT_EQ(parse_family(info.id), info.family);
}

TEST(SievingPolynomial, EvaluatesToCardinalityAtOne) {
  for (const auto& info : family_table()) {
    if (info.locus == LocusFamily::Tanisaki || info.locus == LocusFamily::Springer) continue;
    for (int n = 1; n <= 4; ++n)
      for (int k = 1; k <= 4; ++k) {
        std::optional<SievingInstance> inst;
        try {
          inst = make_instance(info.family, SievingParams::nk(n, k));
        } catch (const DomainError&) {
          continue;
        }
        EXPECT_EQ(inst->polynomial.value_at_one(), mpz_class(static_cast<unsigned long>(inst->set_size())))
            << info.id << " n=" << n << " k=" << k;
      }
  }
}

TEST(SievingPolynomial, BivariateFormsMatchStatedFrobeniusPairing) {
  // Pairing the stated Schur expansion with f^lambda(t) reproduces the closed forms.
  auto pair_with_fake_degrees = [](const SchurVector& v) {
    SparsePoly s;
    for (const auto& [lambda, c] : v.coeffs()) s += c * fake_degree(lambda).as_t();
    return s;
  };
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 4; ++k) {
      EXPECT_EQ(poly(Family::WordBicspX, n, k), pair_with_fake_degrees(stated_frobenius(LocusSpec::x(n, k))));
      if (n <= k) {
        EXPECT_EQ(poly(Family::WordBicspY, n, k), pair_with_fake_degrees(stated_frobenius(LocusSpec::y(n, k))));
      }
      if (k <= n) {
        EXPECT_EQ(poly(Family::WordBicspZ, n, k), pair_with_fake_degrees(stated_frobenius(LocusSpec::z(n, k))));
      }
    }
}

TEST(SievingPolynomial, OrbitFormsMatchInvariantHilbertOfStatedFrobenius) {
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k <= 4; ++k) {
      const auto x = stated_frobenius(LocusSpec::x(n, k));
      EXPECT_EQ(poly(Family::WCompCsp, n, k), invariant_hilbert(x, Subgroup::Sn));
      EXPECT_EQ(poly(Family::NecklaceX, n, k), invariant_hilbert(x, Subgroup::Cn));
      if (n % 2 == 0) {
        EXPECT_EQ(poly(Family::GraphX, n, k), invariant_hilbert(x, Subgroup::Hr));
      }
    }
}

TEST(VerifyCsp, WeakCompositionsUnderValueRotation) {
  const Report rep = verify(Family::WCompCsp, SievingParams::nk(2, 2));
  EXPECT_TRUE(rep.all_ok);
  ASSERT_EQ(rep.rows.size(), 2u);
  EXPECT_EQ(rep.rows[1].fixed, 1);
  EXPECT_EQ(rep.rows[1].value, mpz_class(1));
}

TEST(VerifyCsp, SubsetsOfThreeChooseTwo) {
  const Report rep = verify(Family::SubsetCsp, SievingParams::nk(2, 3));
  EXPECT_TRUE(rep.all_ok);
  EXPECT_EQ(row_at(rep, 1, 0).fixed, 0);
  EXPECT_EQ(row_at(rep, 1, 0).value, mpz_class(0));
}

TEST(VerifyCsp, IdentityRowIsCardinality) {
  for (Family f : {Family::NecklaceX, Family::GraphY, Family::CompCsp}) {
    const auto inst = make_instance(f, SievingParams::nk(4, 4));
    const Report rep = verify_csp(inst);
    EXPECT_EQ(rep.rows[0].fixed, static_cast<long>(inst.set_size()));
    EXPECT_EQ(rep.rows[0].value, inst.polynomial.value_at_one());
    EXPECT_TRUE(rep.all_ok) << to_string(f);
  }
}

TEST(VerifyCsp, DetectsWrongPolynomial) {
  auto inst = make_instance(Family::WCompCsp, SievingParams::nk(2, 3));
  inst.polynomial = SparsePoly(6);
  const Report rep = verify_csp(inst);
  EXPECT_FALSE(rep.all_ok);
  EXPECT_TRUE(rep.rows[0].ok);
}

TEST(VerifyCsp, RejectsBivariatePolynomial) {
  auto inst = make_instance(Family::WCompCsp, SievingParams::nk(2, 2));
  inst.polynomial = one_plus_qt();
  EXPECT_THROW(verify_csp(inst), DomainError);
}

TEST(VerifyBicsp, YTwoTwoGrid) {
  const Report rep = verify(Family::WordBicspY, SievingParams::nk(2, 2));
  EXPECT_TRUE(rep.all_ok);
  EXPECT_EQ(rep.rows.size(), 4u);
  EXPECT_EQ(row_at(rep, 1, 1).fixed, 2);
  EXPECT_EQ(row_at(rep, 1, 1).value, mpz_class(2));
  EXPECT_EQ(row_at(rep, 0, 0).fixed, 2);
}

TEST(VerifyBicsp, TanisakiOneOne) {
  const auto params = SievingParams::tanisaki(WeakComposition({1, 1}), 1);
  EXPECT_EQ(sieving_polynomial(Family::TanisakiBicsp, params), one_plus_qt());
  const auto inst = make_instance(Family::TanisakiBicsp, params);
  EXPECT_EQ(inst.set_size(), 2u);
  EXPECT_TRUE(verify_bicsp(inst).all_ok);
}

TEST(VerifyBicsp, TanisakiWithProperSymmetry) {
  const Report rep = verify(Family::TanisakiBicsp, SievingParams::tanisaki(WeakComposition({2, 1, 2, 1}), 2));
  EXPECT_TRUE(rep.all_ok);
  EXPECT_EQ(rep.rows.size(), 2u * 6u);
  bool noted = false;
  for (const auto& note : rep.notes) noted |= note.find("adds a = 2") != std::string::npos;
  EXPECT_TRUE(noted);
}

TEST(VerifyBicsp, WordFamiliesSmallGrids) {
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 3; ++k) {
      EXPECT_TRUE(verify(Family::WordBicspX, SievingParams::nk(n, k)).all_ok) << n << "," << k;
      if (n <= k) {
        EXPECT_TRUE(verify(Family::WordBicspY, SievingParams::nk(n, k)).all_ok) << n << "," << k;
      }
      if (k <= n) {
        EXPECT_TRUE(verify(Family::WordBicspZ, SievingParams::nk(n, k)).all_ok) << n << "," << k;
      }
    }
}

TEST(VerifyBicsp, SpringerFour) {
  const Report rep = verify(Family::SpringerBicsp, SievingParams::nk(4, 0));
  EXPECT_TRUE(rep.all_ok);
  EXPECT_EQ(rep.rows.size(), 16u);
  EXPECT_EQ(rep.rows[0].fixed, 24);
}

TEST(VerifyBicsp, RegularElementFromShorterCycle) {
  // t bound to an (n-1)-cycle on the first n-1 positions, a regular element of order n-1.
  for (int n = 3; n <= 4; ++n)
    for (int k = 2; k <= 3; ++k) {
      auto inst = make_instance(Family::WordBicspX, SievingParams::nk(n, k));
      Permutation sigma(n);
      for (int i = 0; i < n - 1; ++i) sigma[i] = (i + 1) % (n - 1);
      sigma[n - 1] = n - 1;
      inst.actions[1] = BoundAction{Action::permutation(sigma), n - 1, "t", "(n-1)-cycle on positions"};
      const Report rep = verify_bicsp(inst);
      EXPECT_TRUE(rep.all_ok) << "n=" << n << " k=" << k;
      EXPECT_EQ(rep.rows.size(), static_cast<std::size_t>(k * (n - 1)));
    }
}

TEST(VerifyBicsp, NonCommutingActionsRejected) {
  auto inst = make_instance(Family::WordBicspX, SievingParams::nk(3, 2));
  inst.actions[0] = BoundAction{Action::permutation({1, 0, 2}), 2, "q", "transposition"};
  EXPECT_THROW(verify_bicsp(inst), DomainError);
}

TEST(Report, JsonSchema) {
  const Report rep = verify(Family::WordBicspY, SievingParams::nk(2, 2));
  const auto j = rep.to_json();
  for (const char* key : {"family", "params", "binding", "rows", "all_ok", "notes"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["family"], "word-bicsp-Y");
  EXPECT_EQ(j["params"]["n"], 2);
  ASSERT_EQ(j["rows"].size(), 4u);
  for (const auto& row : j["rows"])
    for (const char* key : {"r", "s", "fixed", "value", "ok"}) EXPECT_TRUE(row.contains(key)) << key;
  EXPECT_EQ(nlohmann::json::parse(j.dump()), j);
  EXPECT_EQ(rep.to_json().dump(), verify(Family::WordBicspY, SievingParams::nk(2, 2)).to_json().dump());
}

TEST(Report, TextFormats) {
  const Report rep = verify(Family::WCompCsp, SievingParams::nk(2, 2));
  EXPECT_EQ(rep.to_csv().substr(0, 18), "r,s,fixed,value,ok");
  EXPECT_NE(rep.to_latex().find("\\begin{tabular}"), std::string::npos);
  EXPECT_NE(rep.to_pretty().find("all checks passed"), std::string::npos);
}

TEST(Oracle, SpecExamples) {
  EXPECT_EQ(oracle_csp_poly(enumerate_locus(LocusSpec::x(2, 2)), Subgroup::Sn),
            SparsePoly(1) + SparsePoly::q() + SparsePoly::q(2));
  EXPECT_EQ(oracle_csp_poly(enumerate_locus(LocusSpec::y(2, 2)), Subgroup::Hr), SparsePoly(1));
  EXPECT_EQ(oracle_csp_poly(enumerate_locus(LocusSpec::z(3, 2)), Subgroup::Sn), SparsePoly(1) + SparsePoly::q());
}

TEST(Oracle, MatchesClosedFormsForSmallOrbitFamilies) {
  for (const auto& info : family_table()) {
    if (!info.group || info.locus == LocusFamily::Tanisaki) continue;
    for (int n = 1; n <= 3; ++n)
      for (int k = 1; k <= 3; ++k) {
        if (info.locus == LocusFamily::Y && n > k) continue;
        if (info.locus == LocusFamily::Z && k > n) continue;
        if (info.group == Subgroup::Hr && n % 2) continue;
        const auto params = SievingParams::nk(n, k);
        EXPECT_EQ(oracle_csp_poly(enumerate_locus(locus_spec(info.family, params)), *info.group),
                  sieving_polynomial(info.family, params))
            << info.id << " n=" << n << " k=" << k;
      }
  }
}

TEST(Oracle, TanisakiExamples) {
  const auto params = SievingParams::tanisaki(WeakComposition({2, 0, 2, 0}), 2);
  const Locus l = enumerate_locus(locus_spec(Family::TanisakiBicsp, params));
  EXPECT_EQ(oracle_csp_poly(l, Subgroup::Sn), sieving_polynomial(Family::TanisakiTrivial, params));
  EXPECT_EQ(oracle_csp_poly(l, Subgroup::Cn), sieving_polynomial(Family::TanisakiNecklace, params));
  EXPECT_EQ(oracle_csp_poly(l, Subgroup::Hr), sieving_polynomial(Family::TanisakiGraph, params));
  for (Family f : {Family::TanisakiTrivial, Family::TanisakiNecklace, Family::TanisakiGraph})
    EXPECT_TRUE(verify(f, params).all_ok) << to_string(f);
}

TEST(Oracle, EmptyLocusGivesZero) {
  EXPECT_TRUE(oracle_csp_poly(enumerate_locus(LocusSpec::y(3, 2)), Subgroup::Sn).is_zero());
}
