#include <gtest/gtest.h>

#include "csp/kostka_foulkes.hpp"
#include "csp/partition.hpp"
#include "csp/tableau.hpp"
#include "csp/word.hpp"

using namespace csp;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

std::vector<std::vector<int>> all_words(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(n, 1);
  while (true) {
    out.push_back(w);
    int i = n - 1;
    while (i >= 0 && w[i] == k) w[i--] = 1;
    if (i < 0) break;
    ++w[i];
  }
  return out;
}

}  // namespace

TEST(Partition, InvariantsAndStatistics) {
  EXPECT_THROW(P({1, 2}), DomainError);
  EXPECT_THROW(P({2, 0}), DomainError);
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(P({n}).b(), 0);
    EXPECT_EQ(Partition(std::vector<int>(n, 1)).b(), n * (n - 1) / 2);
  }
  EXPECT_EQ(P({3, 1}).conjugate(), P({2, 1, 1}));
  EXPECT_EQ(WeakComposition({0, 2, 0, 1}).sorted(), P({2, 1}));
}

TEST(Partition, Counts) {
  const int p[] = {1, 1, 2, 3, 5, 7, 11, 15};
  for (int n = 0; n < 8; ++n) EXPECT_EQ(static_cast<int>(partitions_of(n).size()), p[n]);
  EXPECT_EQ(partitions_of(4).front(), P({4}));
  EXPECT_EQ(partitions_in_box(2, 2).size(), 6u);
  EXPECT_EQ(weak_compositions(3, 3).size(), 10u);
}

TEST(MOf, Examples) {
  EXPECT_EQ(m_of(Partition{}, 3, 2), P({3}));
  EXPECT_EQ(m_of(P({1}), 2, 2), P({1, 1}));
  EXPECT_EQ(m_of(P({1, 1}), 2, 2), P({2}));
  EXPECT_THROW(m_of(P({2}), 2, 2), DomainError);
  EXPECT_THROW(m_of(P({1, 1, 1}), 2, 3), DomainError);
}

TEST(Word, RejectsOutOfRangeLetters) {
  EXPECT_THROW(Word({1, 3}, 2), DomainError);
  EXPECT_EQ(Word({1, 2, 1}, 3).content(), (std::vector<int>{2, 1, 0}));
}

TEST(MajDes, Examples) {
  const Tableau t({{1, 2, 5}, {3, 6}, {4, 7}});
  EXPECT_EQ(maj_des(t), (MajDes{16, 4}));
  const std::vector<int> inc{1, 2, 3}, w{3, 1, 2};
  EXPECT_EQ(maj_des(inc), (MajDes{0, 0}));
  EXPECT_EQ(maj_des(w), (MajDes{1, 1}));
  EXPECT_THROW(maj_des(Tableau({{1, 1}})), DomainError);
}

TEST(Syt, Counts) {
  EXPECT_EQ(generate_syt(P({5})).size(), 1u);
  EXPECT_EQ(generate_syt(P({2, 1})).size(), 2u);
  EXPECT_EQ(generate_syt(P({2, 2})).size(), 2u);
  EXPECT_EQ(generate_syt(P({3, 2, 1})).size(), 16u);
  for (const auto& t : generate_syt(P({3, 2, 1}))) EXPECT_TRUE(t.is_standard());
}

TEST(Kostka, Examples) {
  EXPECT_EQ(kostka_number(P({4}), WeakComposition({1, 0, 3})), 1);
  EXPECT_EQ(kostka_number(P({2, 1}), WeakComposition({1, 1, 1})), 2);
  EXPECT_GE(kostka_number(P({3, 2, 2}), WeakComposition({2, 0, 2, 2, 1})), 1);
  EXPECT_THROW(kostka_number(P({2, 1}), WeakComposition({1, 1})), DomainError);
  for (const auto& t : generate_ssyt(P({3, 2, 2}), std::vector<int>{2, 0, 2, 2, 1})) {
    EXPECT_TRUE(t.is_semistandard());
    EXPECT_EQ(t.content(), (std::vector<int>{2, 0, 2, 2, 1}));
  }
}

TEST(Kostka, ContentOrderDoesNotMatter) {
  for (const auto& lambda : partitions_of(5))
    EXPECT_EQ(kostka_number(lambda, WeakComposition({2, 0, 1, 2})), kostka_number(lambda, WeakComposition({2, 2, 1})));
}

TEST(FakeDegree, Examples) {
  EXPECT_EQ(fake_degree(P({4})), SparsePoly(1));
  EXPECT_EQ(fake_degree(P({1, 1, 1, 1})), SparsePoly::q(6));
  EXPECT_EQ(fake_degree(P({2, 1})), SparsePoly::q(1) + SparsePoly::q(2));
}

TEST(FakeDegree, HookFormulaMatchesMajEnumeration) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& lambda : partitions_of(n)) EXPECT_EQ(fake_degree(lambda), fake_degree_by_maj(lambda)) << lambda.to_string();
}

TEST(Charge, SmallWords) {
  EXPECT_EQ(charge(std::vector<int>{3, 1, 2}), 2);
  EXPECT_EQ(charge(std::vector<int>{2, 1, 3}), 1);
  EXPECT_EQ(charge(std::vector<int>{1, 2, 3}), 3);
  EXPECT_EQ(charge(std::vector<int>{3, 2, 1}), 0);
  EXPECT_THROW(charge(std::vector<int>{2, 2, 1}), DomainError);
}

TEST(KostkaFoulkes, Examples) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& mu : partitions_of(n)) EXPECT_EQ(kostka_foulkes(P({n}), mu), SparsePoly(1)) << mu.to_string();
  EXPECT_EQ(kostka_foulkes(P({1, 1}), P({1, 1})), SparsePoly::q());
  EXPECT_EQ(kostka_foulkes(P({2, 1}), P({2, 1})), SparsePoly::q());
  EXPECT_EQ(kostka_foulkes(P({3}), P({2, 1})), SparsePoly(1));
  EXPECT_THROW(kostka_foulkes(P({2}), P({1, 1, 1})), DomainError);
}

TEST(KostkaFoulkes, StandardContentGivesFakeDegree) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& lambda : partitions_of(n))
      EXPECT_EQ(kostka_foulkes(lambda, Partition(std::vector<int>(n, 1))), fake_degree(lambda)) << lambda.to_string();
}

TEST(KostkaFoulkes, SpecializesToKostkaNumbers) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n))
      for (const auto& mu : partitions_of(n)) {
        const auto kf = kostka_foulkes(lambda, mu);
        EXPECT_TRUE(kf.has_nonnegative_coefficients());
        EXPECT_EQ(kf.value_at_one(), kostka_number(lambda, WeakComposition(mu.parts())));
      }
}

TEST(KostkaFoulkes, DiagonalIsPowerOfB) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : partitions_of(n)) EXPECT_EQ(kostka_foulkes(mu, mu), SparsePoly::q(mu.b())) << mu.to_string();
}

TEST(Rsk, Examples) {
  const auto [p0, q0] = rsk(std::vector<int>{});
  EXPECT_EQ(p0.size(), 0);
  EXPECT_EQ(q0.size(), 0);
  const auto [p1, q1] = rsk(std::vector<int>{1, 1, 1, 1});
  EXPECT_EQ(p1, Tableau({{1, 1, 1, 1}}));
  EXPECT_EQ(q1, Tableau({{1, 2, 3, 4}}));
}

TEST(Rsk, StandardContentMajDistribution) {
  SparsePoly lhs, rhs;
  std::vector<int> w{1, 2, 3};
  do lhs += SparsePoly::q(maj_des(w).maj);
  while (std::next_permutation(w.begin(), w.end()));
  for (const auto& lambda : partitions_of(3))
    rhs += fake_degree(lambda) * mpz_class(kostka_number(lambda, WeakComposition({1, 1, 1})));
  EXPECT_EQ(lhs, rhs);
}

TEST(Rsk, PreservesShapeContentAndMaj) {
  for (int n = 0; n <= 5; ++n)
    for (int k = 1; k <= 3; ++k)
      for (const auto& w : all_words(n, k)) {
        const auto [p, q] = rsk(w);
        ASSERT_TRUE(p.is_semistandard());
        ASSERT_TRUE(q.is_standard());
        ASSERT_EQ(p.shape(), q.shape());
        auto content = p.content();
        std::vector<int> wc(content.size(), 0);
        for (int x : w) ++wc[x - 1];
        ASSERT_EQ(content, wc);
        ASSERT_EQ(maj_des(w).maj, maj_des(q).maj);
      }
}

TEST(Rsk, WordCountsMatchKostkaTimesSyt) {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= 3; ++k)
      for (const auto& mu : weak_compositions(n, k)) {
        std::vector<int> w;
        for (int i = 0; i < k; ++i) w.insert(w.end(), mu[i], i + 1);
        SparsePoly words;
        do words += SparsePoly::q(maj_des(w).maj);
        while (std::next_permutation(w.begin(), w.end()));
        SparsePoly tableaux;
        for (const auto& lambda : partitions_of(n))
          tableaux += fake_degree(lambda) * mpz_class(kostka_number(lambda, mu));
        EXPECT_EQ(words, tableaux) << mu.to_string();
      }
}

TEST(CountMajDivisible, Examples) {
  EXPECT_EQ(count_maj_divisible(P({2}), 2), 1);
  EXPECT_EQ(count_maj_divisible(P({1, 1}), 2), 0);
  EXPECT_EQ(count_maj_divisible(WeakComposition({1, 1}), 2), 1);
  EXPECT_THROW(count_maj_divisible(P({2, 1}), 2), DomainError);
  EXPECT_THROW(count_maj_divisible(WeakComposition({1, 1}), 3), DomainError);
}

TEST(CountMajDivisible, KostkaTransport) {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= 4; ++k)
      for (const auto& mu : partitions_in_box(n, k - 1)) {
        const Partition m = m_of(mu, n, k);
        long lhs = 0;
        for (const auto& lambda : partitions_of(n))
          lhs += kostka_number(lambda, WeakComposition(m.parts())) * count_maj_divisible(lambda, n);
        EXPECT_EQ(lhs, count_maj_divisible(WeakComposition(m.parts()), n));
      }
}
