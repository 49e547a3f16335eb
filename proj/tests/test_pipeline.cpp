#include <cmath>

#include <gtest/gtest.h>

#include <ctriples/pipeline.hpp>

using namespace ctriples;

namespace {

std::vector<BigInt> ints(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

// Oracle for pipeline B at small n: sum over classes of S_n of k(Cent(rep)),
// with k counted by orbit enumeration on the actual centralizer subgroup.
BigInt class_sum_by_enumeration(std::size_t n) {
    const auto g = enumerate_symmetric(n);
    const auto cc = conjugacy_classes(g);
    BigInt total = 0;
    for (auto rep : cc.representatives) total += conjugacy_classes(centralizer(g[rep], g)).count();
    return total;
}

}  // namespace

TEST(CoeffsProduct, Examples) {
    EXPECT_EQ(coeffs_product(0), IntSeries::one(0));
    EXPECT_EQ(coeffs_product(4).coeffs(), ints({1, 1, 4, 8, 21}));
    EXPECT_EQ(coeffs_product(1)[1], 1);
}

TEST(CoeffsProduct, EulerTransformRejectsShortTable) {
    const std::vector<std::uint64_t> sig{0, 1, 3};
    EXPECT_THROW(euler_transform(sig, 3), DomainError);
    EXPECT_EQ(euler_transform(sig, 2).coeffs(), ints({1, 1, 4}));
}

TEST(CoeffsClasses, Examples) {
    const auto b = coeffs_classes(4);
    EXPECT_EQ(b[0], 1);
    EXPECT_EQ(b[2], 4);   // k(S_2) + k(Z_2)
    EXPECT_EQ(b[4], 21);  // 5 + 4 + 5 + 3 + 4
}

TEST(CoeffsClasses, MatchesCentralizerClassEnumeration) {
    const auto b = coeffs_classes(6);
    for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(b[n], class_sum_by_enumeration(n)) << n;
}

TEST(CoeffsClasses, ProductFormAgrees) {
    for (std::size_t order : {0, 1, 2, 7, 30}) EXPECT_EQ(coeffs_classes(order), coeffs_classes_product_form(order));
}

TEST(CoeffsClasses, EqualsProductSide) {
    for (std::size_t order : {0, 1, 5, 25}) EXPECT_EQ(coeffs_classes(order), coeffs_product(order));
}

TEST(CoeffsBrute, Examples) {
    const auto c = coeffs_brute(5);
    ASSERT_EQ(c.size(), 6U);
    EXPECT_EQ(c[2], 4);
    EXPECT_EQ(c[3], 8);
    EXPECT_EQ(c[4], 21);
    EXPECT_EQ(triples_naive(3), 48);
    EXPECT_EQ(triples_naive(4), 504);
    EXPECT_THROW(coeffs_brute(9), ResourceLimitError);
}

TEST(CoeffsBrute, MatchesProductUpTo6) {
    const auto a = coeffs_product(6);
    const auto c = coeffs_brute(6);
    for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(a[n], c[n]) << n;
}

TEST(Coefficients, PositiveIntegers) {
    for (const auto& x : coeffs_product(60).coeffs()) EXPECT_GT(x, 0);
}

TEST(VerifyIdentity, SmallOrders) {
    const auto r = verify_identity(4, 4);
    EXPECT_TRUE(r.overall);
    EXPECT_EQ(r.coeffs_product, ints({1, 1, 4, 8, 21}));
    EXPECT_EQ(r.coeffs_classes, ints({1, 1, 4, 8, 21}));
    EXPECT_EQ(r.coeffs_brute, ints({1, 1, 4, 8, 21}));
    EXPECT_FALSE(r.first_disagreement());

    const auto r0 = verify_identity(0, 0);
    EXPECT_TRUE(r0.overall);
    EXPECT_EQ(r0.coeffs_product, ints({1}));
    EXPECT_EQ(r0.agreements.size(), 1U);
}

TEST(VerifyIdentity, CorruptedSigmaIsReportedNotThrown) {
    auto sig = numtheory::sigma_table(10);
    sig[3] += 1;
    const auto r = verify_identity(10, 4, {}, sig);
    EXPECT_FALSE(r.overall);
    ASSERT_TRUE(r.first_disagreement());
    EXPECT_EQ(*r.first_disagreement(), 3U);
    EXPECT_TRUE(r.agreements[0] && r.agreements[1] && r.agreements[2]);
}

TEST(VerifyIdentity, BruteMaxAboveOrder) { EXPECT_THROW(verify_identity(3, 4), DomainError); }

TEST(VerifyLog, Examples) {
    const auto check = verify_log(40);
    EXPECT_TRUE(check.ok);
    EXPECT_FALSE(check.first_mismatch);
    EXPECT_EQ(check.log_series[1], Rational(1));
    EXPECT_EQ(check.log_series[2], Rational(7, 2));
    EXPECT_THROW(verify_log(0), DomainError);
}

TEST(GrowthReport, Examples) {
    const auto rows = growth_report(60);
    ASSERT_EQ(rows.size(), 60U);
    EXPECT_EQ(rows[0].n, 1U);
    EXPECT_DOUBLE_EQ(rows[0].nth_root, 1.0);
    EXPECT_EQ(rows[3].coeff, 21);
    EXPECT_NEAR(rows[3].nth_root, std::pow(21.0, 0.25), 1e-12);
    EXPECT_NEAR(rows[3].nth_root, 2.14, 0.005);
    EXPECT_THROW(growth_report(0), DomainError);
}

TEST(WreathFamily, BoundedByOrderCap) {
    for (auto [t, m] : wreath_family(6, 500)) EXPECT_LE(wreath_order(t, m), 500);
    const auto fam = wreath_family(2, 48);
    // W(1,0..4) and W(2,0..3)
    EXPECT_EQ(fam.size(), 9U);
}
