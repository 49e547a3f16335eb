#include <random>

#include <gtest/gtest.h>

#include <ctriples/pipeline.hpp>
#include <ctriples/wreath.hpp>

using namespace ctriples;

namespace {

using Coords = std::vector<WreathElement::residue_type>;

WreathElement elem(std::size_t t, Coords a, Permutation e) { return WreathElement(t, std::move(a), std::move(e)); }

std::size_t element_order(const WreathElement& x) {
    const auto id = WreathElement::identity(x.modulus(), x.degree());
    std::size_t k = 1;
    for (auto y = x; y != id; y = y * x) ++k;
    return k;
}

void check_group_laws_exhaustive(std::size_t t, std::size_t m) {
    const auto g = enumerate_wreath(t, m);
    const auto id = WreathElement::identity(t, m);
    for (const auto& x : g.elements()) {
        ASSERT_EQ(x * id, x);
        ASSERT_EQ(id * x, x);
        ASSERT_EQ(x * x.inverse(), id);
        ASSERT_EQ(x.inverse() * x, id);
        for (const auto& y : g.elements()) {
            ASSERT_EQ(commutes(x, y), x * y == y * x);
            for (const auto& z : g.elements()) ASSERT_EQ((x * y) * z, x * (y * z));
        }
    }
}

}  // namespace

TEST(WreathMul, Examples) {
    const Permutation swap({1, 0});
    const auto x = elem(2, {1, 0}, swap);
    EXPECT_EQ(x * WreathElement::identity(2, 2), x);
    EXPECT_EQ(x * x.inverse(), WreathElement::identity(2, 2));
    EXPECT_EQ(x * x, elem(2, {1, 1}, Permutation::identity(2)));
    EXPECT_EQ(element_order(x), 4U);
}

TEST(WreathMul, MismatchedParameters) {
    EXPECT_THROW(WreathElement::identity(2, 2) * WreathElement::identity(3, 2), DomainError);
    EXPECT_THROW(WreathElement::identity(2, 2) * WreathElement::identity(2, 3), DomainError);
    EXPECT_THROW(elem(2, {2, 0}, Permutation::identity(2)), DomainError);
    EXPECT_THROW(elem(2, {0}, Permutation::identity(2)), DomainError);
    EXPECT_THROW(elem(0, {}, Permutation::identity(0)), DomainError);
}

TEST(WreathMul, GroupLawsExhaustive) {
    check_group_laws_exhaustive(2, 2);
    check_group_laws_exhaustive(3, 2);
    check_group_laws_exhaustive(2, 3);
}

TEST(WreathMul, GroupLawsRandomW43) {
    const auto g = enumerate_wreath(4, 3);
    std::mt19937_64 rng(4321);
    std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
    const auto id = WreathElement::identity(4, 3);
    for (int i = 0; i < 1000; ++i) {
        const auto& x = g[pick(rng)];
        const auto& y = g[pick(rng)];
        const auto& z = g[pick(rng)];
        ASSERT_EQ((x * y) * z, x * (y * z));
        ASSERT_EQ(x * x.inverse(), id);
        ASSERT_EQ(commutes(x, y), x * y == y * x);
    }
}

TEST(WreathMul, TrivialModulusIsSymmetricGroup) {
    const auto w = enumerate_wreath(1, 3);
    ASSERT_EQ(w.order(), 6U);
    for (const auto& x : w.elements())
        for (const auto& y : w.elements()) EXPECT_EQ((x * y).perm(), x.perm() * y.perm());
}

TEST(CycleSumInvariants, Examples) {
    EXPECT_EQ(cycle_sum_invariants(WreathElement::identity(3, 2)),
              (std::vector<CycleSumInvariant>{{0, 1}, {0, 1}}));
    EXPECT_EQ(cycle_sum_invariants(elem(3, {1, 2, 0}, Permutation({1, 0, 2}))),
              (std::vector<CycleSumInvariant>{{0, 1}, {0, 2}}));
    EXPECT_EQ(cycle_sum_invariants(elem(4, {1}, Permutation::identity(1))), (std::vector<CycleSumInvariant>{{1, 1}}));
}

TEST(ConjugateByInvariants, Examples) {
    const auto g = enumerate_wreath(2, 2);
    for (const auto& x : g.elements()) EXPECT_TRUE(conjugate_by_invariants(x, x));

    const auto id = WreathElement::identity(3, 3);
    const auto w33 = enumerate_wreath(3, 3);
    for (const auto& x : w33.elements()) {
        std::size_t sum = 0;
        for (auto a : x.coords()) sum += a;
        if (sum % 3 != 0) {
            EXPECT_FALSE(conjugate_by_invariants(id, x));
        }
    }

    const auto a = elem(2, {1, 0}, Permutation::identity(2));
    const auto b = elem(2, {0, 1}, Permutation::identity(2));
    EXPECT_TRUE(conjugate_by_invariants(a, b));
    const auto cc = conjugacy_classes(g);
    EXPECT_EQ(cc.class_of[*g.index_of(a)], cc.class_of[*g.index_of(b)]);

    EXPECT_THROW(conjugate_by_invariants(a, WreathElement::identity(3, 2)), DomainError);
}

TEST(ConjugateByInvariants, InvariantUnderConjugation) {
    const auto g = enumerate_wreath(3, 3);
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
    for (int i = 0; i < 500; ++i) {
        const auto& x = g[pick(rng)];
        const auto& y = g[pick(rng)];
        ASSERT_EQ(cycle_sum_invariants(y * x * y.inverse()), cycle_sum_invariants(x));
    }
}

TEST(EnumerateWreath, Sizes) {
    EXPECT_EQ(enumerate_wreath(2, 2).order(), 8U);
    EXPECT_EQ(enumerate_wreath(1, 3).order(), 6U);
    const auto c3 = enumerate_wreath(3, 1);
    EXPECT_EQ(c3.order(), 3U);
    const auto gen = elem(3, {1}, Permutation::identity(1));
    EXPECT_EQ(element_order(gen), 3U);
    EXPECT_EQ(enumerate_wreath(5, 0).order(), 1U);
    EXPECT_TRUE(enumerate_wreath(2, 3).is_closed());
}

TEST(EnumerateWreath, CapRefusal) {
    EXPECT_THROW(enumerate_wreath(2, 6), ResourceLimitError);  // 46080
    Caps caps;
    caps.wreath = 7;
    EXPECT_THROW(enumerate_wreath(2, 2, caps), ResourceLimitError);
    EXPECT_THROW(enumerate_wreath(0, 2), DomainError);
}

TEST(ConjugacyClassesBrute, Examples) {
    EXPECT_EQ(conjugacy_classes_brute(2, 2).count(), 5U);
    EXPECT_EQ(conjugacy_classes_brute(1, 4).count(), 5U);
    EXPECT_EQ(conjugacy_classes_brute(4, 1).count(), 4U);
}

TEST(KWreath, Examples) {
    for (std::size_t t = 1; t <= 9; ++t) EXPECT_EQ(k_wreath(t, 0), 1);
    for (std::size_t m = 0; m <= 20; ++m) EXPECT_EQ(k_wreath(1, m), partition_count(m));
    EXPECT_EQ(k_wreath(2, 2), 5);
    EXPECT_EQ(k_wreath(1, 6), 11);
    EXPECT_THROW(k_wreath(0, 1), DomainError);
}

TEST(KWreath, SubstitutedFormAgrees) {
    for (std::size_t t = 1; t <= 12; ++t)
        for (std::size_t m = 0; t * m <= 48; ++m) ASSERT_EQ(k_wreath_substituted(t, m), k_wreath(t, m)) << t << "," << m;
}

TEST(KWreath, TableMatchesDirect) {
    const WreathClassCounts table(30);
    for (std::size_t t = 1; t <= 30; ++t)
        for (std::size_t m = 0; t * m <= 30; ++m) ASSERT_EQ(table(t, m), k_wreath(t, m));
    EXPECT_THROW(table(4, 8), DomainError);
}

TEST(ClassLabels, EnumerationExamples) {
    EXPECT_EQ(enumerate_class_labels(1, 3).size(), 3U);
    const auto l21 = enumerate_class_labels(2, 1);
    ASSERT_EQ(l21.size(), 2U);
    EXPECT_EQ(l21[0], (WreathClassLabel{{Partition({1}), Partition()}}));
    EXPECT_EQ(l21[1], (WreathClassLabel{{Partition(), Partition({1})}}));
    EXPECT_EQ(enumerate_class_labels(2, 2).size(), 5U);
}

TEST(ClassLabels, CountAndValidity) {
    for (std::size_t t = 1; t <= 5; ++t) {
        for (std::size_t m = 0; m <= 6; ++m) {
            const auto labels = enumerate_class_labels(t, m);
            EXPECT_EQ(BigInt(labels.size()), k_wreath(t, m)) << t << "," << m;
            std::set<WreathClassLabel> distinct(labels.begin(), labels.end());
            EXPECT_EQ(distinct.size(), labels.size());
            for (const auto& l : labels) {
                EXPECT_EQ(l.modulus(), t);
                EXPECT_EQ(l.total_size(), m);
            }
        }
    }
}

TEST(ClassLabelOf, Examples) {
    EXPECT_EQ(class_label_of(WreathElement::identity(2, 3)), (WreathClassLabel{{Partition({1, 1, 1}), Partition()}}));
    EXPECT_EQ(class_label_of(elem(2, {1, 0}, Permutation::identity(2))),
              (WreathClassLabel{{Partition({1}), Partition({1})}}));
    // a 4-cycle with coordinate sum 2 mod 3
    const auto x = elem(3, {2, 1, 0, 2}, Permutation::from_cycles(4, {{0, 2, 1, 3}}));
    EXPECT_EQ(class_label_of(x), (WreathClassLabel{{Partition(), Partition(), Partition({4})}}));
}

TEST(WreathConjugacySuite, SmallFamily) {
    const auto report = check_wreath_conjugacy(4, 400);
    EXPECT_GT(report.checks.size(), 10U);
    for (const auto& c : report.checks) EXPECT_TRUE(c.ok) << c.group << ": " << c.detail;
}

TEST(CommutingPairsSuite, SmallWreathFamily) {
    const auto report = check_commuting_pairs(4, 4, 400);
    for (const auto& c : report.checks) EXPECT_TRUE(c.ok) << c.group << ": " << c.detail;
}
