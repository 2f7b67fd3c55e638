#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support.hpp"

using namespace fuzzylat;

TEST(TNorm, PointValues) {
    const auto luk = builtin("lukasiewicz");
    EXPECT_EQ(luk(0.3, 0.5), 0.0);
    const auto ham = builtin("hamacher");
    EXPECT_NEAR(ham(0.5, 0.5), 1.0 / 3.0, 1e-15);
    EXPECT_EQ(ham(0.0, 0.0), 0.0);
    const auto mn = builtin("minimum");
    for (double a : {0.0, 0.13, 0.5, 0.99, 1.0}) {
        EXPECT_EQ(mn(a, 1.0), a);
        EXPECT_EQ(luk(a, 1.0), a);
        EXPECT_EQ(ham(a, 1.0), a);
        EXPECT_EQ(builtin("algebraic")(a, 1.0), a);
    }
}

TEST(TNorm, UnknownNameThrows) { EXPECT_THROW(builtin("drastic"), std::invalid_argument); }

TEST(TNorm, Statuses) {
    EXPECT_EQ(builtin("minimum").status, ZeroDivisorStatus::NoZeroDivisors);
    EXPECT_EQ(builtin("algebraic").status, ZeroDivisorStatus::NoZeroDivisors);
    EXPECT_EQ(builtin("hamacher").status, ZeroDivisorStatus::NoZeroDivisors);
    EXPECT_EQ(builtin("lukasiewicz").status, ZeroDivisorStatus::HasZeroDivisors);
}

TEST(ExtendN, Examples) {
    EXPECT_EQ(extend_n(builtin("minimum"), {0.2, 0.5, 0.4}), 0.2);
    EXPECT_EQ(extend_n(builtin("algebraic"), {0.5, 0.5, 0.5}), 0.125);
    EXPECT_NEAR(extend_n(builtin("hamacher"), {0.5, 0.5, 0.5}), 0.25, 1e-15);
    EXPECT_EQ(extend_n(builtin("lukasiewicz"), {0.7}), 0.7);
    EXPECT_THROW(extend_n(builtin("minimum"), std::span<const double>()), std::invalid_argument);
}

TEST(ExtendN, HamacherClosedFormDiffers) {
    const auto paper = builtin("hamacher-paper-nary");
    const double g[] = {0.5, 0.5, 0.5};
    EXPECT_NEAR(realize_n(paper, std::span<const double>(g)), 1.0 / 11.0, 1e-15);
    EXPECT_NEAR(realize_n(builtin("hamacher"), std::span<const double>(g)), 0.25, 1e-15);
    // two arguments: closed form and binary op coincide
    const double h[] = {0.3, 0.8};
    EXPECT_NEAR(realize_n(paper, std::span<const double>(h)), paper(0.3, 0.8), 1e-15);
    // the closed form is not even unital for three arguments
    const double ones[] = {1.0, 1.0, 1.0};
    EXPECT_NEAR(realize_n(paper, std::span<const double>(ones)), 0.5, 1e-15);
}

TEST(ExtendN, LukasiewiczClosedForm) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> len(1, 6);
    const auto luk = builtin("lukasiewicz");
    for (int i = 0; i < 1000; ++i) {
        std::vector<double> g(static_cast<std::size_t>(len(rng)));
        double sum = 0;
        for (auto& x : g) sum += (x = u(rng));
        const double closed = std::max(sum - double(g.size() - 1), 0.0);
        EXPECT_NEAR(extend_n(luk, std::span<const double>(g)), closed, 1e-9);
    }
}

TEST(Conformance, BuiltinsPassOnFineGrid) {
    for (const auto* name : {"minimum", "algebraic", "lukasiewicz", "hamacher"}) {
        const auto r = conformance(builtin(name), 0.05);
        EXPECT_TRUE(r.passed()) << name;
    }
}

TEST(Conformance, MinimumIsExact) {
    EXPECT_TRUE(conformance(builtin("minimum"), 0.05, std::optional<double>(0.0)).passed());
}

TEST(Conformance, ProjectionFailsCommutativity) {
    TNorm bad{"projection", [](double a, double) { return a; }, ZeroDivisorStatus::Unknown, "", 0};
    const auto r = conformance(bad, 0.25);
    EXPECT_FALSE(r.passed());
    const auto* c = r.find("commutativity");
    ASSERT_NE(c, nullptr);
    EXPECT_FALSE(c->holds());
    // t(0,1) = 0 but t(1,0) = 1
    const auto g = grid_points(0.25);
    const auto& w = c->witnesses.front().elements;
    EXPECT_NE(bad(g[w[0]], g[w[1]]), bad(g[w[1]], g[w[0]]));
    EXPECT_FALSE(r.find("left-unit")->holds());
}

TEST(Conformance, RejectsBadStep) {
    EXPECT_THROW(conformance(builtin("minimum"), 0.0), std::invalid_argument);
    EXPECT_THROW(conformance(builtin("minimum"), 0.7), std::invalid_argument);
}

TEST(Grid, DecimalPoints) {
    const auto g = grid_points(0.1);
    ASSERT_EQ(g.size(), 11u);
    EXPECT_EQ(g[1], 0.1);
    EXPECT_EQ(g[3], 0.3);
    EXPECT_EQ(g.back(), 1.0);
}

TEST(ZeroDivisor, Scan) {
    const auto w = find_zero_divisor(builtin("lukasiewicz"), 0.1);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->a, 0.1);
    EXPECT_EQ(w->b, 0.1);
    EXPECT_FALSE(find_zero_divisor(builtin("minimum"), 0.1));
    EXPECT_FALSE(find_zero_divisor(builtin("algebraic"), 0.1));
    EXPECT_FALSE(find_zero_divisor(builtin("hamacher"), 0.05));
}

TEST(Nilpotent, Scan) {
    const auto luk = builtin("lukasiewicz");
    EXPECT_EQ(nilpotency_order(luk, 0.5, 64), 2);
    EXPECT_EQ(nilpotency_order(luk, 0.7, 64), 4);  // 1 - n*0.3 <= 0 first at n = 4
    const auto w = find_nilpotent(luk, 0.1, 64);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->a, 0.1);
    EXPECT_EQ(w->n, 2);
    EXPECT_FALSE(find_nilpotent(builtin("minimum"), 0.1, 1000));
    EXPECT_FALSE(find_nilpotent(builtin("algebraic"), 0.1, 64));
    EXPECT_FALSE(find_nilpotent(builtin("hamacher"), 0.1, 64));
    EXPECT_THROW(nilpotency_order(luk, 0.5, 1), std::invalid_argument);
}

// Zero divisors on a grid iff nilpotent elements on the same grid.
TEST(Nilpotent, GridConsistency) {
    for (const auto* name : {"minimum", "algebraic", "lukasiewicz", "hamacher"}) {
        for (double step : {0.5, 0.25, 0.1, 0.05, 0.02}) {
            const auto t = builtin(name);
            EXPECT_EQ(find_zero_divisor(t, step).has_value(), find_nilpotent(t, step, 64).has_value())
                << name << " " << step;
        }
    }
}
