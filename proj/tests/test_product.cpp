#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace fuzzylat;
using testing_support::chain_lattice;
using testing_support::data;
using testing_support::square_lattice;

namespace {

ProductFrame table_product(const std::string& tnorm) {
    return direct_product<double>({chain_lattice(), square_lattice()}, builtin(tnorm));
}

}  // namespace

TEST(Product, MinimumReproducesTableTwo) {
    const auto p = table_product("minimum");
    const auto golden = io::load(data("table2.json"));
    EXPECT_EQ(p.frame.elements(), golden.elements());
    EXPECT_TRUE(p.frame.mu() == golden.mu());
    EXPECT_EQ(p.frame(p.frame.index_of("w1x2"), p.frame.index_of("x1z2")), 0.1);
}

TEST(Product, LukasiewiczReproducesTableThree) {
    const auto p = table_product("lukasiewicz");
    const auto golden = io::load(data("table3.json"));
    EXPECT_EQ(p.frame.elements(), golden.elements());
    EXPECT_TRUE(io::compare(p.frame, golden, 1e-9).passed());
    EXPECT_NEAR(p.frame(p.frame.index_of("w1w2"), p.frame.index_of("z1z2")), 0.7, 1e-12);
}

TEST(Product, CarrierOrderAndIndexMap) {
    const auto p = table_product("minimum");
    EXPECT_EQ(p.frame.label(0), "w1w2");
    EXPECT_EQ(p.frame.label(1), "w1x2");
    EXPECT_EQ(p.frame.label(4), "x1w2");
    for (Index q = 0; q < p.frame.size(); ++q) {
        const Index c[] = {p.index_map(q, 0), p.index_map(q, 1)};
        EXPECT_EQ(p.encode(c), q);
    }
}

TEST(Product, Separator) {
    ProductOptions opts;
    opts.separator = "|";
    const auto p = direct_product<double>({chain_lattice(), square_lattice()}, builtin("minimum"), opts);
    EXPECT_EQ(p.frame.label(5), "x1|x2");
}

TEST(Product, CollidingLabelsFallBack) {
    // "a"+"bc" and "ab"+"c" collide without a separator
    const auto f1 = testing_support::frame({"a", "ab"}, {{1, 0.5}, {0, 1}});
    const auto f2 = testing_support::frame({"bc", "c"}, {{1, 0.5}, {0, 1}});
    const auto p = direct_product<double>({certify_or_throw(f1), certify_or_throw(f2)},
                                          builtin("minimum"));
    EXPECT_EQ(p.separator, ",");
    EXPECT_FALSE(p.notes.empty());
    EXPECT_EQ(p.frame.label(1), "a,c");
}

TEST(Product, SizeCap) {
    ProductOptions opts;
    opts.max_elements = 15;
    EXPECT_THROW(direct_product<double>({chain_lattice(), square_lattice()}, builtin("minimum"), opts),
                 ProductSizeError);
    EXPECT_THROW(direct_product<double>({}, builtin("minimum")), std::invalid_argument);
}

TEST(CertifyProduct, TableTwo) {
    const auto r = certify_product(table_product("minimum"));
    ASSERT_TRUE(certified(r));
    const auto& l = std::get<BoundedLattice>(r);
    EXPECT_EQ(l.label(l.bottom()), "w1w2");
    EXPECT_EQ(l.label(l.top()), "z1z2");
    const auto& f = l.frame();
    EXPECT_EQ(l.label(l.meet(f.index_of("x1x2"), f.index_of("y1y2"))), "x1w2");
}

TEST(CertifyProduct, TableThreeNotPoset) {
    const auto r = certify_product(table_product("lukasiewicz"));
    ASSERT_FALSE(certified(r));
    EXPECT_EQ(std::get<LatticeCertError>(r).kind, LatticeCertError::Kind::NotPoset);
}

TEST(CertifyProduct, AlgebraicAndHamacher) {
    for (const auto* name : {"algebraic", "hamacher"}) {
        const auto r = certify_product(table_product(name));
        EXPECT_TRUE(certified(r)) << name;
    }
}

TEST(Witness, Intransitivity) {
    const auto w = witness_intransitivity(table_product("lukasiewicz"));
    ASSERT_TRUE(w.has_value());
    const auto& f = io::load(data("table3.json"));
    EXPECT_EQ(f.label((*w)[0]), "w1w2");
    EXPECT_EQ(f.label((*w)[1]), "x1w2");
    EXPECT_EQ(f.label((*w)[2]), "x1x2");
    EXPECT_FALSE(witness_intransitivity(table_product("minimum")));
    EXPECT_FALSE(witness_intransitivity(samples::four_chain()));
}

TEST(OneElement, ProductIsNeutral) {
    const auto one = one_element_lattice("e");
    for (const auto& name : builtin_names()) {
        const auto t = builtin(name);
        const auto p = direct_product<double>({one, square_lattice()}, t);
        EXPECT_LE((p.frame.mu() - square_lattice().frame().mu()).cwiseAbs().maxCoeff(), 1e-12) << name;
        const auto self = direct_product<double>({one, one}, t);
        EXPECT_EQ(self.frame.size(), 1);
        EXPECT_TRUE(certified(certify_product(self)));
    }
}

// Three-factor Hamacher closed form is not reflexive, so the product fails.
TEST(HamacherClosedForm, ThreeFactorsBreakReflexivity) {
    const auto l = chain_lattice();
    const auto p = direct_product<double>({l, l, l}, builtin("hamacher-paper-nary"));
    EXPECT_EQ(p.frame(0, 0), 0.5);
    EXPECT_FALSE(check_reflexive(p.frame).holds());
    EXPECT_TRUE(certified(certify_product(direct_product<double>({l, l, l}, builtin("hamacher")))));
}

// Without zero divisors the positivity pattern of the product is the
// conjunction of the factor patterns, for any poset factors.
TEST(ProductFrame, PosetFactorsStayPosets) {
    std::mt19937_64 rng(21);
    GenConfig cfg;
    cfg.max_size = 5;
    for (int round = 0; round < 80; ++round) {
        std::vector<Frame> factors{gen_fuzzy_poset(cfg, rng), gen_fuzzy_poset(cfg, rng)};
        for (const auto* name : {"minimum", "algebraic", "hamacher"}) {
            const auto p = product_frame(factors, builtin(name));
            EXPECT_TRUE(is_fuzzy_poset(p).passed()) << name;
            for (Index a = 0; a < p.size(); ++a) {
                for (Index b = 0; b < p.size(); ++b) {
                    const Index n2 = factors[1].size();
                    const bool expect = factors[0].positive(a / n2, b / n2) &&
                                        factors[1].positive(a % n2, b % n2);
                    EXPECT_EQ(p.positive(a, b), expect);
                }
            }
        }
    }
}

// (A x B) x C and A x (B x C) agree up to label grouping for the minimum.
TEST(ProductFrame, Associative) {
    std::mt19937_64 rng(8);
    GenConfig cfg;
    cfg.max_size = 4;
    const auto t = builtin("minimum");
    for (int round = 0; round < 20; ++round) {
        const auto a = gen_fuzzy_poset(cfg, rng), b = gen_fuzzy_poset(cfg, rng),
                   c = gen_fuzzy_poset(cfg, rng);
        const auto flat = product_frame<double>({a, b, c}, t);
        const auto left = product_frame<double>({product_frame<double>({a, b}, t), c}, t);
        const auto right = product_frame<double>({a, product_frame<double>({b, c}, t)}, t);
        EXPECT_TRUE(flat.mu() == left.mu());
        EXPECT_TRUE(flat.mu() == right.mu());
    }
}

TEST(Declared, MatchesDerivedOnTableTwo) {
    const auto p = table_product("minimum");
    const auto d = declared_structure(p);
    const auto l = certify_or_throw(p.frame);
    EXPECT_EQ(d.meet, l.meet_table());
    EXPECT_EQ(d.join, l.join_table());
    EXPECT_EQ(d.bottom, l.bottom());
    EXPECT_EQ(d.top, l.top());
}
