#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "support.hpp"

using namespace fuzzylat;
using testing_support::chain_lattice;
using testing_support::square_lattice;

namespace {

std::vector<Index> identity(Index n) {
    std::vector<Index> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), Index(0));
    return v;
}

BoundedLattice two_chain() {
    return certify_or_throw(testing_support::frame({"0", "1"}, {{1, 0.5}, {0, 1}}));
}

}  // namespace

TEST(Monotone, Examples) {
    const auto ch = chain_lattice();
    const auto sq = square_lattice();
    EXPECT_TRUE(is_monotone(LatticeMap(ch, ch, identity(4))).holds());
    EXPECT_TRUE(is_monotone(LatticeMap(ch, sq, std::vector<Index>(4, sq.top()))).holds());

    // w1 -> z2, z1 -> w2, middle elements anywhere
    const LatticeMap rev(ch, sq, {sq.top(), sq.top(), sq.top(), sq.bottom()});
    const auto r = is_monotone(rev);
    ASSERT_FALSE(r.holds());
    const IndexTuple expected{ch.frame().index_of("w1"), ch.frame().index_of("z1")};
    bool seen = false;
    for (const auto& w : r.witnesses) seen = seen || w.elements == expected;
    EXPECT_TRUE(seen);
}

TEST(Homomorphism, Examples) {
    const auto sq = square_lattice();
    EXPECT_TRUE(is_bounded_homomorphism(LatticeMap(sq, sq, identity(4))).holds());

    const auto one = one_element_lattice("e");
    EXPECT_TRUE(is_bounded_homomorphism(LatticeMap(sq, one, std::vector<Index>(4, 0))).holds());

    const auto c2 = two_chain();
    const auto r = is_bounded_homomorphism(LatticeMap(c2, c2, {1, 1}));
    ASSERT_FALSE(r.holds());
    EXPECT_TRUE(r.has_condition("preserves-bottom"));
    EXPECT_FALSE(r.has_condition("preserves-top"));
}

TEST(Homomorphism, InvalidMapsRejected) {
    const auto c2 = two_chain();
    EXPECT_THROW(LatticeMap(c2, c2, {0}), std::invalid_argument);
    EXPECT_THROW(LatticeMap(c2, c2, {0, 2}), std::invalid_argument);
}

TEST(Isomorphism, Examples) {
    const auto ch = chain_lattice();
    const auto iso = find_isomorphism(ch, ch);
    ASSERT_TRUE(iso.has_value());
    EXPECT_EQ(iso->assignment(), identity(4));
    EXPECT_FALSE(find_isomorphism(ch, square_lattice()));
    const auto x = one_element_lattice("x"), y = one_element_lattice("y");
    const auto u = find_isomorphism(x, y);
    ASSERT_TRUE(u.has_value());
    EXPECT_EQ(u->assignment(), std::vector<Index>{0});
    EXPECT_FALSE(find_isomorphism(ch, two_chain()));
}

TEST(Isomorphism, CapEnforced) {
    GenConfig cfg;
    Rng rng(1);
    const auto big = certify_or_throw(fuzzify(skeletons::chain(9), cfg, rng));
    EXPECT_THROW(find_isomorphism(big, big), std::invalid_argument);
    EXPECT_TRUE(find_isomorphism(big, big, 9).has_value());
}

// Regraded and shuffled copies of the same skeleton are isomorphic both ways.
// The inverse of a found isomorphism is an isomorphism back.
TEST(Isomorphism, Symmetric) {
    GenConfig cfg;
    cfg.max_size = 8;
    Rng rng(31);
    for (int i = 0; i < 40; ++i) {
        const auto sk = detail::pick_skeleton(cfg, true, rng);
        const auto a = certify_or_throw(fuzzify(sk, cfg, rng));
        const auto b = certify_or_throw(fuzzify(sk, cfg, rng));
        const auto ab = find_isomorphism(a, b);
        const auto ba = find_isomorphism(b, a);
        ASSERT_TRUE(ab && ba);
        EXPECT_TRUE(is_bounded_homomorphism(*ab).holds());
        std::vector<Index> inv(ab->assignment().size());
        for (Index x = 0; x < a.size(); ++x) inv[static_cast<std::size_t>((*ab)(x))] = x;
        EXPECT_TRUE(is_bounded_homomorphism(LatticeMap(b, a, inv)).holds());
        const auto round_trip = compose(*ab, *ba);
        EXPECT_TRUE(is_bounded_homomorphism(round_trip).holds());
    }
}

TEST(Terminal, OneElement) {
    const auto one = one_element_lattice("e");
    const auto p = direct_product<double>({chain_lattice(), square_lattice()}, builtin("minimum"));
    std::vector<BoundedLattice> probes{chain_lattice(), square_lattice(), certify_or_throw(p.frame),
                                       one_element_lattice("f")};
    EXPECT_TRUE(check_terminal(one, probes).holds());
}

TEST(Terminal, TwoChainIsNot) {
    const auto c2 = two_chain();
    const auto homs = enumerate_homomorphisms(c2, c2);
    ASSERT_EQ(homs.size(), 1u);  // bounds must be preserved: identity only
    EXPECT_EQ(homs[0], (std::vector<Index>{0, 1}));
    EXPECT_TRUE(check_terminal(c2, {c2}).holds());
    // no map from the one-element lattice can send its single element to both 0 and 1
    const auto r = check_terminal(c2, {c2, one_element_lattice("e")});
    ASSERT_FALSE(r.holds());
    EXPECT_EQ(r.witnesses.front().elements, (IndexTuple{1, 0}));
}

TEST(Terminal, EnumerationCap) {
    const auto sq = square_lattice();
    EXPECT_THROW(enumerate_homomorphisms(sq, sq, 100), std::invalid_argument);
}

// Bounded homomorphisms are monotone, and they compose.
TEST(Homomorphism, MonotoneAndClosedUnderComposition) {
    GenConfig cfg;
    cfg.max_size = 5;
    Rng rng(13);
    std::size_t total = 0;
    for (int i = 0; i < 30; ++i) {
        const auto a = gen_bounded_fuzzy_lattice(cfg, rng);
        const auto b = gen_bounded_fuzzy_lattice(cfg, rng);
        const auto c = gen_bounded_fuzzy_lattice(cfg, rng);
        const auto ab = enumerate_homomorphisms(a, b);
        const auto bc = enumerate_homomorphisms(b, c);
        total += ab.size();
        for (const auto& f : ab) EXPECT_TRUE(is_monotone(LatticeMap(a, b, f)).holds());
        for (const auto& f : ab) {
            for (const auto& g : bc) {
                const auto h = compose(LatticeMap(a, b, f), LatticeMap(b, c, g));
                EXPECT_TRUE(is_bounded_homomorphism(h).holds());
            }
        }
    }
    EXPECT_GT(total, 0u);
}
