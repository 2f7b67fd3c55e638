#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fuzzylat/frame.hpp"
#include "fuzzylat/order.hpp"

namespace fuzzylat {

/// Crisp order skeleton: leq(i,j) is the reflexive-transitive relation.
struct Skeleton {
    std::vector<std::string> labels;
    Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> leq;

    Index size() const { return static_cast<Index>(labels.size()); }
};

enum class SkeletonKind { Chain, Boolean, M3, N5, Grid, Random, Dag, Fence, Antichain };

inline const char* to_string(SkeletonKind k) {
    switch (k) {
        case SkeletonKind::Chain: return "chain";
        case SkeletonKind::Boolean: return "boolean";
        case SkeletonKind::M3: return "M3";
        case SkeletonKind::N5: return "N5";
        case SkeletonKind::Grid: return "grid";
        case SkeletonKind::Random: return "random";
        case SkeletonKind::Dag: return "dag";
        case SkeletonKind::Fence: return "fence";
        case SkeletonKind::Antichain: return "antichain";
    }
    return "?";
}

inline SkeletonKind skeleton_kind(const std::string& name) {
    for (auto k : {SkeletonKind::Chain, SkeletonKind::Boolean, SkeletonKind::M3, SkeletonKind::N5,
                   SkeletonKind::Grid, SkeletonKind::Random, SkeletonKind::Dag,
                   SkeletonKind::Fence, SkeletonKind::Antichain}) {
        if (name == to_string(k)) return k;
    }
    throw std::invalid_argument("unknown skeleton kind '" + name + "'");
}

inline bool is_lattice_kind(SkeletonKind k) {
    return k != SkeletonKind::Dag && k != SkeletonKind::Fence && k != SkeletonKind::Antichain;
}

struct GenConfig {
    std::uint64_t seed = 0;
    Index min_size = 2;
    Index max_size = 6;
    double grade_min = 0.01;  // comparable-pair grades are hundredths in [grade_min, grade_max]
    double grade_max = 0.99;
    std::map<SkeletonKind, double> weights = {
        {SkeletonKind::Chain, 1},   {SkeletonKind::Boolean, 1}, {SkeletonKind::M3, 1},
        {SkeletonKind::N5, 1},      {SkeletonKind::Grid, 1},    {SkeletonKind::Random, 1},
        {SkeletonKind::Dag, 1},     {SkeletonKind::Fence, 1},   {SkeletonKind::Antichain, 1}};
    bool shuffle = true;  // randomly permute carrier order after fuzzification

    void validate() const {
        if (min_size < 1 || max_size > 12 || min_size > max_size) {
            throw std::invalid_argument("size range must lie within [1, 12]");
        }
        if (!(grade_min > 0) || grade_max > 1 || grade_min > grade_max) {
            throw std::invalid_argument("grade range must lie within (0, 1]");
        }
        if (std::ceil(grade_min * 100 - 1e-9) > std::floor(grade_max * 100 + 1e-9)) {
            throw std::invalid_argument("grade range contains no two-decimal grade");
        }
    }
};

using Rng = std::mt19937_64;

namespace skeletons {

inline Skeleton from_relation(std::vector<std::string> labels,
                              Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> rel) {
    const auto n = static_cast<Index>(labels.size());
    for (Index i = 0; i < n; ++i) rel(i, i) = true;
    for (Index k = 0; k < n; ++k) {
        for (Index i = 0; i < n; ++i) {
            if (!rel(i, k)) continue;
            for (Index j = 0; j < n; ++j) rel(i, j) = rel(i, j) || rel(k, j);
        }
    }
    return Skeleton{std::move(labels), std::move(rel)};
}

inline std::vector<std::string> numbered(Index n, const std::string& prefix = "e") {
    std::vector<std::string> out;
    for (Index i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

inline Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> empty_relation(Index n) {
    return Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>::Constant(n, n, false);
}

inline Skeleton chain(Index n) {
    auto rel = empty_relation(n);
    for (Index i = 0; i + 1 < n; ++i) rel(i, i + 1) = true;
    return from_relation(numbered(n), std::move(rel));
}

/// Subsets of a k-element set ordered by inclusion.
inline Skeleton boolean(int k) {
    const Index n = Index(1) << k;
    auto rel = empty_relation(n);
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) rel(a, b) = (a & b) == a;
    }
    return from_relation(numbered(n), std::move(rel));
}

/// 0 < a, b, c < 1 with a, b, c pairwise incomparable.
inline Skeleton m3() {
    auto rel = empty_relation(5);
    for (Index atom = 1; atom <= 3; ++atom) {
        rel(0, atom) = true;
        rel(atom, 4) = true;
    }
    return from_relation({"0", "a", "b", "c", "1"}, std::move(rel));
}

/// 0 < a < b < 1 and 0 < c < 1 with c incomparable to a and b.
inline Skeleton n5() {
    auto rel = empty_relation(5);
    rel(0, 1) = rel(1, 2) = rel(2, 4) = true;
    rel(0, 3) = rel(3, 4) = true;
    return from_relation({"0", "a", "b", "c", "1"}, std::move(rel));
}

/// Product order on {0..rows-1} x {0..cols-1}.
inline Skeleton grid(Index rows, Index cols) {
    const Index n = rows * cols;
    auto rel = empty_relation(n);
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) rel(a, b) = a / cols <= b / cols && a % cols <= b % cols;
    }
    return from_relation(numbered(n), std::move(rel));
}

inline Skeleton antichain(Index n) { return from_relation(numbered(n), empty_relation(n)); }

/// Zigzag e0 < e1 > e2 < e3 ...
inline Skeleton fence(Index n) {
    auto rel = empty_relation(n);
    for (Index i = 0; i + 1 < n; ++i) {
        if (i % 2 == 0) rel(i, i + 1) = true;
        else rel(i + 1, i) = true;
    }
    return from_relation(numbered(n), std::move(rel));
}

/// Random DAG on n vertices (edges only from lower to higher index), closed.
inline Skeleton random_dag(Index n, Rng& rng, double density = 0.35) {
    std::bernoulli_distribution edge(density);
    auto rel = empty_relation(n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) rel(i, j) = edge(rng);
    }
    return from_relation(numbered(n), std::move(rel));
}

/// Random meet-closed family of subsets of a k-set that contains the full set,
/// grown until its size reaches `target`. Such a family is a lattice under
/// inclusion. Returns an empty skeleton if growth overshoots.
inline Skeleton random_meet_closed(int k, Index target, Rng& rng) {
    const unsigned full = (1U << k) - 1U;
    std::set<unsigned> family{full};
    std::uniform_int_distribution<unsigned> pick(0, full);
    int stalls = 0;
    while (static_cast<Index>(family.size()) < target && stalls < 256) {
        std::set<unsigned> next = family;
        next.insert(pick(rng));
        bool grew = true;
        while (grew) {
            grew = false;
            for (unsigned a : std::set<unsigned>(next)) {
                for (unsigned b : std::set<unsigned>(next)) grew |= next.insert(a & b).second;
            }
        }
        if (static_cast<Index>(next.size()) > target) {
            ++stalls;
            continue;
        }
        if (next.size() == family.size()) ++stalls;
        family = std::move(next);
    }
    if (static_cast<Index>(family.size()) != target) return {};
    const std::vector<unsigned> sets(family.begin(), family.end());
    const auto n = static_cast<Index>(sets.size());
    auto rel = empty_relation(n);
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
            rel(a, b) = (sets[static_cast<std::size_t>(a)] & sets[static_cast<std::size_t>(b)]) ==
                        sets[static_cast<std::size_t>(a)];
        }
    }
    return from_relation(numbered(n), std::move(rel));
}

}  // namespace skeletons

/// Sizes in [lo, hi] the given kind can produce.
inline std::vector<Index> feasible_sizes(SkeletonKind kind, Index lo, Index hi) {
    std::vector<Index> out;
    for (Index s = lo; s <= hi; ++s) {
        bool ok = false;
        switch (kind) {
            case SkeletonKind::Chain:
            case SkeletonKind::Dag:
            case SkeletonKind::Antichain: ok = true; break;
            case SkeletonKind::Fence: ok = s >= 3; break;
            case SkeletonKind::Boolean: ok = s == 1 || s == 2 || s == 4 || s == 8; break;
            case SkeletonKind::M3:
            case SkeletonKind::N5: ok = s == 5; break;
            case SkeletonKind::Grid:
                for (Index r = 2; r * 2 <= s; ++r) ok = ok || (s % r == 0 && s / r >= 2);
                break;
            case SkeletonKind::Random: ok = s <= 16; break;
        }
        if (ok) out.push_back(s);
    }
    return out;
}

/// Builds a skeleton of the given kind and size (size must be feasible).
inline Skeleton make_skeleton(SkeletonKind kind, Index size, Rng& rng) {
    auto pick = [&rng](Index lo, Index hi) {
        return std::uniform_int_distribution<Index>(lo, hi)(rng);
    };
    switch (kind) {
        case SkeletonKind::Chain: return skeletons::chain(size);
        case SkeletonKind::Antichain: return skeletons::antichain(size);
        case SkeletonKind::Fence: return skeletons::fence(size);
        case SkeletonKind::Dag: return skeletons::random_dag(size, rng);
        case SkeletonKind::Boolean: return skeletons::boolean(std::countr_zero(std::uint64_t(size)));
        case SkeletonKind::M3: return skeletons::m3();
        case SkeletonKind::N5: return skeletons::n5();
        case SkeletonKind::Grid: {
            std::vector<Index> rows;
            for (Index r = 2; r * 2 <= size; ++r) {
                if (size % r == 0) rows.push_back(r);
            }
            const Index r = rows[static_cast<std::size_t>(pick(0, Index(rows.size()) - 1))];
            return skeletons::grid(r, size / r);
        }
        case SkeletonKind::Random: {
            int k = 1;
            while ((Index(1) << k) < size) ++k;
            for (int attempt = 0; attempt < 64; ++attempt) {
                const int kk = std::min(4, k + static_cast<int>(pick(0, 1)));
                auto s = skeletons::random_meet_closed(kk, size, rng);
                if (s.size() == size) return s;
            }
            return skeletons::chain(size);
        }
    }
    throw std::logic_error("unhandled skeleton kind");
}

/// mu(x,x) = 1; mu(x,y) a random hundredth in the grade range when x < y; 0 otherwise.
template <typename Scalar = double>
BasicFrame<Scalar> fuzzify(const Skeleton& sk, const GenConfig& cfg, Rng& rng) {
    const Index n = sk.size();
    const auto lo = static_cast<int>(std::ceil(cfg.grade_min * 100 - 1e-9));
    const auto hi = static_cast<int>(std::floor(cfg.grade_max * 100 + 1e-9));
    std::uniform_int_distribution<int> hundredths(lo, hi);

    std::vector<Index> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), Index(0));
    if (cfg.shuffle) std::shuffle(perm.begin(), perm.end(), rng);

    GradeMatrix<Scalar> mu = GradeMatrix<Scalar>::Zero(n, n);
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (Index a = 0; a < n; ++a) {
        const Index i = perm[static_cast<std::size_t>(a)];
        labels[static_cast<std::size_t>(a)] = sk.labels[static_cast<std::size_t>(i)];
        for (Index b = 0; b < n; ++b) {
            const Index j = perm[static_cast<std::size_t>(b)];
            if (i == j) mu(a, b) = Scalar(1);
            else if (sk.leq(i, j)) mu(a, b) = Scalar(hundredths(rng)) / Scalar(100);
        }
    }
    return BasicFrame<Scalar>(std::move(labels), std::move(mu));
}

namespace detail {

inline SkeletonKind pick_kind(const GenConfig& cfg, bool lattices_only, Rng& rng) {
    std::vector<SkeletonKind> kinds;
    std::vector<double> weights;
    for (const auto& [kind, w] : cfg.weights) {
        if (w <= 0 || (lattices_only && !is_lattice_kind(kind))) continue;
        if (feasible_sizes(kind, cfg.min_size, cfg.max_size).empty()) continue;
        kinds.push_back(kind);
        weights.push_back(w);
    }
    if (kinds.empty()) {
        throw std::invalid_argument("no skeleton kind fits the configured size range");
    }
    std::discrete_distribution<std::size_t> d(weights.begin(), weights.end());
    return kinds[d(rng)];
}

inline Skeleton pick_skeleton(const GenConfig& cfg, bool lattices_only, Rng& rng) {
    const auto kind = pick_kind(cfg, lattices_only, rng);
    const auto sizes = feasible_sizes(kind, cfg.min_size, cfg.max_size);
    const auto s = sizes[std::uniform_int_distribution<std::size_t>(0, sizes.size() - 1)(rng)];
    return make_skeleton(kind, s, rng);
}

}  // namespace detail

/// A fuzzified lattice skeleton; certifies by construction.
template <typename Scalar = double>
BasicBoundedLattice<Scalar> gen_bounded_fuzzy_lattice(const GenConfig& cfg, Rng& rng) {
    cfg.validate();
    const auto sk = detail::pick_skeleton(cfg, true, rng);
    return certify_or_throw(fuzzify<Scalar>(sk, cfg, rng));
}

template <typename Scalar = double>
BasicBoundedLattice<Scalar> gen_bounded_fuzzy_lattice(const GenConfig& cfg) {
    Rng rng(cfg.seed);
    return gen_bounded_fuzzy_lattice<Scalar>(cfg, rng);
}

/// A fuzzified poset skeleton (any catalog kind, including non-lattices).
template <typename Scalar = double>
BasicFrame<Scalar> gen_fuzzy_poset(const GenConfig& cfg, Rng& rng) {
    cfg.validate();
    return fuzzify<Scalar>(detail::pick_skeleton(cfg, false, rng), cfg, rng);
}

template <typename Scalar = double>
BasicFrame<Scalar> gen_fuzzy_poset(const GenConfig& cfg) {
    Rng rng(cfg.seed);
    return gen_fuzzy_poset<Scalar>(cfg, rng);
}

/// Config restricted to the given skeleton kinds with equal weight.
inline GenConfig with_kinds(GenConfig cfg, std::initializer_list<SkeletonKind> kinds) {
    cfg.weights.clear();
    for (auto k : kinds) cfg.weights[k] = 1;
    return cfg;
}

}  // namespace fuzzylat
