#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "fuzzylat/core.hpp"
#include "fuzzylat/detail/bitrows.hpp"
#include "fuzzylat/frame.hpp"

namespace fuzzylat {

/// {x : mu(x, y) > 0 for every y in subset}, in index order.
template <typename Scalar>
std::vector<Index> lower_bounds(const BasicFrame<Scalar>& frame, std::span<const Index> subset) {
    if (subset.empty()) throw std::invalid_argument("lower_bounds of an empty subset");
    std::vector<Index> out;
    for (Index x = 0; x < frame.size(); ++x) {
        bool below_all = true;
        for (Index y : subset) below_all = below_all && frame.positive(x, y);
        if (below_all) out.push_back(x);
    }
    return out;
}

/// {x : mu(y, x) > 0 for every y in subset}, in index order.
template <typename Scalar>
std::vector<Index> upper_bounds(const BasicFrame<Scalar>& frame, std::span<const Index> subset) {
    if (subset.empty()) throw std::invalid_argument("upper_bounds of an empty subset");
    std::vector<Index> out;
    for (Index x = 0; x < frame.size(); ++x) {
        bool above_all = true;
        for (Index y : subset) above_all = above_all && frame.positive(y, x);
        if (above_all) out.push_back(x);
    }
    return out;
}

namespace detail {

// Element of `bounds` that every other bound points into, in the direction
// given by `toward(x, candidate)`. Two such elements can only coexist when
// anti-symmetry fails, which is reported as a logic error.
template <typename Toward>
std::optional<Index> extremal_bound(const std::vector<Index>& bounds, Toward toward) {
    std::optional<Index> found;
    for (Index c : bounds) {
        bool dominates = true;
        for (Index x : bounds) dominates = dominates && toward(x, c);
        if (!dominates) continue;
        if (found) {
            throw std::logic_error("two extremal bounds " + std::to_string(*found) + " and " +
                                   std::to_string(c) + ": relation is not anti-symmetric");
        }
        found = c;
    }
    return found;
}

}  // namespace detail

/// Greatest fuzzy lower bound of {i, j}, or nullopt when it does not exist.
template <typename Scalar>
std::optional<Index> fuzzy_meet(const BasicFrame<Scalar>& frame, Index i, Index j) {
    const Index pair[] = {i, j};
    return detail::extremal_bound(lower_bounds(frame, pair),
                                  [&](Index x, Index c) { return frame.positive(x, c); });
}

/// Least fuzzy upper bound of {i, j}, or nullopt when it does not exist.
template <typename Scalar>
std::optional<Index> fuzzy_join(const BasicFrame<Scalar>& frame, Index i, Index j) {
    const Index pair[] = {i, j};
    return detail::extremal_bound(upper_bounds(frame, pair),
                                  [&](Index x, Index c) { return frame.positive(c, x); });
}

struct LatticeCertError {
    enum class Kind { NotPoset, MissingMeet, MissingJoin, NoBottom, NoTop };

    Kind kind;
    IndexTuple detail;
    std::string axiom;  // failing axiom for NotPoset

    std::string message() const {
        std::string s;
        switch (kind) {
            case Kind::NotPoset: s = "not a fuzzy poset (" + axiom + ")"; break;
            case Kind::MissingMeet: s = "missing meet"; break;
            case Kind::MissingJoin: s = "missing join"; break;
            case Kind::NoBottom: s = "no bottom"; break;
            case Kind::NoTop: s = "no top"; break;
        }
        for (std::size_t k = 0; k < detail.size(); ++k) {
            s += (k == 0 ? " at " : ",") + std::to_string(detail[k]);
        }
        return s;
    }
};

inline const char* to_string(LatticeCertError::Kind k) {
    using K = LatticeCertError::Kind;
    switch (k) {
        case K::NotPoset: return "NotPoset";
        case K::MissingMeet: return "MissingMeet";
        case K::MissingJoin: return "MissingJoin";
        case K::NoBottom: return "NoBottom";
        case K::NoTop: return "NoTop";
    }
    return "?";
}

template <typename Scalar>
class BasicBoundedLattice;

template <typename Scalar>
using CertResult = std::variant<BasicBoundedLattice<Scalar>, LatticeCertError>;

template <typename Scalar>
CertResult<Scalar> certify_lattice(const BasicFrame<Scalar>& frame);

/// A fuzzy poset whose pairwise meets and joins exist, with bottom and top.
///
/// Only obtainable through certify_lattice (or helpers built on it), so every
/// instance satisfies the lattice invariants. Tables are symmetric.
template <typename Scalar>
class BasicBoundedLattice {
public:
    using scalar_type = Scalar;

    const BasicFrame<Scalar>& frame() const noexcept { return frame_; }
    Index size() const noexcept { return frame_.size(); }
    const IndexTable& meet_table() const noexcept { return meet_; }
    const IndexTable& join_table() const noexcept { return join_; }
    Index meet(Index i, Index j) const { return meet_(i, j); }
    Index join(Index i, Index j) const { return join_(i, j); }
    Index bottom() const noexcept { return bottom_; }
    Index top() const noexcept { return top_; }
    bool leq(Index i, Index j) const { return frame_.positive(i, j); }
    const std::string& label(Index i) const { return frame_.label(i); }

private:
    BasicBoundedLattice(BasicFrame<Scalar> frame, IndexTable meet, IndexTable join, Index bottom,
                        Index top)
        : frame_(std::move(frame)),
          meet_(std::move(meet)),
          join_(std::move(join)),
          bottom_(bottom),
          top_(top) {}

    friend CertResult<Scalar> certify_lattice<Scalar>(const BasicFrame<Scalar>& frame);

    BasicFrame<Scalar> frame_;
    IndexTable meet_;
    IndexTable join_;
    Index bottom_;
    Index top_;
};

using BoundedLattice = BasicBoundedLattice<double>;

namespace detail {

// Extremal element of the bound set `bounds` (a bit row) with respect to
// the relation rows in `dir`: the candidate c whose `dir` row covers all bounds.
inline std::optional<Index> extremal_in(const BitRows::word* bounds, const BitRows& dir,
                                        Index words) {
    std::optional<Index> found;
    for_each_bit(bounds, words, [&](Index c) {
        if (!subset(bounds, dir.row(c), words)) return;
        if (found) {
            throw std::logic_error("two extremal bounds " + std::to_string(*found) + " and " +
                                   std::to_string(c) + ": relation is not anti-symmetric");
        }
        found = c;
    });
    return found;
}

}  // namespace detail

/// Certifies a frame as a bounded fuzzy lattice: poset axioms, every pairwise
/// meet and join by search over the bound sets, then bottom and top.
template <typename Scalar>
CertResult<Scalar> certify_lattice(const BasicFrame<Scalar>& frame) {
    using K = LatticeCertError::Kind;
    const auto poset = is_fuzzy_poset(frame, 1);
    for (const auto& check : poset.checks) {
        if (!check.holds()) {
            return LatticeCertError{K::NotPoset, check.witnesses.front().elements, check.law};
        }
    }

    const Index n = frame.size();
    const detail::Positivity<Scalar> pos(frame);
    const Index words = pos.up.words();
    std::vector<detail::BitRows::word> bounds(static_cast<std::size_t>(words));

    IndexTable meet(n, n), join(n, n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = i; j < n; ++j) {
            for (Index w = 0; w < words; ++w) bounds[w] = pos.down.row(i)[w] & pos.down.row(j)[w];
            // Greatest lower bound: every lower bound x has mu(x, c) > 0.
            const auto m = detail::extremal_in(bounds.data(), pos.down, words);
            if (!m) return LatticeCertError{K::MissingMeet, {i, j}, {}};
            meet(i, j) = meet(j, i) = *m;
        }
    }
    for (Index i = 0; i < n; ++i) {
        for (Index j = i; j < n; ++j) {
            for (Index w = 0; w < words; ++w) bounds[w] = pos.up.row(i)[w] & pos.up.row(j)[w];
            const auto m = detail::extremal_in(bounds.data(), pos.up, words);
            if (!m) return LatticeCertError{K::MissingJoin, {i, j}, {}};
            join(i, j) = join(j, i) = *m;
        }
    }

    // Minimal / maximal elements double as witnesses when no bound exists.
    auto extremes = [&](const detail::BitRows& rows) {
        std::vector<Index> all;
        for (Index x = 0; x < n; ++x) {
            bool everywhere = true;
            for (Index y = 0; y < n; ++y) everywhere = everywhere && rows.test(x, y);
            if (everywhere) all.push_back(x);
        }
        return all;
    };
    const auto bottoms = extremes(pos.up);
    const auto tops = extremes(pos.down);
    auto stragglers = [&](const detail::BitRows& other) {
        IndexTuple out;
        for (Index x = 0; x < n; ++x) {
            bool only_self = true;
            for (Index y = 0; y < n; ++y) only_self = only_self && (y == x || !other.test(x, y));
            if (only_self) out.push_back(x);
        }
        return out;
    };
    if (bottoms.empty()) return LatticeCertError{K::NoBottom, stragglers(pos.down), {}};
    if (tops.empty()) return LatticeCertError{K::NoTop, stragglers(pos.up), {}};
    if (bottoms.size() > 1 || tops.size() > 1) {
        throw std::logic_error("several bottom or top candidates on an anti-symmetric relation");
    }
    return BasicBoundedLattice<Scalar>(frame, std::move(meet), std::move(join), bottoms.front(),
                                       tops.front());
}

template <typename Scalar>
bool certified(const CertResult<Scalar>& r) {
    return std::holds_alternative<BasicBoundedLattice<Scalar>>(r);
}

class CertificationFailed : public std::runtime_error {
public:
    explicit CertificationFailed(LatticeCertError e)
        : std::runtime_error(e.message()), error_(std::move(e)) {}
    const LatticeCertError& error() const noexcept { return error_; }

private:
    LatticeCertError error_;
};

/// certify_lattice for callers that treat failure as exceptional.
template <typename Scalar>
BasicBoundedLattice<Scalar> certify_or_throw(const BasicFrame<Scalar>& frame) {
    auto r = certify_lattice(frame);
    if (auto* e = std::get_if<LatticeCertError>(&r)) throw CertificationFailed(*e);
    return std::get<BasicBoundedLattice<Scalar>>(std::move(r));
}

template <typename Scalar = double>
BasicBoundedLattice<Scalar> one_element_lattice(std::string label) {
    GradeMatrix<Scalar> mu(1, 1);
    mu(0, 0) = Scalar(1);
    return certify_or_throw(BasicFrame<Scalar>({std::move(label)}, std::move(mu)));
}

}  // namespace fuzzylat
