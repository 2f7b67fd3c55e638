#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fuzzylat/order.hpp"
#include "fuzzylat/report.hpp"

namespace fuzzylat {

/// A total function between the carriers of two certified lattices.
///
/// Holds non-owning pointers; both lattices must outlive the map. Grades are
/// never compared: only positivity and table lookups matter.
template <typename Scalar>
class BasicLatticeMap {
public:
    using lattice_type = BasicBoundedLattice<Scalar>;

    BasicLatticeMap(const lattice_type& source, const lattice_type& target,
                    std::vector<Index> assignment)
        : source_(&source), target_(&target), assignment_(std::move(assignment)) {
        if (static_cast<Index>(assignment_.size()) != source.size()) {
            throw std::invalid_argument("map must assign every source element");
        }
        for (Index v : assignment_) {
            if (v < 0 || v >= target.size()) throw std::invalid_argument("map image out of range");
        }
    }

    const lattice_type& source() const noexcept { return *source_; }
    const lattice_type& target() const noexcept { return *target_; }
    const std::vector<Index>& assignment() const noexcept { return assignment_; }
    Index operator()(Index x) const { return assignment_[static_cast<std::size_t>(x)]; }

private:
    const lattice_type* source_;
    const lattice_type* target_;
    std::vector<Index> assignment_;
};

using LatticeMap = BasicLatticeMap<double>;

/// mu(x,y) > 0 implies mu(f x, f y) > 0. Witnesses are violating pairs.
template <typename Scalar>
LawReport is_monotone(const BasicLatticeMap<Scalar>& f, std::size_t limit = kDefaultWitnessLimit) {
    LawReport r{"monotone", {}};
    const auto& s = f.source();
    for (Index x = 0; x < s.size(); ++x) {
        for (Index y = 0; y < s.size(); ++y) {
            if (s.leq(x, y) && !f.target().leq(f(x), f(y))) r.add("monotone", {x, y}, limit);
        }
    }
    return r;
}

/// Preservation of meets, joins, bottom and top.
template <typename Scalar>
LawReport is_bounded_homomorphism(const BasicLatticeMap<Scalar>& f,
                                  std::size_t limit = kDefaultWitnessLimit) {
    LawReport r{"bounded-homomorphism", {}};
    const auto& s = f.source();
    const auto& t = f.target();
    for (Index x = 0; x < s.size(); ++x) {
        for (Index y = 0; y < s.size(); ++y) {
            if (f(s.meet(x, y)) != t.meet(f(x), f(y))) r.add("preserves-meet", {x, y}, limit);
            if (f(s.join(x, y)) != t.join(f(x), f(y))) r.add("preserves-join", {x, y}, limit);
        }
    }
    if (f(s.bottom()) != t.bottom()) r.add("preserves-bottom", {s.bottom()}, limit);
    if (f(s.top()) != t.top()) r.add("preserves-top", {s.top()}, limit);
    return r;
}

/// second after first.
template <typename Scalar>
BasicLatticeMap<Scalar> compose(const BasicLatticeMap<Scalar>& first,
                                const BasicLatticeMap<Scalar>& second) {
    if (&first.target() != &second.source()) {
        throw std::invalid_argument("maps do not compose: target and source differ");
    }
    std::vector<Index> a(first.assignment().size());
    for (std::size_t x = 0; x < a.size(); ++x) a[x] = second(first(static_cast<Index>(x)));
    return BasicLatticeMap<Scalar>(first.source(), second.target(), std::move(a));
}

inline constexpr double kMaxEnumeratedAssignments = 1e6;

/// Every bounded homomorphism source -> target, by exhaustive enumeration of
/// assignments in lexicographic order.
template <typename Scalar>
std::vector<std::vector<Index>> enumerate_homomorphisms(const BasicBoundedLattice<Scalar>& source,
                                                        const BasicBoundedLattice<Scalar>& target,
                                                        double max_assignments =
                                                            kMaxEnumeratedAssignments) {
    const auto n = static_cast<std::size_t>(source.size());
    const Index m = target.size();
    if (std::pow(double(m), double(n)) > max_assignments) {
        throw std::invalid_argument("too many assignments to enumerate");
    }
    std::vector<std::vector<Index>> homs;
    std::vector<Index> a(n, 0);
    while (true) {
        BasicLatticeMap<Scalar> f(source, target, a);
        if (is_bounded_homomorphism(f, 1).holds()) homs.push_back(a);
        std::size_t k = n;
        while (k > 0 && ++a[k - 1] == m) a[--k] = 0;
        if (k == 0) break;
    }
    return homs;
}

/// Finite-scale terminal-object evidence: exactly one bounded homomorphism
/// from each probe into the candidate. Witnesses are (probe index, count).
template <typename Scalar>
LawReport check_terminal(const BasicBoundedLattice<Scalar>& candidate,
                         const std::vector<BasicBoundedLattice<Scalar>>& probes,
                         std::size_t limit = kDefaultWitnessLimit) {
    LawReport r{"terminal", {}};
    for (std::size_t p = 0; p < probes.size(); ++p) {
        const auto count = static_cast<Index>(enumerate_homomorphisms(probes[p], candidate).size());
        if (count != 1) r.add("exactly-one-homomorphism", {static_cast<Index>(p), count}, limit);
    }
    return r;
}

inline constexpr Index kIsomorphismSearchCap = 8;

/// First bijective bounded homomorphism a -> b in lexicographic order of
/// assignments, or nullopt. Candidates are pruned by up/down degree, by
/// bottom/top, and by order reflection on already-assigned pairs.
template <typename Scalar>
std::optional<BasicLatticeMap<Scalar>> find_isomorphism(const BasicBoundedLattice<Scalar>& a,
                                                        const BasicBoundedLattice<Scalar>& b,
                                                        Index cap = kIsomorphismSearchCap) {
    if (a.size() != b.size()) return std::nullopt;
    const Index n = a.size();
    if (n > cap) throw std::invalid_argument("isomorphism search above the size cap");

    auto degrees = [n](const BasicBoundedLattice<Scalar>& l) {
        std::vector<std::pair<Index, Index>> d(static_cast<std::size_t>(n));
        for (Index x = 0; x < n; ++x) {
            for (Index y = 0; y < n; ++y) {
                if (l.leq(x, y)) ++d[static_cast<std::size_t>(x)].first;
                if (l.leq(y, x)) ++d[static_cast<std::size_t>(x)].second;
            }
        }
        return d;
    };
    const auto da = degrees(a), db = degrees(b);

    std::vector<Index> assign(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::optional<BasicLatticeMap<Scalar>> found;

    auto compatible = [&](Index x, Index v) {
        if (da[static_cast<std::size_t>(x)] != db[static_cast<std::size_t>(v)]) return false;
        if ((x == a.bottom()) != (v == b.bottom())) return false;
        if ((x == a.top()) != (v == b.top())) return false;
        for (Index y = 0; y < x; ++y) {
            const Index w = assign[static_cast<std::size_t>(y)];
            if (a.leq(x, y) != b.leq(v, w) || a.leq(y, x) != b.leq(w, v)) return false;
        }
        return true;
    };

    auto search = [&](auto& self, Index x) -> bool {
        if (x == n) {
            BasicLatticeMap<Scalar> f(a, b, assign);
            if (!is_bounded_homomorphism(f, 1).holds()) return false;
            found.emplace(std::move(f));
            return true;
        }
        for (Index v = 0; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)] || !compatible(x, v)) continue;
            assign[static_cast<std::size_t>(x)] = v;
            used[static_cast<std::size_t>(v)] = true;
            if (self(self, x + 1)) return true;
            used[static_cast<std::size_t>(v)] = false;
        }
        assign[static_cast<std::size_t>(x)] = -1;
        return false;
    };
    search(search, 0);
    return found;
}

}  // namespace fuzzylat
