#pragma once

#include "fuzzylat/order.hpp"
#include "fuzzylat/report.hpp"

// Law suites over certified lattices. Every check is exhaustive over the
// carrier and compares element indices only; grades never enter except
// through positivity.

namespace fuzzylat {

/// Order-compatibility of the cached tables: joins are upper bounds and least
/// among them, meets dually, mu(x,y) > 0 iff x+y = y iff x*y = x, and both
/// operations are monotone in their second argument.
template <typename Scalar>
LawReport check_order_compatibility(const BasicBoundedLattice<Scalar>& l,
                                    std::size_t limit = kDefaultWitnessLimit) {
    LawReport r{"order-compatibility", {}};
    const Index n = l.size();
    for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
            const Index j = l.join(x, y), m = l.meet(x, y);
            if (!l.leq(x, j) || !l.leq(y, j)) r.add("join-is-upper-bound", {x, y}, limit);
            if (!l.leq(m, x) || !l.leq(m, y)) r.add("meet-is-lower-bound", {x, y}, limit);
            if (l.leq(x, y) != (j == y)) r.add("leq-iff-join", {x, y}, limit);
            if (l.leq(x, y) != (m == x)) r.add("leq-iff-meet", {x, y}, limit);
            for (Index z = 0; z < n; ++z) {
                if (l.leq(x, z) && l.leq(y, z) && !l.leq(j, z)) {
                    r.add("join-is-least", {x, y, z}, limit);
                }
                if (l.leq(z, x) && l.leq(z, y) && !l.leq(z, m)) {
                    r.add("meet-is-greatest", {x, y, z}, limit);
                }
                // here (x, y, z) reads: mu(y,z) > 0 implies x*y <= x*z and x+y <= x+z
                if (l.leq(y, z)) {
                    if (!l.leq(l.meet(x, y), l.meet(x, z))) r.add("meet-monotone", {x, y, z}, limit);
                    if (!l.leq(l.join(x, y), l.join(x, z))) r.add("join-monotone", {x, y, z}, limit);
                }
            }
        }
    }
    return r;
}

/// Idempotence, commutativity, absorption, associativity, and the bounded
/// identities x*1 = x, x+0 = x.
template <typename Scalar>
LawReport check_lattice_identities(const BasicBoundedLattice<Scalar>& l,
                                   std::size_t limit = kDefaultWitnessLimit) {
    LawReport r{"lattice-identities", {}};
    const Index n = l.size();
    for (Index x = 0; x < n; ++x) {
        if (l.meet(x, x) != x || l.join(x, x) != x) r.add("idempotence", {x}, limit);
        if (l.meet(x, l.top()) != x) r.add("meet-top-identity", {x}, limit);
        if (l.join(x, l.bottom()) != x) r.add("join-bottom-identity", {x}, limit);
        for (Index y = 0; y < n; ++y) {
            if (l.meet(x, y) != l.meet(y, x) || l.join(x, y) != l.join(y, x)) {
                r.add("commutativity", {x, y}, limit);
            }
            if (l.meet(x, l.join(x, y)) != x || l.join(x, l.meet(x, y)) != x) {
                r.add("absorption", {x, y}, limit);
            }
            for (Index z = 0; z < n; ++z) {
                if (l.meet(x, l.meet(y, z)) != l.meet(l.meet(x, y), z) ||
                    l.join(x, l.join(y, z)) != l.join(l.join(x, y), z)) {
                    r.add("associativity", {x, y, z}, limit);
                }
            }
        }
    }
    return r;
}

/// Both distributive forms, reported separately so their agreement is testable.
template <typename Scalar>
CheckReport check_distributive(const BasicBoundedLattice<Scalar>& l,
                               std::size_t limit = kDefaultWitnessLimit) {
    LawReport meet_over_join{"meet-join-distributive", {}};
    LawReport join_over_meet{"join-meet-distributive", {}};
    const Index n = l.size();
    for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
            for (Index z = 0; z < n; ++z) {
                if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) {
                    meet_over_join.add("x*(y+z)=(x*y)+(x*z)", {x, y, z}, limit);
                }
                if (l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), l.join(x, z))) {
                    join_over_meet.add("x+(y*z)=(x+y)*(x+z)", {x, y, z}, limit);
                }
            }
        }
    }
    return CheckReport{"distributive", {std::move(meet_over_join), std::move(join_over_meet)}, {}};
}

/// (x*y)+(z*y) = ((x*y)+z)*y for all triples.
template <typename Scalar>
LawReport check_modular(const BasicBoundedLattice<Scalar>& l,
                        std::size_t limit = kDefaultWitnessLimit) {
    LawReport r{"modular", {}};
    const Index n = l.size();
    for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
            const Index xy = l.meet(x, y);
            for (Index z = 0; z < n; ++z) {
                if (l.join(xy, l.meet(z, y)) != l.meet(l.join(xy, z), y)) {
                    r.add("(x*y)+(z*y)=((x*y)+z)*y", {x, y, z}, limit);
                }
            }
        }
    }
    return r;
}

/// The quasi-equality form of modularity: mu(x,z) > 0 implies x+(y*z) = (x+y)*z.
/// Kept alongside check_modular for empirical comparison only.
template <typename Scalar>
LawReport check_modular_quasi(const BasicBoundedLattice<Scalar>& l,
                              std::size_t limit = kDefaultWitnessLimit) {
    LawReport r{"modular-quasi", {}};
    const Index n = l.size();
    for (Index x = 0; x < n; ++x) {
        for (Index z = 0; z < n; ++z) {
            if (!l.leq(x, z)) continue;
            for (Index y = 0; y < n; ++y) {
                if (l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), z)) {
                    r.add("x<=z => x+(y*z)=(x+y)*z", {x, y, z}, limit);
                }
            }
        }
    }
    return r;
}

template <typename Scalar>
bool is_distributive(const BasicBoundedLattice<Scalar>& l) {
    return check_distributive(l, 1).passed();
}

template <typename Scalar>
bool is_modular(const BasicBoundedLattice<Scalar>& l) {
    return check_modular(l, 1).holds();
}

}  // namespace fuzzylat
