#pragma once

#include <string>
#include <vector>

#include "fuzzylat/detail/bitrows.hpp"
#include "fuzzylat/frame.hpp"
#include "fuzzylat/report.hpp"

namespace fuzzylat {

enum class Axiom { Reflexive, Transitive, AntiSymmetric };

inline const char* to_string(Axiom a) {
    switch (a) {
        case Axiom::Reflexive: return "reflexive";
        case Axiom::Transitive: return "transitive";
        case Axiom::AntiSymmetric: return "antisymmetric";
    }
    return "?";
}

/// Outcome of one relational axiom check. Witnesses are index tuples in
/// lexicographic order, each of which falsifies the axiom on its own.
struct AxiomVerdict {
    Axiom axiom;
    std::vector<IndexTuple> witnesses;
    bool truncated = false;

    bool holds() const noexcept { return witnesses.empty(); }
};

namespace detail {

inline bool push_witness(AxiomVerdict& v, IndexTuple t, std::size_t limit) {
    if (v.witnesses.size() >= limit) {
        v.truncated = true;
        return false;
    }
    v.witnesses.push_back(std::move(t));
    return true;
}

}  // namespace detail

/// mu(x,x) must equal 1 exactly.
template <typename Scalar>
AxiomVerdict check_reflexive(const BasicFrame<Scalar>& frame,
                             std::size_t limit = kDefaultWitnessLimit) {
    AxiomVerdict v{Axiom::Reflexive, {}};
    for (Index i = 0; i < frame.size(); ++i) {
        if (frame(i, i) != Scalar(1) && !detail::push_witness(v, {i}, limit)) break;
    }
    return v;
}

/// mu(x,y) > 0 and mu(y,z) > 0 imply mu(x,z) > 0, scanned over every triple.
template <typename Scalar>
AxiomVerdict check_transitive(const BasicFrame<Scalar>& frame,
                              std::size_t limit = kDefaultWitnessLimit) {
    AxiomVerdict v{Axiom::Transitive, {}};
    const Index n = frame.size();
    const detail::Positivity<Scalar> pos(frame);
    const Index words = pos.up.words();
    for (Index i = 0; i < n; ++i) {
        // Fast path: every successor's up-set lies inside up(i).
        bool clean = true;
        detail::for_each_bit(pos.up.row(i), words, [&](Index j) {
            if (clean && !detail::subset(pos.up.row(j), pos.up.row(i), words)) clean = false;
        });
        if (clean) continue;
        for (Index j = 0; j < n; ++j) {
            if (!frame.positive(i, j)) continue;
            for (Index k = 0; k < n; ++k) {
                if (frame.positive(j, k) && !frame.positive(i, k)) {
                    if (!detail::push_witness(v, {i, j, k}, limit)) return v;
                }
            }
        }
    }
    return v;
}

/// No distinct x, y with mu(x,y) > 0 and mu(y,x) > 0. Witnesses are (i, j) with i < j.
template <typename Scalar>
AxiomVerdict check_antisymmetric(const BasicFrame<Scalar>& frame,
                                 std::size_t limit = kDefaultWitnessLimit) {
    AxiomVerdict v{Axiom::AntiSymmetric, {}};
    const Index n = frame.size();
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            if (frame.positive(i, j) && frame.positive(j, i)) {
                if (!detail::push_witness(v, {i, j}, limit)) return v;
            }
        }
    }
    return v;
}

inline LawReport to_law_report(const AxiomVerdict& v) {
    LawReport r{to_string(v.axiom), {}, v.truncated};
    for (const auto& t : v.witnesses) r.witnesses.push_back({to_string(v.axiom), t});
    return r;
}

template <typename Scalar>
CheckReport is_fuzzy_poset(const BasicFrame<Scalar>& frame,
                           std::size_t limit = kDefaultWitnessLimit) {
    CheckReport report{"fuzzy-poset", {}, {}};
    report.checks.push_back(to_law_report(check_reflexive(frame, limit)));
    report.checks.push_back(to_law_report(check_transitive(frame, limit)));
    report.checks.push_back(to_law_report(check_antisymmetric(frame, limit)));
    return report;
}

}  // namespace fuzzylat
