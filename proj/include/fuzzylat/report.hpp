#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzylat/frame.hpp"

namespace fuzzylat {

inline constexpr std::size_t kDefaultWitnessLimit = 32;

using IndexTuple = std::vector<Index>;

/// A concrete violation: which condition failed and at which elements.
struct Witness {
    std::string condition;
    IndexTuple elements;

    friend bool operator==(const Witness&, const Witness&) = default;
};

/// Verdict of one named law. holds() iff no witness was collected.
struct LawReport {
    std::string law;
    std::vector<Witness> witnesses;
    bool truncated = false;  // more violations existed than the limit allowed

    bool holds() const noexcept { return witnesses.empty(); }

    /// Appends unless the limit is reached; returns false once full.
    bool add(std::string condition, IndexTuple elements, std::size_t limit) {
        if (witnesses.size() >= limit) {
            truncated = true;
            return false;
        }
        witnesses.push_back({std::move(condition), std::move(elements)});
        return true;
    }

    bool has_condition(std::string_view condition) const {
        return std::any_of(witnesses.begin(), witnesses.end(),
                           [&](const Witness& w) { return w.condition == condition; });
    }
};

/// Aggregate of several law verdicts. passed() iff every check holds.
struct CheckReport {
    std::string subject;
    std::vector<LawReport> checks;
    std::vector<std::string> notes;

    bool passed() const noexcept {
        return std::all_of(checks.begin(), checks.end(),
                           [](const LawReport& r) { return r.holds(); });
    }

    const LawReport* find(std::string_view law) const {
        for (const auto& c : checks) {
            if (c.law == law) return &c;
        }
        return nullptr;
    }
};

}  // namespace fuzzylat
