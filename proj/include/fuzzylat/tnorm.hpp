#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuzzylat/report.hpp"

namespace fuzzylat {

enum class ZeroDivisorStatus { HasZeroDivisors, NoZeroDivisors, Unknown };

inline const char* to_string(ZeroDivisorStatus s) {
    switch (s) {
        case ZeroDivisorStatus::HasZeroDivisors: return "has-zero-divisors";
        case ZeroDivisorStatus::NoZeroDivisors: return "no-zero-divisors";
        case ZeroDivisorStatus::Unknown: return "unknown";
    }
    return "?";
}

/// A binary grade operator with zero-divisor metadata.
///
/// `op` is expected to be a t-norm (associative, commutative, monotone, unit 1);
/// conformance() samples those laws on a grid. `closed_form`, when set,
/// replaces the inductive fold in product realizations.
template <typename Scalar>
struct BasicTNorm {
    using scalar_type = Scalar;
    using binary_fn = std::function<Scalar(Scalar, Scalar)>;
    using nary_fn = std::function<Scalar(std::span<const Scalar>)>;

    std::string name;
    binary_fn op;
    ZeroDivisorStatus status = ZeroDivisorStatus::Unknown;
    std::string provenance;
    Scalar tolerance = Scalar(0);  // comparison slack for conformance
    nary_fn closed_form = {};

    Scalar operator()(Scalar a, Scalar b) const { return op(a, b); }
};

using TNorm = BasicTNorm<double>;

namespace kernels {

template <typename Scalar>
Scalar minimum(Scalar a, Scalar b) {
    return std::min(a, b);
}

template <typename Scalar>
Scalar algebraic(Scalar a, Scalar b) {
    return a * b;
}

// The boundary short-circuits keep tau(a,1) = a exact in floating point.
template <typename Scalar>
Scalar lukasiewicz(Scalar a, Scalar b) {
    if (a == Scalar(1)) return b;
    if (b == Scalar(1)) return a;
    return std::max(a + b - Scalar(1), Scalar(0));
}

// hamacher(0,0) is taken as 0; the formula is 0/0 there.
template <typename Scalar>
Scalar hamacher(Scalar a, Scalar b) {
    if (a == Scalar(1)) return b;
    if (b == Scalar(1)) return a;
    if (a == Scalar(0) || b == Scalar(0)) return Scalar(0);
    return a * b / (a + b - a * b);
}

/// prod / (sum - prod), or 0 when every grade is 0. A single grade is returned
/// unchanged. This is not the fold of the binary Hamacher operator.
template <typename Scalar>
Scalar hamacher_closed_form(std::span<const Scalar> grades) {
    if (grades.empty()) throw std::invalid_argument("hamacher closed form of an empty list");
    if (grades.size() == 1) return grades.front();
    Scalar sum(0), prod(1);
    for (Scalar g : grades) {
        sum += g;
        prod *= g;
    }
    if (sum == Scalar(0)) return Scalar(0);
    return prod / (sum - prod);
}

}  // namespace kernels

inline const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {"minimum", "algebraic", "lukasiewicz",
                                                   "hamacher", "hamacher-paper-nary"};
    return names;
}

template <typename Scalar = double>
BasicTNorm<Scalar> builtin(std::string_view name) {
    using T = BasicTNorm<Scalar>;
    constexpr Scalar arith_tol = Scalar(1e-9);
    if (name == "minimum") {
        return T{"minimum", kernels::minimum<Scalar>, ZeroDivisorStatus::NoZeroDivisors,
                 "min(a,b) > 0 for a,b in (0,1)", Scalar(0)};
    }
    if (name == "algebraic") {
        return T{"algebraic", kernels::algebraic<Scalar>, ZeroDivisorStatus::NoZeroDivisors,
                 "a*b > 0 for a,b in (0,1)", arith_tol};
    }
    if (name == "lukasiewicz") {
        return T{"lukasiewicz", kernels::lukasiewicz<Scalar>, ZeroDivisorStatus::HasZeroDivisors,
                 "max(a+b-1,0) = 0 whenever a+b <= 1", arith_tol};
    }
    if (name == "hamacher") {
        return T{"hamacher", kernels::hamacher<Scalar>, ZeroDivisorStatus::NoZeroDivisors,
                 "ab/(a+b-ab) > 0 for a,b in (0,1)", arith_tol};
    }
    if (name == "hamacher-paper-nary") {
        return T{"hamacher-paper-nary", kernels::hamacher<Scalar>,
                 ZeroDivisorStatus::NoZeroDivisors,
                 "binary Hamacher; n-ary realization uses prod/(sum-prod)", arith_tol,
                 kernels::hamacher_closed_form<Scalar>};
    }
    throw std::invalid_argument("unknown t-norm '" + std::string(name) + "'");
}

/// Left fold: T(a1..an) = t(T(a1..a_{n-1}), an); a single grade is returned as is.
template <typename Scalar>
Scalar extend_n(const BasicTNorm<Scalar>& t, std::span<const Scalar> grades) {
    if (grades.empty()) throw std::invalid_argument("extend_n of an empty list");
    Scalar acc = grades.front();
    for (std::size_t k = 1; k < grades.size(); ++k) acc = t(acc, grades[k]);
    return acc;
}

template <typename Scalar>
Scalar extend_n(const BasicTNorm<Scalar>& t, std::initializer_list<Scalar> grades) {
    return extend_n(t, std::span<const Scalar>(grades.begin(), grades.size()));
}

/// The n-ary value used to realize a product: closed form if the t-norm
/// carries one, the fold otherwise.
template <typename Scalar>
Scalar realize_n(const BasicTNorm<Scalar>& t, std::span<const Scalar> grades) {
    if (t.closed_form) {
        if (grades.empty()) throw std::invalid_argument("realize_n of an empty list");
        return t.closed_form(grades);
    }
    return extend_n(t, grades);
}

/// {0, step, 2 step, ..., 1}. When 1/step is an integer N the points are i/N.
template <typename Scalar>
std::vector<Scalar> grid_points(Scalar step) {
    if (!(step > Scalar(0)) || step >= Scalar(1)) {
        throw std::invalid_argument("grid step must lie in (0,1)");
    }
    std::vector<Scalar> pts;
    const Scalar inv = Scalar(1) / step;
    const Scalar rounded = std::round(inv);
    if (std::abs(inv - rounded) < Scalar(1e-9)) {
        const auto n = static_cast<long>(rounded);
        for (long i = 0; i <= n; ++i) pts.push_back(Scalar(i) / Scalar(n));
    } else {
        for (long i = 0; Scalar(i) * step < Scalar(1); ++i) pts.push_back(Scalar(i) * step);
        pts.push_back(Scalar(1));
    }
    return pts;
}

/// Samples the t-norm laws and the boundary laws over grid_points(step).
/// Witness elements are grid indices. `tol` defaults to t.tolerance.
template <typename Scalar>
CheckReport conformance(const BasicTNorm<Scalar>& t, Scalar step,
                        std::optional<Scalar> tol = std::nullopt,
                        std::size_t limit = kDefaultWitnessLimit) {
    if (!(step > Scalar(0)) || step > Scalar(0.5)) {
        throw std::invalid_argument("conformance grid step must lie in (0, 0.5]");
    }
    const Scalar eps = tol.value_or(t.tolerance);
    const auto g = grid_points(step);
    const auto n = static_cast<Index>(g.size());
    auto close = [&](Scalar x, Scalar y) { return std::abs(x - y) <= eps; };

    LawReport assoc{"associativity", {}}, mono{"monotonicity", {}}, comm{"commutativity", {}},
        unit{"unit", {}}, left_unit{"left-unit", {}}, zero{"zero-absorption", {}},
        range{"range", {}};

    std::vector<Scalar> table(static_cast<std::size_t>(n * n));
    auto at = [&](Index i, Index j) -> Scalar& { return table[static_cast<std::size_t>(i * n + j)]; };
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            at(i, j) = t(g[i], g[j]);
            if (!is_grade(at(i, j))) range.add("t(a,b) in [0,1]", {i, j}, limit);
        }
    }
    for (Index i = 0; i < n; ++i) {
        if (!close(t(g[i], Scalar(1)), g[i])) unit.add("t(a,1)=a", {i}, limit);
        if (!close(t(Scalar(1), g[i]), g[i])) left_unit.add("t(1,a)=a", {i}, limit);
        if (t(g[i], Scalar(0)) != Scalar(0) || t(Scalar(0), g[i]) != Scalar(0)) {
            zero.add("t(a,0)=t(0,a)=0", {i}, limit);
        }
        for (Index j = 0; j < n; ++j) {
            if (!close(at(i, j), at(j, i))) {
                comm.add("t(a,b)=t(b,a)", {i, j}, limit);
            }
            for (Index k = j + 1; k < n; ++k) {
                if (at(i, j) > at(i, k) + eps) mono.add("b<=c => t(a,b)<=t(a,c)", {i, j, k}, limit);
            }
            for (Index k = 0; k < n; ++k) {
                const Scalar lhs = t(g[i], at(j, k));
                const Scalar rhs = t(at(i, j), g[k]);
                if (!close(lhs, rhs)) assoc.add("t(a,t(b,c))=t(t(a,b),c)", {i, j, k}, limit);
            }
        }
    }
    CheckReport report{"t-norm conformance: " + t.name, {}, {}};
    report.notes.push_back("grid step " + std::to_string(static_cast<double>(step)) + ", " +
                           std::to_string(n) + " points, tolerance " +
                           std::to_string(static_cast<double>(eps)));
    for (auto* r : {&assoc, &mono, &comm, &unit, &left_unit, &zero, &range}) {
        report.checks.push_back(std::move(*r));
    }
    return report;
}

template <typename Scalar>
struct ZeroDivisorWitness {
    Scalar a;
    Scalar b;
    std::string note;
};

template <typename Scalar>
struct NilpotentWitness {
    Scalar a;
    int n;
};

/// First interior grid pair (a,b) with t(a,b) == 0. A hit proves zero
/// divisors; nullopt is only evidence of absence.
template <typename Scalar>
std::optional<ZeroDivisorWitness<Scalar>> find_zero_divisor(const BasicTNorm<Scalar>& t,
                                                            Scalar step) {
    const auto g = grid_points(step);
    for (std::size_t i = 1; i + 1 < g.size(); ++i) {
        for (std::size_t j = 1; j + 1 < g.size(); ++j) {
            if (t(g[i], g[j]) == Scalar(0)) {
                return ZeroDivisorWitness<Scalar>{g[i], g[j], "grid scan, step " +
                                                                  std::to_string(double(step))};
            }
        }
    }
    return std::nullopt;
}

/// Smallest n in [2, max_n] with the n-fold power of a equal to 0.
template <typename Scalar>
std::optional<int> nilpotency_order(const BasicTNorm<Scalar>& t, Scalar a, int max_n) {
    if (max_n < 2) throw std::invalid_argument("max_n must be at least 2");
    Scalar acc = a;
    for (int n = 2; n <= max_n; ++n) {
        acc = t(acc, a);
        if (acc == Scalar(0)) return n;
    }
    return std::nullopt;
}

/// First interior grid point with a finite nilpotency order up to max_n.
template <typename Scalar>
std::optional<NilpotentWitness<Scalar>> find_nilpotent(const BasicTNorm<Scalar>& t, Scalar step,
                                                       int max_n) {
    if (max_n < 2) throw std::invalid_argument("max_n must be at least 2");
    const auto g = grid_points(step);
    for (std::size_t i = 1; i + 1 < g.size(); ++i) {
        if (auto n = nilpotency_order(t, g[i], max_n)) return NilpotentWitness<Scalar>{g[i], *n};
    }
    return std::nullopt;
}

}  // namespace fuzzylat
