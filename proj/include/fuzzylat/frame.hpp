#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <concepts>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace fuzzylat {

using Index = Eigen::Index;

/// Dense grade matrix. Row-major so that row i holds mu(x_i, .).
template <typename Scalar>
using GradeMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Square table of element indices (meet / join tables).
using IndexTable = Eigen::Matrix<Index, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

class FrameError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

template <typename Scalar>
constexpr bool is_grade(Scalar v) noexcept {
    return v >= Scalar(0) && v <= Scalar(1);
}

/// A membership degree in [0,1]. NaN and out-of-range values are rejected.
template <std::floating_point Scalar>
class BasicGrade {
public:
    constexpr BasicGrade() = default;
    constexpr explicit BasicGrade(Scalar v) : value_(v) {
        if (!is_grade(v)) {
            throw FrameError("grade out of [0,1]: " + std::to_string(static_cast<double>(v)));
        }
    }

    constexpr Scalar value() const noexcept { return value_; }
    constexpr operator Scalar() const noexcept { return value_; }

    constexpr bool positive() const noexcept { return value_ > Scalar(0); }

    friend constexpr auto operator<=>(BasicGrade, BasicGrade) = default;

private:
    Scalar value_{0};
};

using Grade = BasicGrade<double>;

/// A labeled finite carrier with a fuzzy relation mu : X x X -> [0,1].
///
/// mu(i, j) is the grade of (elements[i], elements[j]). Validated on
/// construction: n >= 1, labels distinct, matrix square of side n, every entry
/// a grade. Immutable afterwards.
template <typename Scalar>
class BasicFrame {
public:
    using scalar_type = Scalar;
    using matrix_type = GradeMatrix<Scalar>;

    BasicFrame(std::vector<std::string> elements, matrix_type mu)
        : elements_(std::move(elements)), mu_(std::move(mu)) {
        const auto n = static_cast<Index>(elements_.size());
        if (n < 1) {
            throw FrameError("frame needs at least one element");
        }
        if (mu_.rows() != n || mu_.cols() != n) {
            throw FrameError("relation matrix is " + std::to_string(mu_.rows()) + "x" +
                             std::to_string(mu_.cols()) + ", expected " + std::to_string(n) +
                             "x" + std::to_string(n));
        }
        std::unordered_set<std::string> seen;
        for (const auto& label : elements_) {
            if (!seen.insert(label).second) {
                throw FrameError("duplicate element label '" + label + "'");
            }
        }
        for (Index i = 0; i < n; ++i) {
            for (Index j = 0; j < n; ++j) {
                if (!is_grade(mu_(i, j))) {
                    throw FrameError("grade out of [0,1] at (" + std::to_string(i) + "," +
                                     std::to_string(j) + ")");
                }
            }
        }
    }

    Index size() const noexcept { return static_cast<Index>(elements_.size()); }
    const std::vector<std::string>& elements() const noexcept { return elements_; }
    const std::string& label(Index i) const { return elements_.at(static_cast<std::size_t>(i)); }
    const matrix_type& mu() const noexcept { return mu_; }

    Scalar operator()(Index i, Index j) const { return mu_(i, j); }
    bool positive(Index i, Index j) const { return mu_(i, j) > Scalar(0); }

    /// Index of a label, or -1.
    Index find(const std::string& label) const {
        for (Index i = 0; i < size(); ++i) {
            if (elements_[static_cast<std::size_t>(i)] == label) return i;
        }
        return -1;
    }

    Index index_of(const std::string& label) const {
        const Index i = find(label);
        if (i < 0) throw FrameError("unknown element '" + label + "'");
        return i;
    }

    friend bool operator==(const BasicFrame& a, const BasicFrame& b) {
        return a.elements_ == b.elements_ && a.mu_ == b.mu_;
    }

private:
    std::vector<std::string> elements_;
    matrix_type mu_;
};

using Frame = BasicFrame<double>;

/// Relabels a frame by the permutation perm: new element k is old element perm[k].
template <typename Scalar>
BasicFrame<Scalar> permute(const BasicFrame<Scalar>& frame, const std::vector<Index>& perm) {
    const Index n = frame.size();
    if (static_cast<Index>(perm.size()) != n) throw FrameError("permutation size mismatch");
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    GradeMatrix<Scalar> mu(n, n);
    for (Index a = 0; a < n; ++a) {
        labels[static_cast<std::size_t>(a)] = frame.label(perm[static_cast<std::size_t>(a)]);
        for (Index b = 0; b < n; ++b) {
            mu(a, b) = frame(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
        }
    }
    return BasicFrame<Scalar>(std::move(labels), std::move(mu));
}

}  // namespace fuzzylat
