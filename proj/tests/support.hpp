#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "fuzzylat/fuzzylat.hpp"
#include "fuzzylat/io.hpp"

namespace testing_support {

inline std::string data(const std::string& name) { return std::string(FUZZYLAT_DATA) + "/" + name; }

template <typename Scalar = double>
fuzzylat::BasicFrame<Scalar> frame(std::vector<std::string> labels,
                                   std::initializer_list<std::initializer_list<double>> rows) {
    const auto n = static_cast<fuzzylat::Index>(rows.size());
    std::size_t width = 0;
    for (const auto& row : rows) width = std::max(width, row.size());
    fuzzylat::GradeMatrix<Scalar> mu = fuzzylat::GradeMatrix<Scalar>::Zero(n, static_cast<fuzzylat::Index>(width));
    fuzzylat::Index i = 0;
    for (const auto& row : rows) {
        fuzzylat::Index j = 0;
        for (double v : row) mu(i, j++) = Scalar(v);
        ++i;
    }
    return fuzzylat::BasicFrame<Scalar>(std::move(labels), std::move(mu));
}

inline fuzzylat::BoundedLattice chain_lattice() {
    return fuzzylat::certify_or_throw(fuzzylat::samples::four_chain());
}

inline fuzzylat::BoundedLattice square_lattice() {
    return fuzzylat::certify_or_throw(fuzzylat::samples::four_square());
}

}  // namespace testing_support
