#pragma once

#include "fuzzylat/frame.hpp"

// Two small worked lattices used throughout the docs and tests: a 4-chain
// w1 < x1 < y1 < z1 and a 4-element square w2 < x2, y2 < z2.

namespace fuzzylat::samples {

template <typename Scalar = double>
BasicFrame<Scalar> four_chain() {
    GradeMatrix<Scalar> mu(4, 4);
    mu << 1, 0.1, 0.4, 0.8,
          0, 1, 0.2, 0.5,
          0, 0, 1, 0.3,
          0, 0, 0, 1;
    return BasicFrame<Scalar>({"w1", "x1", "y1", "z1"}, std::move(mu));
}

template <typename Scalar = double>
BasicFrame<Scalar> four_square() {
    GradeMatrix<Scalar> mu(4, 4);
    mu << 1, 0.1, 0.3, 0.9,
          0, 1, 0, 0.6,
          0, 0, 1, 0.4,
          0, 0, 0, 1;
    return BasicFrame<Scalar>({"w2", "x2", "y2", "z2"}, std::move(mu));
}

}  // namespace fuzzylat::samples
