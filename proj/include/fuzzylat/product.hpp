#pragma once

#include <algorithm>
#include <array>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "fuzzylat/frame.hpp"
#include "fuzzylat/order.hpp"
#include "fuzzylat/tnorm.hpp"

namespace fuzzylat {

struct ProductOptions {
    std::string separator;  // "" reproduces labels like "w1w2"
    Index max_elements = 4096;
};

class ProductSizeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Coordinatewise lattice operations carried by a product by definition,
/// as opposed to the ones derived from its relation.
struct DeclaredStructure {
    IndexTable meet;
    IndexTable join;
    Index bottom;
    Index top;
};

/// Direct product of bounded fuzzy lattices realized by a t-norm.
///
/// Carrier order is row-major with the first factor varying slowest;
/// index_map row p holds the factor coordinates of product element p.
template <typename Scalar>
struct BasicProductFrame {
    std::vector<BasicBoundedLattice<Scalar>> factors;
    BasicTNorm<Scalar> tnorm;
    BasicFrame<Scalar> frame;
    IndexTable index_map;
    std::string separator;
    std::vector<std::string> notes;

    Index encode(std::span<const Index> coords) const {
        Index p = 0;
        for (std::size_t k = 0; k < factors.size(); ++k) p = p * factors[k].size() + coords[k];
        return p;
    }
};

using ProductFrame = BasicProductFrame<double>;

namespace detail {

inline IndexTable row_major_tuples(const std::vector<Index>& sizes) {
    Index total = 1;
    for (Index s : sizes) total *= s;
    IndexTable map(total, static_cast<Index>(sizes.size()));
    for (Index p = 0; p < total; ++p) {
        Index rest = p;
        for (auto k = static_cast<Index>(sizes.size()); k-- > 0;) {
            map(p, k) = rest % sizes[static_cast<std::size_t>(k)];
            rest /= sizes[static_cast<std::size_t>(k)];
        }
    }
    return map;
}

template <typename Scalar>
std::vector<std::string> product_labels(const std::vector<const BasicFrame<Scalar>*>& factors,
                                        const IndexTable& map, const std::string& sep) {
    std::vector<std::string> labels(static_cast<std::size_t>(map.rows()));
    for (Index p = 0; p < map.rows(); ++p) {
        std::string s;
        for (Index k = 0; k < map.cols(); ++k) {
            if (k > 0) s += sep;
            s += factors[static_cast<std::size_t>(k)]->label(map(p, k));
        }
        labels[static_cast<std::size_t>(p)] = std::move(s);
    }
    return labels;
}

inline bool distinct(const std::vector<std::string>& labels) {
    std::unordered_set<std::string> seen(labels.begin(), labels.end());
    return seen.size() == labels.size();
}

}  // namespace detail

namespace detail {

template <typename Scalar>
struct RawProduct {
    BasicFrame<Scalar> frame;
    IndexTable index_map;
    std::string separator;
    std::vector<std::string> notes;
};

template <typename Scalar>
RawProduct<Scalar> product_of(const std::vector<const BasicFrame<Scalar>*>& factors,
                              const BasicTNorm<Scalar>& t, const ProductOptions& opts) {
    if (factors.empty()) throw std::invalid_argument("direct product needs at least one factor");
    std::vector<Index> sizes;
    Index total = 1;
    for (const auto* f : factors) {
        total = std::min<Index>(total * f->size(), opts.max_elements + 1);
        sizes.push_back(f->size());
    }
    if (total > opts.max_elements) {
        throw ProductSizeError("product carrier exceeds " + std::to_string(opts.max_elements) +
                               " elements");
    }

    IndexTable map = row_major_tuples(sizes);
    std::vector<std::string> notes;
    std::string sep = opts.separator;
    auto labels = product_labels(factors, map, sep);
    if (!distinct(labels)) {
        if (sep.empty()) {
            sep = ",";
            labels = product_labels(factors, map, sep);
            notes.push_back("empty separator produced colliding labels; fell back to ','");
        }
        if (!distinct(labels)) {
            throw FrameError("product labels collide with separator '" + sep + "'");
        }
    }

    const auto nf = factors.size();
    GradeMatrix<Scalar> mu(total, total);
    std::vector<Scalar> grades(nf);
    for (Index p = 0; p < total; ++p) {
        for (Index q = 0; q < total; ++q) {
            for (std::size_t k = 0; k < nf; ++k) {
                const auto kk = static_cast<Index>(k);
                grades[k] = (*factors[k])(map(p, kk), map(q, kk));
            }
            mu(p, q) = realize_n(t, std::span<const Scalar>(grades));
        }
    }
    return RawProduct<Scalar>{BasicFrame<Scalar>(std::move(labels), std::move(mu)),
                              std::move(map), std::move(sep), std::move(notes)};
}

}  // namespace detail

template <typename Scalar>
BasicProductFrame<Scalar> direct_product(std::vector<BasicBoundedLattice<Scalar>> factors,
                                         BasicTNorm<Scalar> t, const ProductOptions& opts = {}) {
    std::vector<const BasicFrame<Scalar>*> frames;
    for (const auto& f : factors) frames.push_back(&f.frame());
    auto raw = detail::product_of(frames, t, opts);
    return BasicProductFrame<Scalar>{std::move(factors), std::move(t), std::move(raw.frame),
                                     std::move(raw.index_map), std::move(raw.separator),
                                     std::move(raw.notes)};
}

/// Product relation of arbitrary frames (no lattice structure needed), same
/// carrier order and labels as direct_product.
template <typename Scalar>
BasicFrame<Scalar> product_frame(const std::vector<BasicFrame<Scalar>>& factors,
                                 const BasicTNorm<Scalar>& t, const ProductOptions& opts = {}) {
    std::vector<const BasicFrame<Scalar>*> frames;
    for (const auto& f : factors) frames.push_back(&f);
    return detail::product_of(frames, t, opts).frame;
}

/// Coordinatewise meets, joins, bottom and top of the product.
template <typename Scalar>
DeclaredStructure declared_structure(const BasicProductFrame<Scalar>& p) {
    const Index n = p.frame.size();
    const auto nf = p.factors.size();
    DeclaredStructure d{IndexTable(n, n), IndexTable(n, n), 0, 0};
    std::vector<Index> m(nf), j(nf), lo(nf), hi(nf);
    for (std::size_t k = 0; k < nf; ++k) {
        lo[k] = p.factors[k].bottom();
        hi[k] = p.factors[k].top();
    }
    d.bottom = p.encode(lo);
    d.top = p.encode(hi);
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
            for (std::size_t k = 0; k < nf; ++k) {
                const auto kk = static_cast<Index>(k);
                m[k] = p.factors[k].meet(p.index_map(a, kk), p.index_map(b, kk));
                j[k] = p.factors[k].join(p.index_map(a, kk), p.index_map(b, kk));
            }
            d.meet(a, b) = p.encode(m);
            d.join(a, b) = p.encode(j);
        }
    }
    return d;
}

/// Derived and declared structure disagree on a certified product.
class StructureMismatch : public std::logic_error {
public:
    StructureMismatch(const std::string& what, IndexTuple elements)
        : std::logic_error(what), elements_(std::move(elements)) {}
    const IndexTuple& elements() const noexcept { return elements_; }

private:
    IndexTuple elements_;
};

/// Certifies the product relation from scratch, then checks the derived
/// meets, joins, bottom and top against the coordinatewise ones.
template <typename Scalar>
CertResult<Scalar> certify_product(const BasicProductFrame<Scalar>& p) {
    auto result = certify_lattice(p.frame);
    const auto* lattice = std::get_if<BasicBoundedLattice<Scalar>>(&result);
    if (!lattice) return result;

    const auto declared = declared_structure(p);
    if (lattice->bottom() != declared.bottom) {
        throw StructureMismatch("derived bottom differs from coordinatewise bottom",
                               {lattice->bottom(), declared.bottom});
    }
    if (lattice->top() != declared.top) {
        throw StructureMismatch("derived top differs from coordinatewise top",
                               {lattice->top(), declared.top});
    }
    for (Index a = 0; a < p.frame.size(); ++a) {
        for (Index b = 0; b < p.frame.size(); ++b) {
            if (lattice->meet(a, b) != declared.meet(a, b)) {
                throw StructureMismatch("derived meet differs from coordinatewise meet", {a, b});
            }
            if (lattice->join(a, b) != declared.join(a, b)) {
                throw StructureMismatch("derived join differs from coordinatewise join", {a, b});
            }
        }
    }
    return result;
}

/// A triple (a, b, c) with mu(a,b) > 0, mu(b,c) > 0 and mu(a,c) = 0.
///
/// Pairs (a, c) are scanned lexicographically; for the first pair that admits
/// an intermediate, the intermediate with the greatest index is reported.
template <typename Scalar>
std::optional<std::array<Index, 3>> witness_intransitivity(const BasicFrame<Scalar>& frame) {
    const Index n = frame.size();
    for (Index a = 0; a < n; ++a) {
        for (Index c = 0; c < n; ++c) {
            if (frame.positive(a, c)) continue;
            for (Index b = n; b-- > 0;) {
                if (frame.positive(a, b) && frame.positive(b, c)) {
                    return std::array<Index, 3>{a, b, c};
                }
            }
        }
    }
    return std::nullopt;
}

template <typename Scalar>
std::optional<std::array<Index, 3>> witness_intransitivity(const BasicProductFrame<Scalar>& p) {
    return witness_intransitivity(p.frame);
}

}  // namespace fuzzylat
