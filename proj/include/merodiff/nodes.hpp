#ifndef MERODIFF_NODES_HPP
#define MERODIFF_NODES_HPP

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "merodiff/errors.hpp"
#include "merodiff/scalar.hpp"

namespace merodiff {

// Ordered collocation points z_1..z_N. Distinctness is relative to the
// diameter: the entry formulas divide by z_i - z_j, so near-coincident nodes
// poison every downstream matrix.
template <ComplexScalar C>
class NodeSet {
public:
    using R = real_part_t<C>;

    explicit NodeSet(std::vector<C> points) : points_(std::move(points)) {
        if (points_.size() < 2)
            throw ValidationError("NodeSet: need at least 2 nodes");
        R min_sep = std::numeric_limits<R>::infinity();
        diameter_ = 0;
        for (std::size_t j = 0; j < points_.size(); ++j) {
            if (!is_finite(points_[j])) throw ValidationError("NodeSet: non-finite node");
            for (std::size_t k = j + 1; k < points_.size(); ++k) {
                const R d = std::abs(points_[j] - points_[k]);
                min_sep = std::min(min_sep, d);
                diameter_ = std::max(diameter_, d);
            }
        }
        if (min_sep <= R(1e-12) * diameter_)
            throw NodeSpacingError("NodeSet: nodes closer than 1e-12 of the diameter");
    }

    std::size_t size() const { return points_.size(); }
    const std::vector<C>& points() const { return points_; }
    const C& operator[](std::size_t i) const { return points_[i]; }
    R diameter() const { return diameter_; }

private:
    std::vector<C> points_;
    R diameter_ = 0;
};

template <ComplexScalar C>
struct Pole {
    C location;
    int order;  // 0 is allowed and makes the pole inert
};

template <ComplexScalar C>
class PoleSet {
public:
    PoleSet() = default;

    explicit PoleSet(std::vector<Pole<C>> poles) : poles_(std::move(poles)) {
        for (const auto& p : poles_) {
            if (p.order < 0) throw ValidationError("PoleSet: negative pole order");
            if (!is_finite(p.location)) throw ValidationError("PoleSet: non-finite pole");
        }
        for (std::size_t j = 0; j < poles_.size(); ++j)
            for (std::size_t k = j + 1; k < poles_.size(); ++k)
                if (poles_[j].location == poles_[k].location)
                    throw ValidationError("PoleSet: duplicate pole locations");
    }

    std::size_t size() const { return poles_.size(); }
    bool empty() const { return poles_.empty(); }
    const std::vector<Pole<C>>& poles() const { return poles_; }
    const Pole<C>& operator[](std::size_t i) const { return poles_[i]; }

private:
    std::vector<Pole<C>> poles_;
};

// n points on the segment direction*(t0, t1], z_k = direction*(t0 + (t1-t0)k/n)
// for k = 1..n. The k = n endpoint is exactly direction*t1.
template <ComplexScalar C>
NodeSet<C> segment_nodes(C direction, real_part_t<C> t0, real_part_t<C> t1, int n) {
    using R = real_part_t<C>;
    if (n < 2) throw ValidationError("segment_nodes: need n >= 2");
    if (!(t0 < t1)) throw ValidationError("segment_nodes: degenerate segment (t0 >= t1)");
    if (direction == C{0}) throw ValidationError("segment_nodes: zero direction");
    std::vector<C> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        const R t = (k == n) ? t1 : t0 + (t1 - t0) * (R(k) / R(n));
        pts.push_back(direction * C{t});
    }
    return NodeSet<C>(std::move(pts));
}

// x_j = -pi + 2*pi*j/n, j = 1..n, as complex values with zero imaginary part.
template <ComplexScalar C = Complex>
NodeSet<C> equispaced_periodic_nodes(int n) {
    using R = real_part_t<C>;
    if (n < 2) throw ValidationError("equispaced_periodic_nodes: need n >= 2");
    const R pi = std::acos(R(-1));
    std::vector<C> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) pts.push_back(C{-pi + (R(2) * pi * R(j)) / R(n)});
    return NodeSet<C>(std::move(pts));
}

// Every node must keep a distance of at least 1e-8 * diameter from every pole.
template <ComplexScalar C>
void validate_against_poles(const NodeSet<C>& nodes, const PoleSet<C>& poles) {
    using R = real_part_t<C>;
    const R threshold = R(1e-8) * nodes.diameter();
    for (std::size_t j = 0; j < nodes.size(); ++j)
        for (std::size_t k = 0; k < poles.size(); ++k)
            if (std::abs(nodes[j] - poles[k].location) <= threshold)
                throw NodeTooCloseToPoleError(j, k);
}

}  // namespace merodiff

#endif
