#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "ulc/errors.hpp"

namespace ulc {

/// Axis-aligned box in R^k given by per-axis [lo, hi] bounds.
struct Box {
    std::vector<double> lo;
    std::vector<double> hi;

    Box() = default;
    Box(std::vector<double> lo_, std::vector<double> hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
        if (lo.size() != hi.size()) throw WrongDimensionError("box lo/hi dimension mismatch");
        for (std::size_t j = 0; j < lo.size(); ++j)
            if (!(lo[j] <= hi[j])) throw InvalidConfigError("box has lo > hi on axis " + std::to_string(j));
    }

    /// Unit cube [0,1]^k.
    static Box unit(int k) { return Box(std::vector<double>(k, 0.0), std::vector<double>(k, 1.0)); }
    /// Symmetric cube [-1,1]^k.
    static Box symmetric(int k) { return Box(std::vector<double>(k, -1.0), std::vector<double>(k, 1.0)); }

    int dim() const { return static_cast<int>(lo.size()); }

    double edge(int axis) const { return hi[axis] - lo[axis]; }

    double measure() const {
        double v = 1.0;
        for (std::size_t j = 0; j < lo.size(); ++j) v *= hi[j] - lo[j];
        return v;
    }

    /// Longest edge length (sup-norm diameter of the box).
    double max_edge() const {
        double m = 0.0;
        for (std::size_t j = 0; j < lo.size(); ++j) m = std::max(m, hi[j] - lo[j]);
        return m;
    }

    bool contains(const double* p, double tol = 0.0) const {
        for (std::size_t j = 0; j < lo.size(); ++j)
            if (p[j] < lo[j] - tol || p[j] > hi[j] + tol) return false;
        return true;
    }
    bool contains(const std::vector<double>& p, double tol = 0.0) const { return contains(p.data(), tol); }

    bool strictly_contains(const double* p) const {
        for (std::size_t j = 0; j < lo.size(); ++j)
            if (p[j] <= lo[j] || p[j] >= hi[j]) return false;
        return true;
    }

    bool operator==(const Box& o) const { return lo == o.lo && hi == o.hi; }
};

/// Sup-norm distance between two points of dimension k.
inline double sup_dist(const double* a, const double* b, int k) {
    double d = 0.0;
    for (int j = 0; j < k; ++j) d = std::max(d, std::fabs(a[j] - b[j]));
    return d;
}

inline double sup_norm(const double* a, int k) {
    double d = 0.0;
    for (int j = 0; j < k; ++j) d = std::max(d, std::fabs(a[j]));
    return d;
}

/// Evaluation lattice: per-axis node counts over a box.
///
/// Nodes along axis j are the endpoints-inclusive equispaced values
/// lo + (hi-lo)*i/(m-1), i = 0..m-1 (the box center when m == 1).
/// Flat indexing is row-major with the first axis fastest.
struct GridSpec {
    std::vector<int> counts;
    Box box;

    GridSpec() = default;
    GridSpec(std::vector<int> counts_, Box box_) : counts(std::move(counts_)), box(std::move(box_)) {
        if (static_cast<int>(counts.size()) != box.dim())
            throw WrongDimensionError("grid counts/box dimension mismatch");
        for (int m : counts)
            if (m < 1) throw EmptyGridError("grid axis with zero nodes");
    }

    int dim() const { return static_cast<int>(counts.size()); }

    std::size_t total() const {
        std::size_t t = 1;
        for (int m : counts) t *= static_cast<std::size_t>(m);
        return t;
    }

    double coordinate(int axis, int i) const {
        const int m = counts[axis];
        if (m == 1) return 0.5 * (box.lo[axis] + box.hi[axis]);
        return box.lo[axis] + (box.hi[axis] - box.lo[axis]) * (static_cast<double>(i) / (m - 1));
    }

    /// Node of the given flat index (first axis fastest).
    std::vector<double> node(std::size_t flat) const {
        std::vector<double> p(counts.size());
        for (std::size_t j = 0; j < counts.size(); ++j) {
            const int m = counts[j];
            p[j] = coordinate(static_cast<int>(j), static_cast<int>(flat % m));
            flat /= m;
        }
        return p;
    }
};

}  // namespace ulc
