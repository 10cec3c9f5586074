#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "ulc/errors.hpp"
#include "ulc/geometry.hpp"
#include "ulc/sample.hpp"

namespace ulc {

enum class PartitionMethod { voronoi2d, median, spacings1d, voronoi1d };

inline const char* to_string(PartitionMethod m) {
    switch (m) {
        case PartitionMethod::voronoi2d: return "voronoi2d";
        case PartitionMethod::median: return "median";
        case PartitionMethod::spacings1d: return "spacings1d";
        case PartitionMethod::voronoi1d: return "voronoi1d";
    }
    return "?";
}

/// One partition element: its owning design point, geometry, Lebesgue
/// measure, and the sup-norm diameter of the cell together with its site.
struct Cell {
    int owner = -1;
    bool is_box = true;
    Box box;                                       // box cells (median, 1-d variants)
    std::vector<std::array<double, 2>> polygon;    // convex polygon, k = 2 Voronoi only
    double measure = 0.0;
    double diameter_with_site = 0.0;
};

struct Partition {
    PartitionMethod method = PartitionMethod::median;
    std::vector<Cell> cells;    // cells[i] is owned by design point i
    double delta_n = 0.0;       // max_i d(cell_i U site_i), sup-norm

    /// Cell measures indexed by owning point; these are the estimator weights.
    std::vector<double> weights() const {
        std::vector<double> w(cells.size());
        for (const Cell& c : cells) w[static_cast<std::size_t>(c.owner)] = c.measure;
        return w;
    }

    double measure_sum() const {
        double s = 0.0;
        for (const Cell& c : cells) s += c.measure;
        return s;
    }
};

namespace detail {

inline double polygon_area(const std::vector<std::array<double, 2>>& poly) {
    const std::size_t m = poly.size();
    if (m < 3) return 0.0;
    double a = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& p = poly[i];
        const auto& q = poly[(i + 1) % m];
        a += p[0] * q[1] - q[0] * p[1];
    }
    return 0.5 * std::fabs(a);
}

/// Clip a convex polygon against the half-plane {x : (x-mid).dir <= 0},
/// where mid is the bisector midpoint and dir points from the kept site to
/// the clipping site. Sutherland-Hodgman, convexity preserved.
inline void clip_halfplane(std::vector<std::array<double, 2>>& poly, double mx, double my, double dx, double dy,
                           std::vector<std::array<double, 2>>& scratch) {
    scratch.clear();
    const std::size_t m = poly.size();
    if (m == 0) return;
    double sp = (poly[0][0] - mx) * dx + (poly[0][1] - my) * dy;
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = (i + 1) % m;
        const double sq = (poly[j][0] - mx) * dx + (poly[j][1] - my) * dy;
        const bool pin = sp <= 0.0;
        const bool qin = sq <= 0.0;
        if (pin) scratch.push_back(poly[i]);
        if (pin != qin) {
            const double t = sp / (sp - sq);
            scratch.push_back({poly[i][0] + t * (poly[j][0] - poly[i][0]),
                               poly[i][1] + t * (poly[j][1] - poly[i][1])});
        }
        sp = sq;
    }
    poly.swap(scratch);
}

inline double sup_diameter_with_site(const std::vector<std::array<double, 2>>& poly, const double* site) {
    // Sup-norm diameter of (polygon vertices U site): max per-axis extent.
    double xlo = site[0], xhi = site[0], ylo = site[1], yhi = site[1];
    for (const auto& v : poly) {
        xlo = std::min(xlo, v[0]);
        xhi = std::max(xhi, v[0]);
        ylo = std::min(ylo, v[1]);
        yhi = std::max(yhi, v[1]);
    }
    return std::max(xhi - xlo, yhi - ylo);
}

inline void check_pairwise_distinct_2d(const DesignSample& s) {
    const std::size_t n = s.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (s.coord(a, 0) != s.coord(b, 0)) return s.coord(a, 0) < s.coord(b, 0);
        return s.coord(a, 1) < s.coord(b, 1);
    });
    constexpr double tol = 1e-12;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (s.coord(order[j], 0) - s.coord(order[i], 0) > tol) break;
            if (std::fabs(s.coord(order[j], 1) - s.coord(order[i], 1)) <= tol)
                throw DuplicatePointsError("design points " + std::to_string(order[i]) + " and " +
                                           std::to_string(order[j]) + " coincide");
        }
    }
}

inline double box_diameter_with_site(const Box& b, const double* site) {
    double d = 0.0;
    for (int j = 0; j < b.dim(); ++j) {
        const double lo = std::min(b.lo[j], site[j]);
        const double hi = std::max(b.hi[j], site[j]);
        d = std::max(d, hi - lo);
    }
    return d;
}

}  // namespace detail

/// Voronoi partition of a 2-d box domain: each cell is the region of points
/// at least as close (Euclidean) to its site as to any other, clipped to the
/// domain rectangle by successive half-plane cuts. O(n^2) worst case; sites
/// are visited in order of |dx| with an early exit once the remaining
/// bisectors cannot intersect the current cell.
inline Partition partition_voronoi_2d(const DesignSample& sample) {
    if (sample.dim != 2) throw WrongDimensionError("voronoi2d requires k = 2");
    detail::check_pairwise_distinct_2d(sample);
    const std::size_t n = sample.size();
    const Box& th = sample.domain;

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return sample.coord(a, 0) < sample.coord(b, 0); });
    std::vector<std::size_t> rank(n);
    for (std::size_t r = 0; r < n; ++r) rank[static_cast<std::size_t>(order[r])] = r;

    Partition part;
    part.method = PartitionMethod::voronoi2d;
    part.cells.resize(n);

    const std::vector<std::array<double, 2>> domain_poly = {
        {th.lo[0], th.lo[1]}, {th.hi[0], th.lo[1]}, {th.hi[0], th.hi[1]}, {th.lo[0], th.hi[1]}};

    std::vector<std::array<double, 2>> poly, scratch;
    for (std::size_t i = 0; i < n; ++i) {
        const double* site = sample.point(i);
        poly = domain_poly;

        // Max Euclidean distance from the site to the current polygon; any
        // site farther than 2R cannot cut the cell.
        auto max_r = [&]() {
            double r2 = 0.0;
            for (const auto& v : poly) {
                const double ddx = v[0] - site[0], ddy = v[1] - site[1];
                r2 = std::max(r2, ddx * ddx + ddy * ddy);
            }
            return std::sqrt(r2);
        };
        double radius = max_r();

        // Walk outward from the site's x-rank, nearer |dx| first.
        std::size_t left = rank[i], right = rank[i] + 1;
        while (true) {
            int j = -1;
            double adxl = -1.0, adxr = -1.0;
            if (left > 0) adxl = site[0] - sample.coord(order[left - 1], 0);
            if (right < n) adxr = sample.coord(order[right], 0) - site[0];
            if (adxl >= 0.0 && (adxr < 0.0 || adxl <= adxr)) {
                if (adxl > 2.0 * radius) break;
                j = order[--left];
            } else if (adxr >= 0.0) {
                if (adxr > 2.0 * radius) break;
                j = order[right++];
            } else {
                break;
            }
            const double* other = sample.point(static_cast<std::size_t>(j));
            const double dx = other[0] - site[0], dy = other[1] - site[1];
            const double d2 = dx * dx + dy * dy;
            if (d2 > 4.0 * radius * radius) continue;
            detail::clip_halfplane(poly, 0.5 * (site[0] + other[0]), 0.5 * (site[1] + other[1]), dx, dy, scratch);
            radius = max_r();
        }

        Cell& cell = part.cells[i];
        cell.owner = static_cast<int>(i);
        cell.is_box = false;
        cell.polygon = poly;
        cell.measure = detail::polygon_area(poly);
        cell.diameter_with_site = detail::sup_diameter_with_site(poly, site);
        part.delta_n = std::max(part.delta_n, cell.diameter_with_site);
    }
    return part;
}

namespace detail {

inline int median_split_axis(const Box& box, bool is_root) {
    const int k = box.dim();
    if (is_root || k == 1) return 0;
    if (k == 2) return box.edge(0) > box.edge(1) ? 0 : 1;
    int axis = 0;
    for (int j = 1; j < k; ++j)
        if (box.edge(j) > box.edge(axis)) axis = j;
    return axis;
}

inline void median_recurse(const DesignSample& s, const Box& box, std::vector<int>& idx, bool is_root,
                           Partition& out) {
    if (idx.size() == 1) {
        Cell& cell = out.cells[static_cast<std::size_t>(idx[0])];
        cell.owner = idx[0];
        cell.is_box = true;
        cell.box = box;
        cell.measure = box.measure();
        cell.diameter_with_site = box_diameter_with_site(box, s.point(static_cast<std::size_t>(idx[0])));
        return;
    }
    const int axis = median_split_axis(box, is_root);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return s.coord(a, axis) < s.coord(b, axis); });
    const std::size_t m = idx.size() / 2;  // split after the floor(n/2)-th order statistic
    const double a = s.coord(idx[m - 1], axis);
    const double b = s.coord(idx[m], axis);
    if (a == b)
        throw SplitTieError("median split tie on axis " + std::to_string(axis) + " at " + std::to_string(a));
    const double cut = 0.5 * (a + b);

    Box lbox = box, rbox = box;
    lbox.hi[axis] = cut;
    rbox.lo[axis] = cut;
    std::vector<int> lidx(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(m));
    std::vector<int> ridx(idx.begin() + static_cast<std::ptrdiff_t>(m), idx.end());
    median_recurse(s, lbox, lidx, false, out);
    median_recurse(s, rbox, ridx, false, out);
}

}  // namespace detail

/// Recursive coordinate-wise median partition into boxes. The root split is
/// by the first coordinate; each later box splits along its longest edge
/// (for k = 2: width > height picks the first axis, otherwise the second;
/// for k > 2 ties go to the lowest axis index). A box with a single point
/// becomes that point's cell. Median = midpoint of the two central order
/// statistics of the points in the box.
inline Partition partition_median(const DesignSample& sample) {
    Partition part;
    part.method = PartitionMethod::median;
    part.cells.resize(sample.size());
    std::vector<int> idx(sample.size());
    std::iota(idx.begin(), idx.end(), 0);
    detail::median_recurse(sample, sample.domain, idx, true, part);
    part.delta_n = 0.0;
    for (const Cell& c : part.cells) part.delta_n = std::max(part.delta_n, c.diameter_with_site);
    return part;
}

namespace detail {

inline std::vector<int> sorted_order_1d(const DesignSample& s) {
    if (s.dim != 1) throw WrongDimensionError("1-d partition requires k = 1");
    if (!(s.domain.lo[0] == 0.0 && s.domain.hi[0] == 1.0))
        throw DomainMismatchError("1-d partition variants are defined on [0,1] only");
    std::vector<int> order(s.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return s.coord(a, 0) < s.coord(b, 0); });
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
        if (s.coord(order[i], 0) == s.coord(order[i + 1], 0))
            throw DuplicatePointsError("coinciding design points in 1-d partition");
    return order;
}

}  // namespace detail

/// Order-statistic spacing cells on [0,1]: cell i of the i-th order statistic
/// is (X_(i-1), X_(i)] with X_(0) = 0. The trailing segment (X_(n), 1] is
/// left unassigned, so measures sum to X_(n), not 1.
inline Partition partition_1d_spacings(const DesignSample& sample) {
    const std::vector<int> order = detail::sorted_order_1d(sample);
    const std::size_t n = order.size();
    Partition part;
    part.method = PartitionMethod::spacings1d;
    part.cells.resize(n);
    double prev = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        const double x = sample.coord(order[r], 0);
        Cell& cell = part.cells[static_cast<std::size_t>(order[r])];
        cell.owner = order[r];
        cell.is_box = true;
        cell.box = Box({prev}, {x});
        cell.measure = x - prev;
        cell.diameter_with_site = x - prev;  // site is the right endpoint
        part.delta_n = std::max(part.delta_n, cell.diameter_with_site);
        prev = x;
    }
    return part;
}

/// Midpoint (Voronoi) cells on [0,1]: cell i is
/// ((X_(i-1)+X_(i))/2, (X_(i)+X_(i+1))/2] with X_(0) = 0, X_(n+1) = 1,
/// so its measure is (X_(i+1) - X_(i-1))/2.
inline Partition partition_1d_voronoi(const DesignSample& sample) {
    const std::vector<int> order = detail::sorted_order_1d(sample);
    const std::size_t n = order.size();
    Partition part;
    part.method = PartitionMethod::voronoi1d;
    part.cells.resize(n);
    for (std::size_t r = 0; r < n; ++r) {
        const double xm = r == 0 ? 0.0 : sample.coord(order[r - 1], 0);
        const double x = sample.coord(order[r], 0);
        const double xp = r + 1 == n ? 1.0 : sample.coord(order[r + 1], 0);
        Cell& cell = part.cells[static_cast<std::size_t>(order[r])];
        cell.owner = order[r];
        cell.is_box = true;
        cell.box = Box({0.5 * (xm + x)}, {0.5 * (x + xp)});
        cell.measure = 0.5 * (xp - xm);
        cell.diameter_with_site = detail::box_diameter_with_site(cell.box, sample.point(static_cast<std::size_t>(order[r])));
        part.delta_n = std::max(part.delta_n, cell.diameter_with_site);
    }
    return part;
}

/// The design-quality statistic delta_n = max_i d(cell_i U site_i), sup-norm.
inline double max_cell_diameter(const Partition& partition) {
    double d = 0.0;
    for (const Cell& c : partition.cells) d = std::max(d, c.diameter_with_site);
    return d;
}

/// Caps every cell measure at `cap`, leaving geometry and delta_n unchanged.
/// Used when the true domain is smaller than the partitioned rectangle and
/// boundary cells would otherwise be overweighted.
inline Partition clamp_cell_measures(Partition partition, double cap) {
    if (!(cap > 0.0)) throw InvalidConfigError("measure cap must be positive");
    for (Cell& c : partition.cells) c.measure = std::min(c.measure, cap);
    return partition;
}

}  // namespace ulc
