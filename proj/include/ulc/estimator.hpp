#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ulc/errors.hpp"
#include "ulc/geometry.hpp"
#include "ulc/kernel.hpp"
#include "ulc/partition.hpp"
#include "ulc/sample.hpp"

namespace ulc {

enum class EstimatorMode { ulc, nw };

/// Immutable fitted local-constant model
///
///   f*(t) = sum_i Y_i K_eps(t - X_i) w_i / sum_i K_eps(t - X_i) w_i,
///
/// with 0/0 = 0. In `ulc` mode the weights are partition cell measures; in
/// `nw` mode all weights are one and the model is the Nadaraya-Watson
/// estimator. Points are mirrored into arrays sorted by the first coordinate
/// so window scans are cheap; the accumulation order is a deterministic
/// function of the sample alone, so the index never changes results between
/// calls or modes.
struct FittedLocalConstant {
    DesignSample sample;
    std::vector<double> weights;
    KernelSpec kernel;
    double eps = 0.0;
    EstimatorMode mode = EstimatorMode::ulc;

    // sorted-by-first-coordinate mirrors
    std::vector<double> sorted_x;       // first coordinates
    std::vector<double> sorted_coords;  // all coordinates, flat
    std::vector<double> sorted_y;
    std::vector<double> sorted_w;
};

/// Denominators below this are treated as exactly zero (the 0/0 = 0 branch).
inline constexpr double kDenominatorFloor = 1e-300;

inline FittedLocalConstant fit(const DesignSample& sample, std::vector<double> weights, const KernelSpec& kernel,
                               double eps, EstimatorMode mode) {
    if (!sample.has_responses()) throw InvalidConfigError("fit requires responses");
    if (!(eps > 0.0)) throw NonpositiveBandwidthError("bandwidth must be positive");
    if (kernel.dim != sample.dim) throw WrongDimensionError("kernel/sample dimension mismatch");
    const std::size_t n = sample.size();
    if (weights.size() != n) throw LengthMismatchError("weights length differs from sample size");
    for (double w : weights) {
        if (!(w >= 0.0)) throw InvalidConfigError("weights must be nonnegative");
        if (mode == EstimatorMode::nw && w != 1.0)
            throw InvalidConfigError("nw mode requires unit weights");
    }

    FittedLocalConstant m;
    m.sample = sample;
    m.weights = std::move(weights);
    m.kernel = kernel;
    m.eps = eps;
    m.mode = mode;

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (sample.coord(a, 0) != sample.coord(b, 0)) return sample.coord(a, 0) < sample.coord(b, 0);
        return a < b;
    });
    const int k = sample.dim;
    m.sorted_x.resize(n);
    m.sorted_coords.resize(n * static_cast<std::size_t>(k));
    m.sorted_y.resize(n);
    m.sorted_w.resize(n);
    for (std::size_t r = 0; r < n; ++r) {
        const auto i = static_cast<std::size_t>(order[r]);
        m.sorted_x[r] = sample.coord(i, 0);
        for (int j = 0; j < k; ++j) m.sorted_coords[r * static_cast<std::size_t>(k) + j] = sample.coord(i, j);
        m.sorted_y[r] = sample.response(i);
        m.sorted_w[r] = m.weights[i];
    }
    return m;
}

/// Nadaraya-Watson convenience constructor (all-ones weights).
inline FittedLocalConstant fit_nw(const DesignSample& sample, const KernelSpec& kernel, double eps) {
    return fit(sample, std::vector<double>(sample.size(), 1.0), kernel, eps, EstimatorMode::nw);
}

/// ULC constructor taking weights from a partition of the same sample.
inline FittedLocalConstant fit_ulc(const DesignSample& sample, const Partition& partition, const KernelSpec& kernel,
                                   double eps) {
    return fit(sample, partition.weights(), kernel, eps, EstimatorMode::ulc);
}

namespace detail {

struct WindowAccumulator {
    double num = 0.0;
    double den = 0.0;
};

/// Accumulates kernel-weighted sums over the sup-norm eps-window around t.
template <typename Visit>
inline void scan_window(const FittedLocalConstant& m, const double* t, Visit&& visit) {
    const int k = m.sample.dim;
    const double eps = m.eps;
    const auto first = std::lower_bound(m.sorted_x.begin(), m.sorted_x.end(), t[0] - eps) - m.sorted_x.begin();
    const auto last = std::upper_bound(m.sorted_x.begin() + first, m.sorted_x.end(), t[0] + eps) - m.sorted_x.begin();

    double inv_scale = 1.0;
    for (int j = 0; j < k; ++j) inv_scale /= eps;

    double u[8];
    double uh[8 > 0 ? 8 : 1];
    (void)uh;
    const bool small_k = k <= 8;
    std::vector<double> ubuf;
    double* uu = small_k ? u : (ubuf.resize(static_cast<std::size_t>(k)), ubuf.data());

    for (auto r = static_cast<std::size_t>(first); r < static_cast<std::size_t>(last); ++r) {
        const double* x = m.sorted_coords.data() + r * static_cast<std::size_t>(k);
        bool in = true;
        for (int j = 0; j < k; ++j) {
            const double d = t[j] - x[j];
            if (std::fabs(d) > eps) {
                in = false;
                break;
            }
            uu[j] = d / eps;
        }
        if (!in) continue;
        const double kv = kernel_value(m.kernel, uu);
        if (kv == 0.0) continue;
        visit(r, kv * inv_scale);
    }
}

}  // namespace detail

/// Pointwise estimate at t; 0 when no design point falls in the kernel
/// window (the 0/0 = 0 convention).
inline double evaluate(const FittedLocalConstant& m, const double* t) {
    detail::WindowAccumulator acc;
    detail::scan_window(m, t, [&](std::size_t r, double kv) {
        acc.num += m.sorted_y[r] * kv * m.sorted_w[r];
        acc.den += kv * m.sorted_w[r];
    });
    if (acc.den < kDenominatorFloor) return 0.0;
    return acc.num / acc.den;
}

inline double evaluate(const FittedLocalConstant& m, const std::vector<double>& t) { return evaluate(m, t.data()); }

/// Row-major grid evaluation (first axis fastest), identical to calling
/// `evaluate` at every node.
inline std::vector<double> evaluate_grid(const FittedLocalConstant& m, const GridSpec& grid) {
    if (grid.dim() != m.sample.dim) throw WrongDimensionError("grid/sample dimension mismatch");
    const std::size_t total = grid.total();
    if (total == 0) throw EmptyGridError("empty evaluation grid");
    std::vector<double> out(total);
    std::vector<double> node(grid.dim());
    for (std::size_t f = 0; f < total; ++f) {
        std::size_t rem = f;
        for (int j = 0; j < grid.dim(); ++j) {
            const int mcount = grid.counts[j];
            node[static_cast<std::size_t>(j)] = grid.coordinate(j, static_cast<int>(rem % mcount));
            rem /= static_cast<std::size_t>(mcount);
        }
        out[f] = evaluate(m, node.data());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Repeated-curve (panel) estimation
// ---------------------------------------------------------------------------

/// N independent series observed over a common domain, each with its own
/// design and partition.
struct FunctionalPanel {
    std::vector<std::pair<DesignSample, Partition>> copies;

    void validate() const {
        if (copies.empty()) throw InvalidConfigError("panel must hold at least one copy");
        const int k = copies.front().first.dim;
        const Box& dom = copies.front().first.domain;
        for (std::size_t j = 0; j < copies.size(); ++j) {
            if (copies[j].first.dim != k || !(copies[j].first.domain == dom))
                throw InvalidConfigError("panel copies must share dim and domain (copy " + std::to_string(j) + ")");
            if (copies[j].second.cells.size() != copies[j].first.size())
                throw LengthMismatchError("partition size mismatch in copy " + std::to_string(j));
        }
    }
};

/// Pointwise average over copies of the per-copy fitted estimates:
/// (1/N) sum_j f*_j(t) on the grid.
inline std::vector<double> mean_function_estimate(const FunctionalPanel& panel, const KernelSpec& kernel, double eps,
                                                  const GridSpec& grid) {
    panel.validate();
    const std::size_t total = grid.total();
    std::vector<double> mean(total, 0.0);
    for (std::size_t j = 0; j < panel.copies.size(); ++j) {
        try {
            const auto model = fit_ulc(panel.copies[j].first, panel.copies[j].second, kernel, eps);
            const auto values = evaluate_grid(model, grid);
            for (std::size_t f = 0; f < total; ++f) mean[f] += values[f];
        } catch (const Error& e) {
            throw InvalidConfigError("copy " + std::to_string(j) + ": " + e.what());
        }
    }
    const double inv = 1.0 / static_cast<double>(panel.copies.size());
    for (double& v : mean) v *= inv;
    return mean;
}

/// Mixed second-moment estimate M*(t1,t2) = (1/N) sum_j f*_j(t1) f*_j(t2)
/// over all grid node pairs; returned row-major with index [a * G + b].
inline std::vector<double> second_moment_estimate(const FunctionalPanel& panel, const KernelSpec& kernel, double eps,
                                                  const GridSpec& grid) {
    panel.validate();
    const std::size_t total = grid.total();
    std::vector<double> moment(total * total, 0.0);
    for (std::size_t j = 0; j < panel.copies.size(); ++j) {
        try {
            const auto model = fit_ulc(panel.copies[j].first, panel.copies[j].second, kernel, eps);
            const auto values = evaluate_grid(model, grid);
            for (std::size_t a = 0; a < total; ++a)
                for (std::size_t b = 0; b < total; ++b) moment[a * total + b] += values[a] * values[b];
        } catch (const Error& e) {
            throw InvalidConfigError("copy " + std::to_string(j) + ": " + e.what());
        }
    }
    const double inv = 1.0 / static_cast<double>(panel.copies.size());
    for (double& v : moment) v *= inv;
    return moment;
}

/// Covariance estimate Cov*(t1,t2) = M*(t1,t2) - mean(t1) mean(t2); requires
/// at least two copies.
inline std::vector<double> covariance_estimate(const FunctionalPanel& panel, const KernelSpec& kernel, double eps,
                                               const GridSpec& grid) {
    panel.validate();
    if (panel.copies.size() < 2) throw InsufficientCopiesError("covariance needs N >= 2 copies");
    const std::vector<double> mean = mean_function_estimate(panel, kernel, eps, grid);
    std::vector<double> cov = second_moment_estimate(panel, kernel, eps, grid);
    const std::size_t total = grid.total();
    for (std::size_t a = 0; a < total; ++a)
        for (std::size_t b = 0; b < total; ++b) cov[a * total + b] -= mean[a] * mean[b];
    return cov;
}

}  // namespace ulc
