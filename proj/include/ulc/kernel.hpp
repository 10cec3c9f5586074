#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "ulc/errors.hpp"
#include "ulc/geometry.hpp"

namespace ulc {

/// Univariate symmetric density on [-1, 1] used to build product kernels.
struct Kernel1D {
    std::string label;
    std::function<double(double)> pdf;
    std::function<double(double)> cdf;  // may be empty; enables analytic window integrals
    double lipschitz = 1.0;
    double sup = 1.0;
    bool edge_jump = false;  // discontinuous at the support boundary
};

inline Kernel1D uniform_base() {
    Kernel1D b;
    b.label = "uniform";
    b.pdf = [](double u) { return std::fabs(u) <= 1.0 ? 0.5 : 0.0; };
    b.cdf = [](double u) {
        if (u <= -1.0) return 0.0;
        if (u >= 1.0) return 1.0;
        return 0.5 * (u + 1.0);
    };
    b.lipschitz = 0.0;  // piecewise constant inside (-1,1)
    b.sup = 0.5;
    b.edge_jump = true;
    return b;
}

inline Kernel1D triangular_base() {
    Kernel1D b;
    b.label = "triangular";
    b.pdf = [](double u) {
        const double a = std::fabs(u);
        return a <= 1.0 ? 1.0 - a : 0.0;
    };
    b.cdf = [](double u) {
        if (u <= -1.0) return 0.0;
        if (u >= 1.0) return 1.0;
        if (u < 0.0) return 0.5 * (1.0 + u) * (1.0 + u);
        return 1.0 - 0.5 * (1.0 - u) * (1.0 - u);
    };
    b.lipschitz = 1.0;
    b.sup = 1.0;
    return b;
}

enum class KernelKind { tricubic2d, product };

/// A symmetric Lipschitz kernel density supported inside the unit sup-norm
/// ball, with a declared Lipschitz upper bound L >= 1 for the coordinate-sum
/// metric. `non_lipschitz_edge` marks kernels whose L holds only strictly
/// inside the support cube (the uniform product kernel); those are meant for
/// closed-form tests and are excluded from the theory-bound calculators.
struct KernelSpec {
    int dim = 1;
    KernelKind kind = KernelKind::product;
    Kernel1D base;  // product kernels only
    double lipschitz_L = 1.0;
    bool non_lipschitz_edge = false;

    std::string label() const {
        if (kind == KernelKind::tricubic2d) return "tricubic2d";
        return "product(" + base.label + ")";
    }
};

namespace detail {
// 440/(162*pi): normalizes (1 - r^3)^3 on the unit disk; the radial integral
// of (1 - r^3)^3 * r over [0,1] is 81/440.
inline constexpr double tricubic_c = 440.0 / (162.0 * std::numbers::pi);
}  // namespace detail

/// Kernel density at point s (dimension spec.dim). Zero outside the unit
/// sup-norm ball by construction.
inline double kernel_value(const KernelSpec& spec, const double* s) {
    if (spec.kind == KernelKind::tricubic2d) {
        const double r2 = s[0] * s[0] + s[1] * s[1];
        if (r2 >= 1.0) return 0.0;
        const double r = std::sqrt(r2);
        const double t = 1.0 - r * r * r;
        return detail::tricubic_c * t * t * t;
    }
    double v = 1.0;
    for (int j = 0; j < spec.dim; ++j) {
        v *= spec.base.pdf(s[j]);
        if (v == 0.0) return 0.0;
    }
    return v;
}

inline double kernel_value(const KernelSpec& spec, const std::vector<double>& s) {
    return kernel_value(spec, s.data());
}

/// The planar tricubic kernel (440/(162 pi)) * max{0, (1 - r^3)}^3, r = |s|_2.
/// Supported on the Euclidean unit disk; Lipschitz bound certified at 1.75
/// (the radial slope peaks at r = (1/4)^{1/3} with value ~1.7369).
inline KernelSpec make_tricubic() {
    KernelSpec k;
    k.dim = 2;
    k.kind = KernelKind::tricubic2d;
    k.lipschitz_L = 1.75;
    return k;
}

/// Product kernel from a univariate base density. The base must integrate to
/// one over [-1,1] (checked numerically, tolerance 1e-6).
inline KernelSpec make_product_kernel(const Kernel1D& base, int k) {
    if (k < 1) throw WrongDimensionError("product kernel dimension must be >= 1");
    // Composite Simpson over [-1,1]; the bases are piecewise smooth.
    const int panels = 1 << 14;
    const double h = 2.0 / panels;
    double integral = base.pdf(-1.0) + base.pdf(1.0);
    for (int i = 1; i < panels; ++i) integral += (i % 2 ? 4.0 : 2.0) * base.pdf(-1.0 + i * h);
    integral *= h / 3.0;
    if (std::fabs(integral - 1.0) > 1e-6)
        throw InvalidBaseError("base density integrates to " + std::to_string(integral) + ", not 1");

    KernelSpec spec;
    spec.dim = k;
    spec.kind = KernelKind::product;
    spec.base = base;
    double supk = 1.0;
    for (int j = 0; j < k - 1; ++j) supk *= base.sup;
    spec.lipschitz_L = std::max(1.0, base.lipschitz * supk);
    spec.non_lipschitz_edge = base.edge_jump;
    return spec;
}

/// Bandwidth-scaled kernel K_eps(s) = eps^{-k} K(s/eps). Exactly zero
/// whenever |s|_sup > eps.
inline double eval_scaled(const KernelSpec& spec, double eps, const double* s) {
    if (!(eps > 0.0)) throw NonpositiveBandwidthError("bandwidth must be positive");
    const int k = spec.dim;
    double scale = 1.0;
    std::array<double, 8> buf;
    std::vector<double> heap;
    double* u = k <= 8 ? buf.data() : (heap.resize(k), heap.data());
    for (int j = 0; j < k; ++j) {
        if (std::fabs(s[j]) > eps) return 0.0;
        u[j] = s[j] / eps;
        scale /= eps;
    }
    return scale * kernel_value(spec, u);
}

inline double eval_scaled(const KernelSpec& spec, double eps, const std::vector<double>& s) {
    return eval_scaled(spec, eps, s.data());
}

struct KernelVerifyReport {
    double integral = 0.0;
    double symmetry_defect = 0.0;
    double lipschitz_estimate = 0.0;
    bool integral_ok = false;
    bool symmetric_ok = false;
    bool lipschitz_ok = false;
    bool ok() const { return integral_ok && symmetric_ok && lipschitz_ok; }
};

namespace detail {

inline double halton(std::uint64_t index, int prime) {
    double f = 1.0, r = 0.0;
    for (std::uint64_t i = index + 1; i > 0; i /= static_cast<std::uint64_t>(prime)) {
        f /= prime;
        r += f * static_cast<double>(i % static_cast<std::uint64_t>(prime));
    }
    return r;
}

inline constexpr int halton_primes[8] = {2, 3, 5, 7, 11, 13, 17, 19};

}  // namespace detail

/// Checks the kernel assumptions on a quasi-random sample: normalization over
/// [-1,1]^k, central symmetry, and the Lipschitz bound via difference
/// quotients in the coordinate-sum metric (pairs sampled strictly inside the
/// open support cube, where the declared L is certified).
inline KernelVerifyReport verify_kernel(const KernelSpec& spec, std::size_t samples) {
    const int k = spec.dim;
    KernelVerifyReport rep;
    std::vector<double> s(k), neg(k), t(k);
    double sum = 0.0;
    const double step = 1e-5;
    for (std::size_t i = 0; i < samples; ++i) {
        for (int j = 0; j < k; ++j) {
            s[j] = 2.0 * detail::halton(i, detail::halton_primes[j % 8]) - 1.0;
            neg[j] = -s[j];
        }
        const double v = kernel_value(spec, s);
        sum += v;
        rep.symmetry_defect = std::max(rep.symmetry_defect, std::fabs(v - kernel_value(spec, neg)));

        // Difference quotient against a nearby point inside (-1,1)^k.
        bool inside = true;
        double dist1 = 0.0;
        for (int j = 0; j < k; ++j) {
            t[j] = s[j] + (j == static_cast<int>(i % static_cast<std::size_t>(k)) ? step : 0.0);
            dist1 += std::fabs(t[j] - s[j]);
            if (std::fabs(t[j]) >= 1.0 || std::fabs(s[j]) >= 1.0) inside = false;
        }
        if (inside && dist1 > 0.0)
            rep.lipschitz_estimate = std::max(rep.lipschitz_estimate, std::fabs(kernel_value(spec, t) - v) / dist1);
    }
    double volume = 1.0;
    for (int j = 0; j < k; ++j) volume *= 2.0;
    rep.integral = sum / static_cast<double>(samples) * volume;
    rep.integral_ok = std::fabs(rep.integral - 1.0) <= 1e-3;
    rep.symmetric_ok = rep.symmetry_defect <= 1e-9;
    rep.lipschitz_ok = rep.lipschitz_estimate <= spec.lipschitz_L * (1.0 + 1e-6);
    return rep;
}

}  // namespace ulc
