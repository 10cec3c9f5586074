#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ulc/errors.hpp"
#include "ulc/geometry.hpp"

namespace ulc {

/// A design of n points in R^k with optional responses, over an axis-aligned
/// domain box. Points are stored flat, row-major (point i at [i*k, i*k+k)).
struct DesignSample {
    int dim = 0;
    std::vector<double> coords;
    std::optional<std::vector<double>> responses;
    Box domain;

    DesignSample() = default;
    DesignSample(int k, std::vector<double> coords_, std::optional<std::vector<double>> responses_, Box domain_)
        : dim(k), coords(std::move(coords_)), responses(std::move(responses_)), domain(std::move(domain_)) {
        validate();
    }

    std::size_t size() const { return dim == 0 ? 0 : coords.size() / static_cast<std::size_t>(dim); }

    const double* point(std::size_t i) const { return coords.data() + i * static_cast<std::size_t>(dim); }
    double coord(std::size_t i, int axis) const { return coords[i * static_cast<std::size_t>(dim) + axis]; }
    double response(std::size_t i) const { return (*responses)[i]; }

    bool has_responses() const { return responses.has_value(); }

    /// Sub-sample restricted to the given indices (domain unchanged).
    DesignSample subset(const std::vector<int>& idx) const {
        DesignSample out;
        out.dim = dim;
        out.domain = domain;
        out.coords.reserve(idx.size() * static_cast<std::size_t>(dim));
        for (int i : idx)
            for (int j = 0; j < dim; ++j) out.coords.push_back(coord(i, j));
        if (responses) {
            std::vector<double> r;
            r.reserve(idx.size());
            for (int i : idx) r.push_back((*responses)[i]);
            out.responses = std::move(r);
        }
        return out;
    }

    void validate() const {
        if (dim < 1) throw WrongDimensionError("sample dimension must be >= 1");
        if (domain.dim() != dim) throw WrongDimensionError("sample/domain dimension mismatch");
        const std::size_t n = size();
        if (n < 1) throw InvalidConfigError("sample must hold at least one point");
        if (coords.size() != n * static_cast<std::size_t>(dim))
            throw LengthMismatchError("coordinate array is not a multiple of dim");
        if (responses && responses->size() != n)
            throw LengthMismatchError("points and responses have different lengths");
        for (std::size_t i = 0; i < n; ++i)
            if (!domain.contains(point(i)))
                throw InvalidConfigError("point " + std::to_string(i) + " lies outside the domain box");
    }
};

}  // namespace ulc
