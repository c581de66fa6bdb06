#include "cyclicpoly/cyclic.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "cyclicpoly/errors.hpp"

namespace cyclicpoly {

void PolytopeParams::validate() const {
    if (d < 2) {
        throw params_error("invalid parameters: d must be >= 2 (d=" + std::to_string(d) + ")");
    }
    if (v < d + 1) {
        throw params_error("invalid parameters: v must be >= d+1 (v=" + std::to_string(v) +
                           ", d=" + std::to_string(d) + ")");
    }
}

ExtendedFSequence::ExtendedFSequence(PolytopeParams params, std::vector<Count> entries)
    : params_(params), entries_(std::move(entries)) {
    params_.validate();
    if (entries_.size() != static_cast<std::size_t>(params_.d) + 2) {
        throw std::invalid_argument("extended f-sequence must have d+2 entries");
    }
    if (entries_.front() != 1 || entries_.back() != 1) {
        throw std::invalid_argument("extended f-sequence must start and end with 1");
    }
    for (const Count& e : entries_) {
        if (e <= 0) {
            throw std::invalid_argument("extended f-sequence entries must be positive");
        }
    }
}

FanTriangle::FanTriangle(PolytopeParams params, std::vector<std::vector<Count>> rows)
    : params_(params), rows_(std::move(rows)) {
    params_.validate();
    if (rows_.size() != static_cast<std::size_t>(params_.d) + 1) {
        throw std::invalid_argument("triangle must have d+1 rows");
    }
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (rows_[k].size() != k + 2) {
            throw std::invalid_argument("triangle row " + std::to_string(k) +
                                        " must have " + std::to_string(k + 2) + " entries");
        }
    }
}

Count FanTriangle::entry(std::int64_t k, std::int64_t j) const {
    if (k < 0 || k > params_.d) {
        throw std::out_of_range("triangle row index out of range");
    }
    if (j < -1 || j > k) {
        return 0;
    }
    return rows_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j + 1)];
}

const std::vector<Count>& FanTriangle::row(std::int64_t k) const {
    if (k < 0 || k > params_.d) {
        throw std::out_of_range("triangle row index out of range");
    }
    return rows_[static_cast<std::size_t>(k)];
}

HVector h_vector(const PolytopeParams& params) {
    params.validate();
    const std::int64_t d = params.d;
    const std::int64_t half = d / 2; // floor
    std::vector<Count> h(static_cast<std::size_t>(d) + 1);
    for (std::int64_t j = 0; j <= half; ++j) {
        h[static_cast<std::size_t>(j)] = binom(params.v - d - 1 + j, j);
    }
    for (std::int64_t j = half + 1; j <= d; ++j) {
        h[static_cast<std::size_t>(j)] = h[static_cast<std::size_t>(d - j)];
    }
    return HVector{params, std::move(h)};
}

namespace {

// sum_{i=0}^{k} C(k-i, k-j-1) h_i, the defining sum shared by the f-vector
// entries (k = d) and the interior triangle entries.
Count transform_sum(const HVector& h, std::int64_t k, std::int64_t j) {
    Count sum = 0;
    for (std::int64_t i = 0; i <= k; ++i) {
        const std::int64_t top = k - i;
        const std::int64_t bottom = k - j - 1;
        if (bottom < 0 || bottom > top) {
            continue; // binomial vanishes
        }
        sum += binom(top, bottom) * h.at(i);
    }
    return sum;
}

} // namespace

Count f_entry_direct(const PolytopeParams& params, std::int64_t j) {
    params.validate();
    if (j < -1 || j > params.d - 1) {
        throw std::out_of_range("f-vector index must lie in [-1, d-1]");
    }
    return transform_sum(h_vector(params), params.d, j);
}

ExtendedFSequence f_vector_direct(const PolytopeParams& params) {
    params.validate();
    const HVector h = h_vector(params);
    std::vector<Count> entries;
    entries.reserve(static_cast<std::size_t>(params.d) + 2);
    for (std::int64_t j = -1; j <= params.d - 1; ++j) {
        entries.push_back(transform_sum(h, params.d, j));
    }
    entries.emplace_back(1);
    return ExtendedFSequence(params, std::move(entries));
}

Count triangle_entry_direct(const PolytopeParams& params, std::int64_t k, std::int64_t j) {
    params.validate();
    if (k < 0 || k > params.d) {
        throw std::out_of_range("triangle row index must lie in [0, d]");
    }
    if (j > k || j < -1) {
        return 0;
    }
    if (j == k) {
        return k == params.d ? Count(1) : h_vector(params).at(k + 1);
    }
    return transform_sum(h_vector(params), k, j);
}

namespace {

// One step of the recursion: row k-1 (logical -1..k-1) -> row k (logical
// -1..k), diagonal seeded separately.
std::vector<Count> extend_row(const std::vector<Count>& prev, Count seed) {
    std::vector<Count> next;
    next.reserve(prev.size() + 1);
    next.emplace_back(1); // entry at j = -1: 0 + prev(-1)
    for (std::size_t i = 0; i + 1 < prev.size(); ++i) {
        next.push_back(prev[i] + prev[i + 1]);
    }
    next.push_back(std::move(seed));
    return next;
}

} // namespace

FanTriangle build_triangle(const PolytopeParams& params) {
    params.validate();
    const HVector h = h_vector(params);
    const std::int64_t d = params.d;
    std::vector<std::vector<Count>> rows;
    rows.reserve(static_cast<std::size_t>(d) + 1);
    rows.push_back({Count(1), h.at(1)});
    for (std::int64_t k = 1; k <= d; ++k) {
        Count seed = (k == d) ? Count(1) : h.at(k + 1);
        rows.push_back(extend_row(rows.back(), std::move(seed)));
    }
    return FanTriangle(params, std::move(rows));
}

ExtendedFSequence f_vector_from_triangle(const FanTriangle& tri) {
    return ExtendedFSequence(tri.params(), tri.row(tri.dim()));
}

ExtendedFSequence f_vector_triangle_streaming(const PolytopeParams& params) {
    params.validate();
    const HVector h = h_vector(params);
    const std::int64_t d = params.d;
    std::vector<Count> row = {Count(1), h.at(1)};
    for (std::int64_t k = 1; k <= d; ++k) {
        Count seed = (k == d) ? Count(1) : h.at(k + 1);
        row = extend_row(row, std::move(seed));
    }
    return ExtendedFSequence(params, std::move(row));
}

} // namespace cyclicpoly
