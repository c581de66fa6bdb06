#pragma once

#include <cstdint>
#include <vector>

#include "cyclicpoly/errors.hpp"
#include "cyclicpoly/exactcomb.hpp"

namespace cyclicpoly {

// Combinatorial type of the cyclic polytope C(v, d): v vertices on the
// moment curve, dimension d. Valid when d >= 2 and v >= d + 1.
struct PolytopeParams {
    std::int64_t v = 0;
    std::int64_t d = 0;

    // Throws params_error naming the violated bound.
    void validate() const;

    friend bool operator==(const PolytopeParams&, const PolytopeParams&) = default;
};

// h_0, ..., h_d of C(v, d). Symmetric: h_j = h_{d-j}.
struct HVector {
    PolytopeParams params;
    std::vector<Count> entries; // index j = 0..d

    const Count& at(std::int64_t j) const { return entries.at(static_cast<std::size_t>(j)); }
    std::int64_t dim() const { return params.d; }
};

// The f-vector of C(v, d) together with its bookends: the sequence
// f_{-1}, f_0, ..., f_{d-1}, 1 at logical indices -1..d. Stored zero-based
// with a fixed +1 offset; all accessors speak logical indices.
class ExtendedFSequence {
public:
    ExtendedFSequence(PolytopeParams params, std::vector<Count> entries);

    // j in [-1, d]
    const Count& at(std::int64_t j) const { return entries_.at(static_cast<std::size_t>(j + 1)); }
    const PolytopeParams& params() const { return params_; }
    std::int64_t dim() const { return params_.d; }
    // zero-based storage, entries_[j + 1] == f_j
    const std::vector<Count>& entries() const { return entries_; }

    friend bool operator==(const ExtendedFSequence& a, const ExtendedFSequence& b) {
        return a.params_ == b.params_ && a.entries_ == b.entries_;
    }

private:
    PolytopeParams params_;
    std::vector<Count> entries_;
};

// The generalized Pascal triangle of C(v, d): rows P(0)..P(d), where row k
// holds the entries at logical indices j = -1..k (so row k has k + 2
// entries). Row d is the extended f-sequence.
class FanTriangle {
public:
    FanTriangle(PolytopeParams params, std::vector<std::vector<Count>> rows);

    // Entry at row k, logical index j; 0 for j > k or j < -1.
    // Requires 0 <= k <= d.
    Count entry(std::int64_t k, std::int64_t j) const;

    // Row k as stored (logical indices -1..k). Requires 0 <= k <= d.
    const std::vector<Count>& row(std::int64_t k) const;

    const PolytopeParams& params() const { return params_; }
    std::int64_t dim() const { return params_.d; }

private:
    PolytopeParams params_;
    std::vector<std::vector<Count>> rows_;
};

// h_j = C(v-d-1+j, j) for j <= floor(d/2), reflected by h_j = h_{d-j} above.
HVector h_vector(const PolytopeParams& params);

// f_j by the binomial transform: sum_{i=0}^{d} C(d-i, d-j-1) h_i.
// Requires -1 <= j <= d-1; throws std::out_of_range otherwise.
Count f_entry_direct(const PolytopeParams& params, std::int64_t j);

// The extended f-sequence with every entry evaluated by f_entry_direct and
// the final entry fixed to 1.
ExtendedFSequence f_vector_direct(const PolytopeParams& params);

// Triangle entry evaluated directly from its defining sum, without building
// any rows: sum_{i=0}^{k} C(k-i, k-j-1) h_i for -1 <= j <= k-1, the diagonal
// convention h_{k+1} (or 1 at k = d) for j = k, and 0 outside.
// Requires 0 <= k <= d; throws std::out_of_range otherwise.
Count triangle_entry_direct(const PolytopeParams& params, std::int64_t k, std::int64_t j);

// All rows P(0)..P(d), built by the additive recursion: row 0 is (1, h_1),
// and row k extends row k-1 entrywise with the diagonal seeded to h_{k+1}
// (1 at k = d).
FanTriangle build_triangle(const PolytopeParams& params);

// Row d of the triangle, as an ExtendedFSequence.
ExtendedFSequence f_vector_from_triangle(const FanTriangle& tri);

// Same recursion as build_triangle but keeping only two rows at a time.
// Agrees with f_vector_from_triangle(build_triangle(p)) bit-exactly; used by
// the sweep, which never needs the interior rows.
ExtendedFSequence f_vector_triangle_streaming(const PolytopeParams& params);

} // namespace cyclicpoly
