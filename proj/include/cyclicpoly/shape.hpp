#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclicpoly/cyclic.hpp"
#include "cyclicpoly/exactcomb.hpp"

namespace cyclicpoly {

// A strictly positive sequence whose first entry sits at logical index -1,
// the indexing every f-sequence and triangle row uses. Stored zero-based
// with a fixed +1 offset.
class PositiveSequence {
public:
    // entries listed from logical index -1 upward; must be nonempty and
    // strictly positive. Throws std::domain_error otherwise.
    explicit PositiveSequence(std::vector<Count> entries);

    // j in [-1, max_index()]
    const Count& at(std::int64_t j) const { return entries_.at(static_cast<std::size_t>(j + 1)); }
    // largest logical index m; the sequence covers -1..m
    std::int64_t max_index() const { return static_cast<std::int64_t>(entries_.size()) - 2; }
    std::size_t size() const { return entries_.size(); }
    const std::vector<Count>& entries() const { return entries_; }

private:
    std::vector<Count> entries_;
};

// Result of is_unimodal. peak_start/peak_end delimit the maximal plateau
// (logical indices) and are meaningful only when unimodal is true.
struct Unimodality {
    bool unimodal = false;
    std::int64_t peak_start = 0;
    std::int64_t peak_end = 0;
};

struct ShapeReport {
    std::vector<std::int64_t> dips; // logical indices, ascending
    bool log_concave = false;
    bool unimodal = false;
    std::optional<std::int64_t> peak_start; // set iff unimodal
    std::optional<std::int64_t> peak_end;
};

// Per-triangle audit of the inductive step: row-by-row dip lists plus the
// facts the induction rests on.
struct DipAudit {
    PolytopeParams params;
    std::vector<std::vector<std::int64_t>> row_dips; // index k = 0..d
    bool prefix_rows_dip_free = false; // rows with 2k < d have no dips
    bool propagation_ok = false;       // dip in P(k) forces a dip in P(k-1), k in [ceil(d/2), d]
    bool seeds_bounded = false;        // diagonal seed of P(k) <= h_k for k in [ceil(d/2), d]
    bool final_row_dip_free = false;
    bool pass = false;
};

// All interior logical indices j with s(j)^2 < s(j-1) * s(j+1), strictly.
std::vector<std::int64_t> find_dips(const PositiveSequence& s);

// True iff s(j-1) * s(j+1) <= s(j)^2 at every interior index. On positive
// sequences this is exactly "find_dips(s) is empty".
bool is_log_concave(const PositiveSequence& s);

// Weakly rises to a peak plateau, then weakly falls.
Unimodality is_unimodal(const PositiveSequence& s);

ShapeReport analyze_shape(const PositiveSequence& s);

// One triangle step on a bare sequence: y(-1) = 1, y(j) = s(j-1) + s(j) for
// 0 <= j <= m, y(m+1) = seed. Requires s(-1) = 1 and seed >= 1; throws
// std::domain_error otherwise.
PositiveSequence pascal_extend(const PositiveSequence& s, const Count& seed);

// The inductive step as a falsifiable predicate: under the hypotheses
// s(-1) = 1, s log-concave, seed <= last entry of s, reports whether
// pascal_extend(s, seed) is log-concave. The argument says it always is;
// this exists so that claim can be attacked with bulk random inputs.
// Hypothesis violations throw std::domain_error.
bool lemma_check(const PositiveSequence& s, const Count& seed);

// Builds the full triangle for params and checks every fact the induction
// uses on the actual rows.
DipAudit audit_dip_propagation(const PolytopeParams& params);

} // namespace cyclicpoly
