#include "cyclicpoly/shape.hpp"

#include <stdexcept>
#include <utility>

namespace cyclicpoly {

PositiveSequence::PositiveSequence(std::vector<Count> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw std::domain_error("positive sequence must be nonempty");
    }
    for (const Count& e : entries_) {
        if (e < 1) {
            throw std::domain_error("positive sequence entries must be >= 1");
        }
    }
}

std::vector<std::int64_t> find_dips(const PositiveSequence& s) {
    std::vector<std::int64_t> dips;
    for (std::int64_t j = 0; j <= s.max_index() - 1; ++j) {
        if (s.at(j) * s.at(j) < s.at(j - 1) * s.at(j + 1)) {
            dips.push_back(j);
        }
    }
    return dips;
}

bool is_log_concave(const PositiveSequence& s) {
    for (std::int64_t j = 0; j <= s.max_index() - 1; ++j) {
        if (s.at(j - 1) * s.at(j + 1) > s.at(j) * s.at(j)) {
            return false;
        }
    }
    return true;
}

Unimodality is_unimodal(const PositiveSequence& s) {
    const std::int64_t last = s.max_index();
    std::int64_t i = -1;
    while (i < last && s.at(i) <= s.at(i + 1)) {
        ++i;
    }
    for (std::int64_t j = i; j < last; ++j) {
        if (s.at(j) < s.at(j + 1)) {
            return Unimodality{false, 0, 0};
        }
    }
    // i is the last index of the maximal plateau; walk back to its start.
    std::int64_t start = i;
    while (start > -1 && s.at(start - 1) == s.at(i)) {
        --start;
    }
    return Unimodality{true, start, i};
}

ShapeReport analyze_shape(const PositiveSequence& s) {
    ShapeReport report;
    report.dips = find_dips(s);
    report.log_concave = is_log_concave(s);
    const Unimodality u = is_unimodal(s);
    report.unimodal = u.unimodal;
    if (u.unimodal) {
        report.peak_start = u.peak_start;
        report.peak_end = u.peak_end;
    }
    return report;
}

PositiveSequence pascal_extend(const PositiveSequence& s, const Count& seed) {
    if (s.at(-1) != 1) {
        throw std::domain_error("pascal_extend: sequence must start with 1");
    }
    if (seed < 1) {
        throw std::domain_error("pascal_extend: seed must be >= 1");
    }
    std::vector<Count> out;
    out.reserve(s.size() + 1);
    out.emplace_back(1);
    for (std::int64_t j = 0; j <= s.max_index(); ++j) {
        out.push_back(s.at(j - 1) + s.at(j));
    }
    out.push_back(seed);
    return PositiveSequence(std::move(out));
}

bool lemma_check(const PositiveSequence& s, const Count& seed) {
    if (s.at(-1) != 1) {
        throw std::domain_error("lemma_check: sequence must start with 1");
    }
    if (!is_log_concave(s)) {
        throw std::domain_error("lemma_check: sequence must be log-concave");
    }
    if (seed < 1 || seed > s.at(s.max_index())) {
        throw std::domain_error("lemma_check: seed must lie in [1, last entry]");
    }
    return is_log_concave(pascal_extend(s, seed));
}

DipAudit audit_dip_propagation(const PolytopeParams& params) {
    params.validate();
    const FanTriangle tri = build_triangle(params);
    const HVector h = h_vector(params);
    const std::int64_t d = params.d;
    const std::int64_t half_up = (d + 1) / 2; // ceil(d/2)

    DipAudit audit;
    audit.params = params;
    audit.row_dips.reserve(static_cast<std::size_t>(d) + 1);
    for (std::int64_t k = 0; k <= d; ++k) {
        audit.row_dips.push_back(find_dips(PositiveSequence(tri.row(k))));
    }

    audit.prefix_rows_dip_free = true;
    for (std::int64_t k = 0; 2 * k < d; ++k) {
        if (!audit.row_dips[static_cast<std::size_t>(k)].empty()) {
            audit.prefix_rows_dip_free = false;
        }
    }

    audit.propagation_ok = true;
    audit.seeds_bounded = true;
    for (std::int64_t k = half_up; k <= d; ++k) {
        const bool dip_here = !audit.row_dips[static_cast<std::size_t>(k)].empty();
        const bool dip_prev = !audit.row_dips[static_cast<std::size_t>(k - 1)].empty();
        if (dip_here && !dip_prev) {
            audit.propagation_ok = false;
        }
        // diagonal seed of row k vs. the diagonal of row k-1 (that is, h_k)
        const Count seed = (k == d) ? Count(1) : h.at(k + 1);
        if (seed > h.at(k)) {
            audit.seeds_bounded = false;
        }
    }

    audit.final_row_dip_free = audit.row_dips[static_cast<std::size_t>(d)].empty();
    audit.pass = audit.prefix_rows_dip_free && audit.propagation_ok &&
                 audit.seeds_bounded && audit.final_row_dip_free;
    return audit;
}

} // namespace cyclicpoly
