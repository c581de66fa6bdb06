#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cyclicpoly/cyclic.hpp"
#include "cyclicpoly/shape.hpp"

namespace cyclicpoly {

enum class Check : unsigned {
    LogConcave = 1u << 0,
    Euler = 1u << 1,
    // direct formula vs. triangle recursion, on a fixed 1-in-50 subsample
    RouteEquivalence = 1u << 2,
};

inline constexpr unsigned kDefaultChecks = static_cast<unsigned>(Check::LogConcave) |
                                           static_cast<unsigned>(Check::Euler) |
                                           static_cast<unsigned>(Check::RouteEquivalence);

// One verified (v, d) pair, with its shape verdicts.
struct PairRecord {
    std::int64_t v = 0;
    std::int64_t d = 0;
    std::vector<std::string> f_vector; // decimal strings, f_{-1}..f_d
    ShapeReport shape;
};

struct SweepFailure {
    std::int64_t v = 0;
    std::int64_t d = 0;
    std::string check;
    std::string details;
};

struct SweepReport {
    std::int64_t d_min = 0, d_max = 0, v_min = 0, v_max = 0;
    std::int64_t checked = 0; // number of valid pairs in range
    std::vector<PairRecord> records; // ordered by (d, v)
    std::vector<SweepFailure> failures;
    std::chrono::milliseconds elapsed{0};

    bool pass() const { return failures.empty(); }
};

// Whether a pair belongs to the deterministic route-equivalence subsample.
// Keyed on (v, d) only, so the selection is independent of range bounds and
// of how work is split across threads.
bool route_check_sampled(std::int64_t v, std::int64_t d);

// Runs the selected checks on every valid pair with d in [d_min, d_max] and
// v in [max(v_min, d+1), v_max]. Invalid combinations are skipped. Work is
// split across `jobs` threads; records and failures come out ordered by
// (d, v) regardless of the split.
SweepReport sweep_verify(std::int64_t d_min, std::int64_t d_max,
                         std::int64_t v_min, std::int64_t v_max,
                         unsigned checks = kDefaultChecks, unsigned jobs = 1);

enum class Format { Json, Csv, Text };

// Parses "json" / "csv" / "text"; throws std::invalid_argument otherwise.
Format parse_format(const std::string& name);

PairRecord make_pair_record(const ExtendedFSequence& f);

// One newline-terminated record. JSON objects carry the fields v, d,
// f_vector (decimal strings), log_concave, unimodal, peak_start, peak_end in
// that order; CSV joins the f-vector with semicolons; text is for humans.
std::string render_record(const PairRecord& rec, Format format);

inline constexpr const char* kCsvHeader = "v,d,f_vector,log_concave,unimodal,peak_start,peak_end";

// All records of a report, with the CSV header when applicable.
void render(const SweepReport& report, Format format, std::ostream& out);

} // namespace cyclicpoly
