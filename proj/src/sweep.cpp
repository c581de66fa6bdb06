#include "cyclicpoly/sweep.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include <nlohmann/json.hpp>

namespace cyclicpoly {

bool route_check_sampled(std::int64_t v, std::int64_t d) {
    return (v + 137 * d) % 50 == 0;
}

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i != 0) {
            out += sep;
        }
        out += parts[i];
    }
    return out;
}

bool euler_relation_holds(const ExtendedFSequence& f) {
    Count sum = 0;
    std::int64_t sign = -1; // (-1)^j starting at j = -1
    for (std::int64_t j = -1; j <= f.dim() - 1; ++j) {
        if (sign > 0) {
            sum += f.at(j);
        } else {
            sum -= f.at(j);
        }
        sign = -sign;
    }
    const Count expected = (f.dim() % 2 == 0) ? Count(-1) : Count(1); // (-1)^(d-1)
    return sum == expected;
}

struct PairOutcome {
    PairRecord record;
    std::vector<SweepFailure> failures;
};

PairOutcome verify_pair(std::int64_t v, std::int64_t d, unsigned checks) {
    const PolytopeParams params{v, d};
    const ExtendedFSequence f = f_vector_triangle_streaming(params);

    PairOutcome out;
    out.record = make_pair_record(f);

    if (checks & static_cast<unsigned>(Check::LogConcave)) {
        if (!out.record.shape.log_concave) {
            std::ostringstream details;
            details << "dips at";
            for (std::int64_t j : out.record.shape.dips) {
                details << " " << j;
            }
            out.failures.push_back({v, d, "log-concave", details.str()});
        }
    }
    if (checks & static_cast<unsigned>(Check::Euler)) {
        if (!euler_relation_holds(f)) {
            out.failures.push_back({v, d, "euler", "alternating sum != (-1)^(d-1)"});
        }
    }
    if ((checks & static_cast<unsigned>(Check::RouteEquivalence)) && route_check_sampled(v, d)) {
        if (!(f_vector_direct(params) == f)) {
            out.failures.push_back({v, d, "route-equivalence", "direct formula != triangle recursion"});
        }
    }
    return out;
}

} // namespace

SweepReport sweep_verify(std::int64_t d_min, std::int64_t d_max,
                         std::int64_t v_min, std::int64_t v_max,
                         unsigned checks, unsigned jobs) {
    const auto start = std::chrono::steady_clock::now();

    SweepReport report;
    report.d_min = d_min;
    report.d_max = d_max;
    report.v_min = v_min;
    report.v_max = v_max;

    std::vector<std::pair<std::int64_t, std::int64_t>> pairs; // (d, v), lex order
    for (std::int64_t d = std::max<std::int64_t>(d_min, 2); d <= d_max; ++d) {
        for (std::int64_t v = std::max(v_min, d + 1); v <= v_max; ++v) {
            pairs.emplace_back(d, v);
        }
    }
    report.checked = static_cast<std::int64_t>(pairs.size());

    std::vector<PairOutcome> outcomes(pairs.size());
    if (jobs < 1) {
        jobs = 1;
    }
    auto worker = [&](unsigned id) {
        for (std::size_t i = id; i < pairs.size(); i += jobs) {
            outcomes[i] = verify_pair(pairs[i].second, pairs[i].first, checks);
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(jobs);
        for (unsigned id = 0; id < jobs; ++id) {
            threads.emplace_back(worker, id);
        }
        for (std::thread& t : threads) {
            t.join();
        }
    }

    report.records.reserve(outcomes.size());
    for (PairOutcome& outcome : outcomes) {
        report.records.push_back(std::move(outcome.record));
        for (SweepFailure& failure : outcome.failures) {
            report.failures.push_back(std::move(failure));
        }
    }

    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

Format parse_format(const std::string& name) {
    if (name == "json") {
        return Format::Json;
    }
    if (name == "csv") {
        return Format::Csv;
    }
    if (name == "text") {
        return Format::Text;
    }
    throw std::invalid_argument("unknown format: " + name);
}

PairRecord make_pair_record(const ExtendedFSequence& f) {
    PairRecord rec;
    rec.v = f.params().v;
    rec.d = f.params().d;
    rec.f_vector.reserve(f.entries().size());
    for (const Count& e : f.entries()) {
        rec.f_vector.push_back(e.str());
    }
    rec.shape = analyze_shape(PositiveSequence(f.entries()));
    return rec;
}

std::string render_record(const PairRecord& rec, Format format) {
    switch (format) {
    case Format::Json: {
        nlohmann::ordered_json obj;
        obj["v"] = rec.v;
        obj["d"] = rec.d;
        obj["f_vector"] = rec.f_vector;
        obj["log_concave"] = rec.shape.log_concave;
        obj["unimodal"] = rec.shape.unimodal;
        if (rec.shape.peak_start) {
            obj["peak_start"] = *rec.shape.peak_start;
            obj["peak_end"] = *rec.shape.peak_end;
        } else {
            obj["peak_start"] = nullptr;
            obj["peak_end"] = nullptr;
        }
        return obj.dump() + "\n";
    }
    case Format::Csv: {
        std::ostringstream os;
        os << rec.v << ',' << rec.d << ',' << join(rec.f_vector, ";") << ','
           << (rec.shape.log_concave ? "true" : "false") << ','
           << (rec.shape.unimodal ? "true" : "false") << ',';
        if (rec.shape.peak_start) {
            os << *rec.shape.peak_start;
        }
        os << ',';
        if (rec.shape.peak_end) {
            os << *rec.shape.peak_end;
        }
        os << '\n';
        return os.str();
    }
    case Format::Text: {
        std::ostringstream os;
        os << "C(" << rec.v << "," << rec.d << "): f = " << join(rec.f_vector, " ")
           << "  log-concave=" << (rec.shape.log_concave ? "true" : "false")
           << " unimodal=" << (rec.shape.unimodal ? "true" : "false");
        if (rec.shape.peak_start) {
            os << " peak=[" << *rec.shape.peak_start << "," << *rec.shape.peak_end << "]";
        }
        os << '\n';
        return os.str();
    }
    }
    throw std::invalid_argument("unknown format");
}

void render(const SweepReport& report, Format format, std::ostream& out) {
    if (format == Format::Csv) {
        out << kCsvHeader << '\n';
    }
    for (const PairRecord& rec : report.records) {
        out << render_record(rec, format);
    }
}

} // namespace cyclicpoly
