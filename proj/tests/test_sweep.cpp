#include <sstream>
#include <stdexcept>

#include <doctest.h>

#include "cyclicpoly/cyclic.hpp"
#include "cyclicpoly/sweep.hpp"

using namespace cyclicpoly;

TEST_CASE("sweep over a small window passes and is ordered") {
    const SweepReport report = sweep_verify(2, 4, 3, 20);
    // d=2: v 3..20, d=3: v 4..20, d=4: v 5..20
    CHECK(report.checked == 18 + 17 + 16);
    CHECK(report.records.size() == 51);
    CHECK(report.failures.empty());
    CHECK(report.pass());
    for (std::size_t i = 1; i < report.records.size(); ++i) {
        const auto& a = report.records[i - 1];
        const auto& b = report.records[i];
        CHECK((a.d < b.d || (a.d == b.d && a.v < b.v)));
    }
    for (const PairRecord& rec : report.records) {
        CHECK(rec.shape.log_concave);
        CHECK(rec.shape.unimodal);
    }
}

TEST_CASE("sweep skips invalid combinations") {
    const SweepReport empty = sweep_verify(10, 10, 5, 8);
    CHECK(empty.checked == 0);
    CHECK(empty.pass());

    // d < 2 is never a polytope dimension here; only d=2 contributes
    const SweepReport clipped = sweep_verify(0, 2, 3, 5);
    CHECK(clipped.checked == 3);
}

TEST_CASE("route-equivalence subsample is a fixed function of (v, d)") {
    int hits = 0;
    for (std::int64_t d = 2; d <= 16; ++d) {
        for (std::int64_t v = d + 1; v <= 200; ++v) {
            if (route_check_sampled(v, d)) {
                ++hits;
            }
            CHECK(route_check_sampled(v, d) == route_check_sampled(v, d));
        }
    }
    CHECK(hits > 20); // the 1-in-50 stride actually samples the window
}

TEST_CASE("json record golden for C(6,4)") {
    const PairRecord rec = make_pair_record(f_vector_direct({6, 4}));
    CHECK(render_record(rec, Format::Json) ==
          "{\"v\":6,\"d\":4,\"f_vector\":[\"1\",\"6\",\"15\",\"18\",\"9\",\"1\"],"
          "\"log_concave\":true,\"unimodal\":true,\"peak_start\":2,\"peak_end\":2}\n");
}

TEST_CASE("csv rendering") {
    const SweepReport report = sweep_verify(4, 4, 6, 6);
    std::ostringstream out;
    render(report, Format::Csv, out);
    CHECK(out.str() == "v,d,f_vector,log_concave,unimodal,peak_start,peak_end\n"
                       "6,4,1;6;15;18;9;1,true,true,2,2\n");
}

TEST_CASE("text rendering") {
    const PairRecord rec = make_pair_record(f_vector_direct({5, 4}));
    const std::string line = render_record(rec, Format::Text);
    CHECK(line.find("1 5 10 10 5 1") != std::string::npos);
    CHECK(line.find("log-concave=true") != std::string::npos);
}

TEST_CASE("parse_format") {
    CHECK(parse_format("json") == Format::Json);
    CHECK(parse_format("csv") == Format::Csv);
    CHECK(parse_format("text") == Format::Text);
    CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
}

TEST_CASE("parallel sweeps render byte-identical reports") {
    const SweepReport serial = sweep_verify(2, 6, 3, 40, kDefaultChecks, 1);
    const SweepReport parallel = sweep_verify(2, 6, 3, 40, kDefaultChecks, 4);
    std::ostringstream a, b;
    render(serial, Format::Json, a);
    render(parallel, Format::Json, b);
    CHECK(a.str() == b.str());
    CHECK(serial.checked == parallel.checked);
    CHECK(serial.failures.size() == parallel.failures.size());
}
