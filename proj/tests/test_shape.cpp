#include <random>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "cyclicpoly/cyclic.hpp"
#include "cyclicpoly/exactcomb.hpp"
#include "cyclicpoly/shape.hpp"
#include "support/generators.hpp"

using namespace cyclicpoly;

namespace {

PositiveSequence seq(std::initializer_list<long long> xs) {
    return PositiveSequence(std::vector<Count>(xs.begin(), xs.end()));
}

} // namespace

TEST_CASE("positive sequence validation") {
    CHECK_THROWS_AS((PositiveSequence({})), std::domain_error);
    CHECK_THROWS_AS((seq({1, 0, 2})), std::domain_error);
    CHECK(seq({7}).max_index() == -1);
    CHECK(seq({1, 4, 2, 8}).max_index() == 2);
    CHECK(seq({1, 4, 2, 8}).at(-1) == 1);
    CHECK(seq({1, 4, 2, 8}).at(2) == 8);
}

TEST_CASE("find_dips worked values") {
    // the 2 sits at logical index 1: 2^2 = 4 < 4 * 8
    CHECK(find_dips(seq({1, 4, 2, 8})) == std::vector<std::int64_t>{1});
    CHECK(find_dips(seq({1, 6, 15, 18, 9, 1})).empty());
    CHECK(find_dips(seq({1, 1, 1})).empty()); // equality is not a dip
    CHECK(find_dips(seq({5})).empty());
    CHECK(find_dips(seq({5, 9})).empty());
    // spot-check the four interior products of the C(6,4) sequence
    CHECK(Count(6 * 6) >= Count(1 * 15));
    CHECK(Count(15 * 15) >= Count(6 * 18));
    CHECK(Count(18 * 18) >= Count(15 * 9));
    CHECK(Count(9 * 9) >= Count(18 * 1));
}

TEST_CASE("is_log_concave worked values") {
    CHECK(is_log_concave(PositiveSequence(pascal_row(6))));
    CHECK_FALSE(is_log_concave(seq({1, 2, 4, 9}))); // 2 * 9 > 4^2
    CHECK(is_log_concave(seq({5})));
    CHECK(is_log_concave(seq({1, 1, 1})));
}

TEST_CASE("every classical Pascal row is log-concave") {
    for (std::int64_t n = 0; n <= 40; ++n) {
        CHECK(is_log_concave(PositiveSequence(pascal_row(n))));
    }
}

TEST_CASE("is_unimodal worked values") {
    const Unimodality both_threes = is_unimodal(seq({1, 3, 3, 2}));
    CHECK(both_threes.unimodal);
    CHECK(both_threes.peak_start == 0);
    CHECK(both_threes.peak_end == 1);

    CHECK_FALSE(is_unimodal(seq({1, 3, 2, 3})).unimodal);

    const Unimodality cyclic64 = is_unimodal(seq({1, 6, 15, 18, 9, 1}));
    CHECK(cyclic64.unimodal);
    CHECK(cyclic64.peak_start == 2);
    CHECK(cyclic64.peak_end == 2);

    const Unimodality flat = is_unimodal(seq({1, 1, 1, 1}));
    CHECK(flat.unimodal);
    CHECK(flat.peak_start == -1);
    CHECK(flat.peak_end == 2);

    CHECK(is_unimodal(seq({9})).unimodal);
    CHECK(is_unimodal(seq({9, 2})).unimodal);
    CHECK(is_unimodal(seq({2, 9})).unimodal);
}

TEST_CASE("analyze_shape worked values") {
    const ShapeReport good = analyze_shape(PositiveSequence(f_vector_direct({6, 4}).entries()));
    CHECK(good.dips.empty());
    CHECK(good.log_concave);
    CHECK(good.unimodal);
    CHECK(good.peak_start == 2);
    CHECK(good.peak_end == 2);

    const ShapeReport bad = analyze_shape(seq({1, 4, 2, 8}));
    CHECK(bad.dips == std::vector<std::int64_t>{1});
    CHECK_FALSE(bad.log_concave);
    CHECK_FALSE(bad.unimodal);
    CHECK_FALSE(bad.peak_start.has_value());

    const ShapeReport flat = analyze_shape(seq({1, 1, 1}));
    CHECK(flat.log_concave);
    CHECK(flat.unimodal);
    CHECK(flat.peak_start == -1);
    CHECK(flat.peak_end == 1);
}

TEST_CASE("pascal_extend worked values") {
    CHECK(pascal_extend(seq({1, 3, 3}), 2).entries() == seq({1, 4, 6, 2}).entries());
    CHECK(pascal_extend(seq({1, 5, 10, 8, 1}), 1).entries() == seq({1, 6, 15, 18, 9, 1}).entries());
    CHECK(pascal_extend(seq({1}), 7).entries() == seq({1, 7}).entries());
    CHECK_THROWS_AS((pascal_extend(seq({2, 3}), 1)), std::domain_error);
    CHECK_THROWS_AS((pascal_extend(seq({1, 3}), 0)), std::domain_error);
}

TEST_CASE("lemma_check worked values and hypotheses") {
    CHECK(lemma_check(seq({1, 3, 3}), 2));
    CHECK(lemma_check(seq({1, 1, 1}), 1));
    CHECK(lemma_check(seq({1, 4, 6, 2}), 1));
    // hypothesis violations are rejected, not evaluated
    CHECK_THROWS_AS((lemma_check(seq({2, 2}), 1)), std::domain_error);       // leading entry
    CHECK_THROWS_AS((lemma_check(seq({1, 4, 2, 8}), 1)), std::domain_error); // not log-concave
    CHECK_THROWS_AS((lemma_check(seq({1, 3, 3}), 4)), std::domain_error);    // seed > last
    CHECK_THROWS_AS((lemma_check(seq({1, 3, 3}), 0)), std::domain_error);
}

TEST_CASE("dips and log-concavity are dual on positive sequences") {
    std::mt19937_64 rng(20240817);
    for (int i = 0; i < 400; ++i) {
        // arbitrary positive sequences, not necessarily log-concave
        const std::size_t len = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
        std::vector<Count> s;
        for (std::size_t j = 0; j < len; ++j) {
            s.emplace_back(std::uniform_int_distribution<int>(1, 50)(rng));
        }
        const PositiveSequence p{s};
        CHECK(is_log_concave(p) == find_dips(p).empty());
    }
}

TEST_CASE("log-concavity implies unimodality for positive sequences") {
    std::mt19937_64 rng(991);
    for (int i = 0; i < 300; ++i) {
        const PositiveSequence p{testsupport::random_log_concave(rng, 30, 1'000'000'000, false)};
        REQUIRE(is_log_concave(p));
        CHECK(is_unimodal(p).unimodal);
    }
}

TEST_CASE("extension lemma holds on random log-concave sequences") {
    std::mt19937_64 rng(424242);
    for (int i = 0; i < 400; ++i) {
        const PositiveSequence p{testsupport::random_log_concave(rng)};
        const Count last = p.at(p.max_index());
        CHECK(lemma_check(p, testsupport::random_seed(rng, last)));
    }
}

TEST_CASE("audit_dip_propagation worked cases") {
    const DipAudit c64 = audit_dip_propagation({6, 4});
    CHECK(c64.pass);
    for (const auto& dips : c64.row_dips) {
        CHECK(dips.empty());
    }
    CHECK(audit_dip_propagation({5, 4}).pass);
    CHECK(audit_dip_propagation({100, 10}).pass);
    CHECK_THROWS_AS((audit_dip_propagation({3, 3})), params_error);
}

TEST_CASE("contrapositive step on real triangle rows") {
    // dips in P(k) must force dips in P(k-1); on actual triangles no row has
    // any, so the audit flags also certify the hypotheses of each step
    for (std::int64_t d = 2; d <= 12; ++d) {
        for (std::int64_t v : {d + 1, d + 2, 2 * d, 5 * d}) {
            const DipAudit audit = audit_dip_propagation({v, d});
            CHECK(audit.propagation_ok);
            CHECK(audit.seeds_bounded);
            CHECK(audit.prefix_rows_dip_free);
            CHECK(audit.final_row_dip_free);
            const FanTriangle tri = build_triangle({v, d});
            for (std::int64_t k = (d + 1) / 2; k <= d; ++k) {
                const bool ext_has_dip = !find_dips(PositiveSequence(tri.row(k))).empty();
                const bool base_has_dip = !find_dips(PositiveSequence(tri.row(k - 1))).empty();
                CHECK((!ext_has_dip || base_has_dip));
            }
        }
    }
}
