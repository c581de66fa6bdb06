#include "cyclicpoly/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

#include "cyclicpoly/errors.hpp"

namespace cyclicpoly {

bool is_gale_facet(const PolytopeParams& params, const VertexSet& s) {
    params.validate();
    if (static_cast<std::int64_t>(s.size()) != params.d) {
        throw std::domain_error("is_gale_facet: set must have exactly d vertices");
    }
    std::vector<bool> member(static_cast<std::size_t>(params.v) + 1, false);
    for (std::int64_t label : s) {
        if (label < 1 || label > params.v) {
            throw std::domain_error("is_gale_facet: vertex label out of range 1..v");
        }
        if (member[static_cast<std::size_t>(label)]) {
            throw std::domain_error("is_gale_facet: repeated vertex label");
        }
        member[static_cast<std::size_t>(label)] = true;
    }
    // prefix[x] = number of members <= x, so the count strictly between
    // u and w is prefix[w-1] - prefix[u].
    std::vector<std::int64_t> prefix(static_cast<std::size_t>(params.v) + 1, 0);
    for (std::int64_t x = 1; x <= params.v; ++x) {
        prefix[static_cast<std::size_t>(x)] =
            prefix[static_cast<std::size_t>(x - 1)] + (member[static_cast<std::size_t>(x)] ? 1 : 0);
    }
    for (std::int64_t u = 1; u <= params.v; ++u) {
        if (member[static_cast<std::size_t>(u)]) {
            continue;
        }
        for (std::int64_t w = u + 1; w <= params.v; ++w) {
            if (member[static_cast<std::size_t>(w)]) {
                continue;
            }
            const std::int64_t between =
                prefix[static_cast<std::size_t>(w - 1)] - prefix[static_cast<std::size_t>(u)];
            if (between % 2 != 0) {
                return false;
            }
        }
    }
    return true;
}

namespace {

void check_cap(const PolytopeParams& params, std::int64_t cap) {
    if (params.v > cap) {
        throw cap_error("enumeration refused: v=" + std::to_string(params.v) +
                        " exceeds the oracle cap " + std::to_string(cap));
    }
}

} // namespace

FacetList enumerate_facets(const PolytopeParams& params, std::int64_t cap) {
    params.validate();
    check_cap(params, cap);
    const std::int64_t v = params.v;
    const std::int64_t d = params.d;

    FacetList out{params, {}};
    // lexicographic successor walk over d-subsets of {1..v}
    VertexSet s(static_cast<std::size_t>(d));
    for (std::int64_t i = 0; i < d; ++i) {
        s[static_cast<std::size_t>(i)] = i + 1;
    }
    while (true) {
        if (is_gale_facet(params, s)) {
            out.facets.push_back(s);
        }
        std::int64_t i = d - 1;
        while (i >= 0 && s[static_cast<std::size_t>(i)] == v - (d - 1 - i)) {
            --i;
        }
        if (i < 0) {
            break;
        }
        ++s[static_cast<std::size_t>(i)];
        for (std::int64_t j = i + 1; j < d; ++j) {
            s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

ExtendedFSequence oracle_f_vector(const PolytopeParams& params, std::int64_t cap) {
    params.validate();
    check_cap(params, cap);
    const FacetList facets = enumerate_facets(params, cap);

    // Deduplicate faces as bitmasks over the vertex labels.
    std::unordered_set<std::uint64_t> faces;
    for (const VertexSet& facet : facets.facets) {
        std::uint64_t mask = 0;
        for (std::int64_t label : facet) {
            mask |= std::uint64_t{1} << (label - 1);
        }
        // every submask of a facet is a face, including the empty one
        std::uint64_t sub = mask;
        while (true) {
            faces.insert(sub);
            if (sub == 0) {
                break;
            }
            sub = (sub - 1) & mask;
        }
    }

    std::vector<std::int64_t> by_cardinality(static_cast<std::size_t>(params.d) + 1, 0);
    for (std::uint64_t mask : faces) {
        ++by_cardinality[static_cast<std::size_t>(std::popcount(mask))];
    }

    std::vector<Count> entries;
    entries.reserve(static_cast<std::size_t>(params.d) + 2);
    entries.emplace_back(1); // f_{-1}: the empty face
    for (std::int64_t j = 0; j <= params.d - 1; ++j) {
        entries.emplace_back(by_cardinality[static_cast<std::size_t>(j + 1)]);
    }
    entries.emplace_back(1); // shape-compatible trailing 1
    return ExtendedFSequence(params, std::move(entries));
}

} // namespace cyclicpoly
