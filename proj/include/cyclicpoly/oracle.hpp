#pragma once

#include <cstdint>
#include <vector>

#include "cyclicpoly/cyclic.hpp"

namespace cyclicpoly {

// Largest v the face enumeration accepts by default. Overridable per call;
// enumeration cost grows as C(v, d) * 2^d, so raising it is deliberate.
inline constexpr std::int64_t kDefaultOracleCap = 16;

// A candidate face: distinct vertex labels from {1..v}, ascending (the
// moment-curve order).
using VertexSet = std::vector<std::int64_t>;

struct FacetList {
    PolytopeParams params;
    std::vector<VertexSet> facets; // lexicographic order, each of size d
};

// Gale's evenness condition: s (of size d) is a facet of C(v, d) iff for
// every pair of non-members u < w, the number of members of s strictly
// between u and w is even. Throws std::domain_error if |s| != d or labels
// fall outside {1..v} (or repeat).
bool is_gale_facet(const PolytopeParams& params, const VertexSet& s);

// All d-subsets of {1..v} satisfying the evenness condition, in
// lexicographic order. Throws cap_error if v exceeds the cap.
FacetList enumerate_facets(const PolytopeParams& params, std::int64_t cap = kDefaultOracleCap);

// Ground-truth f-vector: every face of a simplicial polytope is a vertex
// subset of some facet, so the downward closure of the Gale facets,
// deduplicated, counts all faces. Uses none of the h-vector formulas.
ExtendedFSequence oracle_f_vector(const PolytopeParams& params, std::int64_t cap = kDefaultOracleCap);

} // namespace cyclicpoly
