#ifndef DOMPOLY_ORACLE_HPP
#define DOMPOLY_ORACLE_HPP

#include "dompoly/graph.hpp"
#include "dompoly/polynomial.hpp"

#include <stdexcept>
#include <vector>

namespace dompoly {

// Raised when an exhaustive enumeration is asked to exceed its vertex cap.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ~16.8M subsets; keeps the whole verification matrix under a minute.
inline constexpr int kDefaultOracleCap = 24;

// Ground-truth polynomial by enumerating all 2^n subsets.  The subset
// range may be chunked across threads; per-size tallies merge by addition,
// so the result is independent of the decomposition.  threads = 0 picks a
// count from the hardware.
DomPolynomial brute_force_poly(const SimpleGraph& g, int cap = kDefaultOracleCap,
                               int threads = 0);

// Same, for one-way digraphs: candidate sets D are subsets of u1 and must
// send an arc into every u2 vertex; the polynomial context is |u1|.
DomPolynomial brute_force_digraph_poly(const BipartiteOneWayDigraph& g,
                                       int cap = kDefaultOracleCap);

// Triangle of dominating k-set counts, one row per order n.  Rows carry
// entries for k = 1..n; wheels start at n = 4.
struct KSetTriangle {
    Family family;
    int min_n = 1;
    std::vector<std::vector<BigInt>> rows; // rows[i] is row n = min_n + i

    const BigInt& entry(int n, int k) const { return rows.at(n - min_n).at(k - 1); }
};

KSetTriangle kset_triangle(Family f, int max_n, int cap = kDefaultOracleCap);

} // namespace dompoly

#endif
