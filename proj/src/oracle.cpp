#include "dompoly/oracle.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <thread>

namespace dompoly {

namespace {

    // Tallies dominating subsets of [lo, hi) by cardinality.  masks[v] is
    // the closed neighborhood of vertex v+1 as a bitmask; a subset D
    // dominates iff it meets every closed neighborhood.
    void count_range(const std::vector<std::uint64_t>& masks, std::uint64_t lo,
                     std::uint64_t hi, std::array<std::uint64_t, 64>& hist)
    {
        for (std::uint64_t d = lo; d < hi; ++d) {
            bool ok = true;
            for (std::uint64_t m : masks) {
                if ((m & d) == 0) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                ++hist[std::popcount(d)];
        }
    }

    DomPolynomial histogram_poly(int n, const std::vector<std::uint64_t>& masks, int threads)
    {
        std::uint64_t total = 1ull << n;
        unsigned want = threads > 0 ? static_cast<unsigned>(threads)
                                    : std::thread::hardware_concurrency();
        if (want == 0)
            want = 1;
        if (n < 18)
            want = 1; // not worth spawning for small ranges
        want = std::min<std::uint64_t>(want, 32);

        std::array<std::uint64_t, 64> hist {};
        if (want <= 1) {
            count_range(masks, 0, total, hist);
        } else {
            std::vector<std::array<std::uint64_t, 64>> parts(want);
            std::vector<std::thread> pool;
            std::uint64_t chunk = total / want + 1;
            for (unsigned t = 0; t < want; ++t) {
                std::uint64_t lo = std::min<std::uint64_t>(t * chunk, total);
                std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, total);
                parts[t] = {};
                pool.emplace_back(count_range, std::cref(masks), lo, hi, std::ref(parts[t]));
            }
            for (auto& th : pool)
                th.join();
            for (const auto& part : parts)
                for (int k = 0; k <= n; ++k)
                    hist[k] += part[k];
        }

        DomPolynomial p(n);
        for (int k = 0; k <= n; ++k)
            p.set_coeff(k, BigInt(hist[k]));
        return p;
    }

} // namespace

DomPolynomial brute_force_poly(const SimpleGraph& g, int cap, int threads)
{
    int n = g.vertex_count();
    if (n == 0)
        return {}; // the empty graph has the zero polynomial
    if (n > cap || n > 62)
        throw resource_error("graph too large for exhaustive enumeration");

    std::vector<std::uint64_t> masks(n);
    for (int v = 1; v <= n; ++v)
        masks[v - 1] = 1ull << (v - 1);
    for (auto [i, j] : g.edges()) {
        masks[i - 1] |= 1ull << (j - 1);
        masks[j - 1] |= 1ull << (i - 1);
    }
    return histogram_poly(n, masks, threads);
}

DomPolynomial brute_force_digraph_poly(const BipartiteOneWayDigraph& g, int cap)
{
    std::vector<int> left = g.u1().members();
    int m = static_cast<int>(left.size());
    if (m > cap || m > 62)
        throw resource_error("digraph too large for exhaustive enumeration");

    // In-neighborhoods of u2 vertices, re-indexed over positions in `left`.
    std::vector<std::uint64_t> masks;
    for (int v : g.u2().members()) {
        VertexSet ins = g.in_neighbors(v);
        std::uint64_t m2 = 0;
        for (int pos = 0; pos < m; ++pos)
            if (ins.contains(left[pos]))
                m2 |= 1ull << pos;
        masks.push_back(m2);
    }
    return histogram_poly(m, masks, 1);
}

KSetTriangle kset_triangle(Family f, int max_n, int cap)
{
    KSetTriangle t;
    t.family = f;
    t.min_n = f == Family::wheel ? 4 : 1;
    if (max_n < t.min_n)
        throw std::domain_error("triangle upper bound below the family's smallest order");
    for (int n = t.min_n; n <= max_n; ++n) {
        DomPolynomial p = brute_force_poly(build_family(f, n), cap);
        std::vector<BigInt> row;
        for (int k = 1; k <= n; ++k)
            row.push_back(p.coeff(k));
        t.rows.push_back(std::move(row));
    }
    return t;
}

} // namespace dompoly
