#ifndef DOMPOLY_FAMILIES_HPP
#define DOMPOLY_FAMILIES_HPP

#include "dompoly/bigint.hpp"
#include "dompoly/graph.hpp"
#include "dompoly/oracle.hpp"
#include "dompoly/polynomial.hpp"

#include <vector>

namespace dompoly {

// Complete graph: every nonempty subset dominates, so coeff(k) = C(n,k).
DomPolynomial complete_poly(int n);

// Product over the parts (disjoint-union rule); contexts add.
DomPolynomial union_poly(const std::vector<DomPolynomial>& parts);

// Join of an n-vertex and an m-vertex graph from the parts' polynomials:
// coeff(k) = C(n+m,k) - C(n,k) - C(m,k) + pg.coeff(k) + ph.coeff(k) for
// k >= 1.  Both operands must be nonempty.
DomPolynomial join_poly(const DomPolynomial& pg, const DomPolynomial& ph);

// Linear dynamic programs over the three-term shift recurrence
// coeff_n(k) = coeff_{n-1}(k-1) + coeff_{n-2}(k-1) + coeff_{n-3}(k-1).
DomPolynomial path_poly(int n);
DomPolynomial cycle_poly(int n); // n = 1, 2 use the one- and two-vertex conventions

// Hub-or-not split: D(W_n) = t(1+t)^(n-1) + D(C_{n-1}), n >= 4.
DomPolynomial wheel_poly(int n);

// Number of dominating k-sets of the (k+t)-vertex path:
//   sum over m of C(k-1, t-m) * C(t-m+2, m),   m = 0 .. floor(t/2)+1.
// Zero outside the feasible band k <= n <= 3k (never throws).
BigInt path_kset_count(long long k, long long t);

// Cycle analogue; the bracket gains a second summand:
//   sum over m of C(k-1, t-m) * [C(t-m+2, m) + 2*C(t-m, m-2)].
BigInt cycle_kset_count(long long k, long long t);

// Wheel on k+t >= 4 vertices: C(k+t-1, t) plus the k-set count of the rim
// cycle on k-1+t vertices (cycle parameters (k, t-1)).
BigInt wheel_kset_count(long long k, long long t);

// Polynomial whose x^n coefficient is the dominating k-set count of the
// n-vertex path: x^k (1+x)^2 (1+x+x^2)^(k-1).  Degree 3k, 2k+1 terms,
// palindromic across the window [k, 3k].
UnivariateSeries path_kset_series(int k);

// Cycle variant x^k (1+2x+3x^2) (1+x+x^2)^(k-1); not palindromic.
UnivariateSeries cycle_kset_series(int k);

// Table c(n,k) = dominating k-set count of the n-vertex path or cycle,
// n <= max_n, k <= max_k, assembled from the k-set series.
TruncatedBivariateSeries kset_generating_table(Family f, int max_n, int max_k);

enum class TribonacciMode { recurrence, binomial_sum };

// T(0) = T(1) = 1, T(2) = 2, then T(n) = T(n-1) + T(n-2) + T(n-3); the
// binomial_sum mode evaluates the equivalent double binomial sum.
BigInt tribonacci(int n, TribonacciMode mode = TribonacciMode::recurrence);

// Count of dominating sets of the minimum size ceil(n/3), by the residue
// of n mod 3.  Paths need n >= 1, cycles n >= 3.
BigInt min_dominating_count(Family f, int n);

// Smallest k with coeff(k) > 0; domain error when no positive coefficient.
int domination_number(const DomPolynomial& p);
int domination_number(Family f, int n);

// Triangle built from the closed-form k-set counts (no enumeration).
KSetTriangle formula_triangle(Family f, int max_n);

} // namespace dompoly

#endif
