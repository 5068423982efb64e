#ifndef DOMPOLY_ENGINE_HPP
#define DOMPOLY_ENGINE_HPP

#include "dompoly/graph.hpp"
#include "dompoly/polynomial.hpp"

namespace dompoly {

// Which left vertex the recurrence branches on.  The result is the same
// for every rule; max_out_degree shrinks the extract branch fastest.
enum class PivotRule { max_out_degree, min_label, max_label };

// Domination polynomial of a one-way digraph via the branch recurrence
//   D(g) = D(g - i) + t * D(g - N+[i]),   i in u1,
// with (1+t)^|u1| once u2 is exhausted, zero once u1 is exhausted or some
// u2 vertex loses all in-arcs, and multiplicative splitting over weakly
// connected components.  Residual states are memoized on their (u1, u2)
// pair, which identifies them because removal never relabels.  Worst case
// is exponential in |u1|; path-like inputs collapse to a small state set.
DomPolynomial recurrence_poly(const BipartiteOneWayDigraph& g,
                              PivotRule rule = PivotRule::max_out_degree);

// recurrence_poly on the lift of g; the zero polynomial for the empty graph.
DomPolynomial graph_poly(const SimpleGraph& g,
                         PivotRule rule = PivotRule::max_out_degree);

} // namespace dompoly

#endif
