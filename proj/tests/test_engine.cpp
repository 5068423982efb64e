#include "dompoly/engine.hpp"

#include "dompoly/families.hpp"
#include "dompoly/oracle.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace dompoly;
using dompoly::test::i_shape;
using dompoly::test::j_shape;
using dompoly::test::random_digraph;
using dompoly::test::random_graph;

TEST_CASE("base cases of the branch recurrence")
{
    CHECK(recurrence_poly(i_shape(0)) == DomPolynomial(1, { 1, 1 })); // 1 + t
    CHECK(recurrence_poly(j_shape(0)) == DomPolynomial());

    BipartiteOneWayDigraph free4(VertexSet::range(4), {}, {});
    CHECK(recurrence_poly(free4) == DomPolynomial(4, { 1, 4, 6, 4, 1 }));

    BipartiteOneWayDigraph dead(VertexSet { 1 }, VertexSet { 1, 2 }, { { 1, 1 } });
    CHECK(recurrence_poly(dead) == DomPolynomial(1, { 0, 0 }));
}

TEST_CASE("small graph polynomials")
{
    CHECK(graph_poly(build_family(Family::path, 2)) == DomPolynomial(2, { 0, 2, 1 }));
    CHECK(graph_poly(build_family(Family::complete, 4)) == DomPolynomial(4, { 0, 4, 6, 4, 1 }));
    CHECK(graph_poly(SimpleGraph()) == DomPolynomial());
}

TEST_CASE("lifted paths reproduce the path recurrence")
{
    for (int n = 1; n <= 18; ++n)
        CHECK(recurrence_poly(lift(build_family(Family::path, n))) == path_poly(n));
}

TEST_CASE("ladder shapes match their published initial polynomials")
{
    CHECK(recurrence_poly(i_shape(1)) == DomPolynomial(2, { 0, 2, 1 }));    // 1 + 2t
    CHECK(recurrence_poly(i_shape(2)) == DomPolynomial(3, { 0, 2, 3, 1 })); // 1 + 3t + 2t^2
    for (int m = 0; m <= 10; ++m) {
        CHECK(recurrence_poly(i_shape(m)) == brute_force_digraph_poly(i_shape(m)));
        CHECK(recurrence_poly(j_shape(m)) == brute_force_digraph_poly(j_shape(m)));
    }
}

TEST_CASE("engine agrees with enumeration on random graphs")
{
    std::mt19937_64 rng(29);
    for (int rep = 0; rep < 30; ++rep) {
        SimpleGraph g = random_graph(rng, 1 + static_cast<int>(rng() % 10));
        CHECK(graph_poly(g) == brute_force_poly(g));
    }
}

TEST_CASE("engine agrees with enumeration on random one-way digraphs")
{
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 30; ++rep) {
        BipartiteOneWayDigraph g = random_digraph(
            rng, 1 + static_cast<int>(rng() % 7), 1 + static_cast<int>(rng() % 7));
        CHECK(recurrence_poly(g) == brute_force_digraph_poly(g));
    }
}

TEST_CASE("the result does not depend on the pivot rule")
{
    std::mt19937_64 rng(37);
    std::vector<SimpleGraph> inputs;
    for (Family f : { Family::path, Family::cycle, Family::complete })
        inputs.push_back(build_family(f, 9));
    inputs.push_back(build_family(Family::wheel, 9));
    for (int rep = 0; rep < 10; ++rep)
        inputs.push_back(random_graph(rng, 8));

    for (const SimpleGraph& g : inputs) {
        DomPolynomial reference = graph_poly(g, PivotRule::max_out_degree);
        CHECK(graph_poly(g, PivotRule::min_label) == reference);
        CHECK(graph_poly(g, PivotRule::max_label) == reference);
    }
}

TEST_CASE("components multiply")
{
    // two copies of the one-edge lift, the second relabeled out of the way
    std::vector<std::pair<int, int>> arcs { { 1, 1 }, { 1, 2 }, { 2, 1 }, { 2, 2 },
                                            { 5, 5 }, { 5, 6 }, { 6, 5 }, { 6, 6 } };
    BipartiteOneWayDigraph two(VertexSet { 1, 2, 5, 6 }, VertexSet { 1, 2, 5, 6 }, arcs);
    DomPolynomial part = graph_poly(build_family(Family::path, 2));
    CHECK(recurrence_poly(two) == poly_mul(part, part));

    // an isolated left vertex contributes a factor of (1 + t)
    BipartiteOneWayDigraph with_spare(VertexSet { 1, 2 }, VertexSet { 2 }, { { 2, 2 } });
    CHECK(recurrence_poly(with_spare) == DomPolynomial(2, { 0, 1, 1 }));
}

TEST_CASE("a lifted union equals the product of the lifted parts")
{
    SimpleGraph g = build_family(Family::cycle, 5);
    SimpleGraph h = build_family(Family::path, 4);
    CHECK(graph_poly(disjoint_union(g, h)) == poly_mul(graph_poly(g), graph_poly(h)));
}

TEST_CASE("engine keeps working past the single-word vertex range")
{
    CHECK(graph_poly(build_family(Family::path, 70)) == path_poly(70));
    CHECK(graph_poly(build_family(Family::cycle, 66)) == cycle_poly(66));
}
