#ifndef DOMPOLY_GRAPH_HPP
#define DOMPOLY_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace dompoly {

// Subset of 1-based vertex labels, stored as a dense bitset: one 64-bit
// word covers graphs up to 64 vertices, larger label ranges spill into
// further words.  Values are kept in a canonical trimmed form so that
// equality and hashing are representation-independent.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<int> labels);

    static VertexSet range(int n); // {1, ..., n}

    bool contains(int v) const;
    void insert(int v);
    void erase(int v);

    int size() const;
    bool empty() const { return words_.empty(); }
    int max_label() const; // 0 when empty

    bool is_subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;

    VertexSet intersect(const VertexSet& other) const;
    VertexSet unite(const VertexSet& other) const;
    VertexSet subtract(const VertexSet& other) const;

    std::vector<int> members() const; // ascending

    bool operator==(const VertexSet& other) const { return words_ == other.words_; }
    bool operator!=(const VertexSet& other) const { return !(*this == other); }
    bool operator<(const VertexSet& other) const { return words_ < other.words_; }

    std::size_t hash() const;

private:
    void trim();
    std::vector<std::uint64_t> words_;
};

// Undirected simple graph on vertices 1..n.  No self-loops, no parallel
// edges; edges are stored as normalized (min,max) pairs.
class SimpleGraph {
public:
    SimpleGraph() = default; // the empty graph (n = 0)
    explicit SimpleGraph(int n);
    SimpleGraph(int n, std::initializer_list<std::pair<int, int>> edges);

    void add_edge(int i, int j);
    bool has_edge(int i, int j) const;

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::set<std::pair<int, int>>& edges() const { return edges_; }

    VertexSet neighbors(int v) const;
    VertexSet closed_neighborhood(int v) const;

    bool operator==(const SimpleGraph& other) const
    {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::set<std::pair<int, int>> edges_;
};

enum class Family { path, cycle, wheel, complete };

const char* family_name(Family f);
// Throws std::domain_error on unknown names.
Family family_from_name(const std::string& name);

// Path/cycle/complete require n >= 1, wheel requires n >= 4.
// cycle(1) is a single vertex and cycle(2) is a single edge: the two-vertex
// dicycle has the same domination counts as one edge, and the library only
// represents simple graphs.
SimpleGraph build_family(Family f, int n);

// Vertices of h are relabeled by an offset of g.vertex_count().
SimpleGraph disjoint_union(const SimpleGraph& g, const SimpleGraph& h);

// Disjoint union plus every edge between a g-vertex and an h-vertex.
SimpleGraph join(const SimpleGraph& g, const SimpleGraph& h);

// True iff every vertex outside d has a neighbor in d.  The empty set
// dominates only the empty graph.  Throws std::domain_error when d is not
// a subset of the vertex range.
bool is_dominating(const SimpleGraph& g, const VertexSet& d);

// Digraph with partite sets u1, u2 and every arc oriented u1 -> u2.
// Left and right labels live in separate namespaces: left 3 and right 3
// are distinct vertices.  Vertex removal never relabels, so a residual
// digraph is identified by its (u1, u2) pair.
class BipartiteOneWayDigraph {
public:
    BipartiteOneWayDigraph() = default;
    BipartiteOneWayDigraph(VertexSet u1, VertexSet u2,
                           const std::vector<std::pair<int, int>>& arcs);

    const VertexSet& u1() const { return u1_; }
    const VertexSet& u2() const { return u2_; }

    // N+(i) for a left vertex; empty for non-members.
    VertexSet out_neighbors(int i) const;
    // N-(v) for a right vertex; empty for non-members.
    VertexSet in_neighbors(int v) const;

    int arc_count() const;
    std::vector<std::pair<int, int>> arcs() const; // sorted

    bool operator==(const BipartiteOneWayDigraph& other) const;

private:
    friend BipartiteOneWayDigraph digraph_delete(const BipartiteOneWayDigraph&, int);
    friend BipartiteOneWayDigraph digraph_extract(const BipartiteOneWayDigraph&, int);

    VertexSet u1_, u2_;
    std::vector<VertexSet> out_; // indexed by left label; out_[i] subset of u2_
    std::vector<VertexSet> in_;  // indexed by right label; in_[v] subset of u1_
};

// The one-way lift of a simple graph: u1 = u2 = {1..n}, an arc (i,i) per
// vertex and arcs (i,j),(j,i) per edge {i,j}.  Dominating sets of the lift
// are exactly dominating sets of the graph.
BipartiteOneWayDigraph lift(const SimpleGraph& g);

// Removes left vertex i and the arcs sourced at it.  Throws
// std::domain_error when i is not in u1.
BipartiteOneWayDigraph digraph_delete(const BipartiteOneWayDigraph& g, int i);

// Removes left vertex i, its whole out-neighborhood from u2, and every arc
// incident to a removed vertex.  Throws std::domain_error when i is not in u1.
BipartiteOneWayDigraph digraph_extract(const BipartiteOneWayDigraph& g, int i);

// Edge-list text format: first line n, then one "i j" pair per line,
// 1-based.  Duplicate pairs collapse; malformed input throws
// std::domain_error.
SimpleGraph read_edge_list(std::istream& in);

} // namespace dompoly

namespace std {
template <> struct hash<dompoly::VertexSet> {
    std::size_t operator()(const dompoly::VertexSet& s) const { return s.hash(); }
};
} // namespace std

#endif
