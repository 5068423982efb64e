#include "dompoly/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <stdexcept>

namespace dompoly {

namespace {

    std::pair<int, int> word_bit(int v)
    {
        return { (v - 1) >> 6, (v - 1) & 63 };
    }

} // namespace

VertexSet::VertexSet(std::initializer_list<int> labels)
{
    for (int v : labels)
        insert(v);
}

VertexSet VertexSet::range(int n)
{
    VertexSet s;
    if (n <= 0)
        return s;
    s.words_.assign((n + 63) / 64, ~0ull);
    int spare = static_cast<int>(s.words_.size()) * 64 - n;
    if (spare > 0)
        s.words_.back() >>= spare;
    return s;
}

bool VertexSet::contains(int v) const
{
    if (v < 1)
        return false;
    auto [w, b] = word_bit(v);
    if (w >= static_cast<int>(words_.size()))
        return false;
    return (words_[w] >> b) & 1ull;
}

void VertexSet::insert(int v)
{
    if (v < 1)
        throw std::domain_error("vertex labels are 1-based");
    auto [w, b] = word_bit(v);
    if (w >= static_cast<int>(words_.size()))
        words_.resize(w + 1, 0);
    words_[w] |= 1ull << b;
}

void VertexSet::erase(int v)
{
    if (v < 1)
        return;
    auto [w, b] = word_bit(v);
    if (w < static_cast<int>(words_.size())) {
        words_[w] &= ~(1ull << b);
        trim();
    }
}

int VertexSet::size() const
{
    int c = 0;
    for (auto w : words_)
        c += std::popcount(w);
    return c;
}

int VertexSet::max_label() const
{
    if (words_.empty())
        return 0;
    int w = static_cast<int>(words_.size()) - 1;
    return w * 64 + 64 - std::countl_zero(words_[w]);
}

bool VertexSet::is_subset_of(const VertexSet& other) const
{
    if (words_.size() > other.words_.size())
        return false;
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i])
            return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const
{
    std::size_t m = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < m; ++i)
        if (words_[i] & other.words_[i])
            return true;
    return false;
}

VertexSet VertexSet::intersect(const VertexSet& other) const
{
    VertexSet r;
    std::size_t m = std::min(words_.size(), other.words_.size());
    r.words_.resize(m);
    for (std::size_t i = 0; i < m; ++i)
        r.words_[i] = words_[i] & other.words_[i];
    r.trim();
    return r;
}

VertexSet VertexSet::unite(const VertexSet& other) const
{
    VertexSet r;
    std::size_t m = std::max(words_.size(), other.words_.size());
    r.words_.resize(m, 0);
    for (std::size_t i = 0; i < words_.size(); ++i)
        r.words_[i] |= words_[i];
    for (std::size_t i = 0; i < other.words_.size(); ++i)
        r.words_[i] |= other.words_[i];
    return r;
}

VertexSet VertexSet::subtract(const VertexSet& other) const
{
    VertexSet r = *this;
    std::size_t m = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < m; ++i)
        r.words_[i] &= ~other.words_[i];
    r.trim();
    return r;
}

std::vector<int> VertexSet::members() const
{
    std::vector<int> out;
    out.reserve(size());
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits) {
            int b = std::countr_zero(bits);
            out.push_back(static_cast<int>(w) * 64 + b + 1);
            bits &= bits - 1;
        }
    }
    return out;
}

std::size_t VertexSet::hash() const
{
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : words_)
        h = (h ^ w) * 0x100000001b3ull;
    return h;
}

void VertexSet::trim()
{
    while (!words_.empty() && words_.back() == 0)
        words_.pop_back();
}

SimpleGraph::SimpleGraph(int n)
    : n_(n)
{
    if (n < 0)
        throw std::domain_error("vertex count must be nonnegative");
}

SimpleGraph::SimpleGraph(int n, std::initializer_list<std::pair<int, int>> edges)
    : SimpleGraph(n)
{
    for (auto [i, j] : edges)
        add_edge(i, j);
}

void SimpleGraph::add_edge(int i, int j)
{
    if (i < 1 || i > n_ || j < 1 || j > n_)
        throw std::domain_error("edge endpoint outside vertex range");
    if (i == j)
        throw std::domain_error("self-loops are not allowed");
    edges_.insert({ std::min(i, j), std::max(i, j) });
}

bool SimpleGraph::has_edge(int i, int j) const
{
    return edges_.count({ std::min(i, j), std::max(i, j) }) > 0;
}

VertexSet SimpleGraph::neighbors(int v) const
{
    VertexSet s;
    for (auto [a, b] : edges_) {
        if (a == v)
            s.insert(b);
        else if (b == v)
            s.insert(a);
    }
    return s;
}

VertexSet SimpleGraph::closed_neighborhood(int v) const
{
    VertexSet s = neighbors(v);
    s.insert(v);
    return s;
}

const char* family_name(Family f)
{
    switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::wheel: return "wheel";
    case Family::complete: return "complete";
    }
    return "?";
}

Family family_from_name(const std::string& name)
{
    if (name == "path")
        return Family::path;
    if (name == "cycle")
        return Family::cycle;
    if (name == "wheel")
        return Family::wheel;
    if (name == "complete")
        return Family::complete;
    throw std::domain_error("unknown graph family: " + name);
}

SimpleGraph build_family(Family f, int n)
{
    if (n < 1)
        throw std::domain_error("family graphs need at least one vertex");
    switch (f) {
    case Family::path: {
        SimpleGraph g(n);
        for (int i = 1; i < n; ++i)
            g.add_edge(i, i + 1);
        return g;
    }
    case Family::cycle: {
        SimpleGraph g(n);
        for (int i = 1; i < n; ++i)
            g.add_edge(i, i + 1);
        if (n >= 3)
            g.add_edge(n, 1);
        return g;
    }
    case Family::wheel: {
        if (n < 4)
            throw std::domain_error("wheels need at least four vertices");
        return join(build_family(Family::complete, 1), build_family(Family::cycle, n - 1));
    }
    case Family::complete: {
        SimpleGraph g(n);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                g.add_edge(i, j);
        return g;
    }
    }
    throw std::domain_error("unknown graph family");
}

SimpleGraph disjoint_union(const SimpleGraph& g, const SimpleGraph& h)
{
    SimpleGraph r(g.vertex_count() + h.vertex_count());
    for (auto [a, b] : g.edges())
        r.add_edge(a, b);
    int off = g.vertex_count();
    for (auto [a, b] : h.edges())
        r.add_edge(a + off, b + off);
    return r;
}

SimpleGraph join(const SimpleGraph& g, const SimpleGraph& h)
{
    SimpleGraph r = disjoint_union(g, h);
    int off = g.vertex_count();
    for (int i = 1; i <= g.vertex_count(); ++i)
        for (int j = 1; j <= h.vertex_count(); ++j)
            r.add_edge(i, j + off);
    return r;
}

bool is_dominating(const SimpleGraph& g, const VertexSet& d)
{
    if (!d.is_subset_of(VertexSet::range(g.vertex_count())))
        throw std::domain_error("dominating-set candidate has labels outside the graph");
    for (int v = 1; v <= g.vertex_count(); ++v) {
        if (d.contains(v))
            continue;
        if (!g.closed_neighborhood(v).intersects(d))
            return false;
    }
    return true;
}

BipartiteOneWayDigraph::BipartiteOneWayDigraph(VertexSet u1, VertexSet u2,
                                               const std::vector<std::pair<int, int>>& arcs)
    : u1_(std::move(u1))
    , u2_(std::move(u2))
{
    out_.resize(u1_.max_label() + 1);
    in_.resize(u2_.max_label() + 1);
    for (auto [i, v] : arcs) {
        if (!u1_.contains(i))
            throw std::domain_error("arc source is not a left vertex");
        if (!u2_.contains(v))
            throw std::domain_error("arc target is not a right vertex");
        out_[i].insert(v);
        in_[v].insert(i);
    }
}

VertexSet BipartiteOneWayDigraph::out_neighbors(int i) const
{
    if (i < 1 || i >= static_cast<int>(out_.size()) || !u1_.contains(i))
        return {};
    return out_[i];
}

VertexSet BipartiteOneWayDigraph::in_neighbors(int v) const
{
    if (v < 1 || v >= static_cast<int>(in_.size()) || !u2_.contains(v))
        return {};
    return in_[v];
}

int BipartiteOneWayDigraph::arc_count() const
{
    int c = 0;
    for (int i : u1_.members())
        c += out_neighbors(i).size();
    return c;
}

std::vector<std::pair<int, int>> BipartiteOneWayDigraph::arcs() const
{
    std::vector<std::pair<int, int>> out;
    for (int i : u1_.members())
        for (int v : out_neighbors(i).members())
            out.emplace_back(i, v);
    return out;
}

bool BipartiteOneWayDigraph::operator==(const BipartiteOneWayDigraph& other) const
{
    return u1_ == other.u1_ && u2_ == other.u2_ && arcs() == other.arcs();
}

BipartiteOneWayDigraph lift(const SimpleGraph& g)
{
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> arcs;
    for (int i = 1; i <= n; ++i)
        arcs.emplace_back(i, i);
    for (auto [i, j] : g.edges()) {
        arcs.emplace_back(i, j);
        arcs.emplace_back(j, i);
    }
    return { VertexSet::range(n), VertexSet::range(n), arcs };
}

BipartiteOneWayDigraph digraph_delete(const BipartiteOneWayDigraph& g, int i)
{
    if (!g.u1_.contains(i))
        throw std::domain_error("vertex to delete is not in u1");
    BipartiteOneWayDigraph r = g;
    r.u1_.erase(i);
    for (int v : r.out_[i].members())
        r.in_[v].erase(i);
    r.out_[i] = {};
    return r;
}

BipartiteOneWayDigraph digraph_extract(const BipartiteOneWayDigraph& g, int i)
{
    if (!g.u1_.contains(i))
        throw std::domain_error("vertex to extract is not in u1");
    BipartiteOneWayDigraph r = g;
    VertexSet removed = r.out_[i];
    r.u1_.erase(i);
    r.out_[i] = {};
    for (int v : removed.members()) {
        for (int j : r.in_[v].members())
            r.out_[j].erase(v);
        r.in_[v] = {};
        r.u2_.erase(v);
    }
    return r;
}

SimpleGraph read_edge_list(std::istream& in)
{
    int n;
    if (!(in >> n))
        throw std::domain_error("edge list must start with the vertex count");
    if (n < 0)
        throw std::domain_error("vertex count must be nonnegative");
    SimpleGraph g(n);
    int a, b;
    while (in >> a) {
        if (!(in >> b))
            throw std::domain_error("edge list has a dangling endpoint");
        g.add_edge(a, b);
    }
    if (!in.eof()) {
        in.clear();
        std::string tail;
        in >> tail;
        if (!tail.empty())
            throw std::domain_error("unexpected token in edge list: " + tail);
    }
    return g;
}

} // namespace dompoly
