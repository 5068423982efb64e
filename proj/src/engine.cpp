#include "dompoly/engine.hpp"

#include "dompoly/bigint.hpp"

#include <unordered_map>
#include <utility>
#include <vector>

namespace dompoly {

namespace {

    struct MemoKey {
        VertexSet u1, u2;
        bool operator==(const MemoKey& other) const
        {
            return u1 == other.u1 && u2 == other.u2;
        }
    };

    struct MemoKeyHash {
        std::size_t operator()(const MemoKey& k) const
        {
            return k.u1.hash() * 0x9e3779b97f4a7c15ull ^ k.u2.hash();
        }
    };

    // D-convention coefficients; index = set size.  Context is implicit in
    // the vector length (|u1| + 1).
    using Coeffs = std::vector<BigInt>;

    Coeffs binomial_row(int m)
    {
        Coeffs c(m + 1);
        c[0] = 1;
        for (int k = 1; k <= m; ++k)
            c[k] = c[k - 1] * (m - k + 1) / k;
        return c;
    }

    class Solver {
    public:
        Solver(const BipartiteOneWayDigraph& g, PivotRule rule)
            : g_(g)
            , rule_(rule)
        {
        }

        Coeffs solve(const VertexSet& u1, const VertexSet& u2)
        {
            if (u2.empty())
                return binomial_row(u1.size());
            if (u1.empty())
                return Coeffs { 0 };

            MemoKey key { u1, u2 };
            if (auto it = memo_.find(key); it != memo_.end())
                return it->second;

            Coeffs result = compute(u1, u2);
            memo_.emplace(std::move(key), result);
            return result;
        }

    private:
        Coeffs compute(const VertexSet& u1, const VertexSet& u2)
        {
            // A right vertex with no live in-arc can never be covered.
            for (int v : u2.members())
                if (!g_.in_neighbors(v).intersects(u1))
                    return Coeffs(u1.size() + 1);

            auto components = split_components(u1, u2);
            if (components.size() > 1) {
                Coeffs acc { 1 };
                for (auto& [c1, c2] : components)
                    acc = convolve(acc, solve(c1, c2));
                return acc;
            }

            int i = pick_pivot(u1, u2);
            Coeffs without = solve_erased(u1, u2, i, false);
            Coeffs with = solve_erased(u1, u2, i, true);

            // without: sets avoiding i, same sizes; with: sets gaining i,
            // sizes shift by one.
            Coeffs result(u1.size() + 1);
            for (int k = 0; k < static_cast<int>(without.size()); ++k)
                result[k] += without[k];
            for (int k = 0; k < static_cast<int>(with.size()); ++k)
                result[k + 1] += with[k];
            return result;
        }

        Coeffs solve_erased(const VertexSet& u1, const VertexSet& u2, int i, bool extract)
        {
            VertexSet r1 = u1;
            r1.erase(i);
            if (!extract)
                return solve(r1, u2);
            return solve(r1, u2.subtract(g_.out_neighbors(i)));
        }

        int pick_pivot(const VertexSet& u1, const VertexSet& u2) const
        {
            std::vector<int> left = u1.members();
            switch (rule_) {
            case PivotRule::min_label:
                return left.front();
            case PivotRule::max_label:
                return left.back();
            case PivotRule::max_out_degree:
                break;
            }
            int best = left.front(), best_deg = -1;
            for (int i : left) {
                int deg = g_.out_neighbors(i).intersect(u2).size();
                if (deg > best_deg) {
                    best = i;
                    best_deg = deg;
                }
            }
            return best;
        }

        std::vector<std::pair<VertexSet, VertexSet>>
        split_components(const VertexSet& u1, const VertexSet& u2) const
        {
            std::vector<std::pair<VertexSet, VertexSet>> comps;
            VertexSet seen_left, seen_right;
            for (int start : u1.members()) {
                if (seen_left.contains(start))
                    continue;
                VertexSet c1, c2;
                std::vector<std::pair<bool, int>> stack { { true, start } };
                while (!stack.empty()) {
                    auto [is_left, v] = stack.back();
                    stack.pop_back();
                    if (is_left) {
                        if (seen_left.contains(v))
                            continue;
                        seen_left.insert(v);
                        c1.insert(v);
                        for (int w : g_.out_neighbors(v).intersect(u2).members())
                            stack.emplace_back(false, w);
                    } else {
                        if (seen_right.contains(v))
                            continue;
                        seen_right.insert(v);
                        c2.insert(v);
                        for (int w : g_.in_neighbors(v).intersect(u1).members())
                            stack.emplace_back(true, w);
                    }
                }
                comps.emplace_back(std::move(c1), std::move(c2));
            }
            // Right vertices with no live in-arc never reach here (checked
            // above), so every u2 vertex has been assigned a component.
            return comps;
        }

        const BipartiteOneWayDigraph& g_;
        PivotRule rule_;
        std::unordered_map<MemoKey, Coeffs, MemoKeyHash> memo_;
    };

} // namespace

DomPolynomial recurrence_poly(const BipartiteOneWayDigraph& g, PivotRule rule)
{
    Solver solver(g, rule);
    Coeffs c = solver.solve(g.u1(), g.u2());
    return { g.u1().size(), std::move(c) };
}

DomPolynomial graph_poly(const SimpleGraph& g, PivotRule rule)
{
    if (g.vertex_count() == 0)
        return {};
    return recurrence_poly(lift(g), rule);
}

} // namespace dompoly
