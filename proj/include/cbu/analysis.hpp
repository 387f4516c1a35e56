#ifndef CBU_ANALYSIS_HPP
#define CBU_ANALYSIS_HPP

// Exact desk-scale invariants: independence number, chromatic number, girth,
// and the fractional chromatic number as an exact rational LP over maximal
// independent sets.

#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <vector>

#include "cbu/core.hpp"
#include "cbu/geometry.hpp"  // Rational

namespace cbu {

constexpr int kAnalysisVertexLimit = 24;

namespace detail {

inline void check_size(const Graph& g, const char* who) {
    if (g.n() > kAnalysisVertexLimit)
        throw std::invalid_argument(std::string(who) + ": graph exceeds the size limit");
}

inline std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint64_t> adj(g.n(), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= std::uint64_t{1} << v;
        adj[v] |= std::uint64_t{1} << u;
    }
    return adj;
}

}  // namespace detail

struct IndependentSetResult {
    int size = 0;
    std::vector<int> witness;
};

// Exact maximum independent set by branch and bound on a max-degree vertex.
inline IndependentSetResult independence_number(const Graph& g) {
    detail::check_size(g, "independence_number");
    auto adj = detail::adjacency_masks(g);
    std::uint64_t best_set = 0;
    int best = 0;
    auto popcount = [](std::uint64_t x) { return __builtin_popcountll(x); };
    std::function<void(std::uint64_t, std::uint64_t, int)> go =
        [&](std::uint64_t avail, std::uint64_t chosen, int size) {
            if (size + popcount(avail) <= best) return;  // bound
            if (!avail) {
                if (size > best) { best = size; best_set = chosen; }
                return;
            }
            // branch vertex: maximum degree within avail
            int v = -1, dmax = -1;
            for (std::uint64_t a = avail; a;) {
                int u = __builtin_ctzll(a);
                a &= a - 1;
                int d = popcount(adj[u] & avail);
                if (d > dmax) { dmax = d; v = u; }
            }
            if (dmax <= 1) {
                // avail induces isolated vertices and disjoint edges: take one
                // endpoint of each edge and every isolated vertex.
                int extra = 0;
                std::uint64_t take = 0;
                std::uint64_t a = avail;
                while (a) {
                    int u = __builtin_ctzll(a);
                    a &= ~(std::uint64_t{1} << u);
                    a &= ~adj[u];
                    take |= std::uint64_t{1} << u;
                    ++extra;
                }
                if (size + extra > best) { best = size + extra; best_set = chosen | take; }
                return;
            }
            std::uint64_t bit = std::uint64_t{1} << v;
            go(avail & ~bit & ~adj[v], chosen | bit, size + 1);  // take v
            go(avail & ~bit, chosen, size);                      // skip v
        };
    std::uint64_t all = g.n() == 64 ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << g.n()) - 1;
    go(all, 0, 0);
    IndependentSetResult res;
    res.size = best;
    for (int v = 0; v < g.n(); ++v)
        if (best_set >> v & 1) res.witness.push_back(v);
    return res;
}

// Exact chromatic number by iterative-deepening backtracking.
inline int chromatic_number(const Graph& g) {
    detail::check_size(g, "chromatic_number");
    if (g.n() == 0) return 0;
    if (g.m() == 0) return 1;
    auto adj = detail::adjacency_masks(g);
    // order by decreasing degree
    std::vector<int> order(g.n());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.degree(a) > g.degree(b); });
    for (int k = 2; ; ++k) {
        std::vector<int> color(g.n(), -1);
        std::function<bool(int)> go = [&](int idx) -> bool {
            if (idx == g.n()) return true;
            int v = order[idx];
            int used = 0;
            for (int w : g.neighbors(v))
                if (color[w] >= 0) used |= 1 << color[w];
            int cap = 1;
            for (int i = 0; i < idx; ++i) cap = std::max(cap, color[order[i]] + 2);
            cap = std::min(cap, k);  // symmetry: at most one fresh color
            for (int c = 0; c < cap; ++c) {
                if (used >> c & 1) continue;
                color[v] = c;
                if (go(idx + 1)) return true;
                color[v] = -1;
            }
            return false;
        };
        if (go(0)) return k;
    }
}

// Length of a shortest cycle, or nullopt for forests.
inline std::optional<int> girth(const Graph& g) {
    int best = -1;
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges()[e];
        // BFS distance from u to v avoiding the edge uv
        std::vector<int> dist(g.n(), -1);
        std::deque<int> q{u};
        dist[u] = 0;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            if (x == v) break;
            for (int w : g.neighbors(x)) {
                if (x == u && w == v) continue;
                if (dist[w] == -1) { dist[w] = dist[x] + 1; q.push_back(w); }
            }
        }
        if (dist[v] >= 0 && (best == -1 || dist[v] + 1 < best)) best = dist[v] + 1;
    }
    if (best == -1) return std::nullopt;
    return best;
}

// All maximal independent sets as bitmasks (Bron-Kerbosch with pivoting on the
// complement graph).
inline std::vector<std::uint64_t> maximal_independent_sets(const Graph& g) {
    detail::check_size(g, "maximal_independent_sets");
    int n = g.n();
    auto adj = detail::adjacency_masks(g);
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::vector<std::uint64_t> nonadj(n);  // complement adjacency
    for (int v = 0; v < n; ++v)
        nonadj[v] = all & ~adj[v] & ~(std::uint64_t{1} << v);
    std::vector<std::uint64_t> out;
    std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)> bk =
        [&](std::uint64_t R, std::uint64_t P, std::uint64_t X) {
            if (!P && !X) { out.push_back(R); return; }
            std::uint64_t PX = P | X;
            int pivot = -1, best = -1;
            for (std::uint64_t a = PX; a;) {
                int u = __builtin_ctzll(a);
                a &= a - 1;
                int c = __builtin_popcountll(P & nonadj[u]);
                if (c > best) { best = c; pivot = u; }
            }
            std::uint64_t cand = P & ~nonadj[pivot];
            while (cand) {
                int v = __builtin_ctzll(cand);
                std::uint64_t bit = std::uint64_t{1} << v;
                cand &= cand - 1;
                bk(R | bit, P & nonadj[v], X & nonadj[v]);
                P &= ~bit;
                X |= bit;
            }
        };
    if (n == 0) return {0};
    bk(0, all, 0);
    return out;
}

struct FractionalColoring {
    std::vector<std::pair<std::uint64_t, Rational>> weights;  // (set mask, weight)
    Rational value;
};

// Feasibility of a fractional coloring: every vertex covered by total weight
// at least one, value equal to the sum of weights, all weights nonnegative.
inline bool fractional_coloring_feasible(const Graph& g, const FractionalColoring& fc) {
    Rational sum = 0;
    for (auto& [mask, w] : fc.weights) {
        if (w < 0) return false;
        sum += w;
    }
    if (sum != fc.value) return false;
    for (int v = 0; v < g.n(); ++v) {
        Rational cover = 0;
        for (auto& [mask, w] : fc.weights)
            if (mask >> v & 1) cover += w;
        if (cover < 1) return false;
    }
    return true;
}

namespace detail {

// Dense simplex with Bland's rule over exact rationals, for
//   maximize sum(y_v)  s.t.  sum_{v in S} y_v <= 1 per set S,  y >= 0.
// This is the dual of the fractional-coloring LP; the optimal primal weights
// are read off the reduced costs of the slack columns.
struct FractionalLp {
    Rational value;
    std::vector<Rational> set_weights;  // per constraint row
};

inline FractionalLp solve_fractional_lp(int n, const std::vector<std::uint64_t>& sets) {
    int rows = static_cast<int>(sets.size());
    int cols = n + rows;  // y variables + slacks
    // tableau[r][c], plus rhs column; objective row at index `rows`
    std::vector<std::vector<Rational>> T(rows + 1, std::vector<Rational>(cols + 1, 0));
    for (int r = 0; r < rows; ++r) {
        for (int v = 0; v < n; ++v)
            if (sets[r] >> v & 1) T[r][v] = 1;
        T[r][n + r] = 1;
        T[r][cols] = 1;
    }
    for (int v = 0; v < n; ++v) T[rows][v] = -1;  // maximize sum y  ->  min -sum
    std::vector<int> basis(rows);
    for (int r = 0; r < rows; ++r) basis[r] = n + r;

    for (;;) {
        int pc = -1;
        for (int c = 0; c < cols; ++c)
            if (T[rows][c] < 0) { pc = c; break; }  // Bland: first negative
        if (pc < 0) break;
        int pr = -1;
        Rational best;
        for (int r = 0; r < rows; ++r) {
            if (T[r][pc] <= 0) continue;
            Rational ratio = T[r][cols] / T[r][pc];
            if (pr < 0 || ratio < best || (ratio == best && basis[r] < basis[pr])) {
                best = ratio;
                pr = r;
            }
        }
        if (pr < 0) throw std::runtime_error("fractional LP unbounded");
        Rational piv = T[pr][pc];
        for (int c = 0; c <= cols; ++c) T[pr][c] /= piv;
        for (int r = 0; r <= rows; ++r) {
            if (r == pr) continue;
            Rational f = T[r][pc];
            if (f == 0) continue;
            for (int c = 0; c <= cols; ++c) T[r][c] -= f * T[pr][c];
        }
        basis[pr] = pc;
    }
    FractionalLp res;
    res.value = T[rows][cols];
    res.set_weights.resize(rows);
    for (int r = 0; r < rows; ++r) res.set_weights[r] = T[rows][n + r];
    return res;
}

}  // namespace detail

// Exact fractional chromatic number: LP over all maximal independent sets in
// rational arithmetic, together with an optimal weight assignment.  The
// returned coloring is re-checked for feasibility before returning.
inline FractionalColoring fractional_chromatic_number(const Graph& g) {
    detail::check_size(g, "fractional_chromatic_number");
    FractionalColoring fc;
    if (g.n() == 0) {
        fc.value = 0;
        return fc;
    }
    auto sets = maximal_independent_sets(g);
    auto lp = detail::solve_fractional_lp(g.n(), sets);
    fc.value = lp.value;
    for (std::size_t r = 0; r < sets.size(); ++r)
        if (lp.set_weights[r] != 0) fc.weights.push_back({sets[r], lp.set_weights[r]});
    if (!fractional_coloring_feasible(g, fc))
        throw std::runtime_error("fractional_chromatic_number: infeasible optimum");
    return fc;
}

}  // namespace cbu

#endif  // CBU_ANALYSIS_HPP
