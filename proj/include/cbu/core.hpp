#ifndef CBU_CORE_HPP
#define CBU_CORE_HPP

// Simple undirected graphs with dense integer vertices, orientations,
// and the elementary generators/transformations used across the library.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cbu {

using Edge = std::pair<int, int>;  // stored with first < second

class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n >= 0 ? n : 0) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    }
    Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge_unchecked(u, v);
        finalize();
    }

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int u, int v) const {
        if (u == v) return false;
        return std::binary_search(edges_.begin(), edges_.end(), norm(u, v));
    }
    // Index of edge {u,v} in edges(), or -1.
    int edge_index(int u, int v) const {
        auto e = norm(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e) return -1;
        return static_cast<int>(it - edges_.begin());
    }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    void add_edge_unchecked(int u, int v) {
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        edges_.push_back(norm(u, v));
    }
    void finalize() {
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        adj_.assign(n_, {});
        for (auto [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& a : adj_) std::sort(a.begin(), a.end());
    }
    static Edge norm(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// An assignment of a direction to every edge of a graph.
class Orientation {
public:
    Orientation() = default;
    // dir[e] == false: edges()[e].first -> .second ;  true: reversed.
    Orientation(Graph g, std::vector<bool> dir) : g_(std::move(g)), dir_(std::move(dir)) {
        if (static_cast<int>(dir_.size()) != g_.m())
            throw std::invalid_argument("Orientation: direction count != edge count");
    }
    // Build from an explicit arc list covering each edge exactly once.
    static Orientation from_arcs(const Graph& g, const std::vector<Edge>& arcs) {
        std::vector<bool> dir(g.m(), false);
        std::vector<bool> seen(g.m(), false);
        for (auto [t, h] : arcs) {
            int e = g.edge_index(t, h);
            if (e < 0) throw std::invalid_argument("Orientation: arc is not an edge");
            if (seen[e]) throw std::invalid_argument("Orientation: duplicate arc");
            seen[e] = true;
            dir[e] = (g.edges()[e].first != t);
        }
        if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
            throw std::invalid_argument("Orientation: some edge left unoriented");
        return Orientation(g, dir);
    }

    const Graph& graph() const { return g_; }
    // (tail, head) of edge index e.
    Edge arc(int e) const {
        auto [u, v] = g_.edges()[e];
        return dir_[e] ? Edge{v, u} : Edge{u, v};
    }
    bool has_arc(int tail, int head) const {
        int e = g_.edge_index(tail, head);
        return e >= 0 && arc(e) == Edge{tail, head};
    }
    std::vector<Edge> arcs() const {
        std::vector<Edge> out;
        out.reserve(g_.m());
        for (int e = 0; e < g_.m(); ++e) out.push_back(arc(e));
        return out;
    }
    int out_degree(int v) const {
        int d = 0;
        for (int w : g_.neighbors(v)) d += has_arc(v, w) ? 1 : 0;
        return d;
    }
    int in_degree(int v) const { return g_.degree(v) - out_degree(v); }
    Orientation reversed() const {
        std::vector<bool> d(dir_);
        d.flip();
        return Orientation(g_, d);
    }

private:
    Graph g_;
    std::vector<bool> dir_;
};

// Cyclic sequence of distinct vertices, consecutive pairs all edges.
struct WalkCycle {
    std::vector<int> vertices;
    int length() const { return static_cast<int>(vertices.size()); }
};

inline bool is_walk_cycle(const Graph& g, const WalkCycle& c) {
    int k = c.length();
    if (k < 3) return false;
    std::set<int> distinct(c.vertices.begin(), c.vertices.end());
    if (static_cast<int>(distinct.size()) != k) return false;
    for (int i = 0; i < k; ++i)
        if (!g.has_edge(c.vertices[i], c.vertices[(i + 1) % k])) return false;
    return true;
}

// ---- generators ------------------------------------------------------------

inline Graph cycle_graph(int k) {
    if (k < 3) throw std::invalid_argument("cycle_graph: k >= 3 required");
    std::vector<Edge> e;
    for (int i = 0; i < k; ++i) e.push_back({i, (i + 1) % k});
    return Graph(k, e);
}

inline Graph path_graph(int k) {  // k vertices, k-1 edges
    if (k < 1) throw std::invalid_argument("path_graph: k >= 1 required");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < k; ++i) e.push_back({i, i + 1});
    return Graph(k, e);
}

inline Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: n >= 1 required");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return Graph(n, e);
}

// Parts {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite: sizes >= 1");
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.push_back({i, a + j});
    return Graph(a + b, e);
}

// rows x cols grid; vertex (i,j) (0-based) has index i*cols + j.
inline Graph grid_graph(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid_graph: sizes >= 1");
    std::vector<Edge> e;
    auto id = [cols](int i, int j) { return i * cols + j; };
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (i + 1 < rows) e.push_back({id(i, j), id(i + 1, j)});
            if (j + 1 < cols) e.push_back({id(i, j), id(i, j + 1)});
        }
    return Graph(rows * cols, e);
}

inline Graph grid_graph(int n) { return grid_graph(n, n); }

// K_{2b,2b} minus the perfect matching {i, 2b+i}.
inline Graph kbb_minus_matching(int b) {
    if (b < 1) throw std::invalid_argument("kbb_minus_matching: b >= 1");
    std::vector<Edge> e;
    for (int i = 0; i < 2 * b; ++i)
        for (int j = 0; j < 2 * b; ++j)
            if (i != j) e.push_back({i, 2 * b + j});
    return Graph(4 * b, e);
}

// ---- transformations -------------------------------------------------------

struct SubdivisionResult {
    Graph graph;
    // origin_vertex[w] >= 0: w is the original vertex of that index.
    // origin_vertex[w] == -1: subdivision vertex; origin_edge[w] gives the
    // source edge index in the input graph and position_on_edge[w] its slot
    // (0-based, counted from the smaller endpoint).
    std::vector<int> origin_vertex;
    std::vector<int> origin_edge;
    std::vector<int> position_on_edge;
};

// Replace edge uv having count r by a path u, s1, ..., sr, v of fresh vertices.
inline SubdivisionResult subdivide(const Graph& g, const std::vector<int>& counts) {
    if (static_cast<int>(counts.size()) != g.m())
        throw std::invalid_argument("subdivide: one count per edge required");
    for (int c : counts)
        if (c < 0) throw std::invalid_argument("subdivide: negative count");
    SubdivisionResult res;
    std::vector<Edge> edges;
    int next = g.n();
    res.origin_vertex.assign(g.n(), 0);
    std::iota(res.origin_vertex.begin(), res.origin_vertex.end(), 0);
    res.origin_edge.assign(g.n(), -1);
    res.position_on_edge.assign(g.n(), -1);
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges()[e];
        int prev = u;
        for (int k = 0; k < counts[e]; ++k) {
            res.origin_vertex.push_back(-1);
            res.origin_edge.push_back(e);
            res.position_on_edge.push_back(k);
            edges.push_back({prev, next});
            prev = next++;
        }
        edges.push_back({prev, v});
    }
    res.graph = Graph(next, edges);
    return res;
}

inline SubdivisionResult subdivide_uniform(const Graph& g, int count) {
    return subdivide(g, std::vector<int>(g.m(), count));
}

// New vertex v' = g.n() with N(v') = N(v), non-adjacent to v.
inline Graph add_false_twin(const Graph& g, int v) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("add_false_twin: bad vertex");
    std::vector<Edge> e = g.edges();
    for (int w : g.neighbors(v)) e.push_back({w, g.n()});
    return Graph(g.n() + 1, e);
}

// ---- cycle enumeration -----------------------------------------------------

// Every simple cycle of length <= max_length, once up to rotation/reflection.
// Canonical representative: smallest vertex first, then the smaller of its two
// cycle neighbors second.
inline void enumerate_cycles(const Graph& g, int max_length,
                             const std::function<bool(const WalkCycle&)>& visit) {
    if (max_length < 3) throw std::invalid_argument("enumerate_cycles: max_length >= 3");
    int n = g.n();
    std::vector<bool> used(n, false);
    std::vector<int> path;
    bool stop = false;
    std::function<void(int, int)> dfs = [&](int start, int v) {
        if (stop) return;
        for (int w : g.neighbors(v)) {
            if (stop) return;
            if (w == start && path.size() >= 3) {
                // close: dedup reflections by requiring second < last
                if (path[1] < path.back()) {
                    WalkCycle c{path};
                    if (!visit(c)) { stop = true; return; }
                }
            }
            if (w > start && !used[w] && static_cast<int>(path.size()) < max_length) {
                used[w] = true;
                path.push_back(w);
                dfs(start, w);
                path.pop_back();
                used[w] = false;
            }
        }
    };
    for (int s = 0; s < n && !stop; ++s) {
        used[s] = true;
        path = {s};
        dfs(s, s);
        used[s] = false;
    }
}

inline std::vector<WalkCycle> all_cycles(const Graph& g, int max_length) {
    std::vector<WalkCycle> out;
    enumerate_cycles(g, max_length, [&](const WalkCycle& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

// ---- small-graph utilities -------------------------------------------------

inline bool is_connected(const Graph& g) {
    if (g.n() <= 1) return true;
    std::vector<bool> vis(g.n(), false);
    std::vector<int> stack{0};
    vis[0] = true;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (!vis[w]) { vis[w] = true; ++cnt; stack.push_back(w); }
    }
    return cnt == g.n();
}

// Proper 2-coloring if bipartite.
inline std::optional<std::vector<int>> bipartition(const Graph& g) {
    std::vector<int> color(g.n(), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

inline std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
    for (auto [u, v] : g.edges())
        for (int w : g.neighbors(u))
            if (w != v && g.has_edge(v, w)) return std::array<int, 3>{u, v, w};
    return std::nullopt;
}

// Edge bitmask over the n*(n-1)/2 unordered slots; only for n <= 11.
inline std::uint64_t edge_mask(const Graph& g) {
    if (g.n() > 11) throw std::invalid_argument("edge_mask: n too large");
    auto slot = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        return u * g.n() - u * (u + 1) / 2 + (v - u - 1);
    };
    std::uint64_t m = 0;
    for (auto [u, v] : g.edges()) m |= std::uint64_t{1} << slot(u, v);
    return m;
}

inline Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<Edge> e;
    int s = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++s)
            if (mask >> s & 1) e.push_back({u, v});
    return Graph(n, e);
}

// Smallest edge mask over all vertex relabelings; usable as an isomorphism key.
inline std::uint64_t canonical_mask(const Graph& g) {
    int n = g.n();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    auto slot = [n](int u, int v) {
        if (u > v) std::swap(u, v);
        return u * n - u * (u + 1) / 2 + (v - u - 1);
    };
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t m = 0;
        for (auto [u, v] : g.edges()) m |= std::uint64_t{1} << slot(perm[u], perm[v]);
        best = std::min(best, m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    return canonical_mask(a) == canonical_mask(b);
}

}  // namespace cbu

#endif  // CBU_CORE_HPP
