#ifndef CBU_LABELING_HPP
#define CBU_LABELING_HPP

// Homogeneous arc labelings: every vertex has one common label on all of its
// outgoing arcs, one common label on all of its incoming arcs, and the
// incoming label is strictly smaller whenever both kinds exist.
//
// The solver reformulates the per-arc equality/inequality constraints as a
// slot system: one in-slot and one out-slot per vertex, the out-slot of u
// identified with the in-slot of v for each arc u->v, and a strict precedence
// in(v) < out(v) for every vertex carrying both arc kinds.  An orientation is
// labelable iff the quotient precedence digraph is acyclic; labels are
// longest-path ranks in that DAG.

#include <cassert>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cbu/core.hpp"

namespace cbu {

struct ArcLabeling {
    Orientation orientation;
    std::vector<std::int64_t> label;  // per edge index of orientation.graph()
};

// Independent invariant checker; inspects every vertex and arc directly.
// Returns an explanation of the first violation, or nullopt when homogeneous.
inline std::optional<std::string> homogeneity_violation(const ArcLabeling& L) {
    const Graph& g = L.orientation.graph();
    if (static_cast<int>(L.label.size()) != g.m()) return "label count != edge count";
    for (int v = 0; v < g.n(); ++v) {
        std::optional<std::int64_t> in, out;
        for (int w : g.neighbors(v)) {
            int e = g.edge_index(v, w);
            std::int64_t lab = L.label[e];
            if (L.orientation.has_arc(v, w)) {
                if (out && *out != lab)
                    return "vertex " + std::to_string(v) + " has unequal out-labels";
                out = lab;
            } else {
                if (in && *in != lab)
                    return "vertex " + std::to_string(v) + " has unequal in-labels";
                in = lab;
            }
        }
        if (in && out && !(*in < *out))
            return "vertex " + std::to_string(v) + " has in-label >= out-label";
    }
    return std::nullopt;
}

inline bool is_homogeneous(const ArcLabeling& L) { return !homogeneity_violation(L); }

// A slot is (vertex, kind); kind 0 = in-slot, 1 = out-slot.
struct SlotClassCycle {
    // Directed cycle of slot classes in the quotient; each class listed by its
    // member slots as (vertex, is_out).
    std::vector<std::vector<std::pair<int, bool>>> classes;
};

using SolveResult = std::variant<ArcLabeling, SlotClassCycle>;

namespace detail {

struct UnionFind {
    std::vector<int> parent, rank_;
    explicit UnionFind(int n) : parent(n), rank_(n, 0) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
    }
};

// Slot indices: in-slot(v) = 2v, out-slot(v) = 2v+1.
// `assigned` restricts to a subset of edges (partial orientations); feasibility
// of a partial system is monotone, which is what the search prunes on.
struct SlotSystem {
    const Orientation& o;
    UnionFind uf;
    std::vector<std::pair<int, int>> prec;  // class edges (by any member slot)

    explicit SlotSystem(const Orientation& ori, const std::vector<bool>* assigned = nullptr)
        : o(ori), uf(2 * ori.graph().n()) {
        const Graph& g = o.graph();
        std::vector<bool> has_in(g.n(), false), has_out(g.n(), false);
        for (int e = 0; e < g.m(); ++e) {
            if (assigned && !(*assigned)[e]) continue;
            auto [t, h] = o.arc(e);
            uf.unite(2 * t + 1, 2 * h);
            has_out[t] = true;
            has_in[h] = true;
        }
        for (int v = 0; v < g.n(); ++v)
            if (has_in[v] && has_out[v]) prec.push_back({2 * v, 2 * v + 1});
    }

    // Kahn on the quotient digraph.  Returns topological order of class reps,
    // or nullopt when the quotient has a directed cycle.
    std::optional<std::vector<int>> topo_order() {
        int ns = 2 * o.graph().n();
        std::vector<int> indeg(ns, 0);
        std::vector<std::vector<int>> next(ns);
        std::vector<int> reps;
        std::vector<bool> seen(ns, false);
        for (auto [a, b] : prec) {
            int ra = uf.find(a), rb = uf.find(b);
            next[ra].push_back(rb);
            ++indeg[rb];
            for (int r : {ra, rb})
                if (!seen[r]) { seen[r] = true; reps.push_back(r); }
        }
        std::deque<int> q;
        for (int r : reps)
            if (indeg[r] == 0) q.push_back(r);
        std::vector<int> order;
        while (!q.empty()) {
            int r = q.front();
            q.pop_front();
            order.push_back(r);
            for (int s : next[r])
                if (--indeg[s] == 0) q.push_back(s);
        }
        if (order.size() != reps.size()) return std::nullopt;
        return order;
    }

    bool feasible() { return topo_order().has_value(); }

    SlotClassCycle extract_cycle() {
        // DFS on the quotient looking for a back edge.
        int ns = 2 * o.graph().n();
        std::vector<std::vector<int>> next(ns);
        for (auto [a, b] : prec) next[uf.find(a)].push_back(uf.find(b));
        std::vector<int> state(ns, 0);  // 0 unseen, 1 on stack, 2 done
        std::vector<int> stack, cyc;
        std::function<bool(int)> dfs = [&](int r) {
            state[r] = 1;
            stack.push_back(r);
            for (int s : next[r]) {
                if (state[s] == 1) {
                    auto it = std::find(stack.begin(), stack.end(), s);
                    cyc.assign(it, stack.end());
                    return true;
                }
                if (state[s] == 0 && dfs(s)) return true;
            }
            stack.pop_back();
            state[r] = 2;
            return false;
        };
        for (auto [a, b] : prec) {
            int r = uf.find(a);
            if (state[r] == 0 && dfs(r)) break;
        }
        SlotClassCycle out;
        for (int rep : cyc) {
            std::vector<std::pair<int, bool>> members;
            for (int s = 0; s < ns; ++s)
                if (uf.find(s) == rep) members.push_back({s / 2, s % 2 == 1});
            out.classes.push_back(members);
        }
        return out;
    }
};

}  // namespace detail

// Decide labelability of an orientation.  On success the labels are
// longest-path ranks over the quotient DAG, smallest label 1; on failure a
// directed cycle of slot classes is returned.
inline SolveResult solve_labeling(const Orientation& o) {
    detail::SlotSystem sys(o);
    auto order = sys.topo_order();
    if (!order) return sys.extract_cycle();
    const Graph& g = o.graph();
    int ns = 2 * g.n();
    std::vector<std::vector<int>> next(ns);
    for (auto [a, b] : sys.prec) next[sys.uf.find(a)].push_back(sys.uf.find(b));
    std::vector<std::int64_t> rank(ns, 1);
    for (int r : *order)
        for (int s : next[r]) rank[s] = std::max(rank[s], rank[r] + 1);
    ArcLabeling L{o, std::vector<std::int64_t>(g.m(), 0)};
    for (int e = 0; e < g.m(); ++e) {
        auto [t, h] = o.arc(e);
        (void)h;
        L.label[e] = rank[sys.uf.find(2 * t + 1)];
    }
    assert(is_homogeneous(L));
    return L;
}

inline bool labelable(const Orientation& o) {
    return detail::SlotSystem(o).feasible();
}

// ---- badly oriented cycles ---------------------------------------------------

struct BadCycle {
    WalkCycle cycle;
    int forward_through_index;  // position i with arcs v_{i-1}->v_i and v_i->v_{i+1}
};

// Checks the type invariants directly: some forward-through vertex, no
// backward-through vertex, all pairs arcs of the orientation.
inline bool is_badly_oriented(const Orientation& o, const WalkCycle& c, int* through = nullptr) {
    if (!is_walk_cycle(o.graph(), c)) return false;
    int k = c.length();
    auto fwd = [&](int i) { return o.has_arc(c.vertices[i], c.vertices[(i + 1) % k]); };
    int first_fwd_through = -1;
    bool any_bwd_through = false;
    for (int i = 0; i < k; ++i) {
        bool a = fwd((i + k - 1) % k), b = fwd(i);
        if (a && b && first_fwd_through < 0) first_fwd_through = i;
        if (!a && !b) any_bwd_through = true;
    }
    if (first_fwd_through >= 0 && !any_bwd_through) {
        if (through) *through = first_fwd_through;
        return true;
    }
    return false;
}

// Search for a badly oriented cycle among all cycles of length <= max_length.
// The traversal direction of each enumerated cycle is normalized so that a
// forward-through vertex exists on the returned representative.
inline std::optional<BadCycle> find_bad_cycle(const Orientation& o, int max_length) {
    std::optional<BadCycle> found;
    enumerate_cycles(o.graph(), max_length, [&](const WalkCycle& c) {
        int through;
        if (is_badly_oriented(o, c, &through)) {
            found = BadCycle{c, through};
            return false;
        }
        WalkCycle rev{std::vector<int>(c.vertices.rbegin(), c.vertices.rend())};
        if (is_badly_oriented(o, rev, &through)) {
            found = BadCycle{rev, through};
            return false;
        }
        return true;
    });
    if (found) assert(is_badly_oriented(o, found->cycle));
    return found;
}

inline std::optional<BadCycle> find_bad_cycle(const Orientation& o) {
    return find_bad_cycle(o, std::max(3, o.graph().n()));
}

// ---- quasi-cycles -------------------------------------------------------------

// A quasi-cycle is a cycle oriented as a directed path v1->...->vk plus the
// arc v1->vk; equivalently, exactly one arc is backward in one traversal
// direction.
inline bool is_quasi_cycle(const Orientation& o, const WalkCycle& c) {
    if (!is_walk_cycle(o.graph(), c)) return false;
    int k = c.length();
    int fwd = 0;
    for (int i = 0; i < k; ++i)
        if (o.has_arc(c.vertices[i], c.vertices[(i + 1) % k])) ++fwd;
    return fwd == 1 || fwd == k - 1;
}

inline std::optional<WalkCycle> find_quasi_cycle(const Orientation& o) {
    std::optional<WalkCycle> found;
    enumerate_cycles(o.graph(), std::max(3, o.graph().n()), [&](const WalkCycle& c) {
        if (is_quasi_cycle(o, c)) {
            found = c;
            return false;
        }
        return true;
    });
    return found;
}

inline bool has_quasi_cycle(const Orientation& o) { return find_quasi_cycle(o).has_value(); }

inline bool is_acyclic_orientation(const Orientation& o) {
    const Graph& g = o.graph();
    std::vector<int> indeg(g.n(), 0);
    for (int e = 0; e < g.m(); ++e) ++indeg[o.arc(e).second];
    std::deque<int> q;
    for (int v = 0; v < g.n(); ++v)
        if (indeg[v] == 0) q.push_back(v);
    int done = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        ++done;
        for (int w : g.neighbors(v))
            if (o.has_arc(v, w) && --indeg[w] == 0) q.push_back(w);
    }
    return done == g.n();
}

// ---- constructive synthesis ----------------------------------------------------

// Recursion on sources: take a source u with out-neighbors v1..vk.  If u is the
// unique in-neighbor of all of them, label its arcs below everything in the
// labeling of the graph minus u.  Otherwise pick vi with a second in-neighbor
// u' and recurse on (G - u) + arcs u'->v1..u'->vk, copying u's out-label from
// u'.  Fails exactly on inputs with a badly oriented cycle.
inline std::optional<ArcLabeling> synthesize_by_source_merge(const Orientation& o) {
    const Graph& g = o.graph();
    using Arc = std::pair<int, int>;
    const std::vector<Arc> arc_list = o.arcs();
    std::set<Arc> arcs(arc_list.begin(), arc_list.end());
    std::vector<bool> alive(g.n(), true);

    std::function<std::optional<std::map<Arc, std::int64_t>>(std::set<Arc>&, int)> rec =
        [&](std::set<Arc>& A, int nv) -> std::optional<std::map<Arc, std::int64_t>> {
        if (nv == 0) return std::map<Arc, std::int64_t>{};
        // find a source: alive vertex with no incoming arc
        std::vector<bool> has_in(g.n(), false);
        for (auto [t, h] : A) has_in[h] = true;
        int u = -1;
        for (int v = 0; v < g.n(); ++v)
            if (alive[v] && !has_in[v]) { u = v; break; }
        if (u < 0) return std::nullopt;  // directed cycle among the arcs

        std::vector<int> outs;
        for (auto it = A.lower_bound({u, -1}); it != A.end() && it->first == u; ++it)
            outs.push_back(it->second);

        // second in-neighbor of some out-neighbor?
        int vi = -1, u2 = -1;
        for (int v : outs) {
            for (auto [t, h] : A)
                if (h == v && t != u) { vi = v; u2 = t; break; }
            if (vi >= 0) break;
        }

        std::set<Arc> removed;
        for (int v : outs) removed.insert({u, v});
        for (auto& a : removed) A.erase(a);
        alive[u] = false;

        if (vi < 0) {
            auto sub = rec(A, nv - 1);
            alive[u] = true;
            for (auto& a : removed) A.insert(a);
            if (!sub) return std::nullopt;
            std::int64_t lo = 0;
            for (auto& [a, l] : *sub) lo = std::min(lo, l);
            for (auto& a : removed) (*sub)[a] = lo - 1;
            return sub;
        }

        std::set<Arc> added;
        for (int v : outs)
            if (!A.count({u2, v})) added.insert({u2, v});
        for (auto& a : added) A.insert(a);
        auto sub = rec(A, nv - 1);
        for (auto& a : added) A.erase(a);
        alive[u] = true;
        for (auto& a : removed) A.insert(a);
        if (!sub) return std::nullopt;
        // out-label of u' in the sub-labeling
        std::optional<std::int64_t> ell;
        for (auto& [a, l] : *sub)
            if (a.first == u2) { ell = l; break; }
        if (!ell) return std::nullopt;
        std::map<Arc, std::int64_t> out;
        for (auto& [a, l] : *sub)
            if (!added.count(a)) out[a] = l;
        for (auto& a : removed) out[a] = *ell;
        return out;
    };

    std::set<Arc> A = arcs;
    auto res = rec(A, g.n());
    if (!res) return std::nullopt;
    ArcLabeling L{o, std::vector<std::int64_t>(g.m(), 0)};
    for (int e = 0; e < g.m(); ++e) {
        auto it = res->find(o.arc(e));
        if (it == res->end()) return std::nullopt;
        L.label[e] = it->second;
    }
    if (!is_homogeneous(L)) return std::nullopt;
    return L;
}

}  // namespace cbu

#endif  // CBU_LABELING_HPP
