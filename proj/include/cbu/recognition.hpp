#ifndef CBU_RECOGNITION_HPP
#define CBU_RECOGNITION_HPP

// Membership in CBU: a graph belongs to the class iff some orientation admits
// a homogeneous arc labeling.  The decision procedure is a branch-and-prune
// search over edge directions that maintains the slot system incrementally and
// backtracks as soon as the quotient precedence digraph acquires a cycle.

#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "cbu/core.hpp"
#include "cbu/labeling.hpp"

namespace cbu {

struct SearchStats {
    std::uint64_t nodes = 0;       // branch tree nodes visited
    std::uint64_t prunes = 0;      // subtrees cut by slot-cycle infeasibility
    std::uint64_t leaves = 0;      // complete orientations reached
    bool triangle_shortcut = false;
    std::uint64_t budget = 0;
};

enum class Verdict { Member, NonMember, BudgetExhausted };

struct CbuCertificate {
    Verdict verdict = Verdict::NonMember;
    std::optional<ArcLabeling> witness;            // member
    std::optional<std::array<int, 3>> triangle;    // non-member shortcut
    SearchStats stats;
};

constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 28;

namespace detail {

// Edge order by DFS discovery so that cycles close early and slot-cycle prunes
// fire sooner.
inline std::vector<int> dfs_edge_order(const Graph& g) {
    std::vector<int> order;
    std::vector<bool> ev(g.m(), false), vv(g.n(), false);
    std::function<void(int)> dfs = [&](int v) {
        vv[v] = true;
        for (int w : g.neighbors(v)) {
            int e = g.edge_index(v, w);
            if (vv[w]) {
                if (!ev[e]) { ev[e] = true; order.push_back(e); }
            }
        }
        for (int w : g.neighbors(v)) {
            int e = g.edge_index(v, w);
            if (!vv[w]) {
                ev[e] = true;
                order.push_back(e);
                dfs(w);
            }
        }
    };
    for (int v = 0; v < g.n(); ++v)
        if (!vv[v]) dfs(v);
    return order;
}

struct DecideTask {
    const Graph& g;
    const std::vector<int>& order;
    std::uint64_t budget;
    SearchStats stats;
    std::vector<bool> dir;
    std::vector<bool> assigned;
    std::optional<ArcLabeling> found;
    bool out_of_budget = false;

    DecideTask(const Graph& g_, const std::vector<int>& ord, std::uint64_t b)
        : g(g_), order(ord), budget(b), dir(g_.m(), false), assigned(g_.m(), false) {}

    bool feasible_partial() const {
        Orientation o(g, dir);
        detail::SlotSystem sys(o, &assigned);
        return sys.feasible();
    }

    // depth indexes into order; first_fixed freezes order[0..first_fixed) from
    // the caller (used both for the reversal symmetry and for parallel splits).
    bool search(std::size_t depth) {
        if (++stats.nodes > budget) {
            out_of_budget = true;
            return false;
        }
        if (!feasible_partial()) {
            ++stats.prunes;
            return false;
        }
        if (depth == order.size()) {
            ++stats.leaves;
            Orientation o(g, dir);
            auto res = solve_labeling(o);
            if (auto* lab = std::get_if<ArcLabeling>(&res)) {
                found = *lab;
                return true;
            }
            return false;  // cannot happen: full assignment feasible => labeling
        }
        int e = order[depth];
        assigned[e] = true;
        for (bool d : {false, true}) {
            dir[e] = d;
            if (search(depth + 1)) return true;
            if (out_of_budget) break;
        }
        assigned[e] = false;
        return false;
    }
};

}  // namespace detail

// Decide membership.  Verdicts are deterministic for a fixed (budget, jobs)
// pair: the search space is split statically across jobs and each sub-task
// gets an equal share of the budget.  In single-threaded mode the witness is
// the first feasible orientation in branch order; with jobs > 1 the witness is
// taken from the lowest-index successful sub-task.
inline CbuCertificate decide_cbu(const Graph& g, std::uint64_t budget = kDefaultBudget,
                                 int jobs = 1) {
    CbuCertificate cert;
    cert.stats.budget = budget;
    if (auto tri = find_triangle(g)) {
        cert.verdict = Verdict::NonMember;
        cert.triangle = tri;
        cert.stats.triangle_shortcut = true;
        return cert;
    }
    if (g.m() == 0) {
        cert.verdict = Verdict::Member;
        cert.witness = ArcLabeling{Orientation(g, {}), {}};
        return cert;
    }
    auto order = detail::dfs_edge_order(g);

    // Orientation-reversal symmetry: fix the first edge's direction.
    if (jobs <= 1) {
        detail::DecideTask task(g, order, budget);
        task.assigned[order[0]] = true;
        task.dir[order[0]] = false;
        bool ok = task.search(1);
        cert.stats = task.stats;
        cert.stats.budget = budget;
        if (ok) {
            cert.verdict = Verdict::Member;
            cert.witness = task.found;
        } else {
            cert.verdict = task.out_of_budget ? Verdict::BudgetExhausted : Verdict::NonMember;
        }
        return cert;
    }

    // Static split: fix the directions of the first k edges (after the
    // symmetry-fixed one) and explore the 2^k subtrees on a small pool.
    int k = 0;
    while ((1 << k) < 2 * jobs && k + 1 < static_cast<int>(order.size())) ++k;
    int tasks = 1 << k;
    std::vector<detail::DecideTask> ts;
    ts.reserve(tasks);
    for (int t = 0; t < tasks; ++t) {
        detail::DecideTask task(g, order, std::max<std::uint64_t>(1, budget / tasks));
        task.assigned[order[0]] = true;
        task.dir[order[0]] = false;
        for (int i = 0; i < k; ++i) {
            int e = order[1 + i];
            task.assigned[e] = true;
            task.dir[e] = (t >> i) & 1;
        }
        ts.push_back(std::move(task));
    }
    std::vector<bool> ok(tasks, false);
    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            int t = next.fetch_add(1);
            if (t >= tasks) return;
            ok[t] = ts[t].search(1 + k);
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    bool any_budget = false;
    for (int t = 0; t < tasks; ++t) {
        cert.stats.nodes += ts[t].stats.nodes;
        cert.stats.prunes += ts[t].stats.prunes;
        cert.stats.leaves += ts[t].stats.leaves;
        any_budget |= ts[t].out_of_budget;
        if (ok[t] && !cert.witness) {
            cert.verdict = Verdict::Member;
            cert.witness = ts[t].found;
        }
    }
    if (!cert.witness)
        cert.verdict = any_budget ? Verdict::BudgetExhausted : Verdict::NonMember;
    return cert;
}

// ---- homomorphisms ------------------------------------------------------------

// Backtracking search for a homomorphism into the 5-cycle 0-1-2-3-4-0.
inline std::optional<std::vector<int>> find_homomorphism_c5(const Graph& g) {
    auto c5_adj = [](int a, int b) {
        int d = (a - b + 5) % 5;
        return d == 1 || d == 4;
    };
    std::vector<int> phi(g.n(), -1);
    std::function<bool(int)> go = [&](int v) -> bool {
        if (v == g.n()) return true;
        for (int c = 0; c < 5; ++c) {
            bool ok = true;
            for (int w : g.neighbors(v))
                if (phi[w] != -1 && !c5_adj(c, phi[w])) { ok = false; break; }
            if (ok) {
                phi[v] = c;
                if (go(v + 1)) return true;
                phi[v] = -1;
            }
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    return phi;
}

inline bool is_homomorphism(const Graph& g, const Graph& h, const std::vector<int>& phi) {
    if (static_cast<int>(phi.size()) != g.n()) return false;
    for (int x : phi)
        if (x < 0 || x >= h.n()) return false;
    for (auto [u, v] : g.edges())
        if (!h.has_edge(phi[u], phi[v])) return false;
    return true;
}

// Orient and label g by pulling a homogeneous labeling of h back along a
// homomorphism: uv is oriented as phi(u)phi(v) and copies its label.
inline ArcLabeling pullback_labeling(const Graph& g, const Graph& h,
                                     const std::vector<int>& phi, const ArcLabeling& hl) {
    if (!is_homomorphism(g, h, phi))
        throw std::invalid_argument("pullback_labeling: map is not a homomorphism");
    if (!(hl.orientation.graph() == h))
        throw std::invalid_argument("pullback_labeling: labeling is not on h");
    std::vector<bool> dir(g.m(), false);
    std::vector<std::int64_t> lab(g.m(), 0);
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges()[e];
        int he = h.edge_index(phi[u], phi[v]);
        lab[e] = hl.label[he];
        dir[e] = !hl.orientation.has_arc(phi[u], phi[v]);  // reversed iff phi(u) is head
    }
    return ArcLabeling{Orientation(g, dir), lab};
}

// The 5-cycle with its one-source-one-sink orientation and labels.
inline ArcLabeling c5_good_labeling() {
    Graph c5 = cycle_graph(5);
    Orientation o = Orientation::from_arcs(c5, {{0, 1}, {1, 2}, {0, 4}, {4, 3}, {3, 2}});
    auto res = solve_labeling(o);
    return std::get<ArcLabeling>(res);
}

}  // namespace cbu

#endif  // CBU_RECOGNITION_HPP
