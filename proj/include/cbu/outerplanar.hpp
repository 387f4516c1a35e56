#ifndef CBU_OUTERPLANAR_HPP
#define CBU_OUTERPLANAR_HPP

// 2-dimensional contact representations of triangle-free outerplanar graphs.
//
// The construction keeps a "staircase": a partition of the drawn y-range into
// stints, one per position of the outer boundary walk, listed bottom to top.
// During the open stint of a vertex v, every other box present has a strictly
// smaller right edge than v's box, so fresh material can always be attached to
// the right of v within its stint.  The recursion peels a pendant vertex, the
// interior of an ear (a chord-closed path of degree-2 vertices), or a cycle
// hanging at a cut vertex, builds the rest, and re-inserts the peeled boxes:
// ears occupy a fresh horizontal band opened by stretching the y-axis at the
// stint boundary shared by their two attachment vertices.

#include <map>
#include <set>
#include <vector>

#include "cbu/geometry.hpp"

namespace cbu {

namespace outerplanar_detail {

struct Box2 {
    Rational xl, xr, yl, yh;
};

struct Stint {
    int owner;
    Rational lo, hi;
};

struct Staircase {
    std::map<int, Box2> boxes;
    std::vector<Stint> stints;
    Rational next_x = 0;

    Rational fresh_x() {
        next_x += 1;
        return next_x;
    }
    Rational right(int v) const { return boxes.at(v).xr; }

    int stint_of(int v) const {
        for (std::size_t i = 0; i < stints.size(); ++i)
            if (stints[i].owner == v) return static_cast<int>(i);
        throw std::logic_error("staircase: vertex owns no stint");
    }
    int adjacent_pair(int a, int b) const {
        for (std::size_t i = 0; i + 1 < stints.size(); ++i) {
            int p = stints[i].owner, q = stints[i + 1].owner;
            if ((p == a && q == b) || (p == b && q == a)) return static_cast<int>(i);
        }
        throw std::logic_error("staircase: attachment vertices own no adjacent stints");
    }

    void check() const {
        for (std::size_t i = 0; i + 1 < stints.size(); ++i) {
            if (!(stints[i].hi == stints[i + 1].lo))
                throw std::logic_error("staircase: stints do not partition");
            if (right(stints[i].owner) == right(stints[i + 1].owner))
                throw std::logic_error("staircase: consecutive owners share a right edge");
        }
        for (auto& s : stints) {
            if (!(s.lo < s.hi)) throw std::logic_error("staircase: empty stint");
            auto& b = boxes.at(s.owner);
            if (b.yl > s.lo || b.yh < s.hi)
                throw std::logic_error("staircase: owner box does not cover its stint");
        }
    }

    // Open a band of height H at y-level y (a stint boundary); everything
    // above moves up.  Boxes spanning y stretch across the band.
    void stretch(const Rational& y, const Rational& H) {
        for (auto& [v, b] : boxes) {
            if (!(b.yl < y)) b.yl += H;
            if (b.yh > y) b.yh += H;
        }
        for (auto& s : stints) {
            if (!(s.lo < y)) s.lo += H;
            if (s.hi > y) s.hi += H;
        }
    }

    void insert_pendant(int w, int u) {
        int si = stint_of(w);
        Stint s = stints[si];
        Rational h = s.hi - s.lo;
        Rational a = s.lo + h / 3, b = s.hi - h / 3;
        boxes[u] = {right(w), fresh_x(), a, b};
        stints[si] = {w, s.lo, a};
        stints.insert(stints.begin() + si + 1, {u, a, b});
        stints.insert(stints.begin() + si + 2, {w, b, s.hi});
        check();
    }

    // Cycle h, c1, ..., cq, h attached at the single vertex h; q >= 3.
    void insert_hanging_cycle(int h, const std::vector<int>& c) {
        int q = static_cast<int>(c.size());
        if (q < 3) throw std::logic_error("hanging cycle needs at least 3 interior vertices");
        int si = stint_of(h);
        Stint s = stints[si];
        Rational th = (s.hi - s.lo) / 3;
        Rational t1 = s.lo + th, t2 = s.hi - th;
        Rational slice = (t2 - t1) / q;
        Rational rho = slice / 4;
        auto L = [&](int j) { return t1 + slice * (j - 1); };  // 1-based
        Rational Rh = right(h);

        // x-intervals: a left-attached ascending chain c1..c_{q-2} whose last
        // right edge B is shared by c_q = [Rh, B]; c_{q-1} = [B, D] hosts the
        // two contacts at B on its left edge at different heights.
        std::vector<Rational> lefts(q + 1), rights(q + 1);
        lefts[1] = Rh;
        for (int j = 1; j <= q - 2; ++j) {
            rights[j] = fresh_x();
            if (j + 1 <= q - 2) lefts[j + 1] = rights[j];
        }
        Rational B = rights[q - 2];
        lefts[q - 1] = B;
        rights[q - 1] = fresh_x();
        lefts[q] = Rh;
        rights[q] = B;

        for (int j = 1; j <= q; ++j) {
            Rational yl, yh;
            if (j <= q - 2) {
                yl = L(j);
                yh = L(j + 1) + (j == q - 1 ? 0 : rho);
            } else if (j == q - 1) {
                yl = L(j);
                yh = L(j + 1);
            } else {
                yl = L(q) - rho;
                yh = t2;
            }
            boxes[c[j - 1]] = {lefts[j], rights[j], yl, yh};
        }
        std::vector<Stint> repl;
        repl.push_back({h, s.lo, t1});
        for (int j = 1; j <= q; ++j) repl.push_back({c[j - 1], L(j), j == q ? t2 : L(j + 1)});
        repl.push_back({h, t2, s.hi});
        stints.erase(stints.begin() + si);
        stints.insert(stints.begin() + si, repl.begin(), repl.end());
        check();
    }

    // Ear u1, w1, ..., wq, u2 where the chord u1-u2 is an edge whose endpoints
    // own adjacent stints; q >= 2.
    void insert_ear(int u1, int u2, std::vector<int> chain) {
        int q = static_cast<int>(chain.size());
        if (q < 2) throw std::logic_error("ear needs at least 2 interior vertices");
        int si = adjacent_pair(u1, u2);
        int low = stints[si].owner, high = stints[si + 1].owner;
        if (low == u2) std::reverse(chain.begin(), chain.end());

        Rational ystar = stints[si].hi;
        Rational H = q;
        stretch(ystar, H);
        // after the stretch: stints[si] = [ylo, ystar], stints[si+1] = [ystar+H, ye]
        Rational lambda = (stints[si].hi - stints[si].lo) / 2;
        Rational mu = (stints[si + 1].hi - stints[si + 1].lo) / 2;
        Rational slice = H / q;
        Rational rho = slice / 4;
        auto L = [&](int j) { return ystar + slice * (j - 1); };
        Rational Rlo = right(low), Rhi = right(high);
        if (Rlo == Rhi) throw std::logic_error("ear attachment boxes share a right edge");
        Rational band_top = ystar + H;

        std::vector<Stint> repl;
        repl.push_back({low, stints[si].lo, ystar - lambda});
        if (q == 2) {
            if (Rlo < Rhi) {
                boxes[chain[0]] = {Rlo, Rhi, ystar - lambda, L(2) + rho};
                boxes[chain[1]] = {Rhi, fresh_x(), L(2), band_top + mu};
                repl.push_back({chain[0], ystar - lambda, L(2)});
                repl.push_back({chain[1], L(2), band_top + mu});
            } else {
                boxes[chain[0]] = {Rlo, fresh_x(), ystar - lambda, L(2) + rho};
                boxes[chain[1]] = {Rhi, Rlo, L(2), band_top + mu};
                // the poke of w1 stays inside w1's own stint
                repl.push_back({chain[0], ystar - lambda, L(2) + rho});
                repl.push_back({chain[1], L(2) + rho, band_top + mu});
            }
        } else {
            std::vector<Rational> lefts(q + 1), rights(q + 1);
            lefts[1] = Rlo;
            for (int j = 1; j <= q - 2; ++j) {
                rights[j] = fresh_x();
                if (j + 1 <= q - 2) lefts[j + 1] = rights[j];
            }
            Rational B = rights[q - 2];
            lefts[q - 1] = B;
            rights[q - 1] = fresh_x();
            lefts[q] = Rhi;
            rights[q] = B;
            for (int j = 1; j <= q; ++j) {
                Rational yl, yh;
                if (j == 1) {
                    yl = ystar - lambda;
                    yh = L(2) + rho;
                } else if (j <= q - 2) {
                    yl = L(j);
                    yh = L(j + 1) + rho;
                } else if (j == q - 1) {
                    yl = L(j);
                    yh = L(q);
                } else {
                    yl = L(q) - rho;
                    yh = band_top + mu;
                }
                boxes[chain[j - 1]] = {lefts[j], rights[j], yl, yh};
            }
            repl.push_back({chain[0], ystar - lambda, L(2)});
            for (int j = 2; j <= q; ++j)
                repl.push_back({chain[j - 1], L(j), j == q ? band_top + mu : L(j + 1)});
        }
        repl.push_back({high, band_top + mu, stints[si + 1].hi});
        stints.erase(stints.begin() + si, stints.begin() + si + 2);
        stints.insert(stints.begin() + si, repl.begin(), repl.end());
        check();
    }
};

// Degree-2 chain through vertex v0 in the adjacency structure; returns the
// interior chain plus its two anchors of degree != 2.
struct Chain {
    std::vector<int> interior;
    int z1 = -1, z2 = -1;
};

inline Chain trace_chain(const std::vector<std::set<int>>& adj, int v0) {
    Chain c;
    auto it = adj[v0].begin();
    int na = *it, nb = *std::next(it);
    // walk to one end
    int pre = v0, cur = na;
    std::vector<int> left;
    while (adj[cur].size() == 2 && cur != v0) {
        left.push_back(cur);
        auto jt = adj[cur].begin();
        int a = *jt, b = *std::next(jt);
        int nxt = (a == pre) ? b : a;
        pre = cur;
        cur = nxt;
    }
    if (cur == v0) {  // the whole component is a cycle; caller handles it
        c.z1 = c.z2 = -2;
        return c;
    }
    c.z1 = cur;
    for (auto rit = left.rbegin(); rit != left.rend(); ++rit) c.interior.push_back(*rit);
    c.interior.push_back(v0);
    pre = v0;
    cur = nb;
    while (adj[cur].size() == 2) {
        c.interior.push_back(cur);
        auto jt = adj[cur].begin();
        int a = *jt, b = *std::next(jt);
        int nxt = (a == pre) ? b : a;
        pre = cur;
        cur = nxt;
    }
    c.z2 = cur;
    return c;
}

// Recursive construction on a mutable adjacency copy of one connected
// component.  Throws when the component is not triangle-free outerplanar.
inline void build_component(std::vector<std::set<int>>& adj, std::vector<int> verts,
                            Staircase& S) {
    if (verts.size() == 1) {
        int v = verts[0];
        S.boxes[v] = {0, 1, 0, 1};
        S.stints = {{v, 0, 1}};
        S.next_x = 1;
        return;
    }
    if (verts.size() == 2) {
        int u = verts[0], w = verts[1];
        S.boxes[u] = {0, 2, 0, 3};
        S.boxes[w] = {2, 3, 1, 2};
        S.stints = {{u, 0, 1}, {w, 1, 2}, {u, 2, 3}};
        S.next_x = 3;
        S.check();
        return;
    }
    // pendant vertex
    for (int v : verts)
        if (adj[v].size() == 1) {
            int w = *adj[v].begin();
            adj[v].clear();
            adj[w].erase(v);
            std::vector<int> rest;
            for (int x : verts)
                if (x != v) rest.push_back(x);
            build_component(adj, rest, S);
            S.insert_pendant(w, v);
            return;
        }
    // pure cycle?
    bool all2 = true;
    for (int v : verts) all2 = all2 && adj[v].size() == 2;
    if (all2) {
        // walk the cycle from verts[0]
        std::vector<int> order{verts[0]};
        int pre = verts[0], cur = *adj[verts[0]].begin();
        while (cur != verts[0]) {
            order.push_back(cur);
            auto it = adj[cur].begin();
            int a = *it, b = *std::next(it);
            int nxt = (a == pre) ? b : a;
            pre = cur;
            cur = nxt;
        }
        if (order.size() < 4)
            throw std::invalid_argument("outerplanar_2cbu: graph contains a triangle");
        int h = order[0];
        S.boxes[h] = {0, 1, 0, 1};
        S.stints = {{h, 0, 1}};
        S.next_x = 1;
        S.insert_hanging_cycle(h, std::vector<int>(order.begin() + 1, order.end()));
        return;
    }
    // find a usable degree-2 chain: hanging cycle or chord-closed ear
    std::set<int> tried;
    for (int v : verts) {
        if (adj[v].size() != 2 || tried.count(v)) continue;
        Chain c = trace_chain(adj, v);
        for (int x : c.interior) tried.insert(x);
        if (c.z1 == -2) continue;  // cycle component handled above
        bool hanging = (c.z1 == c.z2);
        bool chord = !hanging && adj[c.z1].count(c.z2) > 0;
        if (!hanging && !chord) continue;
        if (hanging && c.interior.size() < 3)
            throw std::invalid_argument("outerplanar_2cbu: graph contains a triangle");
        if (chord && c.interior.size() < 2)
            throw std::invalid_argument("outerplanar_2cbu: graph contains a triangle");
        // remove the interior
        std::vector<int> boundary;
        boundary.push_back(c.z1);
        boundary.insert(boundary.end(), c.interior.begin(), c.interior.end());
        boundary.push_back(c.z2);
        for (std::size_t i = 0; i + 1 < boundary.size(); ++i) {
            adj[boundary[i]].erase(boundary[i + 1]);
            adj[boundary[i + 1]].erase(boundary[i]);
        }
        std::set<int> interior(c.interior.begin(), c.interior.end());
        std::vector<int> rest;
        for (int x : verts)
            if (!interior.count(x)) rest.push_back(x);
        build_component(adj, rest, S);
        if (hanging)
            S.insert_hanging_cycle(c.z1, c.interior);
        else
            S.insert_ear(c.z1, c.z2, c.interior);
        return;
    }
    throw std::invalid_argument("outerplanar_2cbu: graph is not outerplanar");
}

}  // namespace outerplanar_detail

// 2-CBU representation of a triangle-free outerplanar graph.  The result is
// verified before returning; inputs outside the class are rejected.
inline BoxRepresentation outerplanar_2cbu(const Graph& g) {
    if (find_triangle(g))
        throw std::invalid_argument("outerplanar_2cbu: graph contains a triangle");
    using namespace outerplanar_detail;
    std::vector<std::set<int>> adj(g.n());
    for (auto [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    // connected components
    std::vector<int> comp(g.n(), -1);
    int nc = 0;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> stack{s};
        comp[s] = nc;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (comp[w] == -1) { comp[w] = nc; stack.push_back(w); }
        }
        ++nc;
    }
    BoxRepresentation out;
    out.d = 2;
    out.boxes.resize(g.n());
    Rational yoff = 0;
    for (int c = 0; c < nc; ++c) {
        std::vector<int> verts;
        for (int v = 0; v < g.n(); ++v)
            if (comp[v] == c) verts.push_back(v);
        Staircase S;
        auto adj_copy = adj;
        build_component(adj_copy, verts, S);
        Rational lo = S.stints.front().lo, hi = S.stints.back().hi;
        for (auto& [v, b] : S.boxes) {
            Box box;
            box.iv = {{b.xl, b.xr}, {b.yl - lo + yoff, b.yh - lo + yoff}};
            out.boxes[v] = box;
        }
        yoff += hi - lo + 1;
    }
    auto report = verify_representation(out, g);
    if (!report.ok)
        throw std::runtime_error("outerplanar_2cbu: construction failed verification:\n" +
                                 report.summary());
    return out;
}

}  // namespace cbu

#endif  // CBU_OUTERPLANAR_HPP
