#ifndef CBU_FAMILIES_HPP
#define CBU_FAMILIES_HPP

// Named graph families and gadgets, with their homogeneous labelings where a
// canonical one exists.  Every generator documents its vertex numbering.

#include <vector>

#include "cbu/core.hpp"
#include "cbu/labeling.hpp"

namespace cbu {

// ---- shift graphs -----------------------------------------------------------

// Vertices of H_m are the ordered pairs (i,j), 1 <= i < j <= m, listed in
// lexicographic order: (1,2), (1,3), ..., (1,m), (2,3), ...  (i,j) ~ (k,l)
// iff j = k or l = i.
inline std::vector<std::pair<int, int>> shift_vertex_pairs(int m) {
    if (m < 2) throw std::invalid_argument("shift_graph: m >= 2 required");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) pairs.push_back({i, j});
    return pairs;
}

inline Graph shift_graph(int m) {
    auto pairs = shift_vertex_pairs(m);
    int n = static_cast<int>(pairs.size());
    std::vector<Edge> e;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            auto [i, j] = pairs[a];
            auto [k, l] = pairs[b];
            if (j == k || l == i) e.push_back({a, b});
        }
    return Graph(n, e);
}

// Canonical labeling: edge {(i,j),(j,k)} oriented from (i,j) to (j,k) with
// label j.
inline ArcLabeling shift_canonical_labeling(int m) {
    Graph g = shift_graph(m);
    auto pairs = shift_vertex_pairs(m);
    std::vector<bool> dir(g.m(), false);
    std::vector<std::int64_t> lab(g.m(), 0);
    for (int e = 0; e < g.m(); ++e) {
        auto [a, b] = g.edges()[e];
        auto [i, j] = pairs[a];
        auto [k, l] = pairs[b];
        if (j == k) {           // (i,j) -> (j,l)
            dir[e] = false;
            lab[e] = j;
        } else {                // l == i: (k,l) -> (i,j), label i
            dir[e] = true;
            lab[e] = i;
        }
    }
    return ArcLabeling{Orientation(g, dir), lab};
}

// ---- Jones graphs -------------------------------------------------------------

// J_1 is the 5-cycle (a1, b1, c1, d, e); J_{i+1} adds a_{i+1}, b_{i+1}, c_{i+1}
// with N(a_{i+1}) = {b_i, b_{i+1}}, N(b_{i+1}) = {a_{i+1}, c_{i+1}},
// N(c_{i+1}) = {a_i, c_i, b_{i+1}}.
// Numbering: a1=0, b1=1, c1=2, d=3, e=4, then a_{t}=3t-1, b_{t}=3t, c_{t}=3t+1
// for t >= 2.  n_i = 3i + 2.
inline Graph jones_graph(int i) {
    if (i < 1) throw std::invalid_argument("jones_graph: i >= 1 required");
    std::vector<Edge> e = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
    auto a = [](int t) { return t == 1 ? 0 : 3 * t - 1; };
    auto b = [](int t) { return t == 1 ? 1 : 3 * t; };
    auto c = [](int t) { return t == 1 ? 2 : 3 * t + 1; };
    for (int t = 2; t <= i; ++t) {
        e.push_back({a(t), b(t - 1)});
        e.push_back({a(t), b(t)});
        e.push_back({b(t), c(t)});
        e.push_back({c(t), a(t - 1)});
        e.push_back({c(t), c(t - 1)});
    }
    return Graph(3 * i + 2, e);
}

// A homogeneous labeling of J_i: within the base 5-cycle, e is the source and
// b1 the sink (paths e,a1,b1 and e,d,c1,b1); generation arcs run toward b_t
// and from generation t to t+1.
inline ArcLabeling jones_labeling(int i) {
    Graph g = jones_graph(i);
    auto a = [](int t) { return t == 1 ? 0 : 3 * t - 1; };
    auto b = [](int t) { return t == 1 ? 1 : 3 * t; };
    auto c = [](int t) { return t == 1 ? 2 : 3 * t + 1; };
    std::vector<Edge> arcs;
    std::map<Edge, std::int64_t> lab;
    auto add = [&](int t_, int h_, std::int64_t l) {
        arcs.push_back({t_, h_});
        lab[{t_, h_}] = l;
    };
    add(4, 0, 1);  // e -> a1
    add(4, 3, 1);  // e -> d
    add(3, 2, 2);  // d -> c1
    for (int t = 1; t <= i; ++t) {
        add(a(t), b(t), 2 * t + 1);
        add(c(t), b(t), 2 * t + 1);
        if (t < i) {
            add(b(t), a(t + 1), 2 * t + 2);
            add(a(t), c(t + 1), 2 * t + 1);
            add(c(t), c(t + 1), 2 * t + 1);
        }
    }
    Orientation o = Orientation::from_arcs(g, arcs);
    std::vector<std::int64_t> label(g.m(), 0);
    for (auto& [arc, l] : lab) label[g.edge_index(arc.first, arc.second)] = l;
    return ArcLabeling{o, label};
}

// ---- subdivided double wheel ---------------------------------------------------

// C_g plus two nonadjacent apexes joined to every cycle vertex, every ray then
// subdivided floor(g/2) times.  Numbering: cycle 0..g-1, apexes g and g+1,
// subdivision vertices appended in ray order (apex g rays first, by cycle
// vertex, then apex g+1 rays).
inline Graph double_wheel_subdivided(int g) {
    if (g < 3) throw std::invalid_argument("double_wheel_subdivided: g >= 3 required");
    int s = g / 2;
    std::vector<Edge> e;
    for (int i = 0; i < g; ++i) e.push_back({i, (i + 1) % g});
    int next = g + 2;
    for (int apex = g; apex <= g + 1; ++apex)
        for (int i = 0; i < g; ++i) {
            int prev = apex;
            for (int k = 0; k < s; ++k) {
                e.push_back({prev, next});
                prev = next++;
            }
            e.push_back({prev, i});
        }
    return Graph(next, e);
}

// ---- series-parallel gadget ----------------------------------------------------

// Two terminals a=0, b=1 joined by `branches` disjoint paths a, x_i, y_i, b,
// plus a path of length 5 from x_i to y_i for every i.  Numbering: x_i = 2+2i,
// y_i = 3+2i, then the four internal vertices of each length-5 path in branch
// order.
inline Graph series_parallel_gadget(int branches = 9) {
    if (branches < 1) throw std::invalid_argument("series_parallel_gadget: branches >= 1");
    std::vector<Edge> e;
    int next = 2 + 2 * branches;
    for (int i = 0; i < branches; ++i) {
        int x = 2 + 2 * i, y = 3 + 2 * i;
        e.push_back({0, x});
        e.push_back({x, y});
        e.push_back({y, 1});
        int prev = x;
        for (int k = 0; k < 4; ++k) {
            e.push_back({prev, next});
            prev = next++;
        }
        e.push_back({prev, y});
    }
    return Graph(next, e);
}

// ---- planar non-member witnesses ------------------------------------------------

// G1: the 4-cycle a-b-d-c-a plus a path b-e-f-c between the poles b,c.  In any
// homogeneous labeling its 4-cycle cannot have source a and sink d (or the
// converse): the 5-cycle (b,e,f,c,a) would force b->e and c->f, and then
// (b,e,f,c,d) has two sources and two sinks either way.
// Numbering: a=0 b=1 c=2 d=3 e=4 f=5.
inline Graph g1() {
    return Graph(6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {4, 5}, {5, 2}});
}

// G2: G1 plus a path a-g-h-d between the other poles; both diagonal pole
// patterns of the 4-cycle are then excluded, so any homogeneous labeling makes
// a,d sources and b,c sinks of the 4-cycle, or the converse.
// Numbering: g=6 h=7.
inline Graph g2() {
    std::vector<Edge> e = g1().edges();
    e.insert(e.end(), {{0, 6}, {6, 7}, {7, 3}});
    return Graph(8, e);
}

// G3: two copies of G2 glued along the path a-c-d.  The second copy has
// 4-cycle (a,c,i,j) with pole paths a-p-q-i and c-d-k-j; the shared edges are
// ac and cd.  Planar of girth 4, yet no orientation is labelable.
// Numbering: i=8 j=9 k=10 p=11 q=12.
inline Graph g3() {
    std::vector<Edge> e = g2().edges();
    e.insert(e.end(),
             {{2, 8}, {8, 9}, {9, 0}, {3, 10}, {10, 9}, {0, 11}, {11, 12}, {12, 8}});
    return Graph(13, e);
}

// Straight-line coordinates of a planar drawing of G3; the embedding they
// induce is checked by face tracing in the tests.
inline std::vector<std::pair<double, double>> g3_layout() {
    return {{0, 2},      {-1, 1},   {1, 1},    {0, 0},    {-0.3, 1}, {0.3, 1}, {-2, 2.4},
            {-2, -0.4},  {2, 1.3},  {3, 2},    {2.4, 0},  {1.1, 1.75}, {1.8, 1.6}};
}

// ---- R'(n1, n2) -----------------------------------------------------------------

// Variant of the n1 x n2 grid: every vertex (i,j) with i and j even (1-based)
// is deleted when i+j = 0 mod 4 and split into two two-vertex paths when
// i+j = 2 mod 4.  The split of (i,j) produces LB,LT,RB,RT with edges LB-RB and
// LT-RT; LB takes the contact to (i-1,j), LT to (i,j-1), RB to (i,j+1) and RT
// to (i+1,j), matching the four smaller boxes of the 2-CBU representation.
struct RPrimeGraph {
    Graph graph;
    // id of surviving grid vertex (i,j), 1-based, or -1
    std::vector<std::vector<int>> grid_id;
    // ids of the split vertices LB,LT,RB,RT for replaced (i,j), else empty
    std::vector<std::vector<std::array<int, 4>>> split_id;
    std::vector<std::vector<int>> kind;  // 0 kept, 1 deleted, 2 split
};

inline RPrimeGraph r_prime_graph(int n1, int n2) {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("r_prime_graph: sizes >= 1");
    RPrimeGraph R;
    R.grid_id.assign(n1 + 1, std::vector<int>(n2 + 1, -1));
    R.split_id.assign(n1 + 1, std::vector<std::array<int, 4>>(n2 + 1, {-1, -1, -1, -1}));
    R.kind.assign(n1 + 1, std::vector<int>(n2 + 1, 0));
    int next = 0;
    for (int i = 1; i <= n1; ++i)
        for (int j = 1; j <= n2; ++j) {
            if (i % 2 == 0 && j % 2 == 0)
                R.kind[i][j] = ((i + j) % 4 == 0) ? 1 : 2;
            if (R.kind[i][j] == 0)
                R.grid_id[i][j] = next++;
            else if (R.kind[i][j] == 2)
                for (int t = 0; t < 4; ++t) R.split_id[i][j][t] = next++;
        }
    enum { LB = 0, LT = 1, RB = 2, RT = 3 };
    std::vector<Edge> e;
    for (int i = 1; i <= n1; ++i)
        for (int j = 1; j <= n2; ++j)
            if (R.kind[i][j] == 2) {
                auto& s = R.split_id[i][j];
                e.push_back({s[LB], s[RB]});
                e.push_back({s[LT], s[RT]});
            }
    // grid edges between surviving endpoints; a split cell exposes one port
    // toward each of its four grid neighbors.  Neighbors of a split cell are
    // never split themselves (coordinate parities differ), and deleted cells
    // drop all edges.  (ni,nj) is the position of the neighbor being faced.
    auto port = [&](int i, int j, int ni, int nj) -> int {
        if (i < 1 || i > n1 || j < 1 || j > n2) return -1;
        if (R.kind[i][j] == 1) return -1;
        if (R.kind[i][j] == 0) return R.grid_id[i][j];
        auto& s = R.split_id[i][j];
        if (ni == i - 1) return s[LB];
        if (nj == j - 1) return s[LT];
        if (nj == j + 1) return s[RB];
        return s[RT];  // ni == i + 1
    };
    for (int i = 1; i <= n1; ++i)
        for (int j = 1; j <= n2; ++j) {
            if (i + 1 <= n1) {
                int a = port(i, j, i + 1, j), b = port(i + 1, j, i, j);
                if (a >= 0 && b >= 0) e.push_back({a, b});
            }
            if (j + 1 <= n2) {
                int a = port(i, j, i, j + 1), b = port(i, j + 1, i, j);
                if (a >= 0 && b >= 0) e.push_back({a, b});
            }
        }
    R.graph = Graph(next, e);
    return R;
}

}  // namespace cbu

#endif  // CBU_FAMILIES_HPP
