#ifndef CBU_CONSTRUCTORS_HPP
#define CBU_CONSTRUCTORS_HPP

// Explicit box-representation constructions: boxicity-based lifts for
// bipartite graphs and subdivisions, the grid and R' families, shift-graph
// representations, false-twin and star-removal lifts, and the full
// labeling-to-representation pipeline.

#include <map>
#include <vector>

#include "cbu/core.hpp"
#include "cbu/families.hpp"
#include "cbu/geometry.hpp"
#include "cbu/labeling.hpp"

namespace cbu {

// Boxes in an intersection representation may overlap in their interiors;
// adjacency is plain nonempty intersection of closed boxes.
struct IntersectionRepresentation {
    int d = 0;
    std::vector<Box> boxes;
    int n() const { return static_cast<int>(boxes.size()); }
};

inline Graph intersection_graph(const IntersectionRepresentation& r) {
    std::vector<Edge> edges;
    for (int u = 0; u < r.n(); ++u)
        for (int v = u + 1; v < r.n(); ++v) {
            bool meet = true;
            for (int k = 0; k < r.d && meet; ++k)
                meet = std::max(r.boxes[u].iv[k].lo, r.boxes[v].iv[k].lo) <=
                       std::min(r.boxes[u].iv[k].hi, r.boxes[v].iv[k].hi);
            if (meet) edges.push_back({u, v});
        }
    return Graph(r.n(), edges);
}

namespace detail {

inline void check_boxes(const IntersectionRepresentation& r, const char* who) {
    for (auto& b : r.boxes)
        if (b.dim() != r.d || !b.full_dimensional())
            throw std::invalid_argument(std::string(who) + ": invalid box in input");
}

// Quarter of the minimum positive gap between distinct endpoint coordinates,
// per axis.  Expanding every box by this much on both sides keeps the
// intersection graph unchanged (disjoint pairs keep a positive gap) while
// making every nonempty intersection full-dimensional.
inline std::vector<Rational> expansion_amounts(const IntersectionRepresentation& r) {
    std::vector<Rational> delta(r.d);
    for (int k = 0; k < r.d; ++k) {
        std::vector<Rational> coords;
        for (auto& b : r.boxes) {
            coords.push_back(b.iv[k].lo);
            coords.push_back(b.iv[k].hi);
        }
        std::sort(coords.begin(), coords.end());
        coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
        Rational gap = 1;
        for (std::size_t i = 1; i < coords.size(); ++i)
            gap = i == 1 ? coords[i] - coords[i - 1]
                         : std::min(gap, coords[i] - coords[i - 1]);
        delta[k] = coords.size() >= 2 ? gap / 4 : Rational(1, 4);
    }
    return delta;
}

inline IntersectionRepresentation expand(const IntersectionRepresentation& r,
                                         const std::vector<Rational>& delta) {
    IntersectionRepresentation out = r;
    for (auto& b : out.boxes)
        for (int k = 0; k < r.d; ++k) {
            b.iv[k].lo -= delta[k];
            b.iv[k].hi += delta[k];
        }
    return out;
}

}  // namespace detail

// ---- bipartite boxicity lift ---------------------------------------------------

// From a boxicity-d intersection representation of a bipartite graph with
// parts A and B: expand slightly, then prepend [0,1] / [1,2] as the contact
// axis.  Result is a (d+1)-dimensional contact representation.
inline BoxRepresentation bipartite_to_cbu(const IntersectionRepresentation& r,
                                          const std::vector<int>& A,
                                          const std::vector<int>& B) {
    detail::check_boxes(r, "bipartite_to_cbu");
    std::vector<int> side(r.n(), -1);
    for (int v : A) side.at(v) = 0;
    for (int v : B) {
        if (side.at(v) == 0)
            throw std::invalid_argument("bipartite_to_cbu: parts not disjoint");
        side[v] = 1;
    }
    for (int v = 0; v < r.n(); ++v)
        if (side[v] < 0) throw std::invalid_argument("bipartite_to_cbu: parts must cover all vertices");
    Graph g = intersection_graph(r);
    for (auto [u, v] : g.edges())
        if (side[u] == side[v])
            throw std::invalid_argument("bipartite_to_cbu: input not bipartite under (A,B)");
    auto expanded = detail::expand(r, detail::expansion_amounts(r));
    BoxRepresentation out;
    out.d = r.d + 1;
    out.boxes.resize(r.n());
    for (int v = 0; v < r.n(); ++v) {
        Box b;
        b.iv.push_back(side[v] == 0 ? Interval{0, 1} : Interval{1, 2});
        for (auto& iv : expanded.boxes[v].iv) b.iv.push_back(iv);
        out.boxes[v] = b;
    }
    return out;
}

// ---- subdivision of properly represented graphs ----------------------------------

namespace detail {

// A private point of the pair (u,v): inside both boxes and in no other.
// The sweep uses all endpoint coordinates clamped to the overlap plus
// midpoints of consecutive ones; if a private point exists, one of this form
// does.
inline std::optional<std::vector<Rational>> find_private_point(
    const IntersectionRepresentation& r, int u, int v) {
    std::vector<Interval> overlap(r.d);
    for (int k = 0; k < r.d; ++k) {
        overlap[k] = {std::max(r.boxes[u].iv[k].lo, r.boxes[v].iv[k].lo),
                      std::min(r.boxes[u].iv[k].hi, r.boxes[v].iv[k].hi)};
        if (overlap[k].lo > overlap[k].hi) return std::nullopt;
    }
    std::vector<std::vector<Rational>> cand(r.d);
    for (int k = 0; k < r.d; ++k) {
        std::vector<Rational> vals;
        for (auto& b : r.boxes)
            for (Rational c : {b.iv[k].lo, b.iv[k].hi})
                if (overlap[k].lo <= c && c <= overlap[k].hi) vals.push_back(c);
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        auto& out = cand[k];
        for (std::size_t i = 0; i < vals.size(); ++i) {
            out.push_back(vals[i]);
            if (i + 1 < vals.size()) out.push_back((vals[i] + vals[i + 1]) / 2);
        }
    }
    std::vector<std::size_t> idx(r.d, 0);
    std::vector<Rational> p(r.d);
    std::function<std::optional<std::vector<Rational>>(int)> rec =
        [&](int k) -> std::optional<std::vector<Rational>> {
        if (k == r.d) {
            for (int w = 0; w < r.n(); ++w) {
                if (w == u || w == v) continue;
                bool inside = true;
                for (int a = 0; a < r.d && inside; ++a)
                    inside = r.boxes[w].iv[a].lo <= p[a] && p[a] <= r.boxes[w].iv[a].hi;
                if (inside) return std::nullopt;
            }
            return p;
        }
        for (auto& c : cand[k]) {
            p[k] = c;
            if (auto res = rec(k + 1)) return res;
        }
        return std::nullopt;
    };
    return rec(0);
}

}  // namespace detail

// Proper: every intersecting pair owns a point covered by those two boxes
// only.
inline bool is_proper(const IntersectionRepresentation& r) {
    detail::check_boxes(r, "is_proper");
    Graph g = intersection_graph(r);
    for (auto [u, v] : g.edges())
        if (!detail::find_private_point(r, u, v)) return false;
    return true;
}

struct SubdivisionRepresentation {
    BoxRepresentation rep;
    Graph graph;  // the subdivided graph the representation realizes
    SubdivisionResult subdivision;
};

// From a proper boxicity-b intersection representation of g, a (b+1)-CBU
// representation of the 1-subdivision of g.  Vertex i keeps the contact-axis
// interval [2i, 2i+1]; the subdivision vertex of edge (i,j) spans [2i+1, 2j]
// and sits inside a private cell of the overlap of its endpoints.
inline SubdivisionRepresentation subdivision_from_proper(const IntersectionRepresentation& r,
                                                         const Graph& g) {
    detail::check_boxes(r, "subdivision_from_proper");
    if (!(intersection_graph(r) == g))
        throw std::invalid_argument("subdivision_from_proper: representation does not realize g");
    // private points witness properness edge by edge
    std::vector<std::vector<Rational>> priv;
    for (auto [u, v] : g.edges()) {
        auto p = detail::find_private_point(r, u, v);
        if (!p)
            throw std::invalid_argument(
                "subdivision_from_proper: representation is not proper (edge " +
                std::to_string(u) + "-" + std::to_string(v) + " has no private point)");
        priv.push_back(*p);
    }
    // expansion small enough to keep every private point clear of every other
    // expanded box by a strict margin
    auto delta = detail::expansion_amounts(r);
    Rational eps = delta.empty() ? Rational(1, 4) : delta[0];
    for (auto d : delta) eps = std::min(eps, d);
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges()[e];
        for (int w = 0; w < r.n(); ++w) {
            if (w == u || w == v) continue;
            Rational margin = -1;  // max over axes of the outside distance
            for (int k = 0; k < r.d; ++k) {
                if (priv[e][k] < r.boxes[w].iv[k].lo)
                    margin = std::max(margin, r.boxes[w].iv[k].lo - priv[e][k]);
                if (priv[e][k] > r.boxes[w].iv[k].hi)
                    margin = std::max(margin, priv[e][k] - r.boxes[w].iv[k].hi);
            }
            if (margin > 0) eps = std::min(eps, margin / 3);
        }
    }
    std::vector<Rational> dd(r.d, eps);
    auto expanded = detail::expand(r, dd);

    SubdivisionRepresentation out;
    out.subdivision = subdivide_uniform(g, 1);
    out.graph = out.subdivision.graph;
    out.rep.d = r.d + 1;
    for (int i = 0; i < g.n(); ++i) {
        Box b;
        b.iv.push_back({Rational(2 * i), Rational(2 * i + 1)});
        for (auto& iv : expanded.boxes[i].iv) b.iv.push_back(iv);
        out.rep.boxes.push_back(b);
    }
    for (int e = 0; e < g.m(); ++e) {
        auto [i, j] = g.edges()[e];  // i < j
        Box b;
        b.iv.push_back({Rational(2 * i + 1), Rational(2 * j)});
        for (int k = 0; k < r.d; ++k)
            b.iv.push_back({priv[e][k] - eps / 2, priv[e][k] + eps / 2});
        out.rep.boxes.push_back(b);
    }
    return out;
}

// ---- (>=2)-subdivisions are 3-dimensional ------------------------------------------

// Vertex v_i occupies [3i,3i+1] x [n-i,n-i+1] x [0,2m] (1-based i); the k-th
// edge's path runs through the strip [2k-1,2k] of the third axis.  The
// interior path boxes shrink their second interval by 1/4 at the top to avoid
// grazing the row of v_{j-1}.
inline SubdivisionRepresentation double_subdivision_to_3cbu(const Graph& g,
                                                            const std::vector<int>& counts) {
    if (static_cast<int>(counts.size()) != g.m())
        throw std::invalid_argument("double_subdivision_to_3cbu: one count per edge");
    for (int c : counts)
        if (c < 2) throw std::invalid_argument("double_subdivision_to_3cbu: every count must be >= 2");
    int n = g.n(), m = g.m();
    const Rational sigma(1, 4);
    SubdivisionRepresentation out;
    out.subdivision = subdivide(g, counts);
    out.graph = out.subdivision.graph;
    out.rep.d = 3;
    Rational depth = std::max(1, 2 * m);  // keep the third axis full-dimensional
    for (int v0 = 0; v0 < n; ++v0) {
        int i = v0 + 1;
        Box b;
        b.iv = {{Rational(3 * i), Rational(3 * i + 1)},
                {Rational(n - i), Rational(n - i + 1)},
                {Rational(0), depth}};
        out.rep.boxes.push_back(b);
    }
    for (int e = 0; e < m; ++e) {
        int k = e + 1;
        int i = g.edges()[e].first + 1, j = g.edges()[e].second + 1;  // i < j
        int r = counts[e];
        Rational base(3 * i + 2);
        Rational span(3 * j - 3 * i - 2);
        Interval strip{Rational(2 * k - 1), Rational(2 * k)};
        for (int l = 1; l <= r; ++l) {
            Box b;
            if (l == 1) {
                b.iv = {{Rational(3 * i + 1), Rational(3 * i + 2)},
                        {Rational(n - j), Rational(n - i + 1)},
                        strip};
            } else {
                b.iv = {{base + span * (l - 2) / (r - 1), base + span * (l - 1) / (r - 1)},
                        {Rational(n - j), Rational(n - j + 1) - sigma},
                        strip};
            }
            out.rep.boxes.push_back(b);
        }
    }
    return out;
}

// ---- grid and R' ---------------------------------------------------------------

// Vertex (i,j) of the n1 x n2 grid (1-based) maps to the box
// [i+j-1, i+j] x [2i-2j, 2i-2j+3]; index (i-1)*n2 + (j-1).
inline BoxRepresentation grid_2cbu(int n1, int n2) {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("grid_2cbu: sizes >= 1");
    BoxRepresentation out;
    out.d = 2;
    for (int i = 1; i <= n1; ++i)
        for (int j = 1; j <= n2; ++j) {
            Box b;
            b.iv = {{Rational(i + j - 1), Rational(i + j)},
                    {Rational(2 * i - 2 * j), Rational(2 * i - 2 * j + 3)}};
            out.boxes.push_back(b);
        }
    return out;
}

inline BoxRepresentation grid_2cbu(int n) { return grid_2cbu(n, n); }

struct RPrimeRepresentation {
    BoxRepresentation rep;
    Graph graph;
};

// 2-CBU representation of R'(n1,n2): kept grid boxes unchanged, each split
// cell replaced by its four smaller boxes (left/right half columns, bottom and
// top thirds of the height, leaving the middle third open).
inline RPrimeRepresentation r_prime_2cbu(int n1, int n2) {
    auto R = r_prime_graph(n1, n2);
    RPrimeRepresentation out;
    out.graph = R.graph;
    out.rep.d = 2;
    out.rep.boxes.resize(R.graph.n());
    const Rational half(1, 2);
    for (int i = 1; i <= n1; ++i)
        for (int j = 1; j <= n2; ++j) {
            Rational s(i + j), t(2 * i - 2 * j);
            if (R.kind[i][j] == 0) {
                Box b;
                b.iv = {{s - 1, s}, {t, t + 3}};
                out.rep.boxes[R.grid_id[i][j]] = b;
            } else if (R.kind[i][j] == 2) {
                auto& sp = R.split_id[i][j];
                auto mk = [&](Rational xl, Rational xh, Rational yl, Rational yh) {
                    Box b;
                    b.iv = {{xl, xh}, {yl, yh}};
                    return b;
                };
                out.rep.boxes[sp[0]] = mk(s - 1, s - half, t, t + 1);          // LB
                out.rep.boxes[sp[1]] = mk(s - 1, s - half, t + 2, t + 3);      // LT
                out.rep.boxes[sp[2]] = mk(s - half, s, t, t + 1);              // RB
                out.rep.boxes[sp[3]] = mk(s - half, s, t + 2, t + 3);          // RT
            }
        }
    return out;
}

// ---- shift graphs ---------------------------------------------------------------

// H_m in dimension m-1 with the contact-axis interval of (i,j) exactly [i,j].
// Induction on m: copies of the (i,m-1) boxes become the (i,m) vertices with
// the first interval stretched to [i,m]; a new last axis separates them.
inline BoxRepresentation shift_graph_representation(int m) {
    if (m < 2) throw std::invalid_argument("shift_graph_representation: m >= 2");
    if (m == 2) {
        BoxRepresentation r;
        r.d = 1;
        Box b;
        b.iv = {{Rational(1), Rational(2)}};
        r.boxes = {b};
        return r;
    }
    BoxRepresentation prev = shift_graph_representation(m - 1);
    auto old_pairs = shift_vertex_pairs(m - 1);
    auto new_pairs = shift_vertex_pairs(m);
    std::map<std::pair<int, int>, int> old_index;
    for (std::size_t a = 0; a < old_pairs.size(); ++a) old_index[old_pairs[a]] = a;

    // bound for the all-covering middle intervals of the (m-1,m) box
    Rational omega(1);
    for (auto& b : prev.boxes)
        for (int k = 1; k < prev.d; ++k) {
            omega = std::max(omega, abs(b.iv[k].lo));
            omega = std::max(omega, abs(b.iv[k].hi));
        }
    omega += 1;

    BoxRepresentation out;
    out.d = m - 1;
    for (auto [i, j] : new_pairs) {
        Box b;
        if (j <= m - 1) {
            b = prev.boxes[old_index[{i, j}]];
            b.iv.push_back(j == m - 1 ? Interval{1, 2} : Interval{1, 4});
        } else if (i < m - 1) {  // (i, m): twin of (i, m-1) stretched to [i, m]
            b = prev.boxes[old_index[{i, m - 1}]];
            b.iv[0] = {Rational(i), Rational(m)};
            b.iv.push_back({3, 4});
        } else {  // (m-1, m)
            b.iv.push_back({Rational(m - 1), Rational(m)});
            for (int k = 1; k < prev.d; ++k) b.iv.push_back({-omega, omega});
            b.iv.push_back({1, 2});
        }
        out.boxes.push_back(b);
    }
    return out;
}

// ---- lifts: twins and star removal ------------------------------------------------

// Contact representation of the graph plus a false twin of v, one dimension up.
inline BoxRepresentation twin_representation(const BoxRepresentation& r, int v) {
    if (v < 0 || v >= r.n()) throw std::invalid_argument("twin_representation: bad vertex");
    BoxRepresentation wide = r;
    wide.boxes.push_back(r.boxes[v]);
    std::vector<Interval> last(wide.n(), Interval{0, 3});
    last[v] = {0, 1};
    last[wide.n() - 1] = {2, 3};
    return lift_dimension(wide, last);
}

// Remove all A-B contacts (which must all be present) by one extra dimension.
inline BoxRepresentation remove_bipartite_edges(const BoxRepresentation& r,
                                                const std::vector<int>& A,
                                                const std::vector<int>& B) {
    auto res = contact_graph(r);
    if (!res.graph)
        throw std::invalid_argument("remove_bipartite_edges: invalid representation");
    for (int a : A)
        for (int b : B)
            if (!res.graph->has_edge(a, b))
                throw std::invalid_argument("remove_bipartite_edges: pair " + std::to_string(a) +
                                            "-" + std::to_string(b) + " is not in contact");
    std::vector<Interval> last(r.n(), Interval{0, 3});
    for (int a : A) last.at(a) = {0, 1};
    for (int b : B) {
        if (last.at(b).hi == 1)
            throw std::invalid_argument("remove_bipartite_edges: parts not disjoint");
        last[b] = {2, 3};
    }
    return lift_dimension(r, last);
}

// ---- labeling -> representation pipeline --------------------------------------------

struct ShiftEmbedding {
    int m = 0;
    // target pair (in-label, out-label) per vertex, labels normalized to
    // sources = 1, sinks = m, everything else in [2, m-1]
    std::vector<std::pair<int, int>> pair_of;
    std::vector<int> copy_index;  // which copy of the pair this vertex takes
};

inline ShiftEmbedding shift_embedding(const ArcLabeling& lab) {
    if (auto why = homogeneity_violation(lab))
        throw std::invalid_argument("shift_embedding: labeling invalid: " + *why);
    const Graph& g = lab.orientation.graph();
    std::vector<std::int64_t> raw;
    for (auto l : lab.label) raw.push_back(l);
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    int t = static_cast<int>(raw.size());
    ShiftEmbedding emb;
    emb.m = t + 2;
    auto rank = [&](std::int64_t l) {
        return 2 + static_cast<int>(std::lower_bound(raw.begin(), raw.end(), l) - raw.begin());
    };
    emb.pair_of.resize(g.n());
    emb.copy_index.assign(g.n(), 0);
    std::map<std::pair<int, int>, int> seen;
    for (int v = 0; v < g.n(); ++v) {
        std::optional<std::int64_t> in, out;
        for (int w : g.neighbors(v)) {
            int e = g.edge_index(v, w);
            (lab.orientation.has_arc(v, w) ? out : in) = lab.label[e];
        }
        int i = in ? rank(*in) : 1;
        int j = out ? rank(*out) : emb.m;
        emb.pair_of[v] = {i, j};
        emb.copy_index[v] = seen[{i, j}]++;
    }
    return emb;
}

// Every labelable graph embeds in a twinned shift graph; representation built
// from the H_m boxes by twin lifts, dropping unused boxes, then peeling the
// extra contacts off as stars.  Dimension is at most 2n-1.
inline BoxRepresentation labeling_to_representation(const Graph& g, const ArcLabeling& lab) {
    if (!(lab.orientation.graph() == g))
        throw std::invalid_argument("labeling_to_representation: labeling is not on g");
    if (auto why = homogeneity_violation(lab))
        throw std::invalid_argument("labeling_to_representation: labeling invalid: " + *why);
    if (g.n() == 0) return BoxRepresentation{1, {}};

    ShiftEmbedding emb = shift_embedding(lab);
    int m = emb.m;
    auto pairs = shift_vertex_pairs(m);
    std::map<std::pair<int, int>, int> pair_index;
    for (std::size_t a = 0; a < pairs.size(); ++a) pair_index[pairs[a]] = a;

    BoxRepresentation rep = shift_graph_representation(m);
    // rep_vertex[v]: box index realizing g's vertex v
    std::vector<int> rep_vertex(g.n(), -1);
    for (int v = 0; v < g.n(); ++v) {
        int base = pair_index.at(emb.pair_of[v]);
        if (emb.copy_index[v] == 0) {
            rep_vertex[v] = base;
        } else {
            rep_vertex[v] = rep.n();  // twin appended at the end
            rep = twin_representation(rep, base);
        }
    }
    // keep exactly the assigned boxes, reindexed to g's vertices
    BoxRepresentation kept;
    kept.d = rep.d;
    kept.boxes.resize(g.n());
    for (int v = 0; v < g.n(); ++v) kept.boxes[v] = rep.boxes[rep_vertex[v]];

    // peel extra contacts: each vertex in turn consumes, as a star, all
    // not-yet-removed contacts at it that are not edges of g
    for (int v = 0; v < g.n(); ++v) {
        auto res = contact_graph(kept);
        if (!res.graph)
            throw std::runtime_error("labeling_to_representation: intermediate representation invalid");
        std::vector<int> extra;
        for (int w : res.graph->neighbors(v))
            if (!g.has_edge(v, w)) extra.push_back(w);
        if (!extra.empty()) kept = remove_bipartite_edges(kept, {v}, extra);
    }
    return kept;
}

// ---- B' construction ---------------------------------------------------------------

struct BPrimeResult {
    BoxRepresentation rep;
    Graph bprime;  // b plus the path x-z-y; x = n, z = n+1, y = n+2
};

// From a boxicity-d intersection representation of a bipartite graph b with
// parts X, Y: the (d+1)-CBU representation of B', the graph obtained by adding
// a path x-z-y with x joined to all of X and y to all of Y.
inline BPrimeResult bprime_construction(const Graph& b, const std::vector<int>& X,
                                        const std::vector<int>& Y,
                                        const IntersectionRepresentation& r) {
    detail::check_boxes(r, "bprime_construction");
    if (!(intersection_graph(r) == b))
        throw std::invalid_argument("bprime_construction: representation does not realize b");
    std::vector<int> side(b.n(), -1);
    for (int v : X) side.at(v) = 0;
    for (int v : Y) {
        if (side.at(v) == 0) throw std::invalid_argument("bprime_construction: parts not disjoint");
        side[v] = 1;
    }
    for (int v = 0; v < b.n(); ++v)
        if (side[v] < 0) throw std::invalid_argument("bprime_construction: part mismatch");
    for (auto [u, v] : b.edges())
        if (side[u] == side[v]) throw std::invalid_argument("bprime_construction: part mismatch");

    BoxRepresentation base = bipartite_to_cbu(r, X, Y);  // X -> [0,1], Y -> [1,2]
    Rational omega(1);
    for (auto& box : base.boxes)
        for (int k = 1; k < base.d; ++k) {
            omega = std::max(omega, abs(box.iv[k].lo));
            omega = std::max(omega, abs(box.iv[k].hi));
        }
    omega += 2;

    BPrimeResult out;
    out.rep = base;
    int n = b.n();
    auto wide = [&](Rational lo1, Rational hi1, Interval mid) {
        Box box;
        box.iv.push_back({lo1, hi1});
        for (int k = 1; k < base.d; ++k) box.iv.push_back(mid);
        return box;
    };
    out.rep.boxes.push_back(wide(-1, 0, {-omega, omega}));           // x
    out.rep.boxes.push_back(wide(0, 2, {omega - 1, omega}));         // z
    out.rep.boxes.push_back(wide(2, 3, {-omega, omega}));            // y
    std::vector<Edge> edges = b.edges();
    int x = n, z = n + 1, y = n + 2;
    edges.push_back({x, z});
    edges.push_back({z, y});
    for (int u : X) edges.push_back({u, x});
    for (int v : Y) edges.push_back({v, y});
    out.bprime = Graph(n + 3, edges);
    return out;
}

}  // namespace cbu

#endif  // CBU_CONSTRUCTORS_HPP
