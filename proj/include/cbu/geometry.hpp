#ifndef CBU_GEOMETRY_HPP
#define CBU_GEOMETRY_HPP

// Axis-parallel boxes with rational endpoints and the exact verifier for
// contact representations: interiors pairwise disjoint, every nonempty
// pairwise intersection a (d-1)-dimensional box orthogonal to the first axis.
// No floating point anywhere; all comparisons are exact.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cbu/core.hpp"
#include "cbu/labeling.hpp"

namespace cbu {

// expression templates off: Rational behaves as a plain value type
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

struct Interval {
    Rational lo, hi;
    bool valid() const { return lo < hi; }
    Rational length() const { return hi - lo; }
};

struct Box {
    std::vector<Interval> iv;  // axis 1 first; contacts are orthogonal to it
    int dim() const { return static_cast<int>(iv.size()); }
    bool full_dimensional() const {
        for (auto& i : iv)
            if (!i.valid()) return false;
        return !iv.empty();
    }
};

struct BoxRepresentation {
    int d = 0;
    std::vector<Box> boxes;  // one per vertex
    int n() const { return static_cast<int>(boxes.size()); }
};

enum class ContactErrorKind {
    BadBox,            // some box not full-dimensional / wrong dimension
    InteriorOverlap,   // two boxes share interior points
    DegenerateTouch,   // intersection is (d-2)-dimensional or less
    WrongAxisTouch,    // (d-1)-dimensional touching not orthogonal to axis 1
};

struct ContactViolation {
    ContactErrorKind kind;
    int u = -1, v = -1;
    std::string detail;
};

// Classification of one box pair.
enum class PairRelation { Disjoint, Contact, Violation };

inline PairRelation classify_pair(const Box& a, const Box& b, ContactErrorKind* err,
                                  Rational* touch_coord) {
    int d = a.dim();
    int degenerate_axis = -1;
    int degenerate_count = 0;
    Rational touch;
    for (int k = 0; k < d; ++k) {
        Rational lo = std::max(a.iv[k].lo, b.iv[k].lo);
        Rational hi = std::min(a.iv[k].hi, b.iv[k].hi);
        if (lo > hi) return PairRelation::Disjoint;
        if (lo == hi) {
            ++degenerate_count;
            degenerate_axis = k;
            touch = lo;
        }
    }
    if (degenerate_count == 0) {
        if (err) *err = ContactErrorKind::InteriorOverlap;
        return PairRelation::Violation;
    }
    if (degenerate_count >= 2) {
        if (err) *err = ContactErrorKind::DegenerateTouch;
        return PairRelation::Violation;
    }
    if (degenerate_axis != 0) {
        if (err) *err = ContactErrorKind::WrongAxisTouch;
        return PairRelation::Violation;
    }
    if (touch_coord) *touch_coord = touch;
    return PairRelation::Contact;
}

struct ContactResult {
    std::optional<Graph> graph;
    std::vector<ContactViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Contact graph of a representation; all invariant violations are collected
// with the offending pair and the violated condition.
inline ContactResult contact_graph(const BoxRepresentation& r) {
    ContactResult res;
    for (int v = 0; v < r.n(); ++v) {
        if (r.boxes[v].dim() != r.d || !r.boxes[v].full_dimensional()) {
            res.violations.push_back({ContactErrorKind::BadBox, v, v,
                                      "box " + std::to_string(v) +
                                          " is not a full-dimensional box of dimension " +
                                          std::to_string(r.d)});
        }
    }
    if (!res.violations.empty()) return res;
    std::vector<Edge> edges;
    for (int u = 0; u < r.n(); ++u)
        for (int v = u + 1; v < r.n(); ++v) {
            ContactErrorKind err;
            switch (classify_pair(r.boxes[u], r.boxes[v], &err, nullptr)) {
                case PairRelation::Disjoint:
                    break;
                case PairRelation::Contact:
                    edges.push_back({u, v});
                    break;
                case PairRelation::Violation: {
                    const char* what = err == ContactErrorKind::InteriorOverlap
                                           ? "interior overlap"
                                           : err == ContactErrorKind::DegenerateTouch
                                                 ? "degenerate touching"
                                                 : "touching along wrong axis";
                    res.violations.push_back(
                        {err, u, v,
                         std::string(what) + " between boxes " + std::to_string(u) + " and " +
                             std::to_string(v)});
                    break;
                }
            }
        }
    if (res.violations.empty()) res.graph = Graph(r.n(), edges);
    return res;
}

struct VerifyReport {
    bool ok = false;
    std::vector<ContactViolation> violations;
    std::vector<Edge> missing_edges;  // in g but not realized
    std::vector<Edge> extra_edges;    // realized but not in g
    std::string summary() const {
        if (ok) return "ok";
        std::ostringstream s;
        for (auto& v : violations) s << v.detail << "\n";
        for (auto& [u, w] : missing_edges) s << "missing contact " << u << "-" << w << "\n";
        for (auto& [u, w] : extra_edges) s << "unexpected contact " << u << "-" << w << "\n";
        return s.str();
    }
};

// ok iff the representation passes its invariants and its contact graph is
// identical to g under the shared vertex indexing.
inline VerifyReport verify_representation(const BoxRepresentation& r, const Graph& g) {
    VerifyReport rep;
    if (r.n() != g.n()) {
        rep.violations.push_back({ContactErrorKind::BadBox, -1, -1,
                                  "representation has " + std::to_string(r.n()) +
                                      " boxes for " + std::to_string(g.n()) + " vertices"});
        return rep;
    }
    auto res = contact_graph(r);
    rep.violations = res.violations;
    if (res.graph) {
        for (auto e : g.edges())
            if (!res.graph->has_edge(e.first, e.second)) rep.missing_edges.push_back(e);
        for (auto e : res.graph->edges())
            if (!g.has_edge(e.first, e.second)) rep.extra_edges.push_back(e);
    }
    rep.ok = rep.violations.empty() && rep.missing_edges.empty() && rep.extra_edges.empty();
    return rep;
}

// Append one interval per vertex as a new last axis; axis 1 is unchanged.
inline BoxRepresentation lift_dimension(const BoxRepresentation& r,
                                        const std::vector<Interval>& last) {
    if (static_cast<int>(last.size()) != r.n())
        throw std::invalid_argument("lift_dimension: one interval per vertex required");
    BoxRepresentation out;
    out.d = r.d + 1;
    out.boxes = r.boxes;
    for (int v = 0; v < r.n(); ++v) {
        if (!(last[v].lo < last[v].hi))
            throw std::invalid_argument("lift_dimension: interval must satisfy lo < hi");
        out.boxes[v].iv.push_back(last[v]);
    }
    return out;
}

// Orient every contact along axis 1 (from the box whose first interval ends at
// the touch point to the box whose first interval starts there) and label it
// with the rank of the touch coordinate.  Valid representations always yield a
// homogeneous labeling: all out-contacts of a box touch at its right end and
// all in-contacts at its left end.
inline std::pair<Orientation, ArcLabeling> induced_labeling(const BoxRepresentation& r) {
    auto res = contact_graph(r);
    if (!res.graph)
        throw std::invalid_argument("induced_labeling: representation is invalid");
    const Graph& g = *res.graph;
    std::vector<Rational> touch(g.m());
    std::vector<bool> dir(g.m(), false);
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges()[e];
        Rational t;
        classify_pair(r.boxes[u], r.boxes[v], nullptr, &t);
        touch[e] = t;
        // tail = box ending at t in axis 1
        dir[e] = !(r.boxes[u].iv[0].hi == t);
    }
    std::vector<Rational> sorted(touch);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::int64_t> lab(g.m());
    for (int e = 0; e < g.m(); ++e)
        lab[e] = 1 + static_cast<std::int64_t>(
                         std::lower_bound(sorted.begin(), sorted.end(), touch[e]) -
                         sorted.begin());
    Orientation o(g, dir);
    return {o, ArcLabeling{o, lab}};
}

// ---- rational parsing/printing ---------------------------------------------

// Canonical form "p/q" with q > 0 and gcd(p, q) = 1 (cpp_rational keeps the
// invariant); integers are still printed with an explicit "/1".
inline std::string rational_to_string(const Rational& r) {
    std::ostringstream s;
    s << numerator(r) << "/" << denominator(r);
    return s.str();
}

inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt p(s.substr(0, slash));
        BigInt q(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator");
        return Rational(p, q);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational: '" + s + "'");
    }
}

}  // namespace cbu

#endif  // CBU_GEOMETRY_HPP
