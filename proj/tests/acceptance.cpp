// Acceptance suite: one line per criterion, exact tolerances, nonzero exit on
// any failure.  Expected total runtime is a few minutes single-threaded.

#include <chrono>
#include <iostream>
#include <random>
#include <set>

#include "cbu/analysis.hpp"
#include "cbu/constructors.hpp"
#include "cbu/families.hpp"
#include "cbu/io.hpp"
#include "cbu/labeling.hpp"
#include "cbu/outerplanar.hpp"
#include "cbu/recognition.hpp"

using namespace cbu;

namespace {

int failures = 0;
std::chrono::steady_clock::time_point t0;

void begin() { t0 = std::chrono::steady_clock::now(); }

void report(int idx, const std::string& name, bool ok, const std::string& note = "") {
    auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << idx << ": " << name;
    if (!note.empty()) std::cout << " [" << note << "]";
    std::cout << " (" << dt / 1000.0 << "s)\n";
    std::cout.flush();
    if (!ok) ++failures;
}

// connected graphs with n vertices up to isomorphism
std::vector<Graph> connected_classes(int n) {
    std::vector<Graph> out;
    std::set<std::uint64_t> seen;
    int slots = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots); ++mask) {
        Graph g = graph_from_mask(n, mask);
        if (!is_connected(g)) continue;
        if (seen.insert(canonical_mask(g)).second) out.push_back(g);
    }
    return out;
}

std::vector<Graph> all_classes(int n) {
    std::vector<Graph> out;
    std::set<std::uint64_t> seen;
    int slots = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots); ++mask) {
        Graph g = graph_from_mask(n, mask);
        if (seen.insert(canonical_mask(g)).second) out.push_back(g);
    }
    return out;
}

}  // namespace

int main() {
    std::vector<BoxRepresentation> verified_reps;  // collected for criterion 9

    // 1. labelable(o) <=> no badly oriented cycle, exhaustively: every
    //    connected graph with n <= 6 (up to isomorphism; both sides are
    //    isomorphism-invariant) and every orientation of each.  The
    //    constructive source-merge synthesis must agree in feasibility, and
    //    feasible orientations must be quasi-cycle-free.
    begin();
    {
        bool ok = true;
        std::uint64_t orientations = 0;
        for (int n = 2; n <= 6 && ok; ++n)
            for (const Graph& g : connected_classes(n)) {
                for (std::uint64_t d = 0; d < (std::uint64_t{1} << g.m()); ++d) {
                    std::vector<bool> dir(g.m());
                    for (int e = 0; e < g.m(); ++e) dir[e] = d >> e & 1;
                    Orientation o(g, dir);
                    ++orientations;
                    bool feas = labelable(o);
                    if (feas == find_bad_cycle(o).has_value()) { ok = false; break; }
                    if (feas != synthesize_by_source_merge(o).has_value()) { ok = false; break; }
                    if (feas && has_quasi_cycle(o)) { ok = false; break; }
                }
                if (!ok) break;
            }
        report(1, "oracle equivalence (solver vs badly oriented cycles vs synthesis), n <= 6",
               ok, std::to_string(orientations) + " orientations");
    }

    // 2. every graph containing a triangle is a non-member (n <= 6)
    begin();
    {
        bool ok = true;
        int count = 0;
        for (int n = 3; n <= 6; ++n)
            for (const Graph& g : all_classes(n)) {
                if (!find_triangle(g)) continue;
                ++count;
                if (decide_cbu(g).verdict != Verdict::NonMember) { ok = false; break; }
            }
        report(2, "triangle-containing graphs are non-members, n <= 6", ok,
               std::to_string(count) + " graphs");
    }

    // 3. every connected bipartite graph with n <= 7 is a member with a valid
    //    certificate (all labeled graphs, no isomorphism reduction)
    begin();
    {
        bool ok = true;
        std::uint64_t count = 0;
        for (int n = 1; n <= 7 && ok; ++n) {
            int slots = n * (n - 1) / 2;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots); ++mask) {
                Graph g = graph_from_mask(n, mask);
                if (!is_connected(g) || !bipartition(g)) continue;
                ++count;
                auto cert = decide_cbu(g);
                if (cert.verdict != Verdict::Member || !is_homogeneous(*cert.witness)) {
                    ok = false;
                    break;
                }
            }
        }
        report(3, "connected bipartite graphs are members with valid certificates, n <= 7", ok,
               std::to_string(count) + " graphs");
    }

    // 4. constructor verification, exact rational checks
    begin();
    {
        bool ok = true;
        std::string note;
        // shift graphs m = 2..6 with exact first intervals [i,j]
        for (int m = 2; m <= 6 && ok; ++m) {
            auto rep = shift_graph_representation(m);
            ok = verify_representation(rep, shift_graph(m)).ok && rep.d == m - 1;
            auto pairs = shift_vertex_pairs(m);
            for (std::size_t a = 0; a < pairs.size() && ok; ++a)
                ok = rep.boxes[a].iv[0].lo == pairs[a].first &&
                     rep.boxes[a].iv[0].hi == pairs[a].second;
            if (ok) verified_reps.push_back(rep);
            else note = "shift m=" + std::to_string(m);
        }
        // grids n <= 8
        for (int n = 1; n <= 8 && ok; ++n) {
            auto rep = grid_2cbu(n);
            ok = verify_representation(rep, grid_graph(n)).ok;
            if (ok) verified_reps.push_back(rep);
            else note = "grid n=" + std::to_string(n);
        }
        // double subdivisions of every graph with n <= 6, two per edge
        for (int n = 1; n <= 6 && ok; ++n)
            for (const Graph& g : all_classes(n)) {
                auto res = double_subdivision_to_3cbu(g, std::vector<int>(g.m(), 2));
                ok = verify_representation(res.rep, res.graph).ok;
                if (ok) {
                    verified_reps.push_back(res.rep);
                } else {
                    note = "double subdivision";
                    break;
                }
            }
        // labeling-to-representation for every member with n <= 5, d <= 2n-1
        for (int n = 1; n <= 5 && ok; ++n)
            for (const Graph& g : all_classes(n)) {
                auto cert = decide_cbu(g);
                if (cert.verdict != Verdict::Member) continue;
                auto rep = labeling_to_representation(g, *cert.witness);
                ok = verify_representation(rep, g).ok && rep.d <= 2 * g.n() - 1;
                if (ok) {
                    verified_reps.push_back(rep);
                } else {
                    note = "labeling-to-representation";
                    break;
                }
            }
        report(4, "constructors verify exactly (shift/grid/double-subdivision/pipeline)", ok,
               note);
    }

    // 5. the planar girth-4 witness graph: non-member within the default
    //    budget, and a quasi-cycle-free acyclic orientation exists
    begin();
    {
        Graph g = g3();
        auto cert = decide_cbu(g);
        bool nonmember = cert.verdict == Verdict::NonMember && !cert.stats.triangle_shortcut;
        bool cover = false;
        auto cycles = all_cycles(g, g.n());
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.m()) && !cover; ++mask) {
            std::vector<bool> dir(g.m());
            for (int e = 0; e < g.m(); ++e) dir[e] = mask >> e & 1;
            Orientation o(g, dir);
            if (!is_acyclic_orientation(o)) continue;
            bool quasi = false;
            for (auto& c : cycles)
                if (is_quasi_cycle(o, c)) { quasi = true; break; }
            cover = !quasi;
        }
        report(5, "planar girth-4 witness: exhaustive non-membership and cover-graph witness",
               nonmember && cover,
               std::to_string(cert.stats.nodes) + " search nodes");
    }

    // 6. Jones suite: homogeneous labelings, exact alpha, exact chi_f bound
    begin();
    {
        bool ok = true;
        for (int i = 1; i <= 8 && ok; ++i) ok = is_homogeneous(jones_labeling(i));
        for (int i = 1; i <= 4 && ok; ++i) {
            Graph j = jones_graph(i);
            ok = independence_number(j).size * 3 == j.n() + 1;
        }
        for (int i = 1; i <= 3 && ok; ++i) {
            Graph j = jones_graph(i);
            auto fc = fractional_chromatic_number(j);
            // chi_f >= 3 - 3/(n+1), exactly
            ok = fc.value * (j.n() + 1) >= Rational(3) * (j.n() + 1) - 3;
        }
        report(6, "Jones graphs: labelings homogeneous (i<=8), alpha=(n+1)/3 (i<=4), "
                  "chi_f >= 3-3/(n+1) (i<=3)", ok);
    }

    // 7. fractional bound: chi_f(H_m) < 4 for m <= 7; members of the seeded
    //    200-graph corpus with n <= 8 have chi_f < 4 and alpha > n/4
    begin();
    {
        bool ok = true;
        for (int m = 2; m <= 7 && ok; ++m)
            ok = fractional_chromatic_number(shift_graph(m)).value < 4;
        std::mt19937_64 rng(0xCB5EED);
        int members = 0;
        for (int t = 0; t < 200 && ok; ++t) {
            std::uniform_int_distribution<int> dn(1, 8);
            int n = dn(rng);
            std::uniform_int_distribution<std::uint64_t> dm(
                0, (std::uint64_t{1} << (n * (n - 1) / 2)) - 1);
            Graph g = graph_from_mask(n, dm(rng));
            if (decide_cbu(g).verdict != Verdict::Member) continue;
            ++members;
            ok = fractional_chromatic_number(g).value < 4 &&
                 4 * independence_number(g).size > g.n();
        }
        report(7, "fractional bounds: chi_f(shift) < 4 (m<=7), corpus members obey "
                  "chi_f < 4 and alpha > n/4", ok,
               std::to_string(members) + " members of 200");
    }

    // 8. homomorphism transfer: every n <= 6 graph with a C5 homomorphism gets
    //    a checker-valid pulled-back labeling and is decided a member
    begin();
    {
        bool ok = true;
        int count = 0;
        auto c5lab = c5_good_labeling();
        for (int n = 1; n <= 6 && ok; ++n)
            for (const Graph& g : all_classes(n)) {
                auto hom = find_homomorphism_c5(g);
                if (!hom) continue;
                ++count;
                auto pulled = pullback_labeling(g, cycle_graph(5), *hom, c5lab);
                if (!is_homogeneous(pulled) || decide_cbu(g).verdict != Verdict::Member) {
                    ok = false;
                    break;
                }
            }
        report(8, "homomorphism transfer to C5 members, n <= 6", ok,
               std::to_string(count) + " graphs");
    }

    // 9. induced labelings of every representation verified in criterion 4
    begin();
    {
        bool ok = true;
        for (auto& rep : verified_reps) {
            auto [o, lab] = induced_labeling(rep);
            if (!is_homogeneous(lab)) { ok = false; break; }
        }
        report(9, "geometry-induced labelings are homogeneous on all verified representations",
               ok, std::to_string(verified_reps.size()) + " representations");
    }

    std::cout << (failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: FAILURES present")
              << "\n";
    return failures == 0 ? 0 : 1;
}
