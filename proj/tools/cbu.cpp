// Command-line front end: generate family graphs, decide membership, check
// orientations, build and verify box representations, emit SVG figures, and
// compute exact invariants.
//
// Exit codes: 0 success / verified / member, 1 negative verdict (non-member,
// mismatch, unlabelable orientation), 2 usage error, 3 budget exhausted.

#include <CLI11.hpp>

#include <cstdlib>
#include <random>
#include <iostream>

#include "cbu/analysis.hpp"
#include "cbu/constructors.hpp"
#include "cbu/core.hpp"
#include "cbu/families.hpp"
#include "cbu/geometry.hpp"
#include "cbu/io.hpp"
#include "cbu/labeling.hpp"
#include "cbu/outerplanar.hpp"
#include "cbu/recognition.hpp"
#include "cbu/svg.hpp"

namespace {

int log_level() {
    const char* env = std::getenv("CBU_LOG");
    if (!env) return 1;
    std::string v = env;
    if (v == "quiet" || v == "0") return 0;
    if (v == "debug" || v == "2") return 2;
    return 1;
}

void log_info(const std::string& msg) {
    if (log_level() >= 1) std::cerr << msg << "\n";
}

cbu::Graph make_family(const std::string& family, int k, int a, int b) {
    using namespace cbu;
    if (family == "path") return path_graph(k);
    if (family == "cycle") return cycle_graph(k);
    if (family == "complete") return complete_graph(k);
    if (family == "complete-bipartite") return complete_bipartite(a, b);
    if (family == "grid") return b > 0 ? grid_graph(a > 0 ? a : k, b) : grid_graph(k);
    if (family == "kbb-minus-matching") return kbb_minus_matching(k);
    if (family == "shift") return shift_graph(k);
    if (family == "jones") return jones_graph(k);
    if (family == "double-wheel") return double_wheel_subdivided(k);
    if (family == "series-parallel") return series_parallel_gadget(k > 0 ? k : 9);
    if (family == "g1") return g1();
    if (family == "g2") return g2();
    if (family == "g3") return g3();
    if (family == "r-prime") return r_prime_graph(a, b).graph;
    throw CLI::ValidationError("unknown family '" + family + "'");
}

int run_selftest(const std::string& level, std::uint64_t seed);

}  // namespace

int main(int argc, char** argv) {
    using namespace cbu;
    CLI::App app{"contact graphs of boxes with unidirectional contacts"};
    app.require_subcommand(1);

    // ---- gen ----
    std::string gen_family, gen_out = "-", gen_format = "json";
    int gen_k = 5, gen_a = 0, gen_b = 0;
    auto* gen = app.add_subcommand("gen", "generate a family graph");
    gen->add_option("family", gen_family,
                    "path|cycle|complete|complete-bipartite|grid|kbb-minus-matching|shift|"
                    "jones|double-wheel|series-parallel|g1|g2|g3|r-prime")
        ->required();
    gen->add_option("--k,--n,--m,--i,--g", gen_k, "size parameter");
    gen->add_option("--a,--n1", gen_a, "first size (bipartite / grid rows / r-prime)");
    gen->add_option("--b,--n2", gen_b, "second size (bipartite / grid cols / r-prime)");
    gen->add_option("-o,--output", gen_out, "output file ('-' = stdout)");
    gen->add_option("--format", gen_format, "json|dot|edges");

    // ---- decide ----
    std::string dec_in, dec_cert;
    std::uint64_t dec_budget = kDefaultBudget;
    int dec_jobs = 1;
    auto* dec = app.add_subcommand("decide", "decide membership in the contact-box class");
    dec->add_option("graph", dec_in, "graph file (json/dot/edge list, '-' = stdin)")->required();
    dec->add_option("--budget", dec_budget, "search node budget");
    dec->add_option("--jobs", dec_jobs, "parallel workers (verdict-deterministic)");
    dec->add_option("--certificate", dec_cert, "write certificate JSON here");

    // ---- check-orientation ----
    std::string chk_in, chk_cert;
    auto* chk = app.add_subcommand("check-orientation",
                                   "does a given orientation admit a homogeneous labeling?");
    chk->add_option("orientation", chk_in, "orientation file (json arcs or DOT digraph)")
        ->required();
    chk->add_option("--certificate", chk_cert, "write certificate JSON here");

    // ---- build ----
    std::string bld_kind, bld_in = "-", bld_rep_in, bld_out = "-", bld_graph_out;
    int bld_n = 0, bld_n1 = 0, bld_n2 = 0, bld_m = 0, bld_count = 2, bld_v = 0;
    std::vector<int> bld_A, bld_B;
    auto* bld = app.add_subcommand("build", "build a box representation");
    bld->add_option("construction", bld_kind,
                    "grid-2cbu|r-prime-2cbu|shift-rep|double-subdivision|outerplanar|"
                    "labeling-to-rep|twin|remove-star|bipartite-to-cbu|"
                    "subdivision-from-proper|bprime")
        ->required();
    bld->add_option("-i,--input", bld_in, "input graph / labeling certificate ('-' = stdin)");
    bld->add_option("-r,--rep", bld_rep_in, "input (intersection) representation JSON");
    bld->add_option("--n", bld_n, "grid size");
    bld->add_option("--n1", bld_n1, "rows");
    bld->add_option("--n2", bld_n2, "cols");
    bld->add_option("--m", bld_m, "shift graph order");
    bld->add_option("--count", bld_count, "subdivisions per edge (>= 2)");
    bld->add_option("--v", bld_v, "vertex (twin)");
    bld->add_option("--part-a", bld_A, "first part (repeatable)");
    bld->add_option("--part-b", bld_B, "second part (repeatable)");
    bld->add_option("-o,--output", bld_out, "output representation JSON");
    bld->add_option("--graph-out", bld_graph_out, "also write the realized graph JSON here");

    // ---- verify ----
    std::string ver_rep, ver_graph;
    auto* ver = app.add_subcommand("verify", "verify a representation against a graph");
    ver->add_option("rep", ver_rep, "representation JSON ('-' = stdin)")->required();
    ver->add_option("graph", ver_graph, "graph file")->required();

    // ---- svg ----
    std::string svg_in, svg_out = "-";
    auto* svgc = app.add_subcommand("svg", "render a 2-dimensional representation");
    svgc->add_option("rep", svg_in, "representation JSON ('-' = stdin)")->required();
    svgc->add_option("-o,--output", svg_out, "output SVG file");

    // ---- analyze ----
    std::string ana_in;
    bool ana_alpha = false, ana_chi = false, ana_chif = false, ana_girth = false;
    auto* ana = app.add_subcommand("analyze", "exact invariants");
    ana->add_option("graph", ana_in, "graph file")->required();
    ana->add_flag("--alpha", ana_alpha, "independence number");
    ana->add_flag("--chi", ana_chi, "chromatic number");
    ana->add_flag("--chif", ana_chif, "fractional chromatic number");
    ana->add_flag("--girth", ana_girth, "girth");

    // ---- selftest ----
    std::string st_level = "quick";
    std::uint64_t st_seed = 0xCB5EED;
    auto* st = app.add_subcommand("selftest", "run the built-in consistency suites");
    st->add_option("--level", st_level, "quick|full");
    st->add_option("--seed", st_seed, "seed for the randomized corpus");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) {
            Graph g = make_family(gen_family, gen_k, gen_a, gen_b);
            if (gen_format == "json")
                write_text(gen_out, graph_to_json(g).dump(2) + "\n");
            else if (gen_format == "dot")
                write_text(gen_out, graph_to_dot(g));
            else if (gen_format == "edges")
                write_text(gen_out, graph_to_edge_list(g));
            else
                throw CLI::ValidationError("unknown format");
            return 0;
        }

        if (*dec) {
            Graph g = load_graph(dec_in);
            auto cert = decide_cbu(g, dec_budget, dec_jobs);
            if (!dec_cert.empty())
                write_text(dec_cert, decide_certificate_to_json(cert, g).dump(2) + "\n");
            switch (cert.verdict) {
                case Verdict::Member:
                    log_info("member (labeling witness found, " +
                             std::to_string(cert.stats.nodes) + " nodes)");
                    std::cout << "member\n";
                    return 0;
                case Verdict::NonMember:
                    if (cert.triangle) {
                        auto t = *cert.triangle;
                        log_info("non-member: triangle " + std::to_string(t[0]) + "," +
                                 std::to_string(t[1]) + "," + std::to_string(t[2]));
                    } else {
                        log_info("non-member: all orientations exhausted (" +
                                 std::to_string(cert.stats.nodes) + " nodes)");
                    }
                    std::cout << "non-member\n";
                    return 1;
                case Verdict::BudgetExhausted:
                    log_info("inconclusive: budget exhausted");
                    std::cout << "budget-exhausted\n";
                    return 3;
            }
        }

        if (*chk) {
            std::string text = read_text(chk_in);
            Orientation o = [&] {
                auto first = text.find_first_not_of(" \t\r\n");
                if (first != std::string::npos && text[first] == '{')
                    return orientation_from_json(Json::parse(text));
                auto dot = parse_dot(text);
                if (!dot.orientation)
                    throw std::invalid_argument("check-orientation: DOT input must be a digraph");
                return *dot.orientation;
            }();
            auto res = solve_labeling(o);
            if (auto* lab = std::get_if<ArcLabeling>(&res)) {
                if (!chk_cert.empty())
                    write_text(chk_cert, labeling_to_json(*lab).dump(2) + "\n");
                std::cout << "labelable\n";
                return 0;
            }
            Json cert;
            if (auto bad = find_bad_cycle(o))
                cert = bad_cycle_to_json(*bad);
            else
                cert = slot_cycle_to_json(std::get<SlotClassCycle>(res));
            if (!chk_cert.empty()) write_text(chk_cert, cert.dump(2) + "\n");
            log_info("not labelable: " + cert["kind"].get<std::string>());
            std::cout << "not-labelable\n";
            return 1;
        }

        if (*bld) {
            BoxRepresentation rep;
            std::optional<Graph> realized;
            if (bld_kind == "grid-2cbu") {
                int n1 = bld_n1, n2 = bld_n2;
                if (bld_n > 0) n1 = n2 = bld_n;
                if (n1 == 0) {
                    Graph g = load_graph(bld_in);
                    int s = 1;
                    while (s * s < g.n()) ++s;
                    if (s * s != g.n() || !(grid_graph(s) == g))
                        throw std::invalid_argument("grid-2cbu: input is not a square grid graph");
                    n1 = n2 = s;
                }
                rep = grid_2cbu(n1, n2);
                realized = grid_graph(n1, n2);
            } else if (bld_kind == "r-prime-2cbu") {
                auto r = r_prime_2cbu(bld_n1, bld_n2);
                rep = r.rep;
                realized = r.graph;
            } else if (bld_kind == "shift-rep") {
                rep = shift_graph_representation(bld_m > 0 ? bld_m : bld_n);
                realized = shift_graph(bld_m > 0 ? bld_m : bld_n);
            } else if (bld_kind == "double-subdivision") {
                Graph g = load_graph(bld_in);
                auto r = double_subdivision_to_3cbu(g, std::vector<int>(g.m(), bld_count));
                rep = r.rep;
                realized = r.graph;
            } else if (bld_kind == "outerplanar") {
                Graph g = load_graph(bld_in);
                rep = outerplanar_2cbu(g);
                realized = g;
            } else if (bld_kind == "labeling-to-rep") {
                auto lab = labeling_from_json(Json::parse(read_text(bld_in)));
                rep = labeling_to_representation(lab.orientation.graph(), lab);
                realized = lab.orientation.graph();
            } else if (bld_kind == "twin") {
                rep = twin_representation(representation_from_json(Json::parse(read_text(bld_rep_in))),
                                          bld_v);
            } else if (bld_kind == "remove-star") {
                auto r = representation_from_json(Json::parse(read_text(bld_rep_in)));
                rep = remove_bipartite_edges(r, bld_A, bld_B);
            } else if (bld_kind == "bipartite-to-cbu") {
                auto rj = Json::parse(read_text(bld_rep_in));
                IntersectionRepresentation ir;
                auto br = representation_from_json(rj);
                ir.d = br.d;
                ir.boxes = br.boxes;
                rep = bipartite_to_cbu(ir, bld_A, bld_B);
                realized = intersection_graph(ir);
            } else if (bld_kind == "subdivision-from-proper") {
                auto rj = Json::parse(read_text(bld_rep_in));
                IntersectionRepresentation ir;
                auto br = representation_from_json(rj);
                ir.d = br.d;
                ir.boxes = br.boxes;
                auto r = subdivision_from_proper(ir, load_graph(bld_in));
                rep = r.rep;
                realized = r.graph;
            } else if (bld_kind == "bprime") {
                auto rj = Json::parse(read_text(bld_rep_in));
                IntersectionRepresentation ir;
                auto br = representation_from_json(rj);
                ir.d = br.d;
                ir.boxes = br.boxes;
                auto r = bprime_construction(load_graph(bld_in), bld_A, bld_B, ir);
                rep = r.rep;
                realized = r.bprime;
            } else {
                throw CLI::ValidationError("unknown construction '" + bld_kind + "'");
            }
            if (realized) {
                auto report = verify_representation(rep, *realized);
                if (!report.ok) {
                    std::cerr << "construction failed verification:\n" << report.summary();
                    return 1;
                }
                log_info("built and verified (d = " + std::to_string(rep.d) + ", n = " +
                         std::to_string(rep.n()) + ")");
                if (!bld_graph_out.empty())
                    write_text(bld_graph_out, graph_to_json(*realized).dump(2) + "\n");
            }
            write_text(bld_out, representation_to_json(rep).dump(2) + "\n");
            return 0;
        }

        if (*ver) {
            auto rep = representation_from_json(Json::parse(read_text(ver_rep)));
            Graph g = load_graph(ver_graph);
            auto report = verify_representation(rep, g);
            if (report.ok) {
                std::cout << "ok\n";
                return 0;
            }
            std::cout << report.summary();
            return 1;
        }

        if (*svgc) {
            auto rep = representation_from_json(Json::parse(read_text(svg_in)));
            write_text(svg_out, svg_representation(rep));
            return 0;
        }

        if (*ana) {
            Graph g = load_graph(ana_in);
            bool all = !ana_alpha && !ana_chi && !ana_chif && !ana_girth;
            Json j;
            j["n"] = g.n();
            j["m"] = g.m();
            if (all || ana_alpha) {
                auto a = independence_number(g);
                j["alpha"] = a.size;
                j["alpha_witness"] = a.witness;
            }
            if (all || ana_chi) j["chi"] = chromatic_number(g);
            if (all || ana_chif) {
                auto fc = fractional_chromatic_number(g);
                j["chi_f"] = rational_to_string(fc.value);
            }
            if (all || ana_girth) {
                auto gi = girth(g);
                if (gi)
                    j["girth"] = *gi;
                else
                    j["girth"] = nullptr;
            }
            write_text("-", j.dump(2) + "\n");
            return 0;
        }

        if (*st) return run_selftest(st_level, st_seed);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

namespace {

int run_selftest(const std::string& level, std::uint64_t seed) {
    using namespace cbu;
    bool full = level == "full";
    int failures = 0;
    auto report = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
        if (!ok) ++failures;
    };

    // oracle equivalence on all connected graphs up to isomorphism
    {
        int nmax = full ? 6 : 5;
        bool ok = true;
        for (int n = 2; n <= nmax && ok; ++n) {
            std::set<std::uint64_t> seen;
            int slots = n * (n - 1) / 2;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots) && ok; ++mask) {
                Graph g = graph_from_mask(n, mask);
                if (!is_connected(g)) continue;
                if (!seen.insert(canonical_mask(g)).second) continue;
                for (std::uint64_t d = 0; d < (std::uint64_t{1} << g.m()) && ok; ++d) {
                    std::vector<bool> dir(g.m());
                    for (int e = 0; e < g.m(); ++e) dir[e] = d >> e & 1;
                    Orientation o(g, dir);
                    bool feas = labelable(o);
                    if (feas == find_bad_cycle(o).has_value()) ok = false;
                    if (feas && has_quasi_cycle(o)) ok = false;
                }
            }
        }
        report("oracle equivalence (labelable <=> no badly oriented cycle), n <= " +
                   std::to_string(nmax),
               ok);
    }

    // constructors at reduced scale
    {
        bool ok = true;
        for (int n = 1; n <= (full ? 6 : 4); ++n)
            ok = ok && verify_representation(grid_2cbu(n), grid_graph(n)).ok;
        for (int m = 2; m <= (full ? 6 : 5); ++m)
            ok = ok && verify_representation(shift_graph_representation(m), shift_graph(m)).ok;
        for (auto& g : {complete_graph(3), complete_bipartite(2, 2)}) {
            auto r = double_subdivision_to_3cbu(g, std::vector<int>(g.m(), 2));
            ok = ok && verify_representation(r.rep, r.graph).ok;
        }
        ok = ok && verify_representation(outerplanar_2cbu(cycle_graph(5)), cycle_graph(5)).ok;
        report("constructor verification (grid / shift / double subdivision / outerplanar)", ok);
    }

    // seeded random corpus: members have verified representations and bounds
    {
        std::mt19937_64 rng(seed);
        bool ok = true;
        int members = 0;
        for (int t = 0; t < (full ? 60 : 25); ++t) {
            std::uniform_int_distribution<int> dn(2, 7);
            int n = dn(rng);
            std::uniform_int_distribution<std::uint64_t> dm(
                0, (std::uint64_t{1} << (n * (n - 1) / 2)) - 1);
            Graph g = graph_from_mask(n, dm(rng));
            auto cert = decide_cbu(g);
            if (cert.verdict != Verdict::Member) continue;
            ++members;
            ok = ok && is_homogeneous(*cert.witness);
            auto rep = labeling_to_representation(g, *cert.witness);
            ok = ok && verify_representation(rep, g).ok && rep.d <= 2 * g.n() - 1;
            auto fc = fractional_chromatic_number(g);
            ok = ok && fc.value < 4;
            ok = ok && 4 * independence_number(g).size > g.n();
        }
        report("random corpus (seed " + std::to_string(seed) + ", " + std::to_string(members) +
                   " members): witnesses, representations, bounds",
               ok);
    }

    if (full) {
        auto cert = decide_cbu(g3());
        report("planar girth-4 witness graph is a non-member (exhaustive search)",
               cert.verdict == Verdict::NonMember);
        bool found = false;
        Graph g = g3();
        auto cycles = all_cycles(g, g.n());
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.m()) && !found; ++mask) {
            std::vector<bool> dir(g.m());
            for (int e = 0; e < g.m(); ++e) dir[e] = mask >> e & 1;
            Orientation o(g, dir);
            if (!is_acyclic_orientation(o)) continue;
            bool quasi = false;
            for (auto& c : cycles)
                if (is_quasi_cycle(o, c)) { quasi = true; break; }
            found = !quasi;
        }
        report("the same graph is a cover graph (acyclic quasi-cycle-free orientation)", found);
    }

    std::cout << (failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace
