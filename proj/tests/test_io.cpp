#include <doctest.h>

#include <random>

#include "cbu/constructors.hpp"
#include "cbu/families.hpp"
#include "cbu/io.hpp"
#include "cbu/svg.hpp"

using namespace cbu;

TEST_CASE("graph JSON round trip on random graphs") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        int n = 1 + static_cast<int>(rng() % 8);
        Graph g = graph_from_mask(n, rng() & ((std::uint64_t{1} << (n * (n - 1) / 2)) - 1));
        Graph back = graph_from_json(Json::parse(graph_to_json(g).dump()));
        CHECK(back == g);
    }
}

TEST_CASE("orientation and labeling JSON round trips") {
    Graph c5 = cycle_graph(5);
    Orientation o = Orientation::from_arcs(c5, {{0, 1}, {1, 2}, {0, 4}, {4, 3}, {3, 2}});
    Orientation back = orientation_from_json(Json::parse(orientation_to_json(o).dump()));
    CHECK(back.graph() == c5);
    for (int e = 0; e < 5; ++e) CHECK(back.arc(e) == o.arc(e));

    auto lab = std::get<ArcLabeling>(solve_labeling(o));
    auto lab2 = labeling_from_json(Json::parse(labeling_to_json(lab).dump()));
    CHECK(lab2.orientation.graph() == c5);
    CHECK(lab2.label == lab.label);
}

TEST_CASE("representation JSON round trip keeps exact rationals") {
    // the subdivision construction produces genuinely fractional endpoints
    IntersectionRepresentation ir;
    ir.d = 2;
    auto mk = [](int a, int b, int c, int d) {
        Box x;
        x.iv = {{Rational(a), Rational(b)}, {Rational(c), Rational(d)}};
        return x;
    };
    ir.boxes = {mk(0, 2, 0, 2), mk(1, 3, 0, 2), mk(0, 3, 1, 3)};
    auto rep = subdivision_from_proper(ir, complete_graph(3)).rep;
    bool some_fraction = false;
    for (auto& b : rep.boxes)
        for (auto& iv : b.iv)
            if (denominator(iv.lo) != 1 || denominator(iv.hi) != 1) some_fraction = true;
    CHECK(some_fraction);
    auto back = representation_from_json(Json::parse(representation_to_json(rep).dump()));
    CHECK(back.d == rep.d);
    REQUIRE(back.n() == rep.n());
    for (int v = 0; v < rep.n(); ++v)
        for (int k = 0; k < rep.d; ++k) {
            CHECK(back.boxes[v].iv[k].lo == rep.boxes[v].iv[k].lo);
            CHECK(back.boxes[v].iv[k].hi == rep.boxes[v].iv[k].hi);
        }
}

TEST_CASE("malformed JSON is reported") {
    CHECK_THROWS(graph_from_json(Json::parse("{\"edges\": []}")));
    CHECK_THROWS(graph_from_json(Json::parse("{\"n\": 2, \"edges\": [[0]]}")));
    CHECK_THROWS_AS(labeling_from_json(Json::parse("{\"kind\": \"bad-cycle\"}")),
                    std::invalid_argument);
}

TEST_CASE("DOT export and import") {
    Graph g(4, {{0, 1}, {1, 2}});  // vertex 3 isolated
    auto dot = graph_to_dot(g);
    CHECK(dot.find("0 -- 1") != std::string::npos);
    CHECK(dot.find("3;") != std::string::npos);
    Graph back = parse_dot(dot).graph;
    CHECK(back == g);

    Orientation o = Orientation::from_arcs(path_graph(3), {{1, 0}, {1, 2}});
    auto content = parse_dot(orientation_to_dot(o));
    REQUIRE(content.orientation.has_value());
    CHECK(content.orientation->has_arc(1, 0));
    CHECK(content.orientation->has_arc(1, 2));
    CHECK_THROWS_AS(parse_dot("graph G { a -- b; }"), std::invalid_argument);
}

TEST_CASE("edge list round trip") {
    Graph g = jones_graph(2);
    Graph back = graph_from_edge_list(graph_to_edge_list(g));
    CHECK(back == g);
    CHECK(graph_from_edge_list("0 1\n# comment\n1 2\n").m() == 2);
}

TEST_CASE("SVG output is deterministic and rejects wrong dimensions") {
    auto rep = grid_2cbu(3);
    auto a = svg_representation(rep);
    auto b = svg_representation(rep);
    CHECK(a == b);
    CHECK(a.find("<svg") == 0);
    CHECK(a.find("<rect") != std::string::npos);
    CHECK_THROWS_AS(svg_representation(shift_graph_representation(4)), std::invalid_argument);
}

TEST_CASE("rationals with non-integral coordinates render exactly in SVG") {
    BoxRepresentation r;
    r.d = 2;
    Box a, b;
    a.iv = {{Rational(0), Rational(1, 3)}, {Rational(0), Rational(1)}};
    b.iv = {{Rational(1, 3), Rational(1)}, {Rational(0), Rational(1)}};
    r.boxes = {a, b};
    auto svg = svg_representation(r);
    CHECK(svg.find("width=\"2\"") != std::string::npos);  // 1/3 at scale 6
}
