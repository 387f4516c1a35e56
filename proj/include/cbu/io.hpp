#ifndef CBU_IO_HPP
#define CBU_IO_HPP

// Serialization: graph/orientation/certificate/representation JSON, DOT
// import/export, and the plain edge-list text format.

#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "cbu/core.hpp"
#include "cbu/geometry.hpp"
#include "cbu/labeling.hpp"
#include "cbu/recognition.hpp"

namespace cbu {

using Json = nlohmann::ordered_json;

// ---- graphs -------------------------------------------------------------------

inline Json graph_to_json(const Graph& g) {
    Json j;
    j["n"] = g.n();
    j["edges"] = Json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j;
}

inline Graph graph_from_json(const Json& j) {
    if (!j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph JSON needs fields 'n' and 'edges'");
    std::vector<Edge> edges;
    for (auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph JSON edge must be a pair");
        edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return Graph(j.at("n").get<int>(), edges);
}

inline Json orientation_to_json(const Orientation& o) {
    Json j;
    j["n"] = o.graph().n();
    j["arcs"] = Json::array();
    for (auto [t, h] : o.arcs()) j["arcs"].push_back({t, h});
    return j;
}

inline Orientation orientation_from_json(const Json& j) {
    if (!j.contains("n") || !j.contains("arcs"))
        throw std::invalid_argument("orientation JSON needs fields 'n' and 'arcs'");
    std::vector<Edge> arcs, edges;
    for (auto& a : j.at("arcs")) {
        arcs.push_back({a[0].get<int>(), a[1].get<int>()});
        edges.push_back(arcs.back());
    }
    Graph g(j.at("n").get<int>(), edges);
    return Orientation::from_arcs(g, arcs);
}

// ---- certificates ----------------------------------------------------------------

inline Json labeling_to_json(const ArcLabeling& L) {
    Json j;
    j["kind"] = "labeling";
    j["n"] = L.orientation.graph().n();
    j["arcs"] = Json::array();
    for (int e = 0; e < L.orientation.graph().m(); ++e) {
        auto [t, h] = L.orientation.arc(e);
        j["arcs"].push_back({t, h, L.label[e]});
    }
    return j;
}

inline ArcLabeling labeling_from_json(const Json& j) {
    if (j.value("kind", "") != "labeling")
        throw std::invalid_argument("not a labeling certificate");
    std::vector<Edge> arcs, edges;
    std::vector<std::int64_t> labels;
    for (auto& a : j.at("arcs")) {
        arcs.push_back({a[0].get<int>(), a[1].get<int>()});
        edges.push_back(arcs.back());
        labels.push_back(a[2].get<std::int64_t>());
    }
    Graph g(j.at("n").get<int>(), edges);
    Orientation o = Orientation::from_arcs(g, arcs);
    std::vector<std::int64_t> per_edge(g.m());
    for (std::size_t i = 0; i < arcs.size(); ++i)
        per_edge[g.edge_index(arcs[i].first, arcs[i].second)] = labels[i];
    return ArcLabeling{o, per_edge};
}

inline Json bad_cycle_to_json(const BadCycle& b) {
    Json j;
    j["kind"] = "bad-cycle";
    j["cycle"] = b.cycle.vertices;
    j["forward_through_index"] = b.forward_through_index;
    return j;
}

inline Json slot_cycle_to_json(const SlotClassCycle& c) {
    Json j;
    j["kind"] = "slot-cycle";
    j["classes"] = Json::array();
    for (auto& cls : c.classes) {
        Json one = Json::array();
        for (auto [v, is_out] : cls) one.push_back({is_out ? "out" : "in", v});
        j["classes"].push_back(one);
    }
    return j;
}

inline Json decide_certificate_to_json(const CbuCertificate& c, const Graph& g) {
    Json j;
    j["verdict"] = c.verdict == Verdict::Member
                       ? "member"
                       : c.verdict == Verdict::NonMember ? "non-member" : "budget-exhausted";
    if (c.witness) j["labeling"] = labeling_to_json(*c.witness);
    if (c.triangle) j["triangle"] = {(*c.triangle)[0], (*c.triangle)[1], (*c.triangle)[2]};
    if (c.verdict == Verdict::NonMember && !c.triangle) {
        // orientation space covered by the search
        j["orientations"] = Json::object();
        j["orientations"]["edges"] = g.m();
        j["orientations"]["symmetry"] = "first edge direction fixed";
    }
    Json s;
    s["nodes"] = c.stats.nodes;
    s["prunes"] = c.stats.prunes;
    s["leaves"] = c.stats.leaves;
    s["triangle_shortcut"] = c.stats.triangle_shortcut;
    s["budget"] = c.stats.budget;
    j["stats"] = s;
    return j;
}

// ---- representations ---------------------------------------------------------------

inline Json representation_to_json(const BoxRepresentation& r) {
    Json j;
    j["d"] = r.d;
    Json boxes = Json::object();
    for (int v = 0; v < r.n(); ++v) {
        Json b = Json::array();
        for (auto& iv : r.boxes[v].iv)
            b.push_back({rational_to_string(iv.lo), rational_to_string(iv.hi)});
        boxes[std::to_string(v)] = b;
    }
    j["boxes"] = boxes;
    return j;
}

inline BoxRepresentation representation_from_json(const Json& j) {
    BoxRepresentation r;
    r.d = j.at("d").get<int>();
    const auto& boxes = j.at("boxes");
    r.boxes.resize(boxes.size());
    for (auto it = boxes.begin(); it != boxes.end(); ++it) {
        int v = std::stoi(it.key());
        if (v < 0 || v >= static_cast<int>(boxes.size()))
            throw std::invalid_argument("representation JSON: vertex keys must be 0..n-1");
        Box b;
        for (auto& iv : it.value())
            b.iv.push_back({rational_from_string(iv[0].get<std::string>()),
                            rational_from_string(iv[1].get<std::string>())});
        r.boxes[v] = b;
    }
    return r;
}

// ---- DOT ----------------------------------------------------------------------------

inline std::string graph_to_dot(const Graph& g) {
    std::ostringstream s;
    s << "graph G {\n";
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0) s << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) s << "  " << u << " -- " << v << ";\n";
    s << "}\n";
    return s.str();
}

inline std::string orientation_to_dot(const Orientation& o) {
    std::ostringstream s;
    s << "digraph G {\n";
    for (int v = 0; v < o.graph().n(); ++v)
        if (o.graph().degree(v) == 0) s << "  " << v << ";\n";
    for (auto [t, h] : o.arcs()) s << "  " << t << " -> " << h << ";\n";
    s << "}\n";
    return s.str();
}

// Minimal DOT reader: numeric node ids, "--" or "->" edges, one statement per
// ';'.  Returns an orientation when the input is a digraph.
struct DotContent {
    Graph graph;
    std::optional<Orientation> orientation;
};

inline DotContent parse_dot(const std::string& text) {
    std::string t;
    t.reserve(text.size() + 16);
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '{' || c == '}' || c == ';' || c == '\n') {
            t += ' ';
        } else if (c == '-' && i + 1 < text.size() && (text[i + 1] == '-' || text[i + 1] == '>')) {
            t += ' ';
            t += c;
            t += text[++i];
            t += ' ';
        } else {
            t += c;
        }
    }
    std::istringstream in(t);
    std::string word;
    bool digraph = false;
    std::vector<std::string> tokens;
    while (in >> word) tokens.push_back(word);
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    auto as_int = [&](const std::string& s) {
        if (!is_int(s))
            throw std::invalid_argument("DOT parser: node ids must be nonnegative integers, got '" +
                                        s + "'");
        return std::stoi(s);
    };
    std::size_t i = 0;
    if (i < tokens.size() && (tokens[i] == "graph" || tokens[i] == "digraph")) {
        digraph = tokens[i] == "digraph";
        ++i;
        if (i < tokens.size() && !is_int(tokens[i])) ++i;  // optional graph name
    }
    std::vector<Edge> arcs;
    int maxv = -1;
    while (i < tokens.size()) {
        int u = as_int(tokens[i]);
        maxv = std::max(maxv, u);
        if (i + 2 < tokens.size() && (tokens[i + 1] == "--" || tokens[i + 1] == "->")) {
            int v = as_int(tokens[i + 2]);
            maxv = std::max(maxv, v);
            arcs.push_back({u, v});
            i += 3;
        } else {
            ++i;  // isolated vertex statement
        }
    }
    DotContent out;
    std::vector<Edge> edges(arcs);
    out.graph = Graph(maxv + 1, edges);
    if (digraph) out.orientation = Orientation::from_arcs(out.graph, arcs);
    return out;
}

// ---- edge list ------------------------------------------------------------------------

inline std::string graph_to_edge_list(const Graph& g) {
    std::ostringstream s;
    for (auto [u, v] : g.edges()) s << u << " " << v << "\n";
    return s.str();
}

inline Graph graph_from_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<Edge> edges;
    int maxv = -1;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        int u, v;
        if (ls >> u >> v) {
            edges.push_back({u, v});
            maxv = std::max({maxv, u, v});
        }
    }
    return Graph(maxv + 1, edges);
}

// ---- file helpers ----------------------------------------------------------------------

// '-' means stdin/stdout.
inline std::string read_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

inline void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << text;
}

inline bool ends_with(const std::string& s, const std::string& suf) {
    return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

// Format detection: by extension for files, by first character for stdin.
inline Graph load_graph(const std::string& path) {
    std::string text = read_text(path);
    if (ends_with(path, ".dot") || ends_with(path, ".gv")) return parse_dot(text).graph;
    if (ends_with(path, ".txt") || ends_with(path, ".edges")) return graph_from_edge_list(text);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return graph_from_json(Json::parse(text));
    if (first != std::string::npos && !isdigit(text[first])) return parse_dot(text).graph;
    return graph_from_edge_list(text);
}

}  // namespace cbu

#endif  // CBU_IO_HPP
