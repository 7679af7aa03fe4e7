#include "udg/graph.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace udg {

UDGraph UDGraph::from_points(std::vector<Point> points) {
    std::sort(points.begin(), points.end(), point_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());

    UDGraph g;
    const std::size_t n = points.size();
    g.pts_ = std::move(points);
    g.adj_.assign(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (is_unit(g.pts_[i], g.pts_[j])) {
                g.adj_[i].set(j);
                g.adj_[j].set(i);
                ++g.num_edges_;
            }
        }
    }
    return g;
}

UDGraph UDGraph::from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    UDGraph g;
    g.adj_.assign(n, Bitset(n));
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop rejected");
        if (!g.adj_[u].test(v)) {
            g.adj_[u].set(v);
            g.adj_[v].set(u);
            ++g.num_edges_;
        }
    }
    return g;
}

std::size_t UDGraph::find(const Point& p) const {
    auto it = std::lower_bound(pts_.begin(), pts_.end(), p, point_less);
    if (it != pts_.end() && *it == p) return static_cast<std::size_t>(it - pts_.begin());
    return num_vertices();
}

UDGraph UDGraph::induced_subgraph(const std::vector<std::size_t>& keep) const {
    Bitset mask(num_vertices());
    for (auto i : keep) {
        if (i >= num_vertices()) throw std::invalid_argument("induced_subgraph: index out of range");
        mask.set(i);
    }
    return induced_subgraph(mask);
}

UDGraph UDGraph::induced_subgraph(const Bitset& keep) const {
    if (geometric()) {
        std::vector<Point> pts;
        keep.for_each([&](std::size_t i) { pts.push_back(pts_[i]); });
        return from_points(std::move(pts));
    }
    std::vector<std::size_t> old_ids = keep.to_indices();
    std::vector<std::size_t> newid(num_vertices(), SIZE_MAX);
    for (std::size_t k = 0; k < old_ids.size(); ++k) newid[old_ids[k]] = k;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t k = 0; k < old_ids.size(); ++k) {
        (adj_[old_ids[k]] & keep).for_each([&](std::size_t j) {
            if (newid[j] > k) edges.emplace_back(k, newid[j]);
        });
    }
    return from_edges(old_ids.size(), edges);
}

bool UDGraph::is_independent(const Bitset& s) const {
    bool ok = true;
    s.for_each([&](std::size_t i) {
        if (ok && adj_[i].intersects(s)) ok = false;
    });
    return ok;
}

bool UDGraph::is_independent(const std::vector<std::size_t>& s) const {
    Bitset b(num_vertices());
    for (auto i : s) b.set(i);
    return is_independent(b);
}

std::vector<std::pair<std::size_t, std::size_t>> UDGraph::edge_list() const {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    edges.reserve(num_edges_);
    for (std::size_t i = 0; i < num_vertices(); ++i)
        adj_[i].for_each([&](std::size_t j) {
            if (j > i) edges.emplace_back(i, j);
        });
    return edges;
}

std::uint64_t UDGraph::content_hash() const {
    std::uint64_t h = 14695981039346656037ULL;
    auto mix = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
    };
    for (const auto& p : pts_) mix(to_string(p));
    for (auto [u, v] : edge_list()) mix(std::to_string(u) + "-" + std::to_string(v));
    mix("n=" + std::to_string(num_vertices()));
    return h;
}

std::string graph_to_json(const UDGraph& g) {
    nlohmann::json j;
    j["type"] = "udg-graph";
    j["n"] = g.num_vertices();
    if (g.geometric()) {
        auto& verts = j["vertices"] = nlohmann::json::array();
        for (const auto& p : g.points()) verts.push_back({to_string(p.x), to_string(p.y)});
    }
    auto& edges = j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edge_list()) edges.push_back({u, v});
    return j.dump(1);
}

UDGraph graph_from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    if (j.contains("vertices")) {
        std::vector<Point> pts;
        for (const auto& v : j.at("vertices"))
            pts.push_back({parse_field_elem(v.at(0).get<std::string>()),
                           parse_field_elem(v.at(1).get<std::string>())});
        UDGraph g = UDGraph::from_points(std::move(pts));
        if (j.contains("edges") && j.at("edges").size() != g.num_edges())
            throw std::invalid_argument("graph JSON edge list disagrees with exact recomputation");
        return g;
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
    return UDGraph::from_edges(j.at("n").get<std::size_t>(), edges);
}

std::string graph_to_dimacs(const UDGraph& g) {
    std::ostringstream os;
    os << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edge_list()) os << "e " << u + 1 << ' ' << v + 1 << '\n';
    return os.str();
}

UDGraph graph_from_dimacs(std::istream& in) {
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::string line;
    bool have_p = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "p") {
            std::string fmt;
            std::size_t m;
            ls >> fmt >> n >> m;
            have_p = true;
        } else if (tag == "e") {
            std::size_t u, v;
            ls >> u >> v;
            if (u == 0 || v == 0) throw std::invalid_argument("DIMACS vertices are 1-based");
            edges.emplace_back(u - 1, v - 1);
        }
    }
    if (!have_p) throw std::invalid_argument("DIMACS input missing 'p edge' line");
    return UDGraph::from_edges(n, edges);
}

void save_graph(const UDGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    if (path.ends_with(".dimacs") || path.ends_with(".col"))
        out << graph_to_dimacs(g);
    else
        out << graph_to_json(g);
}

UDGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    if (path.ends_with(".dimacs") || path.ends_with(".col")) return graph_from_dimacs(in);
    std::stringstream buf;
    buf << in.rdbuf();
    return graph_from_json(buf.str());
}

std::vector<Point> parse_point_list_text(const std::string& text) {
    std::vector<Point> pts;
    std::size_t line = 1;
    std::size_t i = 0, n = text.size();
    while (i < n) {
        char c = text[i];
        if (c == '\n') { ++line; ++i; continue; }
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '.') { ++i; continue; }
        if (c == '#') {
            while (i < n && text[i] != '\n') ++i;
            continue;
        }
        if (c != '(')
            throw std::invalid_argument("line " + std::to_string(line) + ": expected '(' at start of point");
        std::size_t start = i;
        int depth = 0;
        std::size_t start_line = line;
        for (; i < n; ++i) {
            if (text[i] == '(') ++depth;
            else if (text[i] == ')') {
                if (--depth == 0) { ++i; break; }
            } else if (text[i] == '\n') ++line;
        }
        if (depth != 0)
            throw std::invalid_argument("line " + std::to_string(start_line) + ": unbalanced parentheses");
        try {
            pts.push_back(parse_point(std::string_view(text).substr(start, i - start)));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("line " + std::to_string(start_line) + ": " + e.what());
        }
    }
    return pts;
}

std::vector<Point> parse_point_list(std::istream& in) {
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_point_list_text(buf.str());
}

}  // namespace udg
