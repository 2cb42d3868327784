#include "edgeideals/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace edgeideals {

namespace detail {

std::vector<std::vector<int>> adjacency(int nvars, const std::vector<Edge>& edges) {
    std::vector<std::vector<int>> adj(nvars);
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    return adj;
}

std::vector<std::vector<Edge>> edge_components(const std::vector<Edge>& edges) {
    // Union-find over the vertices that actually appear.
    std::map<int, int> parent;
    std::function<int(int)> find = [&](int x) {
        auto it = parent.find(x);
        if (it == parent.end()) {
            parent[x] = x;
            return x;
        }
        if (it->second == x) return x;
        int r = find(it->second);
        parent[x] = r;
        return r;
    };
    for (const auto& [u, v] : edges) parent[find(u)] = find(v);

    std::map<int, std::vector<Edge>> buckets;
    for (const auto& e : edges) buckets[find(e.first)].push_back(e);
    std::vector<std::vector<Edge>> out;
    out.reserve(buckets.size());
    for (auto& [root, es] : buckets) out.push_back(std::move(es));
    // Deterministic order: by smallest vertex of the component.
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.front() < b.front();
    });
    return out;
}

bool edges_stretched(int nvars, const std::vector<Edge>& edges) {
    std::vector<int> deg(nvars, 0);
    for (const auto& [u, v] : edges) {
        deg[u]++;
        deg[v]++;
    }
    for (const auto& [u, v] : edges)
        if (deg[u] > 2 && deg[v] > 2) return false;
    return true;
}

SplitChoice split_in_component(int nvars, const std::vector<Edge>& edges) {
    if (edges.empty()) throw NoEdges("split_in_component on empty edge set");
    auto adj = adjacency(nvars, edges);

    // Candidates per Jacques-Katzman: >= 2 neighbors, all but at most one of
    // degree 1. Ties break to the smallest vertex index.
    for (int v = 0; v < nvars; ++v) {
        if (adj[v].size() < 2) continue;
        int non_leaves = 0;
        for (int w : adj[v])
            if (adj[w].size() > 1) non_leaves++;
        if (non_leaves <= 1) {
            SplitChoice c;
            c.vertex = v;
            for (int w : adj[v])
                if (adj[w].size() == 1) c.neighbors.push_back(w);
            for (int w : adj[v])
                if (adj[w].size() > 1) c.neighbors.push_back(w);
            return c;
        }
    }
    // No vertex of degree >= 2 anywhere in this edge set: a matching.
    bool all_deg_le_1 = true;
    for (int v = 0; v < nvars && all_deg_le_1; ++v)
        if (adj[v].size() > 1) all_deg_le_1 = false;
    if (!all_deg_le_1)
        throw InternalError("no splitting vertex found in a forest with max degree >= 2");
    SplitChoice c;
    c.vertex = edges.front().first;
    c.neighbors.push_back(edges.front().second);
    return c;
}

namespace {

std::string ahu_code(int v, int parent, const std::vector<std::vector<int>>& adj) {
    std::vector<std::string> child_codes;
    for (int w : adj[v])
        if (w != parent) child_codes.push_back(ahu_code(w, v, adj));
    std::sort(child_codes.begin(), child_codes.end());
    std::string code = "(";
    for (const auto& c : child_codes) code += c;
    code += ")";
    return code;
}

} // namespace

std::string canonical_component_code(int nvars, const std::vector<Edge>& edges) {
    if (edges.empty()) return "()";
    auto adj = adjacency(nvars, edges);
    // Find the tree centers by peeling leaves.
    std::vector<int> verts;
    for (const auto& [u, v] : edges) {
        verts.push_back(u);
        verts.push_back(v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

    std::map<int, int> deg;
    for (int v : verts) deg[v] = static_cast<int>(adj[v].size());
    std::vector<int> layer;
    for (int v : verts)
        if (deg[v] <= 1) layer.push_back(v);
    int remaining = static_cast<int>(verts.size());
    std::set<int> removed;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed.insert(v);
            remaining--;
            for (int w : adj[v]) {
                if (removed.count(w)) continue;
                if (--deg[w] == 1) next.push_back(w);
            }
        }
        layer = std::move(next);
    }
    std::vector<int> centers;
    for (int v : verts)
        if (!removed.count(v)) centers.push_back(v);

    std::string best;
    for (int c : centers) {
        std::string code = ahu_code(c, -1, adj);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

} // namespace detail

Forest build_forest(int n, std::vector<Edge> edges, std::vector<std::string> labels) {
    if (n < 0) throw DomainError("vertex count must be nonnegative");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw DomainError("edge endpoint out of range");
        if (u == v) throw SelfLoop("edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    for (size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1])
            throw DuplicateEdge("edge (" + std::to_string(edges[i].first) + "," +
                                std::to_string(edges[i].second) + ")");

    // Acyclicity by union-find.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [u, v] : edges) {
        int ru = find(u), rv = find(v);
        if (ru == rv)
            throw CycleDetected("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") closes a cycle");
        parent[ru] = rv;
    }

    if (labels.empty()) {
        labels.reserve(n);
        for (int i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
    }
    if (static_cast<int>(labels.size()) != n)
        throw DomainError("label count does not match vertex count");
    {
        std::set<std::string> seen;
        for (const auto& l : labels)
            if (!seen.insert(l).second) throw DomainError("duplicate label: " + l);
    }

    Forest f;
    f.n = n;
    f.edges = std::move(edges);
    f.labels = std::move(labels);
    return f;
}

int degree(const Forest& f, int v) {
    if (v < 0 || v >= f.n) throw DomainError("vertex out of range");
    int d = 0;
    for (const auto& [a, b] : f.edges)
        if (a == v || b == v) d++;
    return d;
}

ComponentPartition components(const Forest& f) {
    std::vector<int> parent(f.n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [u, v] : f.edges) parent[find(u)] = find(v);

    ComponentPartition part;
    part.assignment.assign(f.n, -1);
    std::map<int, int> root_to_id;
    for (int v = 0; v < f.n; ++v) {
        int r = find(v);
        auto [it, inserted] = root_to_id.try_emplace(r, static_cast<int>(root_to_id.size()));
        part.assignment[v] = it->second;
    }
    part.component_edge_sets.assign(root_to_id.size(), {});
    for (const auto& e : f.edges)
        part.component_edge_sets[part.assignment[e.first]].push_back(e);
    return part;
}

bool is_stretched(const Forest& f) {
    return detail::edges_stretched(f.n, f.edges);
}

SplitChoice select_splitting_vertex(const Forest& f) {
    if (f.edges.empty()) throw NoEdges("forest has no edges");
    return detail::split_in_component(f.n, f.edges);
}

Forest make_star(int r) {
    if (r < 1) throw DomainError("star needs at least one edge");
    std::vector<Edge> edges;
    std::vector<std::string> labels{"c"};
    for (int i = 1; i <= r; ++i) {
        edges.push_back({0, i});
        labels.push_back("v" + std::to_string(i));
    }
    return build_forest(r + 1, std::move(edges), std::move(labels));
}

Forest make_line(int r) {
    if (r < 2) throw DomainError("line graph needs at least two vertices");
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (int i = 0; i < r; ++i) labels.push_back("x" + std::to_string(i + 1));
    for (int i = 0; i + 1 < r; ++i) edges.push_back({i, i + 1});
    return build_forest(r, std::move(edges), std::move(labels));
}

Forest make_double_star(int r, int s) {
    if (r < 0 || s < 0) throw DomainError("double star sizes must be nonnegative");
    if (r + s < 1) throw DomainError("double star needs at least one leaf");
    std::vector<Edge> edges{{0, 1}};
    std::vector<std::string> labels{"a", "b"};
    int next = 2;
    for (int i = 1; i <= r; ++i, ++next) {
        edges.push_back({0, next});
        labels.push_back("x" + std::to_string(i));
    }
    for (int i = 1; i <= s; ++i, ++next) {
        edges.push_back({1, next});
        labels.push_back("y" + std::to_string(i));
    }
    return build_forest(2 + r + s, std::move(edges), std::move(labels));
}

Forest parse_edge_list(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> raw;
    std::map<std::string, int> index_of;
    std::vector<std::string> labels;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue; // blank
        if (!(ls >> b))
            throw ParseError("line " + std::to_string(lineno) + ": expected two labels");
        if (ls >> extra)
            throw ParseError("line " + std::to_string(lineno) + ": trailing token '" + extra + "'");
        raw.push_back({a, b});
        for (const auto& l : {a, b}) {
            if (!index_of.count(l)) {
                index_of[l] = static_cast<int>(labels.size());
                labels.push_back(l);
            }
        }
    }
    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (const auto& [a, b] : raw) edges.push_back({index_of[a], index_of[b]});
    return build_forest(static_cast<int>(labels.size()), std::move(edges), std::move(labels));
}

std::string format_edge_list(const Forest& f) {
    std::string out;
    for (const auto& [u, v] : f.edges) {
        out += f.labels[u];
        out += ' ';
        out += f.labels[v];
        out += '\n';
    }
    return out;
}

std::string canonical_forest_code(const Forest& f) {
    std::vector<std::string> codes;
    for (const auto& comp : detail::edge_components(f.edges))
        codes.push_back(detail::canonical_component_code(f.n, comp));
    int isolated = f.n;
    for (const auto& comp : detail::edge_components(f.edges)) {
        std::set<int> verts;
        for (const auto& [u, v] : comp) {
            verts.insert(u);
            verts.insert(v);
        }
        isolated -= static_cast<int>(verts.size());
    }
    for (int i = 0; i < isolated; ++i) codes.push_back(".");
    std::sort(codes.begin(), codes.end());
    std::string out;
    for (const auto& c : codes) out += c;
    return out;
}

} // namespace edgeideals
