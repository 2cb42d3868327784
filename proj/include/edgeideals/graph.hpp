#pragma once

#include <string>
#include <utility>
#include <vector>

#include "edgeideals/errors.hpp"

namespace edgeideals {

/// Undirected edge between dense vertex indices, normalized so first < second.
using Edge = std::pair<int, int>;

/// An acyclic simple graph with named vertices. Vertices are dense indices
/// 0..n-1; labels are for I/O only. Isolated vertices are allowed; all
/// ideal-level operations ignore them. Immutable after construction.
struct Forest {
    int n = 0;
    std::vector<Edge> edges;         // sorted, unique, normalized
    std::vector<std::string> labels; // size n, unique

    bool operator==(const Forest&) const = default;
};

struct ComponentPartition {
    std::vector<int> assignment;                        // vertex -> component id
    std::vector<std::vector<Edge>> component_edge_sets; // indexed by component id
};

/// Result of splitting-vertex selection: neighbors list the leaves in index
/// order first; the at-most-one non-leaf neighbor comes last.
struct SplitChoice {
    int vertex = -1;
    std::vector<int> neighbors;
};

/// Validates and normalizes. Throws SelfLoop, DuplicateEdge, CycleDetected,
/// DomainError (bad indices or label count).
Forest build_forest(int n, std::vector<Edge> edges,
                    std::vector<std::string> labels = {});

int degree(const Forest& f, int v);

ComponentPartition components(const Forest& f);

/// True iff every edge has an endpoint of degree at most 2.
bool is_stretched(const Forest& f);

/// If some vertex has degree >= 2, returns the smallest-index vertex having
/// at least two neighbors of which all but at most one are leaves (such a
/// vertex always exists in a forest). Otherwise returns the smaller endpoint
/// of the first edge. Throws NoEdges.
SplitChoice select_splitting_vertex(const Forest& f);

/// Star with r edges: center c and leaves v1..vr.
Forest make_star(int r);

/// Path on r vertices x1..xr.
Forest make_line(int r);

/// Two adjacent centers a, b with r leaves x1..xr on a and s leaves y1..ys
/// on b.
Forest make_double_star(int r, int s);

/// One edge per line as `label1 label2`; `#` starts a comment; blank lines
/// ignored. Vertex indices are assigned in order of first appearance.
Forest parse_edge_list(const std::string& text);

std::string format_edge_list(const Forest& f);

/// Canonical isomorphism code of the forest (sorted component codes). Two
/// forests get the same code iff they are isomorphic as graphs.
std::string canonical_forest_code(const Forest& f);

namespace detail {

// Edge-set level helpers shared by the pd recursion and the certificate
// builder. Vertex ids live in a fixed ambient 0..nvars-1 universe; a
// sub-forest is just a subset of edges.

std::vector<std::vector<int>> adjacency(int nvars, const std::vector<Edge>& edges);

std::vector<std::vector<Edge>> edge_components(const std::vector<Edge>& edges);

// Splitting vertex inside a single connected component given as edges.
// Requires at least one edge.
SplitChoice split_in_component(int nvars, const std::vector<Edge>& edges);

// AHU canonical code of a connected tree given as edges.
std::string canonical_component_code(int nvars, const std::vector<Edge>& edges);

bool edges_stretched(int nvars, const std::vector<Edge>& edges);

} // namespace detail

} // namespace edgeideals
