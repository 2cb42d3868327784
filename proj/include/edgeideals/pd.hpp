#pragma once

#include <functional>
#include <vector>

#include "edgeideals/graph.hpp"

namespace edgeideals {

enum class PdStepKind { ComponentSum, SingleEdge, Split, Memoized };

struct PdStep {
    PdStepKind kind = PdStepKind::ComponentSum;
    int depth = 0;
    int vertex = -1;        // chosen splitting vertex (Split only)
    int n = 0;              // its neighbor count (Split only)
    int pd_minus_leaf = 0;  // value on the forest minus one leaf neighbor
    int pd_minus_star = 0;  // value on the forest minus the closed neighborhood
    int value = 0;
};

struct PdResult {
    int value = 0;
    std::vector<PdStep> trace;
};

/// Alternative splitting-vertex choices for the recursion; used to check that
/// the computed value does not depend on the choice.
using SplitPolicy =
    std::function<SplitChoice(int nvars, const std::vector<Edge>& component_edges)>;

/// Projective dimension of R/I(f) by the leaf-splitting recursion:
/// 0 for edgeless graphs, additive over components, and within a component
/// max{pd(T minus leaf), pd(T minus closed neighborhood) + n} at the selected
/// vertex. Component values are memoized on a canonical isomorphism code.
PdResult pd_forest(const Forest& f);

/// Same recursion with a caller-supplied splitting policy. Memoization is
/// disabled so that every recursive choice actually exercises the policy.
PdResult pd_forest(const Forest& f, const SplitPolicy& policy);

/// Closed form for the path on r vertices: 2s if r = 3s or r = 3s+1,
/// 2s+1 if r = 3s+2. Throws DomainError if r < 2.
int pd_line(int r);

/// Closed form for the double star: max{r,s} + 1. Throws DomainError unless
/// r,s >= 0 and r+s >= 1.
int pd_double_star(int r, int s);

} // namespace edgeideals
