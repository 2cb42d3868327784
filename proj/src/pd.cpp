#include "edgeideals/pd.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace edgeideals {

namespace {

struct PdContext {
    int nvars = 0;
    const SplitPolicy* policy = nullptr; // null: smallest-index default
    bool memoize = true;
    std::map<std::string, int> memo;
    std::vector<PdStep>* trace = nullptr;
};

std::vector<Edge> remove_vertices(const std::vector<Edge>& edges, const std::set<int>& drop) {
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (const auto& e : edges)
        if (!drop.count(e.first) && !drop.count(e.second)) out.push_back(e);
    return out;
}

int pd_edges(const std::vector<Edge>& edges, int depth, PdContext& ctx);

int pd_component(const std::vector<Edge>& edges, int depth, PdContext& ctx) {
    std::string code;
    if (ctx.memoize) {
        code = detail::canonical_component_code(ctx.nvars, edges);
        auto it = ctx.memo.find(code);
        if (it != ctx.memo.end()) {
            if (ctx.trace)
                ctx.trace->push_back({PdStepKind::Memoized, depth, -1, 0, 0, 0, it->second});
            return it->second;
        }
    }

    int value;
    if (edges.size() == 1) {
        value = 1;
        if (ctx.trace)
            ctx.trace->push_back({PdStepKind::SingleEdge, depth, -1, 0, 0, 0, 1});
    } else {
        SplitChoice choice = ctx.policy ? (*ctx.policy)(ctx.nvars, edges)
                                        : detail::split_in_component(ctx.nvars, edges);
        int n = static_cast<int>(choice.neighbors.size());
        // T' drops the first leaf neighbor; T'' drops the closed neighborhood.
        int leaf = choice.neighbors.front();
        auto minus_leaf = remove_vertices(edges, {leaf});
        std::set<int> closed(choice.neighbors.begin(), choice.neighbors.end());
        closed.insert(choice.vertex);
        auto minus_star = remove_vertices(edges, closed);

        size_t mark = ctx.trace ? ctx.trace->size() : 0;
        if (ctx.trace) ctx.trace->push_back({PdStepKind::Split, depth, choice.vertex, n, 0, 0, 0});
        int a = pd_edges(minus_leaf, depth + 1, ctx);
        int b = pd_edges(minus_star, depth + 1, ctx);
        value = std::max(a, b + n);
        if (ctx.trace) {
            (*ctx.trace)[mark].pd_minus_leaf = a;
            (*ctx.trace)[mark].pd_minus_star = b;
            (*ctx.trace)[mark].value = value;
        }
    }
    if (ctx.memoize) ctx.memo[code] = value;
    return value;
}

int pd_edges(const std::vector<Edge>& edges, int depth, PdContext& ctx) {
    if (edges.empty()) return 0;
    auto comps = detail::edge_components(edges);
    if (comps.size() == 1) return pd_component(comps.front(), depth, ctx);
    size_t mark = ctx.trace ? ctx.trace->size() : 0;
    if (ctx.trace) ctx.trace->push_back({PdStepKind::ComponentSum, depth, -1, 0, 0, 0, 0});
    int total = 0;
    for (const auto& comp : comps) total += pd_component(comp, depth + 1, ctx);
    if (ctx.trace) (*ctx.trace)[mark].value = total;
    return total;
}

PdResult run_pd(const Forest& f, const SplitPolicy* policy, bool memoize) {
    PdContext ctx;
    ctx.nvars = f.n;
    ctx.policy = policy;
    ctx.memoize = memoize;
    PdResult result;
    ctx.trace = &result.trace;
    result.value = pd_edges(f.edges, 0, ctx);
    return result;
}

} // namespace

PdResult pd_forest(const Forest& f) { return run_pd(f, nullptr, true); }

PdResult pd_forest(const Forest& f, const SplitPolicy& policy) {
    return run_pd(f, &policy, false);
}

int pd_line(int r) {
    if (r < 2) throw DomainError("line graph needs at least two vertices");
    int s = r / 3;
    switch (r % 3) {
        case 0:
        case 1: return 2 * s;
        default: return 2 * s + 1;
    }
}

int pd_double_star(int r, int s) {
    if (r < 0 || s < 0 || r + s < 1) throw DomainError("invalid double star sizes");
    return std::max(r, s) + 1;
}

} // namespace edgeideals
