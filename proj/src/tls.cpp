#include "edgeideals/tls.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace edgeideals {

SquarefreeMonomial TlsElement::product_support() const {
    if (!right) return left;
    SquarefreeMonomial m;
    std::set_union(left.vars.begin(), left.vars.end(), right->vars.begin(), right->vars.end(),
                   std::back_inserter(m.vars));
    return m;
}

TlsElement isolated_summand(SquarefreeMonomial m) {
    TlsElement e;
    e.left = std::move(m);
    return e;
}

TlsElement summand_pair(SquarefreeMonomial left, SquarefreeMonomial right) {
    TlsElement e;
    e.left = std::move(left);
    e.right = std::move(right);
    return e;
}

TlsValidation validate_tls(const TreeLikeSystem& s) {
    auto fail = [](int pos, std::string reason) {
        return TlsValidation{false, pos, std::move(reason)};
    };
    std::set<SquarefreeMonomial> seen;
    for (int i = 0; i < s.length(); ++i) {
        const TlsElement& e = s.elements[i];
        if (e.left.vars.empty()) return fail(i, "empty left summand");
        for (int v : e.left.vars)
            if (v < 0 || v >= s.nvars) return fail(i, "variable out of range");
        if (!seen.insert(e.left).second) return fail(i, "repeated summand");
        if (e.right) {
            if (e.right->vars.empty()) return fail(i, "empty right summand");
            for (int v : e.right->vars)
                if (v < 0 || v >= s.nvars) return fail(i, "variable out of range");
            if (*e.right == e.left) return fail(i, "equal summands in one element");
            if (!seen.insert(*e.right).second) return fail(i, "repeated summand");
        }
    }
    for (int i = 0; i < s.length(); ++i) {
        const TlsElement& e = s.elements[i];
        if (e.isolated()) continue;
        SquarefreeMonomial product = e.product_support();
        bool found = false;
        for (int j = 0; j < i && !found; ++j) {
            const TlsElement& d = s.elements[j];
            if (d.left.divides(product)) found = true;
            if (!found && d.right && d.right->divides(product)) found = true;
        }
        if (!found) return fail(i, "no earlier summand divides the element's product");
    }
    return {};
}

std::vector<SquarefreeMonomial> support(const TreeLikeSystem& s) {
    std::set<SquarefreeMonomial> out;
    for (const auto& e : s.elements) {
        out.insert(e.left);
        if (e.right) out.insert(*e.right);
    }
    return {out.begin(), out.end()};
}

Forest forest_from_support(const TreeLikeSystem& s) {
    std::vector<Edge> edges;
    for (const auto& m : support(s)) {
        if (m.degree() != 2)
            throw NotForestSupport("summand " + monomial_text(m) + " is not quadratic");
        edges.push_back({m.vars[0], m.vars[1]});
    }
    try {
        return build_forest(s.nvars, std::move(edges));
    } catch (const CycleDetected&) {
        throw NotForestSupport("support graph contains a cycle");
    }
}

namespace {

// Positions of earlier elements owning a summand that divides the product of
// element i. Over a forest support there is at most one such summand.
std::vector<int> divisor_positions(const TreeLikeSystem& s, int i) {
    SquarefreeMonomial product = s.elements[i].product_support();
    std::set<SquarefreeMonomial> divisors;
    std::vector<int> positions;
    for (int j = 0; j < i; ++j) {
        const TlsElement& d = s.elements[j];
        if (d.left.divides(product) && divisors.insert(d.left).second) positions.push_back(j);
        if (d.right && d.right->divides(product) && divisors.insert(*d.right).second)
            positions.push_back(j);
    }
    return positions;
}

} // namespace

int predecessor(const TreeLikeSystem& s, int i) {
    if (i < 0 || i >= s.length()) throw DomainError("position out of range");
    if (s.elements[i].isolated()) throw IsolatedElement("element has a single summand");
    forest_from_support(s);
    auto positions = divisor_positions(s, i);
    if (positions.empty())
        throw InvalidSystem("element " + std::to_string(i) + " has no earlier divisor");
    if (positions.size() > 1)
        throw InternalError("multiple dividing summands over a forest support");
    return positions.front();
}

StrictChain strict_subtree_ending_at(const TreeLikeSystem& s, int i) {
    if (i < 0 || i >= s.length()) throw DomainError("position out of range");
    forest_from_support(s);
    StrictChain chain;
    int cur = i;
    while (true) {
        chain.positions.push_back(cur);
        if (s.elements[cur].isolated()) break;
        cur = predecessor(s, cur);
    }
    std::reverse(chain.positions.begin(), chain.positions.end());
    return chain;
}

std::vector<StrictChain> decompose_strict(const TreeLikeSystem& s) {
    forest_from_support(s);
    std::vector<int> pred(s.length(), -1);
    std::vector<int> follower(s.length(), -1);
    for (int i = 0; i < s.length(); ++i) {
        if (s.elements[i].isolated()) continue;
        int j = predecessor(s, i);
        pred[i] = j;
        if (follower[j] != -1)
            throw NotStretched("element " + std::to_string(j) + " has two followers");
        follower[j] = i;
    }
    std::vector<StrictChain> chains;
    for (int i = 0; i < s.length(); ++i) {
        if (pred[i] != -1) continue; // chain heads are exactly the isolated summands
        StrictChain c;
        for (int cur = i; cur != -1; cur = follower[cur]) c.positions.push_back(cur);
        chains.push_back(std::move(c));
    }
    return chains;
}

TreeLikeSystem restrict_to_component(const TreeLikeSystem& s, int component_id) {
    Forest f = forest_from_support(s);
    ComponentPartition part = components(f);
    if (component_id < 0 || component_id >= static_cast<int>(part.component_edge_sets.size()))
        throw DomainError("component id out of range");
    auto touches = [&](const SquarefreeMonomial& m) {
        return part.assignment[m.vars[0]] == component_id;
    };
    TreeLikeSystem out;
    out.nvars = s.nvars;
    for (const auto& e : s.elements) {
        if (touches(e.left) || (e.right && touches(*e.right))) out.elements.push_back(e);
    }
    return out;
}

TreeLikeSystem push_to_top(const TreeLikeSystem& s, const std::vector<int>& positions) {
    std::set<int> chosen(positions.begin(), positions.end());
    for (int p : positions)
        if (p < 0 || p >= s.length()) throw DomainError("position out of range");
    TreeLikeSystem sub;
    sub.nvars = s.nvars;
    for (int i = 0; i < s.length(); ++i)
        if (chosen.count(i)) sub.elements.push_back(s.elements[i]);
    if (!validate_tls(sub).ok)
        throw NotASubtree("positions do not form a tree-like subsequence");
    TreeLikeSystem out = sub;
    for (int i = 0; i < s.length(); ++i)
        if (!chosen.count(i)) out.elements.push_back(s.elements[i]);
    return out;
}

TreeLikeSystem replace_subsequence(const TreeLikeSystem& s, const std::vector<int>& positions,
                                   const TreeLikeSystem& replacement) {
    std::set<int> chosen(positions.begin(), positions.end());
    for (int p : positions)
        if (p < 0 || p >= s.length()) throw DomainError("position out of range");
    std::set<SquarefreeMonomial> removed;
    for (int p : positions) {
        removed.insert(s.elements[p].left);
        if (s.elements[p].right) removed.insert(*s.elements[p].right);
    }
    auto repl_support = support(replacement);
    if (std::vector<SquarefreeMonomial>(removed.begin(), removed.end()) != repl_support)
        throw SupportMismatch("replacement support differs from the removed summand set");
    TreeLikeSystem out;
    out.nvars = s.nvars;
    out.elements = replacement.elements;
    for (int i = 0; i < s.length(); ++i)
        if (!chosen.count(i)) out.elements.push_back(s.elements[i]);
    return out;
}

namespace {

// Variable shared by two distinct quadratic monomials, or -1.
int shared_var(const SquarefreeMonomial& a, const SquarefreeMonomial& b) {
    int found = -1;
    for (int v : a.vars)
        if (std::binary_search(b.vars.begin(), b.vars.end(), v)) {
            if (found != -1) return -2; // identical monomials
            found = v;
        }
    return found;
}

int other_var(const SquarefreeMonomial& m, int v) {
    return m.vars[0] == v ? m.vars[1] : m.vars[0];
}

bool contains_var(const SquarefreeMonomial& m, int v) {
    return std::binary_search(m.vars.begin(), m.vars.end(), v);
}

std::vector<TlsElement> invert_chain(const std::vector<SquarefreeMonomial>& a,
                                     const std::vector<SquarefreeMonomial>& b) {
    size_t r = b.size(); // a has r+1 entries a_0..a_r, b has b_1..b_r at b[i-1]
    // Base case r = 2: with a_0 = xy, x shared with a_1 = xz, arrange the last
    // pair so that x divides it on the left and z on the right, then emit
    // (a_1; a_0 + b_2; a_2 + b_1).
    int x = shared_var(a[r - 2], a[r - 1]);
    if (x < 0)
        throw PreconditionViolated("consecutive left summands share no variable");
    int y = other_var(a[r - 2], x);
    if (!contains_var(b[r - 2], y))
        throw PreconditionViolated("chain divisibility fails at the last-but-one pair");
    int z = other_var(a[r - 1], x);
    SquarefreeMonomial last_a = a[r], last_b = b[r - 1];
    if (!contains_var(last_a, x)) std::swap(last_a, last_b);
    if (!contains_var(last_a, x) || !contains_var(last_b, z))
        throw PreconditionViolated("chain divisibility fails at the last pair");

    if (r == 2)
        return {isolated_summand(a[1]), summand_pair(a[0], last_b),
                summand_pair(last_a, b[0])};

    // r > 2: the base case applied to the last three entries shows that
    // a_{r-2} divides last_a * b_{r-1}, so the chain a_0..a_{r-2}, last_a
    // with right parts b_1..b_{r-1} is again a strict chain; invert it and
    // absorb its isolated head a_{r-2} into the second element.
    std::vector<SquarefreeMonomial> a2(a.begin(), a.end() - 2);
    a2.push_back(last_a);
    std::vector<SquarefreeMonomial> b2(b.begin(), b.end() - 1);
    std::vector<TlsElement> sub = invert_chain(a2, b2);
    if (!(sub.front().isolated() && sub.front().left == a[r - 2]))
        throw InternalError("tree inversion sub-chain does not start at a_{r-2}");
    std::vector<TlsElement> out;
    out.push_back(isolated_summand(a[r - 1]));
    out.push_back(summand_pair(a[r - 2], last_b));
    out.insert(out.end(), sub.begin() + 1, sub.end());
    return out;
}

} // namespace

TreeLikeSystem tree_inversion(const std::vector<SquarefreeMonomial>& a,
                              const std::vector<SquarefreeMonomial>& b, int nvars) {
    if (a.size() < 3 || b.size() + 1 != a.size())
        throw PreconditionViolated("need a_0..a_r and b_1..b_r with r >= 2");
    std::set<SquarefreeMonomial> all;
    for (const auto& m : a) {
        if (m.degree() != 2) throw PreconditionViolated("monomials must be quadratic");
        if (!all.insert(m).second) throw PreconditionViolated("monomials must be distinct");
    }
    for (const auto& m : b) {
        if (m.degree() != 2) throw PreconditionViolated("monomials must be quadratic");
        if (!all.insert(m).second) throw PreconditionViolated("monomials must be distinct");
    }
    for (size_t i = 1; i < a.size(); ++i)
        if (!a[i - 1].divides_product(a[i], b[i - 1]))
            throw PreconditionViolated("a_" + std::to_string(i - 1) +
                                       " does not divide the next summand product");
    TreeLikeSystem out;
    out.nvars = nvars;
    out.elements = invert_chain(a, b);
    if (!validate_tls(out).ok || !is_strict(out))
        throw InternalError("tree inversion produced a non-strict system");
    return out;
}

bool is_strict(const TreeLikeSystem& s) {
    if (s.elements.empty()) return false;
    if (!s.elements[0].isolated()) return false;
    for (int i = 1; i < s.length(); ++i) {
        if (s.elements[i].isolated()) return false;
        if (!s.elements[i - 1].left.divides(s.elements[i].product_support())) return false;
    }
    return true;
}

std::string render_text(const TreeLikeSystem& s, const std::vector<std::string>& labels) {
    std::string out;
    for (const auto& e : s.elements) {
        out += monomial_text(e.left, labels);
        if (e.right) {
            out += " + ";
            out += monomial_text(*e.right, labels);
        }
        out += '\n';
    }
    return out;
}

} // namespace edgeideals
