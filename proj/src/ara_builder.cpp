#include "edgeideals/ara_builder.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace edgeideals {

const char* to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::Matching: return "Matching";
        case CaseTag::StarComponent: return "StarComponent";
        case CaseTag::Case1: return "Case1";
        case CaseTag::Case2_1: return "Case2.1";
        case CaseTag::Case2_2_1: return "Case2.2.1";
        case CaseTag::Case2_2_2: return "Case2.2.2";
        case CaseTag::Case3_1a: return "Case3.1a";
        case CaseTag::Case3_1b: return "Case3.1b";
        case CaseTag::Case3_2: return "Case3.2";
        case CaseTag::NBig: return "NBig";
    }
    return "?";
}

namespace {

using detail::edge_components;
using detail::split_in_component;

SquarefreeMonomial vertex_pair(int u, int v) {
    return SquarefreeMonomial::of({u, v});
}

struct BuildState {
    int nvars = 0;
    std::vector<CaseLogEntry>* log = nullptr;

    void note(CaseTag tag, std::string detail) {
        if (log) log->push_back({tag, std::move(detail)});
    }
};

std::vector<TlsElement> build_edges(const std::vector<Edge>& edges, BuildState& st);

int pd_of(int nvars, const std::vector<Edge>& edges) {
    return pd_forest(build_forest(nvars, edges)).value;
}

std::vector<Edge> remove_vertices(const std::vector<Edge>& edges, const std::set<int>& drop) {
    std::vector<Edge> out;
    for (const auto& e : edges)
        if (!drop.count(e.first) && !drop.count(e.second)) out.push_back(e);
    return out;
}

TreeLikeSystem as_system(std::vector<TlsElement> elements, int nvars) {
    TreeLikeSystem s;
    s.nvars = nvars;
    s.elements = std::move(elements);
    return s;
}

int position_of_summand(const std::vector<TlsElement>& elems, const SquarefreeMonomial& m) {
    for (size_t i = 0; i < elems.size(); ++i) {
        if (elems[i].left == m) return static_cast<int>(i);
        if (elems[i].right && *elems[i].right == m) return static_cast<int>(i);
    }
    return -1;
}

SquarefreeMonomial partner_of(const TlsElement& e, const SquarefreeMonomial& m) {
    if (e.isolated()) throw InternalError("isolated element has no partner summand");
    return e.left == m ? *e.right : e.left;
}

// Reorders a valid-up-to-order system into chain-concatenation order. Each
// pair element has a unique dividing summand over a stretched forest
// support, so the chain structure is independent of element order.
std::vector<TlsElement> canonicalize_chains(const std::vector<TlsElement>& elems, int nvars) {
    int n = static_cast<int>(elems.size());
    std::vector<int> owner(n, -1), follower(n, -1);
    for (int i = 0; i < n; ++i) {
        if (elems[i].isolated()) continue;
        SquarefreeMonomial product = elems[i].product_support();
        int found = -1;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            bool divides = elems[j].left.divides(product) ||
                           (elems[j].right && elems[j].right->divides(product));
            if (!divides) continue;
            if (found != -1) throw InternalError("ambiguous chain predecessor");
            found = j;
        }
        if (found == -1) throw InternalError("pair element with no chain predecessor");
        owner[i] = found;
        if (follower[found] != -1) throw InternalError("chain element with two followers");
        follower[found] = i;
    }
    std::vector<TlsElement> out;
    int emitted = 0;
    for (int i = 0; i < n; ++i) {
        if (owner[i] != -1) continue;
        if (!elems[i].isolated()) throw InternalError("chain head is not isolated");
        for (int cur = i; cur != -1; cur = follower[cur]) {
            out.push_back(elems[cur]);
            emitted++;
        }
    }
    if (emitted != n) throw InternalError("chain decomposition missed elements");
    TlsValidation v = validate_tls(as_system(out, nvars));
    if (!v.ok) throw InternalError("canonicalized system is invalid: " + v.reason);
    return out;
}

void ensure_valid(std::vector<TlsElement>& elems, int nvars) {
    if (validate_tls(as_system(elems, nvars)).ok) return;
    elems = canonicalize_chains(elems, nvars);
}

// Designated (a, b) lists of a strict chain for tree inversion. For inner
// elements the left role is forced: it is the summand dividing the next
// element's product. The caller fixes the designation of the last element.
void chain_designations(const std::vector<TlsElement>& elems, const std::vector<int>& chain,
                        const SquarefreeMonomial& last_a,
                        std::vector<SquarefreeMonomial>& a, std::vector<SquarefreeMonomial>& b) {
    int r = static_cast<int>(chain.size()) - 1;
    a.assign(r + 1, {});
    b.assign(r, {});
    a[0] = elems[chain[0]].left;
    for (int k = 1; k < r; ++k) {
        SquarefreeMonomial next_product = elems[chain[k + 1]].product_support();
        const TlsElement& e = elems[chain[k]];
        if (e.left.divides(next_product)) {
            a[k] = e.left;
            b[k - 1] = *e.right;
        } else if (e.right && e.right->divides(next_product)) {
            a[k] = *e.right;
            b[k - 1] = e.left;
        } else {
            throw InternalError("chain element does not divide its follower");
        }
    }
    const TlsElement& last = elems[chain[r]];
    a[r] = last_a;
    b[r - 1] = partner_of(last, last_a);
    if (r >= 1) b[r - 1 - 1 + 1] = b[r - 1]; // no-op, keeps indices explicit
}

// Inverts the strict chain ending at `end_pos`, designating the last
// element's left summand as `last_a`, and splices the inverted block to the
// front. The block's new head is the left summand of the old predecessor.
std::vector<TlsElement> invert_and_replace(const std::vector<TlsElement>& elems, int nvars,
                                           int end_pos, const SquarefreeMonomial& last_a) {
    TreeLikeSystem sys = as_system(elems, nvars);
    StrictChain chain = strict_subtree_ending_at(sys, end_pos);
    if (chain.positions.size() < 3)
        throw InternalError("tree inversion needs a chain of at least three elements");
    std::vector<SquarefreeMonomial> a, b;
    chain_designations(elems, chain.positions, last_a, a, b);
    TreeLikeSystem inverted = tree_inversion(a, b, nvars);
    TreeLikeSystem out = replace_subsequence(sys, chain.positions, inverted);
    return out.elements;
}

std::vector<SquarefreeMonomial> edge_monomials(const std::vector<Edge>& edges) {
    std::vector<SquarefreeMonomial> out;
    out.reserve(edges.size());
    for (const auto& e : edges) out.push_back(edge_monomial(e));
    std::sort(out.begin(), out.end());
    return out;
}

// The n = 2 branch of the auxiliary claim: T splits at v with leaf v1 and
// second neighbor v2 of degree >= 2; the system for T' = T - v1 is reworked
// until vv1 can be paired with an isolated v2w edge monomial.
std::vector<TlsElement> build_n2(int v, int v1, int v2, const std::vector<int>& ws,
                                 const std::vector<Edge>& comp, BuildState& st);

std::vector<TlsElement> build_component(const std::vector<Edge>& comp, BuildState& st) {
    if (comp.size() == 1) {
        st.note(CaseTag::Matching, "single-edge component (" + std::to_string(comp[0].first) +
                                       "," + std::to_string(comp[0].second) + ")");
        return {isolated_summand(edge_monomial(comp[0]))};
    }
    SplitChoice split = split_in_component(st.nvars, comp);
    auto adj = detail::adjacency(st.nvars, comp);
    int v = split.vertex;
    int n = static_cast<int>(split.neighbors.size());
    int vn = split.neighbors.back();

    if (adj[vn].size() == 1) {
        // All neighbors are leaves: the component is the star S_n.
        st.note(CaseTag::StarComponent, "star at vertex " + std::to_string(v) + " with " +
                                            std::to_string(n) + " edges");
        std::vector<TlsElement> out;
        for (int leaf : split.neighbors) out.push_back(isolated_summand(vertex_pair(v, leaf)));
        return out;
    }

    std::vector<int> ws;
    for (int w : adj[vn])
        if (w != v) ws.push_back(w);
    int m = static_cast<int>(ws.size());

    if (n >= 3) {
        if (m != 1)
            throw InternalError("stretched split with n >= 3 must have m = 1");
        // Prefix vv_n; vv_1 + v_n w_1; vv_2; ...; vv_{n-1}, then the rest of
        // the forest beyond the closed neighborhood of v.
        std::vector<TlsElement> out;
        out.push_back(isolated_summand(vertex_pair(v, vn)));
        out.push_back(summand_pair(vertex_pair(v, split.neighbors[0]), vertex_pair(vn, ws[0])));
        for (int i = 1; i + 1 < n; ++i)
            out.push_back(isolated_summand(vertex_pair(v, split.neighbors[i])));
        std::set<int> closed(split.neighbors.begin(), split.neighbors.end());
        closed.insert(v);
        std::vector<Edge> rest = remove_vertices(comp, closed);
        st.note(CaseTag::NBig, "v=" + std::to_string(v) + " n=" + std::to_string(n));
        std::vector<TlsElement> tail = build_edges(rest, st);
        out.insert(out.end(), tail.begin(), tail.end());
        return out;
    }
    return build_n2(v, split.neighbors[0], vn, ws, comp, st);
}

std::vector<TlsElement> build_n2(int v, int v1, int v2, const std::vector<int>& ws,
                                 const std::vector<Edge>& comp, BuildState& st) {
    const int nvars = st.nvars;
    const int m = static_cast<int>(ws.size());
    const SquarefreeMonomial vv1 = vertex_pair(v, v1);
    const SquarefreeMonomial vv2 = vertex_pair(v, v2);
    std::vector<SquarefreeMonomial> vws;
    for (int w : ws) vws.push_back(vertex_pair(v2, w));

    std::vector<Edge> tprime = remove_vertices(comp, {v1});
    std::vector<Edge> tpp = remove_vertices(comp, {v, v1, v2});

    std::vector<TlsElement> sigma = build_component(tprime, st);
    const int a_prime = static_cast<int>(sigma.size());
    const int a_pp = pd_of(nvars, tpp);

    auto iso_w_positions = [&]() {
        std::vector<int> out; // indices into ws
        for (int i = 0; i < m; ++i) {
            int pos = position_of_summand(sigma, vws[i]);
            if (pos >= 0 && sigma[pos].isolated()) out.push_back(i);
        }
        return out;
    };
    auto w_index_in = [&](const SquarefreeMonomial& mono) {
        for (int i = 0; i < m; ++i)
            if (std::binary_search(mono.vars.begin(), mono.vars.end(), ws[i])) return i;
        return -1;
    };
    auto component_of_w = [&](const std::vector<std::vector<Edge>>& comps, int w) {
        for (size_t c = 0; c < comps.size(); ++c)
            for (const auto& e : comps[c])
                if (e.first == w || e.second == w) return static_cast<int>(c);
        return -1;
    };

    const int guard = 8 * m + 32;
    for (int iter = 0; iter < guard; ++iter) {
        ensure_valid(sigma, nvars);
        int pos_vv2 = position_of_summand(sigma, vv2);
        if (pos_vv2 < 0) throw InternalError("vv2 missing from the working system");
        bool vv2_isolated = sigma[pos_vv2].isolated();
        std::vector<int> iso = iso_w_positions();

        if (vv2_isolated && !iso.empty()) {
            int wi = iso.front();
            int pos_w = position_of_summand(sigma, vws[wi]);
            std::vector<TlsElement> out;
            out.push_back(isolated_summand(vv2));
            out.push_back(summand_pair(vv1, vws[wi]));
            for (int i = 0; i < static_cast<int>(sigma.size()); ++i)
                if (i != pos_vv2 && i != pos_w) out.push_back(sigma[i]);
            st.note(CaseTag::Case1, "v=" + std::to_string(v) + " w=" + std::to_string(ws[wi]));
            return out;
        }

        if (vv2_isolated) {
            // Case 2: every v2w lives in a pair. Classify each by whether its
            // partner touches another w (the between edge sits at v2) or not
            // (the between edge sits at w_i).
            int q1_index = -1, q1_j = -1;
            for (int i = 0; i < m && q1_index < 0; ++i) {
                int pos = position_of_summand(sigma, vws[i]);
                if (pos < 0) throw InternalError("v2w missing from the working system");
                SquarefreeMonomial partner = partner_of(sigma[pos], vws[i]);
                int j = w_index_in(partner);
                if (j >= 0 && j != i) {
                    q1_index = i;
                    q1_j = j;
                }
            }
            if (q1_index >= 0) {
                // Case 2.1: invert the strict chain ending at the q1-form
                // element; its new head v2w_j becomes an isolated summand.
                int end_pos = position_of_summand(sigma, vws[q1_index]);
                sigma = invert_and_replace(sigma, nvars, end_pos, vws[q1_index]);
                st.note(CaseTag::Case2_1, "i=" + std::to_string(ws[q1_index]) +
                                              " j=" + std::to_string(ws[q1_j]));
                continue;
            }
            // Case 2.2: all partners stay inside the component of their w.
            auto comps = edge_components(tpp);
            std::vector<int> cw(m, -1);
            for (int i = 0; i < m; ++i) {
                cw[i] = component_of_w(comps, ws[i]);
                if (cw[i] < 0)
                    throw InternalError("w vertex isolated in T'' under Case 2.2");
                for (int j = 0; j < i; ++j)
                    if (cw[j] == cw[i])
                        throw InternalError("two w vertices share a component of T''");
            }
            std::vector<int> pd_c(m), pd_cbar(m);
            for (int i = 0; i < m; ++i) {
                pd_c[i] = pd_of(nvars, comps[cw[i]]);
                std::vector<Edge> cbar = comps[cw[i]];
                cbar.push_back({std::min(v2, ws[i]), std::max(v2, ws[i])});
                pd_cbar[i] = pd_of(nvars, cbar);
            }
            int deficit = -1;
            for (int i = 0; i < m && deficit < 0; ++i)
                if (pd_c[i] < pd_cbar[i]) deficit = i;
            if (deficit < 0) {
                // Case 2.2.1: split the element v2w_1 + x1y1 apart.
                int k1 = position_of_summand(sigma, vws[0]);
                SquarefreeMonomial x1y1 = partner_of(sigma[k1], vws[0]);
                std::vector<TlsElement> out;
                out.push_back(isolated_summand(vv2));
                out.push_back(summand_pair(vv1, vws[0]));
                out.push_back(isolated_summand(x1y1));
                for (int i = 0; i < static_cast<int>(sigma.size()); ++i)
                    if (i != pos_vv2 && i != k1) out.push_back(sigma[i]);
                st.note(CaseTag::Case2_2_1, "v=" + std::to_string(v));
                return out;
            }
            // Case 2.2.2: rebuild the deficient component behind an isolated
            // v2w_i and substitute it for the elements supported in Cbar_i.
            std::set<SquarefreeMonomial> cbar_monos;
            for (const auto& e : comps[cw[deficit]]) cbar_monos.insert(edge_monomial(e));
            cbar_monos.insert(vws[deficit]);
            std::vector<int> positions;
            for (int i = 0; i < static_cast<int>(sigma.size()); ++i) {
                bool left_in = cbar_monos.count(sigma[i].left) > 0;
                bool right_in = sigma[i].right && cbar_monos.count(*sigma[i].right) > 0;
                bool any = left_in || right_in;
                bool all = left_in && (!sigma[i].right || right_in);
                if (any && !all)
                    throw InternalError("element straddles Cbar_i under Case 2.2.2");
                if (all) positions.push_back(i);
            }
            std::vector<TlsElement> repl{isolated_summand(vws[deficit])};
            std::vector<TlsElement> inner = build_edges(comps[cw[deficit]], st);
            repl.insert(repl.end(), inner.begin(), inner.end());
            sigma = replace_subsequence(as_system(sigma, nvars), positions,
                                        as_system(repl, nvars))
                        .elements;
            st.note(CaseTag::Case2_2_2, "w=" + std::to_string(ws[deficit]));
            continue;
        }

        // Case 3: vv2 sits in a pair q' = vv2 + w_h z'. Normalize so that the
        // predecessor's v2w monomial heads the system as an isolated summand.
        SquarefreeMonomial partner = partner_of(sigma[pos_vv2], vv2);
        int istar = w_index_in(partner);
        if (istar < 0)
            throw InternalError("partner of vv2 does not touch a w vertex");
        int pred_pos = position_of_summand(sigma, vws[istar]);
        if (pred_pos < 0) throw InternalError("predecessor monomial missing");
        if (sigma[pred_pos].isolated()) {
            sigma = push_to_top(as_system(sigma, nvars), {pred_pos}).elements;
        } else {
            sigma = invert_and_replace(sigma, nvars, pos_vv2, vv2);
        }
        ensure_valid(sigma, nvars);
        int head_w = istar;
        if (!(sigma.front().isolated() && sigma.front().left == vws[head_w]))
            throw InternalError("normalization did not head the system at v2w");

        pos_vv2 = position_of_summand(sigma, vv2);
        partner = partner_of(sigma[pos_vv2], vv2);
        int h = w_index_in(partner);
        if (h < 0) throw InternalError("after normalization vv2 partner touches no w");

        if (a_prime <= a_pp + 1) {
            // Case 3.1(a): split q' into two isolated summands and pair the
            // former head with vv1.
            std::vector<TlsElement> out;
            out.push_back(isolated_summand(vv2));
            out.push_back(summand_pair(vv1, vws[head_w]));
            out.push_back(isolated_summand(partner));
            for (int i = 1; i < static_cast<int>(sigma.size()); ++i)
                if (i != pos_vv2) out.push_back(sigma[i]);
            st.note(CaseTag::Case3_1a, "v=" + std::to_string(v));
            return out;
        }

        std::vector<int> iso_now = iso_w_positions();
        int swap_j = -1;
        for (int j : iso_now)
            if (j != head_w && j != h) {
                swap_j = j;
                break;
            }
        if (swap_j >= 0) {
            // Case 3.1(b): interchange vv2 with the isolated v2w_j.
            int pos_j = position_of_summand(sigma, vws[swap_j]);
            sigma[pos_j] = isolated_summand(vv2);
            sigma[pos_vv2] = summand_pair(vws[swap_j], partner);
            st.note(CaseTag::Case3_1b, "j=" + std::to_string(ws[swap_j]));
            continue;
        }

        if (m == 1) {
            // Case 3.2 with m = 1: discard the worked system entirely.
            if (a_prime != a_pp + 2)
                throw InternalError("Case 3.2 with m = 1 requires A' = A'' + 2");
            std::vector<TlsElement> fresh{isolated_summand(vv2), isolated_summand(vws[0])};
            std::vector<TlsElement> tail = build_edges(tpp, st);
            fresh.insert(fresh.end(), tail.begin(), tail.end());
            sigma = std::move(fresh);
            st.note(CaseTag::Case3_2, "m=1 rebuild");
            continue;
        }

        // Case 3.2 with m >= 2: some component of T'' carries more elements
        // than its projective dimension requires; rebuild it behind the one
        // summand of its element set that lies outside the component.
        auto comps = edge_components(tpp);
        std::vector<int> cw(m, -1);
        for (int i = 0; i < m; ++i) {
            cw[i] = component_of_w(comps, ws[i]);
            if (cw[i] < 0) throw InternalError("w vertex isolated in T'' under Case 3.2");
        }
        int pick = -1;
        std::vector<int> pick_positions;
        SquarefreeMonomial extra;
        for (int i = 0; i < m && pick < 0; ++i) {
            std::set<SquarefreeMonomial> c_monos;
            for (const auto& e : comps[cw[i]]) c_monos.insert(edge_monomial(e));
            std::vector<int> positions;
            std::set<SquarefreeMonomial> removed;
            for (int k = 0; k < static_cast<int>(sigma.size()); ++k) {
                bool touches = c_monos.count(sigma[k].left) ||
                               (sigma[k].right && c_monos.count(*sigma[k].right));
                if (!touches) continue;
                positions.push_back(k);
                removed.insert(sigma[k].left);
                if (sigma[k].right) removed.insert(*sigma[k].right);
            }
            int lambda = static_cast<int>(positions.size());
            if (pd_of(nvars, comps[cw[i]]) >= lambda) continue;
            std::vector<SquarefreeMonomial> extras;
            for (const auto& mn : removed)
                if (!c_monos.count(mn)) extras.push_back(mn);
            if (extras.size() != 1)
                throw InternalError("Case 3.2 element set has an unexpected summand surplus");
            pick = i;
            pick_positions = positions;
            extra = extras.front();
        }
        if (pick < 0)
            throw InternalError("Case 3.2 found no component below its element count");
        std::vector<TlsElement> repl{isolated_summand(extra)};
        std::vector<TlsElement> inner = build_edges(comps[cw[pick]], st);
        repl.insert(repl.end(), inner.begin(), inner.end());
        sigma = replace_subsequence(as_system(sigma, nvars), pick_positions,
                                    as_system(repl, nvars))
                    .elements;
        st.note(CaseTag::Case3_2, "w=" + std::to_string(ws[pick]));
    }
    throw InternalError("case analysis did not terminate within the iteration guard");
}

std::vector<TlsElement> build_edges(const std::vector<Edge>& edges, BuildState& st) {
    std::vector<TlsElement> out;
    for (const auto& comp : edge_components(edges)) {
        std::vector<TlsElement> piece = build_component(comp, st);
        out.insert(out.end(), piece.begin(), piece.end());
    }
    return out;
}

} // namespace

AraCertificate build_stretched_tls(const Forest& f) {
    if (f.edges.empty()) throw NoEdges("cannot certify an edgeless forest");
    if (!is_stretched(f))
        throw NotStretched("an edge has both endpoints of degree greater than 2");

    AraCertificate cert;
    BuildState st;
    st.nvars = f.n;
    st.log = &cert.case_log;

    cert.system = as_system(build_edges(f.edges, st), f.n);
    cert.claimed_ara = cert.system.length();
    cert.pd_value = pd_forest(f).value;

    TlsValidation v = validate_tls(cert.system);
    if (!v.ok)
        throw InternalError("built certificate is invalid at position " +
                            std::to_string(v.position) + ": " + v.reason);
    if (support(cert.system) != edge_monomials(f.edges))
        throw InternalError("certificate support differs from the edge monomials");
    if (cert.claimed_ara != cert.pd_value)
        throw InternalError("certificate length " + std::to_string(cert.claimed_ara) +
                            " differs from pd " + std::to_string(cert.pd_value));
    return cert;
}

AraCertificate double_star_tls(int r, int s) {
    Forest f = make_double_star(r, s);
    const SquarefreeMonomial ab = SquarefreeMonomial::of({0, 1});
    auto xm = [&](int i) { return SquarefreeMonomial::of({0, 1 + i}); };
    auto ym = [&](int j) { return SquarefreeMonomial::of({1, 1 + r + j}); };

    std::vector<TlsElement> elems{isolated_summand(ab)};
    if (r <= s) {
        for (int i = 1; i <= r; ++i) elems.push_back(summand_pair(xm(i), ym(i)));
        for (int j = r + 1; j <= s; ++j) elems.push_back(isolated_summand(ym(j)));
    } else {
        for (int i = 1; i <= s; ++i) elems.push_back(summand_pair(xm(i), ym(i)));
        for (int i = s + 1; i <= r; ++i) elems.push_back(isolated_summand(xm(i)));
    }

    AraCertificate cert;
    cert.system = as_system(std::move(elems), f.n);
    cert.claimed_ara = cert.system.length();
    cert.pd_value = pd_double_star(r, s);
    if (cert.claimed_ara != cert.pd_value)
        throw InternalError("double star system has the wrong length");
    return cert;
}

AraCertificate line_tls(int r) {
    if (r < 2) throw DomainError("line graph needs at least two vertices");
    auto em = [](int i) { return SquarefreeMonomial::of({i - 1, i}); }; // edge x_i x_{i+1}
    int s = r / 3;
    std::vector<TlsElement> elems;
    auto pair_block = [&](int k) {
        elems.push_back(isolated_summand(em(3 * k - 1)));
        elems.push_back(summand_pair(em(3 * k - 2), em(3 * k)));
    };
    switch (r % 3) {
        case 0:
            for (int k = 1; k <= s - 1; ++k) pair_block(k);
            elems.push_back(isolated_summand(em(3 * s - 2)));
            elems.push_back(isolated_summand(em(3 * s - 1)));
            break;
        case 1:
            for (int k = 1; k <= s; ++k) pair_block(k);
            break;
        default:
            for (int k = 1; k <= s; ++k) pair_block(k);
            elems.push_back(isolated_summand(em(3 * s + 1)));
            break;
    }
    AraCertificate cert;
    cert.system = as_system(std::move(elems), r);
    cert.claimed_ara = cert.system.length();
    cert.pd_value = pd_line(r);
    if (cert.claimed_ara != cert.pd_value)
        throw InternalError("line system has the wrong length");
    return cert;
}

bool bound_is_sharp_line(int r) {
    MonomialIdeal ideal = edge_ideal(make_line(r));
    return pd_line(r) == mu(ideal) - rho(ideal) + 1;
}

} // namespace edgeideals
