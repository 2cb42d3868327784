#include "edgeideals/monomial.hpp"

#include <algorithm>
#include <set>

namespace edgeideals {

SquarefreeMonomial SquarefreeMonomial::of(std::initializer_list<int> vs) {
    SquarefreeMonomial m;
    m.vars.assign(vs);
    std::sort(m.vars.begin(), m.vars.end());
    m.vars.erase(std::unique(m.vars.begin(), m.vars.end()), m.vars.end());
    return m;
}

bool SquarefreeMonomial::divides(const SquarefreeMonomial& other) const {
    return std::includes(other.vars.begin(), other.vars.end(), vars.begin(), vars.end());
}

bool SquarefreeMonomial::divides_product(const SquarefreeMonomial& a,
                                         const SquarefreeMonomial& b) const {
    for (int v : vars) {
        bool in_a = std::binary_search(a.vars.begin(), a.vars.end(), v);
        if (!in_a && !std::binary_search(b.vars.begin(), b.vars.end(), v)) return false;
    }
    return true;
}

SquarefreeMonomial edge_monomial(const Edge& e) {
    return SquarefreeMonomial::of({e.first, e.second});
}

std::string monomial_text(const SquarefreeMonomial& m, const std::vector<std::string>& labels) {
    if (m.vars.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < m.vars.size(); ++i) {
        if (i) out += '*';
        int v = m.vars[i];
        if (v >= 0 && v < static_cast<int>(labels.size()))
            out += labels[v];
        else
            out += "x" + std::to_string(v);
    }
    return out;
}

MonomialIdeal make_ideal(int nvars, std::vector<SquarefreeMonomial> gens) {
    for (const auto& g : gens) {
        if (g.vars.empty()) throw DomainError("generators must be nonempty monomials");
        for (int v : g.vars)
            if (v < 0 || v >= nvars) throw DomainError("generator variable out of range");
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<SquarefreeMonomial> minimal;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < gens.size() && !redundant; ++j)
            if (j != i && gens[j].divides(gens[i])) redundant = true;
        if (!redundant) minimal.push_back(gens[i]);
    }
    MonomialIdeal ideal;
    ideal.nvars = nvars;
    ideal.generators = std::move(minimal);
    return ideal;
}

MonomialIdeal edge_ideal(const Forest& f) {
    if (f.edges.empty()) throw NoEdges("edge ideal of an edgeless graph");
    std::vector<SquarefreeMonomial> gens;
    gens.reserve(f.edges.size());
    for (const auto& e : f.edges) gens.push_back(edge_monomial(e));
    return make_ideal(f.n, std::move(gens));
}

int mu(const MonomialIdeal& ideal) {
    return static_cast<int>(ideal.generators.size());
}

namespace {

std::vector<int> divisibility_counts(const MonomialIdeal& ideal) {
    std::vector<int> count(ideal.nvars, 0);
    for (const auto& g : ideal.generators)
        for (int v : g.vars) count[v]++;
    return count;
}

void minimal_transversals(const std::vector<SquarefreeMonomial>& gens,
                          std::vector<int>& chosen,
                          std::set<std::vector<int>>& out) {
    // First generator not hit by the current choice.
    const SquarefreeMonomial* unhit = nullptr;
    for (const auto& g : gens) {
        bool hit = false;
        for (int v : g.vars)
            if (std::binary_search(chosen.begin(), chosen.end(), v)) {
                hit = true;
                break;
            }
        if (!hit) {
            unhit = &g;
            break;
        }
    }
    if (!unhit) {
        out.insert(chosen);
        return;
    }
    for (int v : unhit->vars) {
        auto pos = std::lower_bound(chosen.begin(), chosen.end(), v);
        auto idx = pos - chosen.begin();
        chosen.insert(pos, v);
        minimal_transversals(gens, chosen, out);
        chosen.erase(chosen.begin() + idx);
    }
}

} // namespace

std::vector<std::vector<int>> minimal_primes(const MonomialIdeal& ideal) {
    if (ideal.generators.empty()) throw DomainError("ideal has no generators");
    std::set<std::vector<int>> candidates;
    std::vector<int> chosen;
    minimal_transversals(ideal.generators, chosen, candidates);

    std::vector<std::vector<int>> result;
    for (const auto& c : candidates) {
        bool minimal = true;
        for (const auto& other : candidates) {
            if (other.size() < c.size() &&
                std::includes(c.begin(), c.end(), other.begin(), other.end())) {
                minimal = false;
                break;
            }
        }
        if (minimal) result.push_back(c);
    }
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return result;
}

int rho(const MonomialIdeal& ideal) {
    if (ideal.generators.empty()) throw DomainError("ideal has no generators");
    auto count = divisibility_counts(ideal);
    int best = 0;
    for (const auto& g : ideal.generators) {
        int local = count[g.vars.front()];
        for (int v : g.vars) local = std::min(local, count[v]);
        best = std::max(best, local);
    }
    return best;
}

int nu(const MonomialIdeal& ideal) {
    if (ideal.generators.empty()) throw DomainError("ideal has no generators");
    auto count = divisibility_counts(ideal);
    int best = -1;
    for (const auto& prime : minimal_primes(ideal)) {
        int local = 0;
        for (int v : prime) local = std::max(local, count[v]);
        if (best < 0 || local < best) best = local;
    }
    return best;
}

int ara_upper_bound(const MonomialIdeal& ideal) {
    return mu(ideal) - rho(ideal) + 1;
}

AraInvariants ara_invariants(const MonomialIdeal& ideal) {
    AraInvariants inv;
    inv.mu = mu(ideal);
    inv.nu = nu(ideal);
    inv.rho = rho(ideal);
    inv.upper_bound = inv.mu - inv.rho + 1;
    return inv;
}

} // namespace edgeideals
