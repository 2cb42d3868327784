#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "edgeideals/graph.hpp"

namespace edgeideals {

/// A squarefree monomial as its sorted set of variable indices.
struct SquarefreeMonomial {
    std::vector<int> vars; // sorted, unique

    static SquarefreeMonomial of(std::initializer_list<int> vs);

    int degree() const { return static_cast<int>(vars.size()); }
    bool divides(const SquarefreeMonomial& other) const;
    /// d | a*b for squarefree d holds iff vars(d) is covered by vars(a) u vars(b).
    bool divides_product(const SquarefreeMonomial& a, const SquarefreeMonomial& b) const;

    auto operator<=>(const SquarefreeMonomial&) const = default;
};

SquarefreeMonomial edge_monomial(const Edge& e);

std::string monomial_text(const SquarefreeMonomial& m,
                          const std::vector<std::string>& labels = {});

/// Squarefree monomial ideal given by its minimal generators.
struct MonomialIdeal {
    int nvars = 0;
    std::vector<SquarefreeMonomial> generators; // minimal, sorted

    bool operator==(const MonomialIdeal&) const = default;
};

/// Discards generators divisible by another and deduplicates; input order
/// never matters. Throws DomainError on empty monomials or bad indices.
MonomialIdeal make_ideal(int nvars, std::vector<SquarefreeMonomial> gens);

/// One degree-2 generator per edge. Throws NoEdges.
MonomialIdeal edge_ideal(const Forest& f);

/// Number of minimal generators.
int mu(const MonomialIdeal& ideal);

/// rho = max over generators f of min over variables x | f of #{generators
/// divisible by x}. For edge ideals this is the max over edges of the
/// smaller endpoint degree.
int rho(const MonomialIdeal& ideal);

/// nu = min over minimal primes P of max over variables x in P of
/// #{generators divisible by x}. Always equals rho.
int nu(const MonomialIdeal& ideal);

/// All inclusion-minimal variable sets hitting every generator (minimal
/// vertex covers when the ideal is an edge ideal). Sorted by (size, lex).
std::vector<std::vector<int>> minimal_primes(const MonomialIdeal& ideal);

/// mu - rho + 1, an upper bound for the arithmetical rank.
int ara_upper_bound(const MonomialIdeal& ideal);

struct AraInvariants {
    int mu = 0;
    int nu = 0;
    int rho = 0;
    int upper_bound = 0;
};

AraInvariants ara_invariants(const MonomialIdeal& ideal);

} // namespace edgeideals
