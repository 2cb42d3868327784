#pragma once

#include <optional>
#include <vector>

#include "edgeideals/tls.hpp"

namespace edgeideals {

/// Polynomial with squarefree-support terms and coefficients in F_p.
struct DensePoly {
    int p = 2;
    std::vector<std::pair<SquarefreeMonomial, int>> terms;

    static DensePoly from_monomial(const SquarefreeMonomial& m, int p);
    static DensePoly from_element(const TlsElement& e, int p);
};

/// Supported characteristics and their default variable caps: 16 for F_2,
/// 12 for F_3, 9 for F_5. Throws DomainError for other primes.
int default_field_cap(int p);

struct VanishingOutcome {
    bool equal = true;
    std::vector<int> witness; // a point where the vanishing statuses differ
};

/// Compares the vanishing loci of the two families over every point of
/// F_p^nvars: equal iff at each point all of `qs` vanish exactly when all of
/// `ps` vanish. Throws CapExceeded when nvars exceeds the cap (default per
/// field, overridable).
VanishingOutcome vanishing_equal(const std::vector<DensePoly>& qs,
                                 const std::vector<DensePoly>& ps, int p, int nvars,
                                 std::optional<int> cap = std::nullopt);

struct FieldReport {
    int p = 0;
    bool equal = false;
    std::vector<int> witness;
};

/// Converts the system's elements to polynomials, its support to monomials,
/// and runs vanishing_equal for each requested prime.
std::vector<FieldReport> tls_vanishing_check(const TreeLikeSystem& s,
                                             const std::vector<int>& primes,
                                             std::optional<int> cap = std::nullopt);

} // namespace edgeideals
