#pragma once

#include <string>
#include <vector>

#include "edgeideals/pd.hpp"
#include "edgeideals/tls.hpp"

namespace edgeideals {

enum class CaseTag {
    Matching,
    StarComponent,
    Case1,
    Case2_1,
    Case2_2_1,
    Case2_2_2,
    Case3_1a,
    Case3_1b,
    Case3_2,
    NBig,
};

const char* to_string(CaseTag tag);

struct CaseLogEntry {
    CaseTag tag;
    std::string detail;
};

/// A tree-like system certifying ara I(T) = pd I(T): the system validates,
/// its support is the edge-monomial set of the input, and its length equals
/// both the claimed arithmetical rank and the projective dimension.
struct AraCertificate {
    TreeLikeSystem system;
    int claimed_ara = 0;
    int pd_value = 0;
    std::vector<CaseLogEntry> case_log;
};

/// Constructive recursion for stretched forests. Per component: matchings
/// emit one isolated summand per edge, star components emit all edge
/// monomials, and otherwise the component splits at the selected vertex with
/// the n = 2 case analysis or the n >= 3 prefix construction. Throws
/// NotStretched, NoEdges.
AraCertificate build_stretched_tls(const Forest& f);

/// Closed form for the double star: ab first, then paired leaf edges, then
/// the surplus side as isolated summands. Length max{r,s}+1.
AraCertificate double_star_tls(int r, int s);

/// Closed form for the path on r vertices, by the residue of r mod 3.
/// Length pd_line(r).
AraCertificate line_tls(int r);

/// True iff the path on r vertices attains the mu - rho + 1 upper bound,
/// which happens exactly for 2 <= r <= 6.
bool bound_is_sharp_line(int r);

} // namespace edgeideals
