#pragma once

#include <optional>
#include <string>
#include <vector>

#include "edgeideals/tls.hpp"

namespace edgeideals {

/// Layered subsets P_0..P_r of a monomial set, with a positive exponent per
/// entry (producers in this library always use exponent 1). The layer sums
/// generate the union up to radical when sv_check passes.
struct SvPartition {
    std::vector<std::vector<SquarefreeMonomial>> blocks;
    std::vector<std::vector<int>> exponents; // parallel to blocks
    int nvars = 0;
};

struct SvViolation {
    int condition = 0; // 1: union != target, 2: |P_0| != 1, 3: pair without divisor
    int block = -1;
    std::string detail;
};

struct SvCheckResult {
    bool ok = true;
    std::optional<SvViolation> violation;
};

/// Verifies the three layer conditions: the blocks cover `target` (checked
/// only when a target is given), P_0 is a singleton, and any two distinct
/// members of a block have an earlier-block divisor of their product.
/// Blocks may overlap.
SvCheckResult sv_check(const SvPartition& part,
                       const std::vector<SquarefreeMonomial>* target = nullptr);

/// Blockwise image of a tree-like system: the head becomes the singleton
/// block P_0 and each later element contributes its summand set. Throws
/// InvalidSystem if the system does not validate or does not begin with an
/// isolated summand.
SvPartition tls_to_partition(const TreeLikeSystem& s);

} // namespace edgeideals
