#include "edgeideals/schmitt_vogel.hpp"

#include <algorithm>
#include <set>

namespace edgeideals {

SvCheckResult sv_check(const SvPartition& part, const std::vector<SquarefreeMonomial>* target) {
    auto fail = [](int condition, int block, std::string detail) {
        SvCheckResult r;
        r.ok = false;
        r.violation = SvViolation{condition, block, std::move(detail)};
        return r;
    };
    if (!part.exponents.empty()) {
        if (part.exponents.size() != part.blocks.size())
            return fail(0, -1, "exponent rows do not match blocks");
        for (size_t i = 0; i < part.blocks.size(); ++i) {
            if (part.exponents[i].size() != part.blocks[i].size())
                return fail(0, static_cast<int>(i), "exponent row size mismatch");
            for (int e : part.exponents[i])
                if (e < 1) return fail(0, static_cast<int>(i), "exponent below 1");
        }
    }
    if (part.blocks.empty()) return fail(2, -1, "no blocks");
    if (part.blocks.front().size() != 1)
        return fail(2, 0, "first block must have exactly one element");
    if (target) {
        std::set<SquarefreeMonomial> covered;
        for (const auto& block : part.blocks) covered.insert(block.begin(), block.end());
        for (const auto& m : *target)
            if (!covered.count(m)) return fail(1, -1, "target monomial " + monomial_text(m) +
                                                          " not covered by the blocks");
    }
    for (size_t i = 1; i < part.blocks.size(); ++i) {
        const auto& block = part.blocks[i];
        for (size_t p = 0; p < block.size(); ++p) {
            for (size_t q = p + 1; q < block.size(); ++q) {
                if (block[p] == block[q]) continue;
                bool found = false;
                for (size_t j = 0; j < i && !found; ++j)
                    for (const auto& d : part.blocks[j])
                        if (d.divides_product(block[p], block[q])) {
                            found = true;
                            break;
                        }
                if (!found)
                    return fail(3, static_cast<int>(i),
                                "no earlier divisor of " + monomial_text(block[p]) + " * " +
                                    monomial_text(block[q]));
            }
        }
    }
    return {};
}

SvPartition tls_to_partition(const TreeLikeSystem& s) {
    TlsValidation v = validate_tls(s);
    if (!v.ok)
        throw InvalidSystem("system does not validate at position " +
                            std::to_string(v.position) + ": " + v.reason);
    if (s.elements.empty() || !s.elements.front().isolated())
        throw InvalidSystem("system must begin with an isolated summand");
    SvPartition part;
    part.nvars = s.nvars;
    for (const auto& e : s.elements) {
        std::vector<SquarefreeMonomial> block{e.left};
        if (e.right) block.push_back(*e.right);
        part.exponents.push_back(std::vector<int>(block.size(), 1));
        part.blocks.push_back(std::move(block));
    }
    return part;
}

} // namespace edgeideals
