#include "edgeideals/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace edgeideals {

DensePoly DensePoly::from_monomial(const SquarefreeMonomial& m, int p) {
    DensePoly poly;
    poly.p = p;
    poly.terms.push_back({m, 1});
    return poly;
}

DensePoly DensePoly::from_element(const TlsElement& e, int p) {
    DensePoly poly;
    poly.p = p;
    poly.terms.push_back({e.left, 1});
    if (e.right) poly.terms.push_back({*e.right, 1});
    return poly;
}

int default_field_cap(int p) {
    switch (p) {
        case 2: return 16;
        case 3: return 12;
        case 5: return 9;
        default: throw DomainError("unsupported field characteristic " + std::to_string(p));
    }
}

namespace {

// Hard ceilings keeping the point space enumerable with 32-bit masks.
int hard_field_cap(int p) {
    switch (p) {
        case 2: return 24;
        case 3: return 15;
        default: return 10;
    }
}

struct MaskPoly {
    std::vector<uint32_t> masks;
    std::vector<int> coeffs; // reduced mod p, nonzero
};

std::vector<MaskPoly> to_masks(const std::vector<DensePoly>& polys, int p, int nvars) {
    std::vector<MaskPoly> out;
    out.reserve(polys.size());
    for (const auto& poly : polys) {
        MaskPoly mp;
        for (const auto& [mono, coeff] : poly.terms) {
            int c = ((coeff % p) + p) % p;
            if (c == 0) continue;
            uint32_t mask = 0;
            for (int v : mono.vars) {
                if (v < 0 || v >= nvars) throw DomainError("term variable out of range");
                mask |= (1u << v);
            }
            mp.masks.push_back(mask);
            mp.coeffs.push_back(c);
        }
        out.push_back(std::move(mp));
    }
    return out;
}

std::vector<int> mask_to_point(uint32_t ones, uint32_t twos, int nvars) {
    std::vector<int> pt(nvars, 0);
    for (int v = 0; v < nvars; ++v) {
        if (ones & (1u << v)) pt[v] = 1;
        else if (twos & (1u << v)) pt[v] = 2;
    }
    return pt;
}

// F_2 pass with Gray-code enumeration: one variable flips between
// consecutive points, so per-term "missing variable" counters and per-poly
// parities are updated incrementally.
std::optional<uint32_t> witness_f2(const std::vector<MaskPoly>& qs,
                                   const std::vector<MaskPoly>& ps, int nvars) {
    struct TermRef {
        int poly;
        int term;
        bool is_q;
    };
    std::vector<std::vector<TermRef>> by_var(nvars);
    std::vector<std::vector<int>> missing_q(qs.size()), missing_p(ps.size());
    std::vector<int> parity_q(qs.size(), 0), parity_p(ps.size(), 0);

    for (size_t i = 0; i < qs.size(); ++i) {
        missing_q[i].resize(qs[i].masks.size());
        for (size_t t = 0; t < qs[i].masks.size(); ++t) {
            missing_q[i][t] = std::popcount(qs[i].masks[t]);
            for (int v = 0; v < nvars; ++v)
                if (qs[i].masks[t] & (1u << v))
                    by_var[v].push_back({static_cast<int>(i), static_cast<int>(t), true});
        }
    }
    for (size_t i = 0; i < ps.size(); ++i) {
        missing_p[i].resize(ps[i].masks.size());
        for (size_t t = 0; t < ps[i].masks.size(); ++t) {
            missing_p[i][t] = std::popcount(ps[i].masks[t]);
            for (int v = 0; v < nvars; ++v)
                if (ps[i].masks[t] & (1u << v))
                    by_var[v].push_back({static_cast<int>(i), static_cast<int>(t), false});
        }
    }
    // Constant-free polynomials all vanish at the origin.
    int nonzero_q = 0, nonzero_p = 0;
    for (size_t i = 0; i < qs.size(); ++i)
        for (size_t t = 0; t < qs[i].masks.size(); ++t)
            if (missing_q[i][t] == 0) parity_q[i] ^= 1;
    for (size_t i = 0; i < ps.size(); ++i)
        for (size_t t = 0; t < ps[i].masks.size(); ++t)
            if (missing_p[i][t] == 0) parity_p[i] ^= 1;
    for (int x : parity_q) nonzero_q += x;
    for (int x : parity_p) nonzero_p += x;

    uint32_t point = 0;
    uint64_t total = 1ull << nvars;
    for (uint64_t i = 0;; ++i) {
        if ((nonzero_q == 0) != (nonzero_p == 0)) return point;
        if (i + 1 == total) break;
        int b = std::countr_zero(i + 1);
        bool setting = !(point & (1u << b));
        point ^= (1u << b);
        for (const auto& ref : by_var[b]) {
            auto& missing = ref.is_q ? missing_q[ref.poly][ref.term]
                                     : missing_p[ref.poly][ref.term];
            int before = missing;
            missing += setting ? -1 : 1;
            bool toggled = (before == 0) != (missing == 0);
            if (toggled) {
                int& parity = ref.is_q ? parity_q[ref.poly] : parity_p[ref.poly];
                int& nonzero = ref.is_q ? nonzero_q : nonzero_p;
                nonzero -= parity;
                parity ^= 1;
                nonzero += parity;
            }
        }
    }
    return std::nullopt;
}

// F_3 pass: a point is the pair (ones, twos) of disjoint masks; a term with
// support inside ones|twos evaluates to +-1 by the parity of its overlap
// with twos.
std::optional<std::pair<uint32_t, uint32_t>> witness_f3(const std::vector<MaskPoly>& qs,
                                                        const std::vector<MaskPoly>& ps,
                                                        int nvars) {
    auto vanishes = [](const MaskPoly& poly, uint32_t support, uint32_t twos) {
        int sum = 0;
        for (size_t t = 0; t < poly.masks.size(); ++t) {
            uint32_t m = poly.masks[t];
            if ((m & support) != m) continue;
            int sign = std::popcount(m & twos) & 1;
            sum += sign ? 3 - poly.coeffs[t] : poly.coeffs[t];
        }
        return sum % 3 == 0;
    };
    uint32_t full = nvars == 32 ? 0xffffffffu : ((1u << nvars) - 1);
    for (uint32_t support = 0;; ++support) {
        uint32_t twos = support;
        while (true) {
            bool all_q = true, all_p = true;
            for (const auto& q : qs)
                if (!vanishes(q, support, twos)) {
                    all_q = false;
                    break;
                }
            for (const auto& p : ps)
                if (!vanishes(p, support, twos)) {
                    all_p = false;
                    break;
                }
            if (all_q != all_p) return std::make_pair(support & ~twos, twos);
            if (twos == 0) break;
            twos = (twos - 1) & support;
        }
        if (support == full) break;
    }
    return std::nullopt;
}

std::optional<std::vector<int>> witness_odometer(const std::vector<DensePoly>& rq,
                                                 const std::vector<DensePoly>& rp, int p,
                                                 int nvars) {
    std::vector<int> pt(nvars, 0);
    auto vanishes = [&](const DensePoly& poly) {
        long long sum = 0;
        for (const auto& [mono, coeff] : poly.terms) {
            long long val = ((coeff % p) + p) % p;
            for (int v : mono.vars) {
                val = (val * pt[v]) % p;
                if (val == 0) break;
            }
            sum += val;
        }
        return sum % p == 0;
    };
    while (true) {
        bool all_q = true, all_p = true;
        for (const auto& q : rq)
            if (!vanishes(q)) {
                all_q = false;
                break;
            }
        for (const auto& f : rp)
            if (!vanishes(f)) {
                all_p = false;
                break;
            }
        if (all_q != all_p) return pt;
        int i = nvars - 1;
        while (i >= 0 && pt[i] == p - 1) pt[i--] = 0;
        if (i < 0) break;
        pt[i]++;
    }
    return std::nullopt;
}

} // namespace

VanishingOutcome vanishing_equal(const std::vector<DensePoly>& qs,
                                 const std::vector<DensePoly>& ps, int p, int nvars,
                                 std::optional<int> cap) {
    int limit = cap.value_or(default_field_cap(p));
    limit = std::min(limit, hard_field_cap(p));
    if (nvars > limit)
        throw CapExceeded(std::to_string(nvars) + " variables over F_" + std::to_string(p) +
                          " exceeds the cap of " + std::to_string(limit));
    if (nvars < 0) throw DomainError("negative variable count");

    auto mq = to_masks(qs, p, nvars);
    auto mp = to_masks(ps, p, nvars);
    VanishingOutcome out;
    if (p == 2) {
        auto w = witness_f2(mq, mp, nvars);
        if (w) {
            out.equal = false;
            out.witness.assign(nvars, 0);
            for (int v = 0; v < nvars; ++v)
                if (*w & (1u << v)) out.witness[v] = 1;
        }
    } else if (p == 3) {
        auto w = witness_f3(mq, mp, nvars);
        if (w) {
            out.equal = false;
            out.witness = mask_to_point(w->first, w->second, nvars);
        }
    } else if (p == 5) {
        auto w = witness_odometer(qs, ps, p, nvars);
        if (w) {
            out.equal = false;
            out.witness = *w;
        }
    } else {
        throw DomainError("unsupported field characteristic " + std::to_string(p));
    }
    return out;
}

std::vector<FieldReport> tls_vanishing_check(const TreeLikeSystem& s,
                                             const std::vector<int>& primes,
                                             std::optional<int> cap) {
    std::vector<FieldReport> reports;
    for (int p : primes) {
        std::vector<DensePoly> qs, ps;
        for (const auto& e : s.elements) qs.push_back(DensePoly::from_element(e, p));
        for (const auto& m : support(s)) ps.push_back(DensePoly::from_monomial(m, p));
        VanishingOutcome outcome = vanishing_equal(qs, ps, p, s.nvars, cap);
        reports.push_back({p, outcome.equal, outcome.witness});
    }
    return reports;
}

} // namespace edgeideals
