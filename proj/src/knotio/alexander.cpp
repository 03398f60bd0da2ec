/**
 * @file alexander.cpp
 * @brief Alexander polynomial det(V - t V^T) via memoized minor expansion.
 */
#include <map>
#include <vector>

#include "floerglue/knotio/seifert.hpp"

namespace floerglue::knotio {

namespace {

/** Plain-exponent integer polynomial (exponent -> coefficient, no zeros). */
using Poly = std::map<int, long long>;

Poly clean(Poly p) {
    for (auto it = p.begin(); it != p.end();) {
        if (it->second == 0) {
            it = p.erase(it);
        } else {
            ++it;
        }
    }
    return p;
}

Poly add(Poly a, const Poly& b) {
    for (const auto& [e, c] : b) a[e] += c;
    return clean(std::move(a));
}

Poly mul(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [e1, c1] : a) {
        for (const auto& [e2, c2] : b) r[e1 + e2] += c1 * c2;
    }
    return clean(std::move(r));
}

Poly scale(Poly p, long long s) {
    for (auto& [e, c] : p) {
        (void)e;
        c *= s;
    }
    return clean(std::move(p));
}

/** Determinant of a matrix of polynomials: minor expansion memoized on the
 *  used-column mask; the row is the popcount of the mask. */
Poly det_poly(const std::vector<std::vector<Poly>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return Poly{{0, 1}};
    std::map<unsigned long long, Poly> memo;

    auto rec = [&](auto&& self, unsigned long long mask) -> Poly {
        int row = __builtin_popcountll(mask);
        if (row == n) return Poly{{0, 1}};
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        Poly total;
        long long sign = 1;
        for (int j = 0; j < n; ++j) {
            if (mask & (1ULL << j)) continue;
            const Poly& entry =
                m[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)];
            if (!entry.empty()) {
                total = add(std::move(total),
                            scale(mul(entry, self(self, mask | (1ULL << j))), sign));
            }
            sign = -sign;
        }
        memo[mask] = total;
        return total;
    };
    return rec(rec, 0ULL);
}

}  // namespace

LaurentPoly alexander_polynomial(const SeifertData& s) {
    const auto& v = s.matrix;
    const int m = static_cast<int>(v.size());
    std::vector<std::vector<Poly>> mat(
        static_cast<std::size_t>(m),
        std::vector<Poly>(static_cast<std::size_t>(m)));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            Poly ent;
            if (v[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) {
                ent[0] = v[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            }
            if (v[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] != 0) {
                ent[1] -= v[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            }
            mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                clean(std::move(ent));
        }
    }
    return normalize_alexander(det_poly(mat));
}

}  // namespace floerglue::knotio
