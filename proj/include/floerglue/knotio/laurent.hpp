/**
 * @file laurent.hpp
 * @brief Exact integer Laurent polynomials with doubled half-exponents.
 */
#pragma once

#include <map>
#include <stdexcept>
#include <string>

namespace floerglue::knotio {

struct NormalizationImpossible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * Laurent polynomial in t^{1/2} over Z.  Keys are doubled exponents (alex2),
 * so t^{3/2} is key 3; values are coefficients.  Zero coefficients are never
 * stored.
 */
struct LaurentPoly {
    std::map<int, long long> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    long long at(int alex2) const {
        auto it = coeffs.find(alex2);
        return it == coeffs.end() ? 0 : it->second;
    }
    /** Value at t = 1 (sum of coefficients). */
    long long at_one() const;
    /** Largest doubled exponent with nonzero coefficient (0 when zero). */
    int top() const { return coeffs.empty() ? 0 : coeffs.rbegin()->first; }
    bool symmetric() const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const = default;

    /** Human form like "t - 1 + t^-1" (half powers appear as t^{k/2}). */
    std::string pretty() const;
};

/**
 * Symmetrize a plain-exponent integer polynomial into the ±t^{k/2}-normalized
 * Alexander form: centered (doubled keys), palindromic, value +1 at t = 1.
 * Throws NormalizationImpossible otherwise.
 */
LaurentPoly normalize_alexander(const std::map<int, long long>& plain);

}  // namespace floerglue::knotio
