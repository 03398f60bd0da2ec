/**
 * @file laurent.cpp
 * @brief Laurent polynomial arithmetic and Alexander normalization.
 */
#include "floerglue/knotio/laurent.hpp"

#include <cstdlib>
#include <sstream>

namespace floerglue::knotio {

long long LaurentPoly::at_one() const {
    long long s = 0;
    for (const auto& [e, c] : coeffs) {
        (void)e;
        s += c;
    }
    return s;
}

bool LaurentPoly::symmetric() const {
    for (const auto& [e, c] : coeffs) {
        if (at(-e) != c) return false;
    }
    return true;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.coeffs) {
        long long v = r.at(e) + c;
        if (v == 0) {
            r.coeffs.erase(e);
        } else {
            r.coeffs[e] = v;
        }
    }
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : coeffs) {
        for (const auto& [e2, c2] : o.coeffs) {
            r.coeffs[e1 + e2] += c1 * c2;
        }
    }
    for (auto it = r.coeffs.begin(); it != r.coeffs.end();) {
        if (it->second == 0) {
            it = r.coeffs.erase(it);
        } else {
            ++it;
        }
    }
    return r;
}

std::string LaurentPoly::pretty() const {
    if (coeffs.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        int e = it->first;
        long long c = it->second;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        long long a = std::llabs(c);
        if (e == 0) {
            out << a;
        } else {
            if (a != 1) out << a << "*";
            out << "t";
            if (e != 2) {
                out << "^";
                if (e % 2 == 0) {
                    out << e / 2;
                } else {
                    out << "{" << e << "/2}";
                }
            }
        }
        first = false;
    }
    return out.str();
}

LaurentPoly normalize_alexander(const std::map<int, long long>& plain) {
    std::map<int, long long> p;
    for (const auto& [e, c] : plain) {
        if (c != 0) p[e] = c;
    }
    if (p.empty()) {
        throw NormalizationImpossible("zero polynomial");
    }
    int lo = p.begin()->first;
    int hi = p.rbegin()->first;
    LaurentPoly out;
    for (const auto& [e, c] : p) {
        out.coeffs[2 * e - (lo + hi)] = c;
    }
    if (!out.symmetric()) {
        throw NormalizationImpossible("polynomial is not symmetric");
    }
    long long total = out.at_one();
    if (total == -1) {
        for (auto& [e, c] : out.coeffs) {
            (void)e;
            c = -c;
        }
        total = 1;
    }
    if (total != 1) {
        throw NormalizationImpossible("value at t = 1 is not ±1");
    }
    return out;
}

}  // namespace floerglue::knotio
