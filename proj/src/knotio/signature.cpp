/**
 * @file signature.cpp
 * @brief Knot signature by exact rational congruence diagonalization.
 */
#include <algorithm>
#include <numeric>
#include <vector>

#include "floerglue/knotio/seifert.hpp"

namespace floerglue::knotio {

namespace {

/** Exact rational with gcd-reduced long long numerator/denominator. */
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n, long long d = 1) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }
    bool is_zero() const { return num == 0; }
    bool positive() const { return num > 0; }

    Rat operator+(const Rat& o) const {
        return Rat(num * o.den + o.num * den, den * o.den);
    }
    Rat operator-(const Rat& o) const {
        return Rat(num * o.den - o.num * den, den * o.den);
    }
    Rat operator*(const Rat& o) const { return Rat(num * o.num, den * o.den); }
    Rat operator/(const Rat& o) const { return Rat(num * o.den, den * o.num); }
};

/** Signature of a symmetric integer matrix (congruence diagonalization;
 *  zero-diagonal blocks paired off by a row/column addition first). */
long long signature_sym(const IntMatrix& m) {
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<Rat>> a(static_cast<std::size_t>(n),
                                    std::vector<Rat>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                Rat(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
    }
    std::vector<int> act(static_cast<std::size_t>(n));
    std::iota(act.begin(), act.end(), 0);
    long long sig = 0;
    while (!act.empty()) {
        int piv = -1;
        for (int i : act) {
            if (!a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]
                     .is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv < 0) {
            int pi = -1;
            int pj = -1;
            for (int i : act) {
                for (int j : act) {
                    if (j != i &&
                        !a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                             .is_zero()) {
                        pi = i;
                        pj = j;
                        break;
                    }
                }
                if (pi >= 0) break;
            }
            if (pi < 0) break;  // all-zero block contributes nothing
            for (int k = 0; k < n; ++k) {
                a[static_cast<std::size_t>(pi)][static_cast<std::size_t>(k)] =
                    a[static_cast<std::size_t>(pi)][static_cast<std::size_t>(k)] +
                    a[static_cast<std::size_t>(pj)][static_cast<std::size_t>(k)];
            }
            for (int k = 0; k < n; ++k) {
                a[static_cast<std::size_t>(k)][static_cast<std::size_t>(pi)] =
                    a[static_cast<std::size_t>(k)][static_cast<std::size_t>(pi)] +
                    a[static_cast<std::size_t>(k)][static_cast<std::size_t>(pj)];
            }
            continue;
        }
        const Rat d = a[static_cast<std::size_t>(piv)][static_cast<std::size_t>(piv)];
        sig += d.positive() ? 1 : -1;
        act.erase(std::find(act.begin(), act.end(), piv));
        for (int i : act) {
            Rat f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(piv)] / d;
            if (f.is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                    f * a[static_cast<std::size_t>(piv)][static_cast<std::size_t>(j)];
            }
            for (int j = 0; j < n; ++j) {
                a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                    a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] -
                    f * a[static_cast<std::size_t>(j)][static_cast<std::size_t>(piv)];
            }
        }
    }
    return sig;
}

}  // namespace

long long signature(const SeifertData& s) {
    const auto& v = s.matrix;
    const int m = static_cast<int>(v.size());
    IntMatrix sym(static_cast<std::size_t>(m),
                  std::vector<long long>(static_cast<std::size_t>(m), 0));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            sym[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                v[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +
                v[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        }
    }
    return signature_sym(sym);
}

}  // namespace floerglue::knotio
