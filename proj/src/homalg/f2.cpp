/**
 * @file f2.cpp
 * @brief GF(2) elimination kernels.
 */
#include "floerglue/homalg/f2.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace floerglue::homalg {

void BitVec::set(int i) {
    const auto word = static_cast<std::size_t>(i) / 64;
    if (word >= words_.size()) words_.resize(word + 1, 0);
    words_[word] |= std::uint64_t{1} << (i % 64);
}

bool BitVec::test(int i) const {
    const auto word = static_cast<std::size_t>(i) / 64;
    if (word >= words_.size()) return false;
    return (words_[word] >> (i % 64)) & 1;
}

bool BitVec::any() const {
    for (auto w : words_)
        if (w) return true;
    return false;
}

int BitVec::top() const {
    for (int word = static_cast<int>(words_.size()) - 1; word >= 0; --word)
        if (words_[word])
            return word * 64 + 63 - std::countl_zero(words_[word]);
    return -1;
}

BitVec& BitVec::operator^=(const BitVec& o) {
    if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
    for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

std::vector<int> BitVec::bits() const {
    std::vector<int> out;
    for (std::size_t word = 0; word < words_.size(); ++word) {
        std::uint64_t w = words_[word];
        while (w) {
            const int b = std::countr_zero(w);
            out.push_back(static_cast<int>(word) * 64 + b);
            w &= w - 1;
        }
    }
    return out;
}

std::vector<std::set<int>> F2Matrix::col_sets() const {
    std::vector<std::set<int>> out(cols);
    for (const auto& [r, c] : entries) out[c].insert(r);
    return out;
}

F2Matrix mat_mul(const F2Matrix& a, const F2Matrix& b) {
    if (a.cols != b.rows)
        throw std::invalid_argument("mat_mul: inner dimensions disagree");
    // column c of the product = a applied to column c of b
    F2Matrix out;
    out.rows = a.rows;
    out.cols = b.cols;
    auto acols = a.col_sets();
    for (const auto& [r, c] : b.entries) {
        // product column c accumulates a's column r
        for (int ar : acols[r]) {
            auto it = out.entries.find({ar, c});
            if (it == out.entries.end())
                out.entries.insert({ar, c});
            else
                out.entries.erase(it);
        }
    }
    return out;
}

int rank_cols(const std::vector<std::set<int>>& cols, int nrows) {
    // pivot (highest set row) -> reduced column
    std::map<int, BitVec> basis;
    int rank = 0;
    for (const auto& col : cols) {
        BitVec v(nrows);
        for (int r : col) v.set(r);
        for (;;) {
            const int p = v.top();
            if (p < 0) break;
            auto it = basis.find(p);
            if (it == basis.end()) {
                basis.emplace(p, v);
                ++rank;
                break;
            }
            v ^= it->second;
        }
    }
    return rank;
}

int rank_f2(const F2Matrix& m) { return rank_cols(m.col_sets(), m.rows); }

std::set<int> sym_diff(const std::set<int>& a, const std::set<int>& b) {
    std::set<int> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::inserter(out, out.begin()));
    return out;
}

std::set<int> F2Span::reduce(std::set<int> v) const {
    for (;;) {
        bool hit = false;
        for (const auto& [p, vec] : basis_) {
            if (v.count(p)) {
                v = sym_diff(v, vec);
                hit = true;
                break;
            }
        }
        if (!hit) return v;
    }
}

bool F2Span::add(const std::set<int>& v0) {
    auto v = reduce(v0);
    if (v.empty()) return false;
    const int p = *v.rbegin();
    for (auto& [q, vec] : basis_)
        if (vec.count(p)) vec = sym_diff(vec, v);
    basis_.emplace_back(p, std::move(v));
    return true;
}

}  // namespace floerglue::homalg
