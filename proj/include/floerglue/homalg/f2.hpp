/**
 * @file f2.hpp
 * @brief Sparse matrices over GF(2) and the dense bit-vector elimination kernel.
 */
#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace floerglue::homalg {

/** Dense bit vector; xor is the only arithmetic GF(2) needs. */
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(int nbits) : words_((nbits + 63) / 64, 0) {}

    void set(int i);
    bool test(int i) const;
    bool any() const;
    /** Highest set bit position, or -1 when empty. */
    int top() const;
    BitVec& operator^=(const BitVec& o);
    /** Ascending positions of set bits. */
    std::vector<int> bits() const;

private:
    std::vector<std::uint64_t> words_;
};

/** Sparse coordinate-set matrix over GF(2); a present (row, col) pair means 1. */
struct F2Matrix {
    int rows = 0;
    int cols = 0;
    std::set<std::pair<int, int>> entries;

    bool get(int r, int c) const { return entries.count({r, c}) != 0; }
    void put(int r, int c) { entries.insert({r, c}); }
    /** Column-major view: for each column, the set of rows with a 1. */
    std::vector<std::set<int>> col_sets() const;
    bool is_zero() const { return entries.empty(); }
};

/** Matrix product over GF(2) (rows(a) x cols(b)); requires a.cols == b.rows. */
F2Matrix mat_mul(const F2Matrix& a, const F2Matrix& b);

/** Rank of a list of column supports over GF(2); pivot = highest row index. */
int rank_cols(const std::vector<std::set<int>>& cols, int nrows);

/** Rank of a sparse matrix over GF(2) via elimination; deterministic. */
int rank_f2(const F2Matrix& m);

/**
 * Echelon span of column supports: pivot (= max coordinate) -> column support.
 * Used both for rank-style membership tests and for kernel comparisons.
 */
class F2Span {
public:
    /** Reduce v against the basis; empty result means v is in the span. */
    std::set<int> reduce(std::set<int> v) const;
    /** Insert v (reduced); returns true when v enlarged the span. */
    bool add(const std::set<int>& v);
    int dim() const { return static_cast<int>(basis_.size()); }

private:
    // pivot -> fully-reduced column support
    std::vector<std::pair<int, std::set<int>>> basis_;
};

/** Symmetric difference of two supports (GF(2) vector sum). */
std::set<int> sym_diff(const std::set<int>& a, const std::set<int>& b);

}  // namespace floerglue::homalg
