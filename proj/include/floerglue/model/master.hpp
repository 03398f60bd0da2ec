/**
 * @file master.hpp
 * @brief Filtered master complex of a thin knot: one survivor plus two-step
 *        boxes, built from (Delta, sigma).
 */
#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "floerglue/homalg/complex.hpp"
#include "floerglue/homalg/serialize.hpp"
#include "floerglue/knotio/table.hpp"

namespace floerglue::model {

/** Input (Delta, sigma) is not of alternating (thin) type. */
struct NotThin : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * Box census of the master complex: doubled level of each box top -> count
 * (zero counts omitted), plus the doubled level of the lone survivor
 * (= -sigma).
 */
struct BoxProfile {
    std::map<int, int> boxes;
    int survivor_level = 0;

    bool operator==(const BoxProfile& o) const = default;
    int count(int level2) const {
        auto it = boxes.find(level2);
        return it == boxes.end() ? 0 : it->second;
    }
};

/**
 * The master complex in its canonical generator order: survivor "p" first
 * (maslov 0), then per descending level s the boxes "x{s}_{i}" (maslov
 * s + sigma/2) -> "y{s-1}_{i}" (one maslov and one level lower).  The
 * bookkeeping maps index generators by undoubled level for slice surgery.
 */
struct MasterComplex {
    homalg::GradedComplex complex;
    BoxProfile profile;
    int sigma = 0;
    int genus = 0;
    int survivor = 0;                       // generator index of "p"
    std::map<int, std::vector<int>> box_x;  // undoubled top level -> x indices
    std::map<int, std::vector<int>> box_y;  // undoubled bottom level -> y ids
    std::map<int, int> abs_coeff;           // undoubled level -> |a_s|

    int c() const { return sigma / 2; }
    int survivor_s() const { return -sigma / 2; }
    int level_of(int i) const {
        return complex.generators[static_cast<std::size_t>(i)].alex2 / 2;
    }
    int abs_at(int s) const {
        auto it = abs_coeff.find(s);
        return it == abs_coeff.end() ? 0 : it->second;
    }
    /** Slice order at level s: x tops, then y bottoms, then the survivor. */
    std::vector<int> slice_ids(int s) const;
    /** Generators in levels <= smax (stored order). */
    std::vector<int> sub_ids(int smax) const;
    /** Generators in levels >= smin (stored order). */
    std::vector<int> quot_ids(int smin) const;
};

/**
 * Build the master complex from a knot's (Delta, sigma) via the descending
 * box recursion b_s = |a_s| - b_{s+1} - [s = -sigma/2].  Throws NotThin when
 * the coefficients are not of alternating type (value at 1 not +-1, magnitudes
 * not symmetric, signs not alternating, |sigma|/2 beyond the genus, a
 * negative box count, or the recursion failing to close at the bottom).
 */
MasterComplex build_master(const knotio::KnotData& k);

/** Rebuild the canonical master complex from its box census. */
MasterComplex master_from_profile(const BoxProfile& p, int sigma);

enum class SliceMode { MINUS, PLUS };

/**
 * Filtration slice: MINUS is the subcomplex on levels < ell2 (doubled),
 * PLUS the quotient by it (levels >= ell2).
 */
homalg::GradedComplex g_slice(const MasterComplex& m, int ell2, SliceMode mode);

/** Single-level slice at exactly level2, with zero differential. */
homalg::GradedComplex assoc_graded(const MasterComplex& m, int level2);

/** Ranks of all associated-graded pieces keyed (maslov, alex2). */
homalg::RankTable assoc_graded_ranks(const MasterComplex& m);

nlohmann::ordered_json master_to_json(const MasterComplex& m);
MasterComplex master_from_json(const nlohmann::ordered_json& j);

}  // namespace floerglue::model
