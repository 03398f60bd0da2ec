/**
 * @file chainmap.hpp
 * @brief Chain maps between graded complexes, the {-,0,+} flag type, and the
 *        short-exact-sequence verifier.
 */
#pragma once

#include <string>
#include <vector>

#include "floerglue/homalg/complex.hpp"

namespace floerglue::homalg {

/**
 * GF(2) chain map.  matrix(r, c) relates target generator r to source
 * generator c; declared grading shifts apply to every nonzero entry.
 */
struct ChainMap {
    GradedComplex source;
    GradedComplex target;
    F2Matrix matrix;  ///< rows = target generators, cols = source generators
    int alex2_shift = 0;
    int maslov_shift = 0;

    /** ∂_target ∘ f == f ∘ ∂_source over GF(2). */
    bool commutes() const;
    /** Every nonzero entry realizes the declared maslov shift. */
    bool maslov_shift_ok() const;
    int rank() const { return rank_f2(matrix); }
};

/** Identity-shaped map between complexes of equal dimension (by position). */
ChainMap identity_map(const GradedComplex& c);

/**
 * The {-,0,+} flag: nested strata of one plus complex plus the connecting
 * map ∂′ from the A-stratum onto a minus stratum (the same sector for CFL,
 * the next lower sector for CFK — hence connecting.target may belong to a
 * different sector's complex).
 */
struct Flag {
    GradedComplex plus;
    std::vector<std::string> zero_ids;
    std::vector<std::string> minus_ids;
    ChainMap connecting;  ///< source = plus; target = the minus-stratum complex
};

/** minus_ids ⊆ zero_ids, strata differential-closed, connecting vanishes on
 *  the zero stratum; throws NotClosed / std::invalid_argument on violation. */
void validate_flag(const Flag& f);

/** The minus / zero stratum as a subcomplex of plus. */
GradedComplex flag_minus(const Flag& f);
GradedComplex flag_zero(const Flag& f);

/** Per-condition result of the short-exact-sequence check
 *  0 -> zero -> plus -> minus(shifted) -> 0. */
struct SesReport {
    bool f_chain = false;       ///< f commutes with differentials
    bool g_chain = false;       ///< g commutes with differentials (anticommutation)
    bool f_injective = false;
    bool g_surjective = false;
    bool comp_zero = false;     ///< g∘f = 0
    bool exact = false;         ///< im f = ker g
    std::vector<std::string> failures;

    bool pass() const {
        return f_chain && g_chain && f_injective && g_surjective && comp_zero &&
               exact;
    }
};

/** Check the five exactness conditions plus the anticommutation identity. */
SesReport verify_ses(const ChainMap& f, const ChainMap& g);

/** Build the SES maps (inclusion of the zero stratum, ρ∘projection onto the
 *  minus stratum) realized by a flag, ready for verify_ses. */
std::pair<ChainMap, ChainMap> ses_maps(const Flag& f);

}  // namespace floerglue::homalg
