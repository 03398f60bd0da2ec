/**
 * @file ranks.hpp
 * @brief Rank tables, direct-sum totals, and degree-extreme families over the
 *        CFL_• / CFK_• sectors.
 */
#pragma once

#include <map>

#include "floerglue/floer/cfk.hpp"
#include "floerglue/floer/cfl.hpp"

namespace floerglue::floer {

/** Maslov-graded homology of one assembled sector (pairing O included). */
homalg::MaslovTable hfl_ranks(const SectorModel& sec);

/** Knot-Floer rank table {(s + sigma/2, 2s) -> |a_s|}. */
homalg::RankTable hfk_ranks(const model::MasterComplex& mk);

/** Direct-sum homology over all sectors, keyed (maslov, spinc2); with
 *  include_connecting false the O arrows are removed first. */
homalg::RankTable total_homology(const std::map<int, SectorModel>& family,
                                 bool include_connecting);

/** Homology of the cross-sector CFK total, keyed (maslov, 2s); with
 *  include_connecting false the sector-linking arrows are removed, leaving
 *  the block-diagonal direct sum. */
homalg::RankTable total_homology(const CfkModel& m, bool include_connecting);

enum class Stratum { MINUS, ZERO, PLUS };

/** Stratum family for degree-extreme extraction, keyed by odd spinc2. */
std::map<int, homalg::GradedComplex> cfl_stratum_family(
    const model::MasterComplex& mk, Stratum st);

/** Stratum family for degree-extreme extraction, keyed by even spinc2 = 2s. */
std::map<int, homalg::GradedComplex> cfk_stratum_family(const CfkModel& m,
                                                        Stratum st);

}  // namespace floerglue::floer
