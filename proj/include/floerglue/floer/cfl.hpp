/**
 * @file cfl.hpp
 * @brief Sector complexes CFL_• of a thin knot: assembly from master-complex
 *        slices, the A->C closing perturbation, and per-sector flags.
 */
#pragma once

#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "floerglue/homalg/chainmap.hpp"
#include "floerglue/homalg/complex.hpp"
#include "floerglue/model/master.hpp"

namespace floerglue::floer {

/** The A->C correction system has no solution. */
struct PerturbationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * One sector of CFL_• at an odd relative index spinc2.  Generators are copies
 * of master-complex slices, stored stratum by stratum (A, BX, BY, C), every
 * one carrying alex2 = spinc2.  The assembled differential consists of the
 * box arrows internal to BX and BY plus the position pairing O : A -> C,
 * which doubles as the connecting map of the sector's flag.
 */
struct SectorModel {
    int spinc2 = 0;
    homalg::GradedComplex total;
    std::vector<std::string> a_ids, bx_ids, by_ids, c_ids;
    /** O as (A id, C id) pairs in stored order. */
    std::vector<std::pair<std::string, std::string>> o_pairs;
    /** Raw stratum-crossing candidates keyed by shared master origin; these
     *  are identically zero for thin inputs because the slice supports of the
     *  paired strata are disjoint. */
    homalg::F2Matrix cross_a_bx;  ///< rows = BX, cols = A
    homalg::F2Matrix cross_by_c;  ///< rows = C,  cols = BY
    /** O as a chain map: source = total, target = the C-stratum subcomplex. */
    homalg::ChainMap connecting;

    /** {|A|, |BX|, |BY|, |C|}. */
    std::array<int, 4> dims() const;
};

/** Build one sector; throws std::invalid_argument unless spinc2 is odd. */
SectorModel build_cfl_sector(const model::MasterComplex& mk, int spinc2);
SectorModel build_cfl_sector(const knotio::KnotData& k, int spinc2);

/** Every sector with a nonzero underlying module, keyed by odd spinc2
 *  (support is contained in |spinc2| <= 2·genus + 1). */
std::map<int, SectorModel> build_cfl_sectors(const model::MasterComplex& mk);

/** The C stratum / the C+BX+BY strata as subcomplexes of the sector total. */
homalg::GradedComplex sector_minus(const SectorModel& sec);
homalg::GradedComplex sector_zero(const SectorModel& sec);

/** The {-,0,+} flag of one sector (connecting = O, alex2 shift 0). */
homalg::Flag sector_flag(const SectorModel& sec);

using CflFlag = std::map<int, homalg::Flag>;

/** sector_flag over build_cfl_sectors, keyed by odd spinc2. */
CflFlag build_cfl_flag(const model::MasterComplex& mk);

/**
 * Close a proposed differential whose square need not vanish by adding a
 * GF(2) correction X supported on maslov-drop-1 entries from the listed A
 * columns into the listed C rows (so X∘X = 0 as the index sets are disjoint).
 * Returns the validated complex unchanged when d∘d = 0 already; throws
 * PerturbationFailure when the linear system D·X + X·D = D·D is unsolvable.
 */
homalg::GradedComplex perturb_to_complex(std::vector<homalg::Generator> gens,
                                         std::vector<std::set<int>> cols,
                                         const std::vector<int>& a_cols,
                                         const std::vector<int>& c_rows,
                                         bool preserve_alex2 = true);

}  // namespace floerglue::floer
