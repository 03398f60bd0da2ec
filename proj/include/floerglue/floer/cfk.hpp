/**
 * @file cfk.hpp
 * @brief CFK_• flag solver: per-sector strata with a shift assignment found
 *        by deterministic backtracking, plus the linked cross-sector total.
 */
#pragma once

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

/** No admissible shift assignment satisfies every sector constraint. */
struct ConstraintUnsatisfiable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * One solved CFK sector: the shift assignment (alpha for A, eta for BY, beta
 * for BX, gamma for C), the realized complex (every generator at alex2 = 2s,
 * differential = the disjoint pairing), stratum membership in stored order,
 * and the generators surviving to homology at maslov s + sigma/2.
 */
struct CfkSector {
    int s = 0;
    int alpha = 0;
    int eta = 0;
    int beta = 0;
    int gamma = 0;
    homalg::GradedComplex complex;
    std::vector<std::string> a_ids, bx_ids, by_ids, c_ids;
    std::vector<std::pair<std::string, std::string>> pairs;
    std::vector<std::string> survivors;
};

/** Solved sectors s = -genus..genus plus the cross-sector total whose links
 *  identify A(s) with C(s-1); its homology has rank one. */
struct CfkModel {
    int sigma = 0;
    int genus = 0;
    std::map<int, CfkSector> sectors;
    homalg::GradedComplex total;
};

/** Run the sector-by-sector search (s descending, each candidate shift
 *  ordered by distance from its reference value); throws
 *  ConstraintUnsatisfiable when the search space or node budget is
 *  exhausted. */
CfkModel build_cfk_model(const model::MasterComplex& mk, int node_budget = 20000);
CfkModel build_cfk_model(const knotio::KnotData& k, int node_budget = 20000);

/** Subcomplex of one sector spanned by the given strata: generators in
 *  stored order, arrows with both endpoints inside. */
homalg::GradedComplex cfk_strata(const CfkSector& sec,
                                 const std::set<homalg::Tag>& strata);

using CfkFlag = std::map<int, homalg::Flag>;

/** Per-sector flags keyed by even spinc2 = 2s.  The connecting map of sector
 *  s lands in the minus stratum of sector s-1 (alex2 shift -2) and is the
 *  zero map into the empty complex at the bottom sector. */
CfkFlag build_cfk_flag(const CfkModel& m);
CfkFlag build_cfk_flag(const model::MasterComplex& mk);

/** Reduced one-sector rank template [(tag, maslov)] that lays out the A / C
 *  strata; exposed for layout tests. */
std::vector<std::pair<std::string, int>> cfk_h_table(
    const model::MasterComplex& mk, int spinc2);

}  // namespace floerglue::floer
