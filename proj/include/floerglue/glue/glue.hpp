/**
 * @file glue.hpp
 * @brief Gluing constructions: the parallel and perpendicular pairings and
 *        the two connected-sum models, with identification bookkeeping.
 */
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "floerglue/floer/cfk.hpp"
#include "floerglue/floer/cfl.hpp"
#include "floerglue/homalg/complex.hpp"
#include "floerglue/homalg/f2.hpp"
#include "floerglue/homalg/serialize.hpp"
#include "floerglue/knotio/table.hpp"
#include "floerglue/model/master.hpp"

namespace floerglue::glue {

/** Thrown when a connecting map fails to restrict to a bijection. */
struct NotIso : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * Result of a gluing operation.  The output is a quotient of the ambient
 * block sum / tensor product; dim(out) = dim(ambient) - killed - identified.
 */
struct GluedComplex {
    /** "parallel", "connsum", or "perp". */
    std::string op;
    /** Human-readable input labels, e.g. "3_1@+1". */
    std::vector<std::string> inputs;
    /** Spin-c label carried over from the inputs. */
    int spinc2 = 0;
    /** Block sum / tensor product before any identification. */
    homalg::GradedComplex ambient;
    /** Quotient by the gluing relations. */
    homalg::GradedComplex out;
    /** Generators set to zero outright (one singleton relation each). */
    int killed = 0;
    /** Span rank contributed beyond the killed generators. */
    int identified = 0;
    /** Two-term identification vectors requested. */
    int relations = 0;
};

/** Canonical JSON: provenance counters plus the output complex. */
nlohmann::ordered_json glued_to_json(const GluedComplex& g);

/**
 * Parallel pairing of one sector of each factor: tensor the two sector
 * complexes, kill zero-stratum x zero-stratum generators, and identify each
 * A x zero generator with its O-partner.  All output gradings are uniform
 * at alex2 = 0.
 */
GluedComplex glue_parallel(const knotio::KnotData& k1, int s2a,
                           const knotio::KnotData& k2, int s2b);

/**
 * Graded layer s of the connected sum: products of the two slice families
 * with added maslov gradings, alex2 = 2s, and zero differential.
 */
homalg::GradedComplex conn_sum_cfk(const model::MasterComplex& m1,
                                   const model::MasterComplex& m2, int s);
homalg::GradedComplex conn_sum_cfk(const knotio::KnotData& k1,
                                   const knotio::KnotData& k2, int s);

/**
 * Connected-sum telescope in one output spin-c grading s2out (odd): block
 * sum of sector tensor products over the splittings of (s2out+1)/2, with
 * zero x zero generators killed and adjacent blocks coupled through the
 * connecting bijections of both factors.
 */
GluedComplex conn_sum_cfl(const floer::CfkModel& f1, const floer::CfkModel& f2,
                          int s2out, const std::string& label1 = "lhs",
                          const std::string& label2 = "rhs");
GluedComplex conn_sum_cfl(const knotio::KnotData& k1, const knotio::KnotData& k2,
                          int s2out);

/** Both outputs of the perpendicular gluing. */
struct PerpGlue {
    /** Telescoped quotient with provenance counters. */
    GluedComplex cfk;
    /** Plain block-sum companion (no identifications). */
    homalg::GradedComplex cfl;
};

/**
 * Perpendicular gluing of one sector of the first factor against the whole
 * sector family of the second: blocks tensor the fixed sector with each
 * sector of the second factor; the quotient output kills zero x zero
 * generators and couples adjacent blocks through O and the connecting
 * bijection of the second factor.
 */
PerpGlue glue_perp(const floer::SectorModel& s1, const floer::CfkModel& f2,
                   const std::string& label1 = "lhs",
                   const std::string& label2 = "rhs");
PerpGlue glue_perp(const knotio::KnotData& k1, int s2a,
                   const knotio::KnotData& k2);

/**
 * Restriction of a flag's connecting map to the complement of the zero
 * stratum (columns in stored order, rows = the minus-stratum target).
 * Returns the square invertible matrix realizing the bijection; throws
 * NotIso when the restriction is not an isomorphism.
 */
homalg::F2Matrix connecting_iso_rho(const homalg::Flag& flag);

}  // namespace floerglue::glue
