/**
 * @file quotient.hpp
 * @brief Quotients of GF(2) chain complexes by differential-closed spans.
 */
#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "floerglue/homalg/complex.hpp"

namespace floerglue::glue {

/** Thrown when a requested identification span is not closed under the
 *  differential of the ambient complex. */
struct IncompatibleRelation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/** Sparse GF(2) vector over generator positions. */
using SpanVector = std::set<int>;

/** Reduce v against an echelon basis keyed by pivot (= largest position);
 *  an empty result means v lies in the span. */
SpanVector reduce_vec(SpanVector v, const std::map<int, SpanVector>& basis);

/** Fully reduced echelon basis of the span of the given vectors, keyed by
 *  pivot position. */
std::map<int, SpanVector> rref(const std::vector<SpanVector>& vectors);

/**
 * Quotient of the ambient complex by the span of the given vectors.
 *
 * The surviving generators are the positions that never occur as a pivot;
 * each keeps its gradings, and the induced differential is read off from
 * the canonical reduced representatives.  Throws IncompatibleRelation
 * ("<tag>: span not differential-closed") when the span is not preserved
 * by the differential.  Returns the quotient together with the rank of
 * the span.
 */
std::pair<homalg::GradedComplex, int>
quotient_complex(const homalg::GradedComplex& ambient,
                 const std::vector<SpanVector>& vectors,
                 const std::string& tag);

}  // namespace floerglue::glue
