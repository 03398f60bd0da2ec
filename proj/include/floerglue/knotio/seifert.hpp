/**
 * @file seifert.hpp
 * @brief Seifert's algorithm on closed-braid-position diagrams: Seifert
 *        matrix, Alexander polynomial, signature.
 */
#pragma once

#include <stdexcept>
#include <vector>

#include "floerglue/knotio/laurent.hpp"
#include "floerglue/knotio/pd.hpp"

namespace floerglue::knotio {

/** The diagram closes to a link with more than one component. */
struct NotKnot : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * The diagram is valid but not in closed-braid position (under-strands not
 * running a -> a+1, Seifert circles not forming a path, or incompatible
 * cyclic orders), so the band-generator walk cannot recover a braid word.
 */
struct UnsupportedDiagram : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using IntMatrix = std::vector<std::vector<long long>>;

/**
 * Seifert linking matrix V on the band generators of the canonical Seifert
 * surface, plus the surface genus.  The matrix is 2g x 2g.
 */
struct SeifertData {
    IntMatrix matrix;
    int genus_of_surface = 0;
};

/**
 * Run Seifert's algorithm: smooth every crossing along orientation, recover
 * the braid word from the circle sequence, and pair the band generators by
 * linking number.  The empty diagram yields the 0x0 unknot sentinel.
 * Throws NotKnot on multi-component closures and UnsupportedDiagram when the
 * diagram is not in closed-braid position.
 */
SeifertData seifert_matrix(const Diagram& d);

/**
 * det(V - t V^T) normalized by a unit +-t^{k/2} to the symmetric form with
 * value 1 at t = 1.  Throws NormalizationImpossible on non-knot input.
 */
LaurentPoly alexander_polynomial(const SeifertData& s);

/**
 * Signature of V + V^T by exact congruence diagonalization over rationals;
 * zero-diagonal blocks are paired off and contribute 0.
 */
long long signature(const SeifertData& s);

}  // namespace floerglue::knotio
