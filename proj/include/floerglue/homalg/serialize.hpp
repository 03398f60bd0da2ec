/**
 * @file serialize.hpp
 * @brief Deterministic JSON (de)serialization for complexes and flags.
 *
 * Complex schema: {"generators":[{"id","maslov","alex2","tag","label"}...],
 *                  "differential":[[colId,rowId]...]}
 * with generators sorted by (alex2, maslov, id) and differential entries in
 * generator-sorted column-major order.  Flag files append
 * {"minus":[ids],"zero":[ids],"connecting":[[colId,rowId]...],"alex2_shift":n}.
 */
#pragma once

#include <string>

#include "json.hpp"

#include "floerglue/homalg/chainmap.hpp"
#include "floerglue/homalg/complex.hpp"

namespace floerglue::homalg {

using Json = nlohmann::ordered_json;

Json complex_to_json(const GradedComplex& c);
GradedComplex complex_from_json(const Json& j);

Json flag_to_json(const Flag& f);
/** Rebuild a flag from its file form.  The connecting target is the sector's
 *  own minus stratum when alex2_shift = 0, otherwise a zero-differential
 *  complex inferred from the connecting rows (the target lives in another
 *  sector's file). */
Flag flag_from_json(const Json& j);

/** Canonical byte form used for all emitted files. */
std::string dump_canonical(const Json& j);

}  // namespace floerglue::homalg
