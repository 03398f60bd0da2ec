/**
 * @file table.hpp
 * @brief Built-in alternating-knot table; invariants regenerated from stored
 *        PD codes at first use.
 */
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "floerglue/knotio/pd.hpp"
#include "floerglue/knotio/seifert.hpp"

namespace floerglue::knotio {

struct UnknownKnot : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/** A knot's classical invariant package: symmetrized Delta and sigma. */
struct KnotData {
    std::string name;
    LaurentPoly alexander;   // doubled exponents, symmetric, value 1 at t=1
    long long signature = 0; // even

    /** Seifert genus (= top doubled Alexander degree / 2 for these knots). */
    int genus() const { return alexander.top() / 2; }
    bool operator==(const KnotData& o) const = default;
};

/**
 * The built-in table: unknot, twist knots through 8 crossings, the other
 * alternating knots through 7_4, and T(2,2n+1) for n <= 5.  Entries carry
 * Delta and sigma computed from the stored PD codes, never hand-typed.
 */
const std::vector<KnotData>& knot_table();

/** Resolve a table name or torus alias like "T(2,5)"; throws UnknownKnot. */
const KnotData& lookup_knot(const std::string& name);

/**
 * Stored PD texts per canonical name, primary diagram first.  3_1 and 4_1
 * carry a second, non-minimal diagram; the unknot's entry is the empty text
 * (zero-crossing diagram).
 */
const std::map<std::string, std::vector<std::string>>& stored_diagrams();

/** Invariant package of an arbitrary diagram (name recorded as given). */
KnotData knot_from_diagram(const std::string& name, const Diagram& d);

/** Connected sum at the invariant level: Delta multiplies, sigma adds. */
KnotData product_knot(const KnotData& a, const KnotData& b);

nlohmann::ordered_json knot_to_json(const KnotData& k);

}  // namespace floerglue::knotio
