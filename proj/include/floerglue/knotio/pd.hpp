/**
 * @file pd.hpp
 * @brief Planar-diagram (PD) codes: parsing, validation, serialization.
 */
#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace floerglue::knotio {

/** Malformed PD text; `offset` is the byte position of the offending token. */
struct SyntaxError : std::runtime_error {
    std::size_t offset;
    SyntaxError(const std::string& msg, std::size_t off)
        : std::runtime_error(msg + " (byte " + std::to_string(off) + ")"),
          offset(off) {}
};

/** Edge labels do not form the multiset {1,...,2L} with every label twice. */
struct EdgeCountError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/** The 4-valent graph implied by shared edge labels is not connected. */
struct Disconnected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * Knot projection as a list of crossings X(a,b,c,d): edge labels listed
 * counterclockwise starting from the incoming under-strand.  The empty
 * crossing list is the zero-crossing unknot.
 */
struct Diagram {
    std::vector<std::array<int, 4>> crossings;

    bool operator==(const Diagram& o) const = default;
    int edge_count() const { return 2 * static_cast<int>(crossings.size()); }
};

/**
 * Parse whitespace-separated "X(a,b,c,d)" tokens into a validated Diagram.
 * Throws SyntaxError (malformed or empty text), EdgeCountError (bad label
 * multiset), or Disconnected (split diagram).
 */
Diagram parse_pd(const std::string& text);

/** Inverse of parse_pd on nonempty diagrams: "X(a,b,c,d) X(...) ...". */
std::string serialize_pd(const Diagram& d);

nlohmann::ordered_json diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const nlohmann::ordered_json& j);

}  // namespace floerglue::knotio
