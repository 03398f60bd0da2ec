/**
 * @file complex.hpp
 * @brief Bigraded chain complexes over GF(2): construction, homology,
 *        sub/quotient, tensor, dual regrading, reduction, Euler polynomial,
 *        and d-extreme degree extraction.
 */
#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "floerglue/homalg/f2.hpp"

namespace floerglue::homalg {

/** Stratum tag ordering the filtration: C < B (BX, BY) < A; PLAIN = untagged. */
enum class Tag { A, BX, BY, C, PLAIN };

std::string tag_name(Tag t);
Tag tag_from_name(const std::string& s);

struct Generator {
    std::string id;     ///< unique within one complex
    int maslov = 0;     ///< absolute Maslov grading
    int alex2 = 0;      ///< doubled Alexander / relative-Spin^c grading
    Tag tag = Tag::PLAIN;
    std::string label;  ///< free-text provenance
};

struct Dsquared : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegreeViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FiltrationViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotClosed : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EmptyFamily : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * Finite bigraded chain complex over GF(2).  The differential is stored
 * column-sparse (cols[c] = row indices of ∂ applied to generator c) and is
 * exposed as an F2Matrix through differential().
 */
struct GradedComplex {
    std::vector<Generator> generators;
    std::vector<std::set<int>> cols;
    bool preserve_alex2 = false;  ///< when set, ∂ must preserve alex2 exactly

    int dim() const { return static_cast<int>(generators.size()); }
    F2Matrix differential() const;
    /** Index of the generator with the given id, or -1. */
    int index_of(const std::string& id) const;
    /** Rank of the differential over GF(2). */
    int rank_d() const;
};

enum class Mode { SUB, QUOTIENT };

/**
 * Validate and build a complex.  Throws DegreeViolation when an entry does not
 * drop maslov by exactly 1, FiltrationViolation when an entry increases alex2
 * (or changes it, when preserve_alex2 is set), Dsquared when ∂∘∂ ≠ 0.
 */
GradedComplex make_complex(std::vector<Generator> gens,
                           std::vector<std::set<int>> cols,
                           bool preserve_alex2 = false);

/** Homology rank table keyed by (maslov, alex2). */
using RankTable = std::map<std::pair<int, int>, int>;
/** Homology rank table keyed by maslov only. */
using MaslovTable = std::map<int, int>;

/** Bigraded homology ranks (via deterministic reduction to a minimal model). */
RankTable homology(const GradedComplex& c);

/** Maslov-graded homology ranks, with the total-rank identity
 *  Σ ranks = dim − 2·rank(∂) verified internally. */
MaslovTable homology_by_maslov(const GradedComplex& c);

/** Restrict to keep_ids (SUB) or quotient by the complement (QUOTIENT);
 *  throws NotClosed when the required span is not differential-closed. */
GradedComplex sub_quotient(const GradedComplex& c,
                           const std::vector<std::string>& keep_ids, Mode mode);
/** Same, by generator index; kept generators stay in the given order. */
GradedComplex sub_quotient_idx(const GradedComplex& c,
                               const std::vector<int>& keep, Mode mode);

/** Tensor product over GF(2): gradings add, Leibniz differential. */
GradedComplex tensor(const GradedComplex& a, const GradedComplex& b);

struct Affine {
    int sign = 1;  ///< +1 or -1
    int offset = 0;
};

/** Affine regrading; a maslov sign of -1 transposes the differential so the
 *  degree stays -1.  Validation errors propagate from make_complex. */
GradedComplex dual_shift(const GradedComplex& c, Affine maslov, Affine alex2);

/** Greedy Gaussian cancellation to the minimal model (zero differential).
 *  Pair choice is deterministic: lowest (alex2, maslov, id) column first,
 *  lowest (alex2, maslov, id) row within it. */
GradedComplex reduce(const GradedComplex& c);

/** Filtered variant: only cancels pairs within one stratum tag and one alex2
 *  level; the result may retain a differential. */
GradedComplex reduce_filtered(const GradedComplex& c);

/** True iff all homology ranks vanish (trivial chain homotopy type). */
bool is_contractible(const GradedComplex& c);

/** Signed generating polynomial Σ (−1)^maslov · rank · t^{alex2/2},
 *  returned as doubled-exponent -> coefficient. */
std::map<int, long long> euler_poly(const RankTable& ranks);

/** (d_plus, d_minus): extreme family keys with non-contractible value,
 *  reported in the family's own (doubled) key convention.
 *  Throws EmptyFamily when every member is contractible. */
std::pair<int, int> d_extremes(const std::map<int, GradedComplex>& family);

}  // namespace floerglue::homalg
