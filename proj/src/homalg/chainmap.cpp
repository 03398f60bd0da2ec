/**
 * @file chainmap.cpp
 * @brief Chain-map checks, flags, and the SES verifier.
 */
#include "floerglue/homalg/chainmap.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace floerglue::homalg {

bool ChainMap::commutes() const {
    // columns of f ∘ ∂_source vs ∂_target ∘ f, per source generator
    const auto fcols = matrix.col_sets();
    for (int c = 0; c < source.dim(); ++c) {
        std::set<int> lhs;  // f(∂_source c)
        for (int r : source.cols[c]) lhs = sym_diff(lhs, fcols[r]);
        std::set<int> rhs;  // ∂_target(f c)
        for (int t : fcols[c]) rhs = sym_diff(rhs, target.cols[t]);
        if (lhs != rhs) return false;
    }
    return true;
}

bool ChainMap::maslov_shift_ok() const {
    for (const auto& [r, c] : matrix.entries)
        if (target.generators[r].maslov !=
            source.generators[c].maslov + maslov_shift)
            return false;
    return true;
}

ChainMap identity_map(const GradedComplex& c) {
    ChainMap m;
    m.source = c;
    m.target = c;
    m.matrix.rows = c.dim();
    m.matrix.cols = c.dim();
    for (int i = 0; i < c.dim(); ++i) m.matrix.put(i, i);
    return m;
}

void validate_flag(const Flag& f) {
    std::set<std::string> zero(f.zero_ids.begin(), f.zero_ids.end());
    for (const auto& id : f.minus_ids)
        if (!zero.count(id))
            throw std::invalid_argument("minus stratum not inside zero: " + id);
    // strata closed under the differential (throws NotClosed otherwise)
    flag_minus(f);
    flag_zero(f);
    // connecting vanishes on the zero stratum
    for (const auto& [r, c] : f.connecting.matrix.entries)
        if (zero.count(f.plus.generators[c].id))
            throw std::invalid_argument("connecting map nonzero on zero stratum");
}

GradedComplex flag_minus(const Flag& f) {
    return sub_quotient(f.plus, f.minus_ids, Mode::SUB);
}

GradedComplex flag_zero(const Flag& f) {
    return sub_quotient(f.plus, f.zero_ids, Mode::SUB);
}

SesReport verify_ses(const ChainMap& f, const ChainMap& g) {
    SesReport rep;
    rep.f_chain = f.commutes();
    rep.g_chain = g.commutes();
    rep.f_injective = f.rank() == f.source.dim();
    rep.g_surjective = g.rank() == g.target.dim();

    const F2Matrix gf = mat_mul(g.matrix, f.matrix);
    rep.comp_zero = gf.is_zero();
    // with g∘f = 0: im f = ker g  iff  rank f = dim ker g = dim - rank g
    rep.exact = rep.comp_zero && f.rank() + g.rank() == g.source.dim();

    if (!rep.f_chain) rep.failures.push_back("anticommutation: f is not a chain map");
    if (!rep.g_chain) rep.failures.push_back("anticommutation: g is not a chain map");
    if (!rep.f_injective) rep.failures.push_back("injectivity: f not injective");
    if (!rep.g_surjective) rep.failures.push_back("surjectivity: g not surjective");
    if (!rep.comp_zero) rep.failures.push_back("composite: g∘f ≠ 0");
    if (!rep.exact) rep.failures.push_back("exactness: im f ≠ ker g");
    return rep;
}

std::pair<ChainMap, ChainMap> ses_maps(const Flag& flag) {
    const GradedComplex zero = flag_zero(flag);
    ChainMap f;
    f.source = zero;
    f.target = flag.plus;
    f.matrix.rows = flag.plus.dim();
    f.matrix.cols = zero.dim();
    for (int c = 0; c < zero.dim(); ++c)
        f.matrix.put(flag.plus.index_of(zero.generators[c].id), c);

    ChainMap g;
    g.source = flag.plus;
    g.target = flag.connecting.target;
    g.matrix = flag.connecting.matrix;
    g.alex2_shift = flag.connecting.alex2_shift;
    g.maslov_shift = flag.connecting.maslov_shift;
    return {f, g};
}

}  // namespace floerglue::homalg
