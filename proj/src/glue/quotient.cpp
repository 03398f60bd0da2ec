/**
 * @file quotient.cpp
 * @brief GF(2) span reduction and the induced quotient complex.
 */
#include "floerglue/glue/quotient.hpp"

namespace floerglue::glue {

namespace {

/** v += w over GF(2) (symmetric difference in place). */
void xor_into(SpanVector& v, const SpanVector& w) {
    for (int x : w) {
        auto it = v.find(x);
        if (it == v.end())
            v.insert(x);
        else
            v.erase(it);
    }
}

}  // namespace

SpanVector reduce_vec(SpanVector v, const std::map<int, SpanVector>& basis) {
    for (;;) {
        int hit = -1;
        for (int x : v) {
            if (basis.count(x)) {
                hit = x;
                break;
            }
        }
        if (hit < 0) return v;
        xor_into(v, basis.at(hit));
    }
}

std::map<int, SpanVector> rref(const std::vector<SpanVector>& vectors) {
    std::map<int, SpanVector> basis;
    for (const auto& v0 : vectors) {
        SpanVector v = reduce_vec(v0, basis);
        if (v.empty()) continue;
        const int pivot = *v.rbegin();
        for (auto& [q, w] : basis)
            if (w.count(pivot)) xor_into(w, v);
        basis.emplace(pivot, std::move(v));
    }
    return basis;
}

std::pair<homalg::GradedComplex, int>
quotient_complex(const homalg::GradedComplex& ambient,
                 const std::vector<SpanVector>& vectors,
                 const std::string& tag) {
    const auto basis = rref(vectors);

    auto boundary = [&ambient](const SpanVector& v) {
        SpanVector out;
        for (int x : v) xor_into(out, ambient.cols[x]);
        return out;
    };

    for (const auto& [pivot, w] : basis) {
        (void)pivot;
        if (!reduce_vec(boundary(w), basis).empty())
            throw IncompatibleRelation(tag + ": span not differential-closed");
    }

    std::vector<int> keep;
    std::vector<int> remap(ambient.dim(), -1);
    for (int i = 0; i < ambient.dim(); ++i) {
        if (basis.count(i)) continue;
        remap[i] = static_cast<int>(keep.size());
        keep.push_back(i);
    }

    std::vector<homalg::Generator> gens;
    gens.reserve(keep.size());
    for (int i : keep) gens.push_back(ambient.generators[i]);

    std::vector<std::set<int>> cols(keep.size());
    for (int i : keep) {
        const SpanVector dv = reduce_vec(boundary({i}), basis);
        for (int r : dv) cols[remap[i]].insert(remap[r]);
    }

    auto q = homalg::make_complex(std::move(gens), std::move(cols),
                                  ambient.preserve_alex2);
    return {std::move(q), static_cast<int>(basis.size())};
}

}  // namespace floerglue::glue
