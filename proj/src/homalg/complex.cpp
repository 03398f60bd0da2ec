/**
 * @file complex.cpp
 * @brief Graded chain-complex calculus over GF(2).
 */
#include "floerglue/homalg/complex.hpp"

#include <algorithm>
#include <tuple>

namespace floerglue::homalg {

std::string tag_name(Tag t) {
    switch (t) {
        case Tag::A: return "A";
        case Tag::BX: return "BX";
        case Tag::BY: return "BY";
        case Tag::C: return "C";
        case Tag::PLAIN: return "PLAIN";
    }
    return "PLAIN";
}

Tag tag_from_name(const std::string& s) {
    if (s == "A") return Tag::A;
    if (s == "BX") return Tag::BX;
    if (s == "BY") return Tag::BY;
    if (s == "C") return Tag::C;
    return Tag::PLAIN;
}

F2Matrix GradedComplex::differential() const {
    F2Matrix m;
    m.rows = dim();
    m.cols = dim();
    for (int c = 0; c < static_cast<int>(cols.size()); ++c)
        for (int r : cols[c]) m.put(r, c);
    return m;
}

int GradedComplex::index_of(const std::string& id) const {
    for (int i = 0; i < dim(); ++i)
        if (generators[i].id == id) return i;
    return -1;
}

int GradedComplex::rank_d() const { return rank_cols(cols, dim()); }

GradedComplex make_complex(std::vector<Generator> gens,
                           std::vector<std::set<int>> cols,
                           bool preserve_alex2) {
    const int n = static_cast<int>(gens.size());
    cols.resize(n);
    for (int c = 0; c < n; ++c) {
        for (int r : cols[c]) {
            if (r < 0 || r >= n)
                throw std::out_of_range("differential entry out of bounds");
            if (gens[c].maslov - 1 != gens[r].maslov)
                throw DegreeViolation("maslov step != -1: " + gens[c].id +
                                      " -> " + gens[r].id);
            if (preserve_alex2 ? gens[r].alex2 != gens[c].alex2
                               : gens[r].alex2 > gens[c].alex2)
                throw FiltrationViolation("alex2 increases: " + gens[c].id +
                                          " -> " + gens[r].id);
        }
    }
    for (int c = 0; c < n; ++c) {
        std::set<int> acc;
        for (int r : cols[c]) acc = sym_diff(acc, cols[r]);
        if (!acc.empty())
            throw Dsquared("d^2 != 0 at column " + gens[c].id);
    }
    GradedComplex out;
    out.generators = std::move(gens);
    out.cols = std::move(cols);
    out.preserve_alex2 = preserve_alex2;
    return out;
}

namespace {

using SortKey = std::tuple<int, int, std::string>;

SortKey gen_key(const Generator& g) { return {g.alex2, g.maslov, g.id}; }

/** Core cancellation loop shared by reduce and reduce_filtered. */
GradedComplex reduce_impl(const GradedComplex& c, bool filtered) {
    std::vector<Generator> gens = c.generators;
    std::vector<std::set<int>> diff = c.cols;
    diff.resize(gens.size());
    std::set<int> alive;
    for (int i = 0; i < static_cast<int>(gens.size()); ++i) alive.insert(i);

    auto cancellable = [&](int col, int row) {
        if (!filtered) return true;
        return gens[col].tag == gens[row].tag &&
               gens[col].alex2 == gens[row].alex2;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> order(alive.begin(), alive.end());
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return gen_key(gens[a]) < gen_key(gens[b]);
        });
        for (int col : order) {
            if (diff[col].empty()) continue;
            int row = -1;
            for (int r : diff[col]) {
                if (!cancellable(col, r)) continue;
                if (row < 0 || gen_key(gens[r]) < gen_key(gens[row])) row = r;
            }
            if (row < 0) continue;
            // cancel (col -> row): every other column containing row absorbs col
            for (int c2 = 0; c2 < static_cast<int>(diff.size()); ++c2) {
                if (c2 != col && diff[c2].count(row))
                    diff[c2] = sym_diff(diff[c2], diff[col]);
            }
            alive.erase(col);
            alive.erase(row);
            diff[col].clear();
            diff[row].clear();
            for (auto& d : diff) {
                d.erase(row);
                d.erase(col);
            }
            changed = true;
            break;
        }
    }

    std::vector<int> kept(alive.begin(), alive.end());
    std::map<int, int> remap;
    for (int i = 0; i < static_cast<int>(kept.size()); ++i) remap[kept[i]] = i;
    GradedComplex out;
    out.preserve_alex2 = c.preserve_alex2;
    out.cols.resize(kept.size());
    for (int i = 0; i < static_cast<int>(kept.size()); ++i) {
        out.generators.push_back(gens[kept[i]]);
        for (int r : diff[kept[i]]) out.cols[i].insert(remap.at(r));
    }
    return out;
}

}  // namespace

GradedComplex reduce(const GradedComplex& c) { return reduce_impl(c, false); }

GradedComplex reduce_filtered(const GradedComplex& c) {
    return reduce_impl(c, true);
}

RankTable homology(const GradedComplex& c) {
    GradedComplex r = reduce(c);
    RankTable out;
    for (const auto& g : r.generators) ++out[{g.maslov, g.alex2}];
    return out;
}

MaslovTable homology_by_maslov(const GradedComplex& c) {
    std::map<int, int> dim_m;
    for (const auto& g : c.generators) ++dim_m[g.maslov];
    std::map<int, std::vector<std::set<int>>> cols_m;
    for (int col = 0; col < static_cast<int>(c.cols.size()); ++col)
        if (!c.cols[col].empty())
            cols_m[c.generators[col].maslov].push_back(c.cols[col]);
    std::map<int, int> rank_m;
    for (const auto& [m, cs] : cols_m) rank_m[m] = rank_cols(cs, c.dim());
    MaslovTable out;
    int total = 0;
    for (const auto& [m, d] : dim_m) {
        const int h = d - (rank_m.count(m) ? rank_m[m] : 0) -
                      (rank_m.count(m + 1) ? rank_m[m + 1] : 0);
        if (h < 0) throw std::logic_error("negative homology rank");
        if (h) out[m] = h;
        total += h;
    }
    if (total != c.dim() - 2 * c.rank_d())
        throw std::logic_error("homology total violates dim - 2 rank identity");
    return out;
}

GradedComplex sub_quotient_idx(const GradedComplex& c,
                               const std::vector<int>& keep, Mode mode) {
    std::set<int> keep_set(keep.begin(), keep.end());
    if (mode == Mode::SUB) {
        for (int col : keep)
            for (int r : c.cols[col])
                if (!keep_set.count(r))
                    throw NotClosed("sub span not differential-closed at " +
                                    c.generators[col].id);
    } else {
        for (int col = 0; col < c.dim(); ++col) {
            if (keep_set.count(col)) continue;
            for (int r : c.cols[col])
                if (keep_set.count(r))
                    throw NotClosed("quotient complement not closed at " +
                                    c.generators[col].id);
        }
    }
    std::map<int, int> remap;
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) remap[keep[i]] = i;
    std::vector<Generator> gens;
    std::vector<std::set<int>> cols(keep.size());
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
        gens.push_back(c.generators[keep[i]]);
        for (int r : c.cols[keep[i]])
            if (keep_set.count(r)) cols[i].insert(remap.at(r));
    }
    return make_complex(std::move(gens), std::move(cols), c.preserve_alex2);
}

GradedComplex sub_quotient(const GradedComplex& c,
                           const std::vector<std::string>& keep_ids, Mode mode) {
    std::vector<int> keep;
    for (const auto& id : keep_ids) {
        const int i = c.index_of(id);
        if (i < 0) throw NotClosed("unknown generator id: " + id);
        keep.push_back(i);
    }
    return sub_quotient_idx(c, keep, mode);
}

GradedComplex tensor(const GradedComplex& a, const GradedComplex& b) {
    const int n2 = b.dim();
    std::vector<Generator> gens;
    std::vector<std::set<int>> cols(a.dim() * b.dim());
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < n2; ++j) {
            Generator g;
            g.id = a.generators[i].id + "*" + b.generators[j].id;
            g.maslov = a.generators[i].maslov + b.generators[j].maslov;
            g.alex2 = a.generators[i].alex2 + b.generators[j].alex2;
            g.tag = Tag::PLAIN;
            gens.push_back(std::move(g));
        }
    }
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < n2; ++j) {
            const int col = i * n2 + j;
            for (int r : a.cols[i]) cols[col].insert(r * n2 + j);
            for (int r : b.cols[j]) cols[col].insert(i * n2 + r);
        }
    return make_complex(std::move(gens), std::move(cols),
                        a.preserve_alex2 && b.preserve_alex2);
}

GradedComplex dual_shift(const GradedComplex& c, Affine maslov, Affine alex2) {
    const bool transpose = maslov.sign == -1;
    std::vector<Generator> gens;
    for (const auto& g : c.generators) {
        Generator h = g;
        if (transpose) h.id = "d(" + g.id + ")";
        h.maslov = maslov.sign * g.maslov + maslov.offset;
        h.alex2 = alex2.sign * g.alex2 + alex2.offset;
        gens.push_back(std::move(h));
    }
    std::vector<std::set<int>> cols(c.dim());
    for (int col = 0; col < c.dim(); ++col)
        for (int r : c.cols[col]) {
            if (transpose)
                cols[r].insert(col);
            else
                cols[col].insert(r);
        }
    return make_complex(std::move(gens), std::move(cols), c.preserve_alex2);
}

bool is_contractible(const GradedComplex& c) { return reduce(c).dim() == 0; }

std::map<int, long long> euler_poly(const RankTable& ranks) {
    std::map<int, long long> out;
    for (const auto& [key, rank] : ranks) {
        const auto& [maslov, alex2] = key;
        const int parity = ((maslov % 2) + 2) % 2;
        out[alex2] += (parity == 0 ? 1LL : -1LL) * rank;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

std::pair<int, int> d_extremes(const std::map<int, GradedComplex>& family) {
    bool found = false;
    int dplus = 0, dminus = 0;
    for (const auto& [key, cx] : family) {
        if (is_contractible(cx)) continue;
        if (!found) {
            dplus = dminus = key;
            found = true;
        } else {
            dplus = std::max(dplus, key);
            dminus = std::min(dminus, key);
        }
    }
    if (!found) throw EmptyFamily("every sector contractible");
    return {dplus, dminus};
}

}  // namespace floerglue::homalg
