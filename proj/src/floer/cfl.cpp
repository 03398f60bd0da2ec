/**
 * @file cfl.cpp
 * @brief CFL_• sector assembly and the A->C closing perturbation.
 */
#include "floerglue/floer/cfl.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

namespace floerglue::floer {

namespace {

using homalg::F2Matrix;
using homalg::GradedComplex;
using homalg::Generator;
using homalg::Mode;
using homalg::Tag;

/** Copy the master arrows whose endpoints both lie in one stratum. */
void embed_arrows(const model::MasterComplex& mk,
                  const std::map<int, int>& position,
                  std::vector<std::set<int>>& cols) {
    for (const auto& [orig, here] : position) {
        for (int r : mk.complex.cols[static_cast<std::size_t>(orig)]) {
            auto it = position.find(r);
            if (it != position.end())
                cols[static_cast<std::size_t>(here)].insert(it->second);
        }
    }
}

/** Nonzero entry wherever the two strata copy the same master generator. */
F2Matrix origin_overlap(const std::vector<int>& row_orig,
                        const std::vector<int>& col_orig) {
    F2Matrix m{static_cast<int>(row_orig.size()),
               static_cast<int>(col_orig.size()),
               {}};
    for (std::size_t r = 0; r < row_orig.size(); ++r)
        for (std::size_t c = 0; c < col_orig.size(); ++c)
            if (row_orig[r] == col_orig[c])
                m.entries.insert({static_cast<int>(r), static_cast<int>(c)});
    return m;
}

}  // namespace

std::array<int, 4> SectorModel::dims() const {
    return {static_cast<int>(a_ids.size()), static_cast<int>(bx_ids.size()),
            static_cast<int>(by_ids.size()), static_cast<int>(c_ids.size())};
}

SectorModel build_cfl_sector(const model::MasterComplex& mk, int spinc2) {
    if (spinc2 % 2 == 0)
        throw std::invalid_argument("spinc2 must be odd");
    const int ell = (spinc2 + 1) / 2;
    const int m = (std::abs(spinc2) + 1) / 2;
    const int c = mk.c();

    SectorModel sec;
    sec.spinc2 = spinc2;

    const std::vector<int> a_orig = mk.slice_ids(ell);
    const std::vector<int> bx_orig = mk.sub_ids(-m);
    const std::vector<int> by_orig = mk.quot_ids(m);
    const std::vector<int> c_orig = mk.slice_ids(-ell);
    if (a_orig.size() != c_orig.size())
        throw std::logic_error("paired slices have different sizes");

    std::vector<Generator> gens;
    auto add = [&](const char* prefix, int orig, int mu, Tag tag,
                   std::vector<std::string>& ids) {
        const Generator& og = mk.complex.generators[static_cast<std::size_t>(orig)];
        Generator g;
        g.id = std::string(prefix) + "(" + og.id + ")";
        g.maslov = mu;
        g.alex2 = spinc2;
        g.tag = tag;
        g.label = og.id;
        ids.push_back(g.id);
        gens.push_back(g);
    };

    for (int o : a_orig) add("A", o, 1 - ell + c, Tag::A, sec.a_ids);
    std::map<int, int> bx_pos, by_pos;
    for (int o : bx_orig) {
        bx_pos[o] = static_cast<int>(gens.size());
        add("BX", o, mk.complex.generators[static_cast<std::size_t>(o)].maslov,
            Tag::BX, sec.bx_ids);
    }
    for (int o : by_orig) {
        by_pos[o] = static_cast<int>(gens.size());
        add("BY", o,
            mk.complex.generators[static_cast<std::size_t>(o)].maslov -
                std::abs(spinc2),
            Tag::BY, sec.by_ids);
    }
    const int c_base = static_cast<int>(gens.size());
    for (int o : c_orig) add("C", o, -ell + c, Tag::C, sec.c_ids);

    std::vector<std::set<int>> cols(gens.size());
    embed_arrows(mk, bx_pos, cols);
    embed_arrows(mk, by_pos, cols);
    std::vector<int> a_idx, c_idx;
    for (std::size_t i = 0; i < a_orig.size(); ++i) {
        cols[i].insert(c_base + static_cast<int>(i));
        a_idx.push_back(static_cast<int>(i));
        c_idx.push_back(c_base + static_cast<int>(i));
        sec.o_pairs.emplace_back(sec.a_ids[i], sec.c_ids[i]);
    }

    sec.cross_a_bx = origin_overlap(bx_orig, a_orig);
    sec.cross_by_c = origin_overlap(c_orig, by_orig);

    sec.total = perturb_to_complex(std::move(gens), std::move(cols), a_idx,
                                   c_idx, /*preserve_alex2=*/true);

    sec.connecting.source = sec.total;
    sec.connecting.target = sector_minus(sec);
    sec.connecting.matrix =
        F2Matrix{static_cast<int>(sec.c_ids.size()), sec.total.dim(), {}};
    for (std::size_t i = 0; i < sec.o_pairs.size(); ++i)
        sec.connecting.matrix.entries.insert(
            {static_cast<int>(i), sec.total.index_of(sec.o_pairs[i].first)});
    sec.connecting.alex2_shift = 0;
    sec.connecting.maslov_shift = -1;
    return sec;
}

SectorModel build_cfl_sector(const knotio::KnotData& k, int spinc2) {
    return build_cfl_sector(model::build_master(k), spinc2);
}

std::map<int, SectorModel> build_cfl_sectors(const model::MasterComplex& mk) {
    std::map<int, SectorModel> out;
    const int top = 2 * mk.genus + 1;
    for (int s2 = -top; s2 <= top; s2 += 2) {
        SectorModel sec = build_cfl_sector(mk, s2);
        if (sec.total.dim() > 0) out.emplace(s2, std::move(sec));
    }
    return out;
}

homalg::GradedComplex sector_minus(const SectorModel& sec) {
    return homalg::sub_quotient(sec.total, sec.c_ids, Mode::SUB);
}

homalg::GradedComplex sector_zero(const SectorModel& sec) {
    std::vector<std::string> ids = sec.c_ids;
    ids.insert(ids.end(), sec.bx_ids.begin(), sec.bx_ids.end());
    ids.insert(ids.end(), sec.by_ids.begin(), sec.by_ids.end());
    return homalg::sub_quotient(sec.total, ids, Mode::SUB);
}

homalg::Flag sector_flag(const SectorModel& sec) {
    homalg::Flag f;
    f.plus = sec.total;
    f.zero_ids = sec.c_ids;
    f.zero_ids.insert(f.zero_ids.end(), sec.bx_ids.begin(), sec.bx_ids.end());
    f.zero_ids.insert(f.zero_ids.end(), sec.by_ids.begin(), sec.by_ids.end());
    f.minus_ids = sec.c_ids;
    f.connecting = sec.connecting;
    homalg::validate_flag(f);
    return f;
}

CflFlag build_cfl_flag(const model::MasterComplex& mk) {
    CflFlag out;
    for (const auto& [s2, sec] : build_cfl_sectors(mk))
        out.emplace(s2, sector_flag(sec));
    return out;
}

namespace {

std::vector<std::set<int>> square(const std::vector<std::set<int>>& cols) {
    std::vector<std::set<int>> out(cols.size());
    for (std::size_t co = 0; co < cols.size(); ++co)
        for (int mid : cols[co])
            for (int r : cols[static_cast<std::size_t>(mid)]) {
                auto [it, fresh] = out[co].insert(r);
                if (!fresh) out[co].erase(it);
            }
    return out;
}

}  // namespace

homalg::GradedComplex perturb_to_complex(std::vector<homalg::Generator> gens,
                                         std::vector<std::set<int>> cols,
                                         const std::vector<int>& a_cols,
                                         const std::vector<int>& c_rows,
                                         bool preserve_alex2) {
    const int n = static_cast<int>(gens.size());
    if (static_cast<int>(cols.size()) != n)
        throw std::invalid_argument("column count does not match generators");
    {
        std::set<int> a(a_cols.begin(), a_cols.end());
        for (int r : c_rows)
            if (a.count(r))
                throw std::invalid_argument("A and C index sets overlap");
    }

    std::vector<std::set<int>> dsq = square(cols);
    bool closed = true;
    for (const auto& s : dsq)
        if (!s.empty()) {
            closed = false;
            break;
        }
    if (closed)
        return homalg::make_complex(std::move(gens), std::move(cols),
                                    preserve_alex2);

    // Admissible correction slots: (row r in C, column a in A), maslov drop 1.
    std::vector<std::pair<int, int>> slots;
    for (int a : a_cols)
        for (int r : c_rows) {
            const auto& ga = gens[static_cast<std::size_t>(a)];
            const auto& gr = gens[static_cast<std::size_t>(r)];
            if (ga.maslov - 1 != gr.maslov) continue;
            if (preserve_alex2 ? ga.alex2 != gr.alex2 : ga.alex2 < gr.alex2)
                continue;
            slots.emplace_back(r, a);
        }

    // Equations (one per matrix position): D·X + X·D = D·D over GF(2).
    std::map<std::pair<int, int>, std::set<int>> eqs;
    auto toggle = [](std::set<int>& s, int v) {
        auto [it, fresh] = s.insert(v);
        if (!fresh) s.erase(it);
    };
    for (std::size_t k = 0; k < slots.size(); ++k) {
        const auto [r, a] = slots[k];
        for (int i : cols[static_cast<std::size_t>(r)])
            toggle(eqs[{i, a}], static_cast<int>(k));  // (D·X)_{i,a}
        for (int j = 0; j < n; ++j)
            if (cols[static_cast<std::size_t>(j)].count(a))
                toggle(eqs[{r, j}], static_cast<int>(k));  // (X·D)_{r,j}
    }
    for (int co = 0; co < n; ++co)
        for (int r : dsq[static_cast<std::size_t>(co)])
            eqs.try_emplace({r, co});  // ensure every rhs entry has an equation

    // Gaussian elimination, variables in slot order.
    struct Eq {
        std::set<int> lhs;
        bool rhs = false;
    };
    std::vector<Eq> rows;
    for (const auto& [pos, lhs] : eqs) {
        Eq e;
        e.lhs = lhs;
        e.rhs = dsq[static_cast<std::size_t>(pos.second)].count(pos.first) > 0;
        if (!e.lhs.empty() || e.rhs) rows.push_back(std::move(e));
    }
    std::vector<int> value(slots.size(), 0);
    std::vector<bool> used(rows.size(), false);
    std::vector<std::pair<int, std::size_t>> pivots;  // (variable, row)
    for (std::size_t v = 0; v < slots.size(); ++v) {
        std::size_t pick = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (!used[i] && rows[i].lhs.count(static_cast<int>(v))) {
                pick = i;
                break;
            }
        if (pick == rows.size()) continue;
        used[pick] = true;
        pivots.emplace_back(static_cast<int>(v), pick);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == pick || !rows[i].lhs.count(static_cast<int>(v))) continue;
            for (int w : rows[pick].lhs) toggle(rows[i].lhs, w);
            rows[i].rhs = rows[i].rhs != rows[pick].rhs;
        }
    }
    for (const auto& e : rows)
        if (e.lhs.empty() && e.rhs)
            throw PerturbationFailure(
                "no A->C correction closes the differential");
    for (const auto& [v, row] : pivots) {
        bool val = rows[row].rhs;
        for (int w : rows[row].lhs)
            if (w != v && value[static_cast<std::size_t>(w)]) val = !val;
        value[static_cast<std::size_t>(v)] = val ? 1 : 0;
    }

    for (std::size_t k = 0; k < slots.size(); ++k)
        if (value[k]) toggle(cols[static_cast<std::size_t>(slots[k].second)],
                             slots[k].first);
    dsq = square(cols);
    for (const auto& s : dsq)
        if (!s.empty())
            throw PerturbationFailure(
                "no A->C correction closes the differential");
    return homalg::make_complex(std::move(gens), std::move(cols),
                                preserve_alex2);
}

}  // namespace floerglue::floer
