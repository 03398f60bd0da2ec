/**
 * @file glue.cpp
 * @brief Parallel / perpendicular pairings and connected sums.
 */
#include "floerglue/glue/glue.hpp"

#include <utility>

#include "floerglue/glue/quotient.hpp"

namespace floerglue::glue {

namespace {

using homalg::GradedComplex;
using homalg::Generator;

/** Copy of a complex with every alex2 replaced by the given value. */
GradedComplex flatten_alex2(const GradedComplex& c, int value) {
    std::vector<Generator> gens = c.generators;
    for (auto& g : gens) g.alex2 = value;
    return homalg::make_complex(std::move(gens), c.cols, true);
}

std::string spin_label(const std::string& name, int s2) {
    return name + "@" + (s2 > 0 ? "+" : "") + std::to_string(s2);
}

/** One CFL sector prepared for gluing: flattened complex plus the positions
 *  of the A stratum, the zero strata, and the O pairing. */
struct SectorParts {
    GradedComplex cx;
    std::vector<int> a, zero;
    std::map<int, int> o;  // A position -> paired C position
    int n = 0;
};

SectorParts sector_parts(const floer::SectorModel& sec) {
    SectorParts p;
    p.cx = flatten_alex2(sec.total, 0);
    p.n = p.cx.dim();
    std::set<int> a_set;
    for (const auto& id : sec.a_ids) {
        const int i = sec.total.index_of(id);
        p.a.push_back(i);
        a_set.insert(i);
    }
    for (int i = 0; i < p.n; ++i)
        if (!a_set.count(i)) p.zero.push_back(i);
    for (const auto& [aid, cid] : sec.o_pairs)
        p.o[sec.total.index_of(aid)] = sec.total.index_of(cid);
    return p;
}

/** One CFK sector prepared for gluing (alex2 flattened to 0). */
struct CfkParts {
    GradedComplex cx;
    std::vector<int> a, c, zero;
    int n = 0;
};

/** Nonempty sectors s in [lo, hi], keyed by s. */
std::map<int, CfkParts> cfk_parts(const floer::CfkModel& f, int lo, int hi) {
    std::map<int, CfkParts> out;
    for (int s = lo; s <= hi; ++s) {
        auto it = f.sectors.find(s);
        if (it == f.sectors.end() || it->second.complex.dim() == 0) continue;
        CfkParts p;
        p.cx = flatten_alex2(it->second.complex, 0);
        p.n = p.cx.dim();
        for (int i = 0; i < p.n; ++i) {
            const auto tag = p.cx.generators[i].tag;
            if (tag == homalg::Tag::A)
                p.a.push_back(i);
            else
                p.zero.push_back(i);
            if (tag == homalg::Tag::C) p.c.push_back(i);
        }
        out.emplace(s, std::move(p));
    }
    return out;
}

/** Positional bijection sending the j-th A generator of the upper sector to
 *  the j-th C generator of the lower one. */
std::map<int, int> rho(const std::vector<int>& a_hi,
                       const std::vector<int>& c_lo) {
    if (a_hi.size() != c_lo.size())
        throw std::logic_error("connecting map not bijective");
    std::map<int, int> r;
    for (std::size_t i = 0; i < a_hi.size(); ++i) r[a_hi[i]] = c_lo[i];
    return r;
}

/** Block sum over ascending keys; generator ids gain a "b<key>:" prefix. */
struct Assembled {
    GradedComplex cx;
    std::map<int, int> offsets;  // block key -> first position
};

Assembled assemble(const std::map<int, GradedComplex>& blocks) {
    std::vector<Generator> gens;
    std::vector<std::set<int>> cols;
    Assembled out;
    for (const auto& [key, b] : blocks) {
        const int off = static_cast<int>(gens.size());
        out.offsets[key] = off;
        for (const auto& g : b.generators) {
            Generator h = g;
            h.id = "b" + std::to_string(key) + ":" + g.id;
            gens.push_back(std::move(h));
        }
        for (int j = 0; j < b.dim(); ++j) {
            std::set<int> col;
            for (int r : b.cols[j]) col.insert(off + r);
            cols.push_back(std::move(col));
        }
    }
    out.cx = homalg::make_complex(std::move(gens), std::move(cols), true);
    return out;
}

}  // namespace

nlohmann::ordered_json glued_to_json(const GluedComplex& g) {
    nlohmann::ordered_json j;
    j["op"] = g.op;
    j["inputs"] = g.inputs;
    j["spinc2"] = g.spinc2;
    j["ambient_dim"] = g.ambient.dim();
    j["killed"] = g.killed;
    j["identified"] = g.identified;
    j["relations"] = g.relations;
    j["complex"] = homalg::complex_to_json(g.out);
    return j;
}

GluedComplex glue_parallel(const knotio::KnotData& k1, int s2a,
                           const knotio::KnotData& k2, int s2b) {
    const SectorParts p1 = sector_parts(floer::build_cfl_sector(k1, s2a));
    const SectorParts p2 = sector_parts(floer::build_cfl_sector(k2, s2b));
    GluedComplex g;
    g.op = "parallel";
    g.inputs = {spin_label(k1.name, s2a), spin_label(k2.name, s2b)};
    g.spinc2 = s2a + s2b;
    g.ambient = homalg::tensor(p1.cx, p2.cx);
    const int n2 = p2.n;
    std::vector<SpanVector> vectors;
    for (int i : p1.zero)
        for (int j : p2.zero) vectors.push_back({i * n2 + j});
    g.killed = static_cast<int>(vectors.size());
    for (int a : p1.a)
        for (int j : p2.zero)
            vectors.push_back({a * n2 + j, p1.o.at(a) * n2 + j});
    g.relations = static_cast<int>(vectors.size()) - g.killed;
    auto [out, wrank] = quotient_complex(g.ambient, vectors, "parallel");
    g.out = std::move(out);
    g.identified = wrank - g.killed;
    return g;
}

homalg::GradedComplex conn_sum_cfk(const model::MasterComplex& m1,
                                   const model::MasterComplex& m2, int s) {
    std::vector<Generator> gens;
    for (int s1 = -m1.genus; s1 <= m1.genus; ++s1) {
        const int s2 = s - s1;
        if (s2 < -m2.genus || s2 > m2.genus) continue;
        for (int i1 : m1.slice_ids(s1)) {
            for (int i2 : m2.slice_ids(s2)) {
                const auto& g1 = m1.complex.generators[i1];
                const auto& g2 = m2.complex.generators[i2];
                Generator g;
                g.id = g1.id + "#" + g2.id;
                g.maslov = g1.maslov + g2.maslov;
                g.alex2 = 2 * s;
                gens.push_back(std::move(g));
            }
        }
    }
    std::vector<std::set<int>> cols(gens.size());
    return homalg::make_complex(std::move(gens), std::move(cols), true);
}

homalg::GradedComplex conn_sum_cfk(const knotio::KnotData& k1,
                                   const knotio::KnotData& k2, int s) {
    return conn_sum_cfk(model::build_master(k1), model::build_master(k2), s);
}

GluedComplex conn_sum_cfl(const floer::CfkModel& f1, const floer::CfkModel& f2,
                          int s2out, const std::string& label1,
                          const std::string& label2) {
    if (s2out % 2 == 0)
        throw std::invalid_argument(
            "conn_sum_cfl needs an odd output spin-c grading");
    const int S = (s2out + 1) / 2;
    const auto parts1 = cfk_parts(f1, -f1.genus - 1, f1.genus + 1);
    const auto parts2 = cfk_parts(f2, -f2.genus - 1, f2.genus + 1);

    std::map<int, GradedComplex> blocks;
    for (const auto& [q, p1] : parts1) {
        auto it = parts2.find(S - q);
        if (it == parts2.end()) continue;
        blocks.emplace(q, homalg::tensor(p1.cx, it->second.cx));
    }
    Assembled amb = assemble(blocks);

    GluedComplex g;
    g.op = "connsum";
    g.inputs = {label1, label2};
    g.spinc2 = s2out;
    g.ambient = amb.cx;

    std::vector<SpanVector> vectors;
    for (const auto& [q, off] : amb.offsets) {
        const auto& p1 = parts1.at(q);
        const auto& p2 = parts2.at(S - q);
        for (int i : p1.zero)
            for (int j : p2.zero) vectors.push_back({off + i * p2.n + j});
    }
    g.killed = static_cast<int>(vectors.size());

    for (const auto& [q, off] : amb.offsets) {
        auto hi = amb.offsets.find(q + 1);
        if (hi == amb.offsets.end()) continue;
        const auto& p1h = parts1.at(q + 1);
        const auto& p1l = parts1.at(q);
        const auto& p2h = parts2.at(S - q);
        const auto& p2l = parts2.at(S - q - 1);
        if (p1h.a.empty() || p2h.a.empty()) continue;
        const auto r1 = rho(p1h.a, p1l.c);
        const auto r2 = rho(p2h.a, p2l.c);
        for (int a1 : p1h.a)
            for (int a2 : p2h.a)
                vectors.push_back({off + r1.at(a1) * p2h.n + a2,
                                   hi->second + a1 * p2l.n + r2.at(a2)});
    }
    g.relations = static_cast<int>(vectors.size()) - g.killed;

    auto [out, wrank] = quotient_complex(amb.cx, vectors, "connsum");
    g.out = std::move(out);
    g.identified = wrank - g.killed;
    return g;
}

GluedComplex conn_sum_cfl(const knotio::KnotData& k1, const knotio::KnotData& k2,
                          int s2out) {
    return conn_sum_cfl(floer::build_cfk_model(k1), floer::build_cfk_model(k2),
                        s2out, k1.name, k2.name);
}

PerpGlue glue_perp(const floer::SectorModel& s1, const floer::CfkModel& f2,
                   const std::string& label1, const std::string& label2) {
    const SectorParts p1 = sector_parts(s1);
    const auto parts2 = cfk_parts(f2, -f2.genus - 1, f2.genus + 1);

    std::map<int, GradedComplex> blocks;
    for (const auto& [k, p2] : parts2)
        blocks.emplace(k, homalg::tensor(p1.cx, p2.cx));
    Assembled amb = assemble(blocks);

    PerpGlue res;
    res.cfl = amb.cx;

    GluedComplex g;
    g.op = "perp";
    g.inputs = {label1, label2};
    g.spinc2 = s1.spinc2;
    g.ambient = amb.cx;

    std::vector<SpanVector> vectors;
    for (const auto& [k, off] : amb.offsets) {
        const auto& p2 = parts2.at(k);
        for (int i : p1.zero)
            for (int j : p2.zero) vectors.push_back({off + i * p2.n + j});
    }
    g.killed = static_cast<int>(vectors.size());

    for (const auto& [k, off] : amb.offsets) {
        auto lo = amb.offsets.find(k - 1);
        if (lo == amb.offsets.end()) continue;
        const auto& p2h = parts2.at(k);
        const auto& p2l = parts2.at(k - 1);
        if (p1.a.empty() || p2h.a.empty()) continue;
        const auto r2 = rho(p2h.a, p2l.c);
        for (int a1 : p1.a)
            for (int a2 : p2h.a)
                vectors.push_back({off + p1.o.at(a1) * p2h.n + a2,
                                   lo->second + a1 * p2l.n + r2.at(a2)});
    }
    g.relations = static_cast<int>(vectors.size()) - g.killed;

    auto [out, wrank] = quotient_complex(amb.cx, vectors, "perp");
    g.out = std::move(out);
    g.identified = wrank - g.killed;
    res.cfk = std::move(g);
    return res;
}

PerpGlue glue_perp(const knotio::KnotData& k1, int s2a,
                   const knotio::KnotData& k2) {
    return glue_perp(floer::build_cfl_sector(k1, s2a),
                     floer::build_cfk_model(k2), spin_label(k1.name, s2a),
                     k2.name);
}

homalg::F2Matrix connecting_iso_rho(const homalg::Flag& flag) {
    const std::set<std::string> zero(flag.zero_ids.begin(),
                                     flag.zero_ids.end());
    std::vector<int> top_cols;
    for (int i = 0; i < flag.plus.dim(); ++i)
        if (!zero.count(flag.plus.generators[i].id)) top_cols.push_back(i);
    const auto& m = flag.connecting.matrix;
    homalg::F2Matrix r;
    r.rows = m.rows;
    r.cols = static_cast<int>(top_cols.size());
    for (int k = 0; k < r.cols; ++k)
        for (int row = 0; row < m.rows; ++row)
            if (m.get(row, top_cols[k])) r.put(row, k);
    if (r.rows != r.cols || homalg::rank_f2(r) != r.rows)
        throw NotIso("connecting map does not restrict to an isomorphism");
    return r;
}

}  // namespace floerglue::glue
