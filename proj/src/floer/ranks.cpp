/**
 * @file ranks.cpp
 * @brief Rank tables and degree-extreme families for the sector theories.
 */
#include "floerglue/floer/ranks.hpp"

namespace floerglue::floer {

namespace {

using homalg::GradedComplex;
using homalg::RankTable;
using homalg::Tag;

void accumulate(RankTable& into, const RankTable& from) {
    for (const auto& [key, r] : from) into[key] += r;
}

/** The sector total with the O arrows deleted (strata-internal differential). */
GradedComplex without_o(const SectorModel& sec) {
    std::vector<std::set<int>> cols = sec.total.cols;
    for (const auto& [aid, cid] : sec.o_pairs)
        cols[static_cast<std::size_t>(sec.total.index_of(aid))].erase(
            sec.total.index_of(cid));
    return homalg::make_complex(sec.total.generators, std::move(cols),
                                sec.total.preserve_alex2);
}

/** The CFK total with every alex2-dropping (cross-sector) arrow deleted. */
GradedComplex without_links(const GradedComplex& total) {
    std::vector<std::set<int>> cols(total.cols.size());
    for (std::size_t c = 0; c < total.cols.size(); ++c)
        for (int r : total.cols[c])
            if (total.generators[static_cast<std::size_t>(r)].alex2 ==
                total.generators[c].alex2)
                cols[c].insert(r);
    return homalg::make_complex(total.generators, std::move(cols),
                                total.preserve_alex2);
}

}  // namespace

homalg::MaslovTable hfl_ranks(const SectorModel& sec) {
    return homalg::homology_by_maslov(sec.total);
}

homalg::RankTable hfk_ranks(const model::MasterComplex& mk) {
    RankTable out;
    const int c = mk.c();
    for (int s = -mk.genus; s <= mk.genus; ++s)
        if (mk.abs_at(s) > 0) out[{s + c, 2 * s}] = mk.abs_at(s);
    return out;
}

homalg::RankTable total_homology(const std::map<int, SectorModel>& family,
                                 bool include_connecting) {
    RankTable out;
    for (const auto& [s2, sec] : family)
        accumulate(out, homalg::homology(include_connecting ? sec.total
                                                            : without_o(sec)));
    return out;
}

homalg::RankTable total_homology(const CfkModel& m, bool include_connecting) {
    return homalg::homology(include_connecting ? m.total
                                               : without_links(m.total));
}

std::map<int, homalg::GradedComplex> cfl_stratum_family(
    const model::MasterComplex& mk, Stratum st) {
    std::map<int, GradedComplex> out;
    for (const auto& [s2, sec] : build_cfl_sectors(mk)) {
        switch (st) {
            case Stratum::MINUS: out.emplace(s2, sector_minus(sec)); break;
            case Stratum::ZERO: out.emplace(s2, sector_zero(sec)); break;
            case Stratum::PLUS: out.emplace(s2, sec.total); break;
        }
    }
    return out;
}

std::map<int, homalg::GradedComplex> cfk_stratum_family(const CfkModel& m,
                                                        Stratum st) {
    std::map<int, GradedComplex> out;
    for (const auto& [s, sec] : m.sectors) {
        switch (st) {
            case Stratum::MINUS:
                out.emplace(2 * s, cfk_strata(sec, {Tag::C}));
                break;
            case Stratum::ZERO:
                out.emplace(2 * s,
                            cfk_strata(sec, {Tag::C, Tag::BX, Tag::BY}));
                break;
            case Stratum::PLUS: out.emplace(2 * s, sec.complex); break;
        }
    }
    return out;
}

}  // namespace floerglue::floer
