/**
 * @file cfk.cpp
 * @brief CFK_• flag solver: sector layout, shift-candidate derivation,
 *        disjoint-pairing search, and cross-sector assembly.
 */
#include "floerglue/floer/cfk.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>

namespace floerglue::floer {

namespace {

using homalg::GradedComplex;
using homalg::Generator;
using homalg::Mode;
using homalg::Tag;
using model::MasterComplex;

int stratum_order(Tag t) {
    switch (t) {
        case Tag::A: return 2;
        case Tag::BX:
        case Tag::BY: return 1;
        case Tag::C: return 0;
        default: return -1;
    }
}

struct SGen {
    std::string name;
    int mu = 0;
    Tag st = Tag::PLAIN;
};

std::vector<std::pair<std::string, int>> h_table(const MasterComplex& mk,
                                                 int spinc2) {
    const int m = (std::abs(spinc2) + 1) / 2;
    const int c = mk.c();
    const int ss = mk.survivor_s();
    std::vector<std::pair<std::string, int>> gens;
    for (int i = 0; i < mk.profile.count(2 * m); ++i)
        gens.emplace_back("hx" + std::to_string(i), m + c - std::abs(spinc2));
    if (ss >= m) gens.emplace_back("hp+", -std::abs(spinc2));
    for (int i = 0; i < mk.profile.count(2 * (1 - m)); ++i)
        gens.emplace_back("hy" + std::to_string(i), -m + c);
    if (ss <= -m) gens.emplace_back("hp-", 0);
    return gens;
}

std::vector<SGen> sector_gens(const MasterComplex& mk, int s, int alpha,
                              int eta, int beta, int gamma) {
    const int c = mk.c();
    const int ss = mk.survivor_s();
    std::vector<SGen> gens;
    for (const auto& [tag, mu] : h_table(mk, 2 * s - 1))
        gens.push_back({"a." + tag, mu + alpha, Tag::A});
    for (int i = 0; i < mk.profile.count(2 * std::abs(s)); ++i)
        gens.push_back({"by.x" + std::to_string(i), std::abs(s) + c + eta,
                        Tag::BY});
    if (ss >= std::abs(s)) gens.push_back({"by.p", eta, Tag::BY});
    for (int i = 0; i < mk.profile.count(-2 * std::abs(s)); ++i)
        gens.push_back({"bx.y" + std::to_string(i),
                        -std::abs(s) - 1 + c + beta, Tag::BX});
    if (ss <= -std::abs(s) - 1) gens.push_back({"bx.p", beta, Tag::BX});
    for (const auto& [tag, mu] : h_table(mk, 2 * s + 1))
        gens.push_back({"c." + tag, mu + gamma, Tag::C});
    return gens;
}

bool allowed_edge(const SGen& u, const SGen& v) {
    if (stratum_order(u.st) <= stratum_order(v.st)) return false;
    return u.mu - 1 == v.mu;
}

bool backtrack(const std::vector<SGen>& gens, const std::vector<int>& free,
               std::vector<std::pair<int, int>>& pairs) {
    if (free.empty()) return true;
    const int u = free[0];
    std::vector<int> rest(free.begin() + 1, free.end());
    for (std::size_t k = 0; k < rest.size(); ++k) {
        const int v = rest[k];
        const SGen& a = gens[static_cast<std::size_t>(u)];
        const SGen& b = gens[static_cast<std::size_t>(v)];
        int src, tgt;
        if (allowed_edge(a, b)) {
            src = u;
            tgt = v;
        } else if (allowed_edge(b, a)) {
            src = v;
            tgt = u;
        } else {
            continue;
        }
        pairs.emplace_back(src, tgt);
        std::vector<int> next;
        next.reserve(rest.size() - 1);
        for (int w : rest)
            if (w != v) next.push_back(w);
        if (backtrack(gens, next, pairs)) return true;
        pairs.pop_back();
    }
    return false;
}

/** Perfect disjoint pairing on gens minus the excluded survivors; first-fit
 *  in stored order, src oriented toward the higher stratum. */
bool find_matching(const std::vector<SGen>& gens,
                   const std::vector<int>& survivors,
                   std::vector<std::pair<int, int>>& pairs) {
    std::set<int> excluded(survivors.begin(), survivors.end());
    std::vector<int> free;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (!excluded.count(static_cast<int>(i)))
            free.push_back(static_cast<int>(i));
    pairs.clear();
    return backtrack(gens, free, pairs);
}

struct ShiftCands {
    std::set<int> a, by, bx;
};

/** Candidate shifts per stratum, derived so every stratum aligns (directly or
 *  through one intermediate stratum) with the survivor target maslov s + c or
 *  the gamma-chained C layer. */
ShiftCands shift_candidates(const MasterComplex& mk, int s, int gamma) {
    const int tau = s + mk.c();
    std::vector<int> base_a;
    for (const auto& [tag, mu] : h_table(mk, 2 * s - 1)) base_a.push_back(mu);
    std::vector<int> base_by(
        static_cast<std::size_t>(mk.profile.count(2 * std::abs(s))),
        std::abs(s) + mk.c());
    if (mk.survivor_s() >= std::abs(s)) base_by.push_back(0);
    std::vector<int> base_bx(
        static_cast<std::size_t>(mk.profile.count(-2 * std::abs(s))),
        -std::abs(s) - 1 + mk.c());
    if (mk.survivor_s() <= -std::abs(s) - 1) base_bx.push_back(0);
    std::vector<int> mus_c;
    for (const auto& [tag, mu] : h_table(mk, 2 * s + 1))
        mus_c.push_back(mu + gamma);

    auto seed = [&](const std::vector<int>& base) {
        std::set<int> cs;
        for (int p : base) {
            cs.insert(tau - p);  // a generator survives at the target
            for (int m : mus_c) cs.insert(m + 1 - p);  // pairs onto C
        }
        return cs;
    };
    ShiftCands out{seed(base_a), seed(base_by), seed(base_bx)};
    auto couple = [&](std::set<int>& cand_b, const std::vector<int>& bbase) {
        const std::vector<int> bs(cand_b.begin(), cand_b.end());
        for (int e : bs)
            for (int q : bbase)
                for (int p : base_a) out.a.insert(q + e + 1 - p);
        const std::vector<int> as(out.a.begin(), out.a.end());
        for (int a : as)
            for (int p : base_a)
                for (int q : bbase) cand_b.insert(p + a - 1 - q);
    };
    for (int pass = 0; pass < 2; ++pass) {
        couple(out.by, base_by);
        couple(out.bx, base_bx);
    }
    return out;
}

std::vector<int> order_by_distance(const std::set<int>& vals, int ref) {
    std::vector<int> out(vals.begin(), vals.end());
    std::stable_sort(out.begin(), out.end(), [&](int x, int y) {
        return std::pair(std::abs(x - ref), x) < std::pair(std::abs(y - ref), y);
    });
    return out;
}

struct Solution {
    int alpha = 0, eta = 0, beta = 0;
    std::vector<SGen> gens;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> surv;
};

/** Enumerate feasible sector solutions in deterministic order; the visitor
 *  returns true to stop.  Returns whether the visitor stopped. */
bool for_each_solution(const MasterComplex& mk, int s, int gamma,
                       const std::function<bool(Solution&)>& visit) {
    const int g = mk.genus;
    const int target_mu = s + mk.c();
    const int target_n = std::abs(s) <= g ? mk.abs_at(s) : 0;
    const int conj_a = s;
    const int conj_eb = -std::abs(s) - 1;
    const ShiftCands cands = shift_candidates(mk, s, gamma);
    const bool has_a = !h_table(mk, 2 * s - 1).empty();
    const bool has_by = mk.profile.count(2 * std::abs(s)) > 0 ||
                        mk.survivor_s() >= std::abs(s);
    const bool has_bx = mk.profile.count(-2 * std::abs(s)) > 0 ||
                        mk.survivor_s() <= -std::abs(s) - 1;
    const std::vector<int> alphas =
        has_a ? order_by_distance(cands.a, conj_a) : std::vector<int>{conj_a};
    const std::vector<int> etas =
        has_by ? order_by_distance(cands.by, conj_eb) : std::vector<int>{conj_eb};
    const std::vector<int> betas =
        has_bx ? order_by_distance(cands.bx, conj_eb) : std::vector<int>{conj_eb};

    for (int alpha : alphas)
        for (int eta : etas)
            for (int beta : betas) {
                std::vector<SGen> gens =
                    sector_gens(mk, s, alpha, eta, beta, gamma);
                if (static_cast<int>(gens.size()) % 2 != target_n % 2) continue;
                std::vector<int> pool;
                for (std::size_t i = 0; i < gens.size(); ++i)
                    if (gens[i].mu == target_mu)
                        pool.push_back(static_cast<int>(i));
                if (target_n > static_cast<int>(pool.size())) continue;
                // lexicographic size-target_n subsets of pool
                std::vector<int> comb(static_cast<std::size_t>(target_n));
                for (int i = 0; i < target_n; ++i)
                    comb[static_cast<std::size_t>(i)] = i;
                while (true) {
                    std::vector<int> surv;
                    for (int idx : comb)
                        surv.push_back(pool[static_cast<std::size_t>(idx)]);
                    std::vector<std::pair<int, int>> pairs;
                    if (find_matching(gens, surv, pairs)) {
                        bool reject = false;
                        if (s == -g && g > 0) {
                            int zc = 0, zpairs = 0;
                            for (const auto& q : gens)
                                if (q.st != Tag::A) ++zc;
                            for (const auto& [pa, pb] : pairs)
                                if (gens[static_cast<std::size_t>(pa)].st !=
                                        Tag::A &&
                                    gens[static_cast<std::size_t>(pb)].st !=
                                        Tag::A)
                                    ++zpairs;
                            reject = zc - 2 * zpairs <= 0;
                        }
                        if (!reject) {
                            Solution sol{alpha, eta,   beta,
                                         gens,  pairs, surv};
                            if (visit(sol)) return true;
                        }
                    }
                    // advance combination
                    int i = target_n - 1;
                    const int n = static_cast<int>(pool.size());
                    while (i >= 0 &&
                           comb[static_cast<std::size_t>(i)] == n - target_n + i)
                        --i;
                    if (i < 0) break;
                    ++comb[static_cast<std::size_t>(i)];
                    for (int j = i + 1; j < target_n; ++j)
                        comb[static_cast<std::size_t>(j)] =
                            comb[static_cast<std::size_t>(j - 1)] + 1;
                }
            }
    return false;
}

struct Solved {
    Solution sol;
    int gamma = 0;
};

/** Cross-sector total with identity links A(s) -> C(s-1); nullopt when the
 *  link counts or maslov drops do not line up. */
std::optional<GradedComplex> build_total(const MasterComplex& mk,
                                         const std::map<int, Solved>& sectors) {
    std::vector<Generator> gens;
    std::map<std::pair<int, int>, int> index;
    for (int s = mk.genus; s >= -mk.genus; --s) {
        auto it = sectors.find(s);
        if (it == sectors.end()) continue;
        const auto& sg = it->second.sol.gens;
        for (std::size_t i = 0; i < sg.size(); ++i) {
            index[{s, static_cast<int>(i)}] = static_cast<int>(gens.size());
            Generator gen;
            gen.id = "s" + std::to_string(s) + ":" + sg[i].name;
            gen.maslov = sg[i].mu;
            gen.alex2 = 2 * s;
            gen.tag = sg[i].st;
            gen.label = sg[i].name;
            gens.push_back(gen);
        }
    }
    std::vector<std::set<int>> cols(gens.size());
    for (const auto& [s, sv] : sectors)
        for (const auto& [a, b] : sv.sol.pairs)
            cols[static_cast<std::size_t>(index.at({s, a}))].insert(
                index.at({s, b}));
    for (int s = mk.genus; s >= -mk.genus + 1; --s) {
        auto ia = sectors.find(s);
        auto ic = sectors.find(s - 1);
        if (ia == sectors.end() || ic == sectors.end()) continue;
        std::vector<int> a_ids, c_ids;
        const auto& ag = ia->second.sol.gens;
        const auto& cg = ic->second.sol.gens;
        for (std::size_t i = 0; i < ag.size(); ++i)
            if (ag[i].st == Tag::A) a_ids.push_back(static_cast<int>(i));
        for (std::size_t i = 0; i < cg.size(); ++i)
            if (cg[i].st == Tag::C) c_ids.push_back(static_cast<int>(i));
        if (a_ids.size() != c_ids.size()) return std::nullopt;
        for (std::size_t k = 0; k < a_ids.size(); ++k) {
            const SGen& ua = ag[static_cast<std::size_t>(a_ids[k])];
            const SGen& uc = cg[static_cast<std::size_t>(c_ids[k])];
            if (ua.mu - 1 != uc.mu) return std::nullopt;
            cols[static_cast<std::size_t>(index.at({s, a_ids[k]}))].insert(
                index.at({s - 1, c_ids[k]}));
        }
    }
    return homalg::make_complex(std::move(gens), std::move(cols), false);
}

bool total_rank_one(const MasterComplex& mk,
                    const std::map<int, Solved>& sectors) {
    auto tot = build_total(mk, sectors);
    if (!tot) return false;
    int rank = 0;
    for (const auto& [mu, r] : homalg::homology_by_maslov(*tot)) rank += r;
    return rank == 1;
}

std::string tag_label(Tag t) { return homalg::tag_name(t); }

}  // namespace

std::vector<std::pair<std::string, int>> cfk_h_table(
    const model::MasterComplex& mk, int spinc2) {
    return h_table(mk, spinc2);
}

CfkModel build_cfk_model(const model::MasterComplex& mk, int node_budget) {
    const int g = mk.genus;
    std::vector<int> order_s;
    for (int s = g; s >= -g; --s) order_s.push_back(s);
    std::map<int, Solved> sectors;
    int budget = node_budget;

    std::function<bool(std::size_t, std::optional<int>)> dfs =
        [&](std::size_t k, std::optional<int> alpha_prev) -> bool {
        if (budget <= 0) return false;
        if (k == order_s.size()) return total_rank_one(mk, sectors);
        const int s = order_s[k];
        int gamma = alpha_prev ? *alpha_prev - 1 : s;
        if (h_table(mk, 2 * s + 1).empty()) gamma = s;
        bool found = false;
        for_each_solution(mk, s, gamma, [&](Solution& sol) {
            --budget;
            if (budget <= 0) return true;
            sectors[s] = Solved{sol, gamma};
            if (dfs(k + 1, sol.alpha)) {
                found = true;
                return true;
            }
            sectors.erase(s);
            return false;
        });
        return found;
    };
    if (!dfs(0, std::nullopt))
        throw ConstraintUnsatisfiable("no flag assignment found (budget left " +
                                      std::to_string(budget) + ")");

    CfkModel out;
    out.sigma = mk.sigma;
    out.genus = g;
    for (const auto& [s, sv] : sectors) {
        CfkSector cs;
        cs.s = s;
        cs.alpha = sv.sol.alpha;
        cs.eta = sv.sol.eta;
        cs.beta = sv.sol.beta;
        cs.gamma = sv.gamma;
        std::vector<Generator> gens;
        for (const auto& q : sv.sol.gens) {
            Generator gen;
            gen.id = q.name;
            gen.maslov = q.mu;
            gen.alex2 = 2 * s;
            gen.tag = q.st;
            gen.label = tag_label(q.st);
            gens.push_back(gen);
            switch (q.st) {
                case Tag::A: cs.a_ids.push_back(q.name); break;
                case Tag::BX: cs.bx_ids.push_back(q.name); break;
                case Tag::BY: cs.by_ids.push_back(q.name); break;
                case Tag::C: cs.c_ids.push_back(q.name); break;
                default: break;
            }
        }
        std::vector<std::set<int>> cols(gens.size());
        for (const auto& [a, b] : sv.sol.pairs) {
            cols[static_cast<std::size_t>(a)].insert(b);
            cs.pairs.emplace_back(sv.sol.gens[static_cast<std::size_t>(a)].name,
                                  sv.sol.gens[static_cast<std::size_t>(b)].name);
        }
        for (int i : sv.sol.surv)
            cs.survivors.push_back(sv.sol.gens[static_cast<std::size_t>(i)].name);
        cs.complex = homalg::make_complex(std::move(gens), std::move(cols),
                                          /*preserve_alex2=*/true);
        out.sectors.emplace(s, std::move(cs));
    }
    auto tot = build_total(mk, sectors);
    if (!tot) throw std::logic_error("accepted flag lost its total complex");
    out.total = std::move(*tot);
    return out;
}

CfkModel build_cfk_model(const knotio::KnotData& k, int node_budget) {
    return build_cfk_model(model::build_master(k), node_budget);
}

homalg::GradedComplex cfk_strata(const CfkSector& sec,
                                 const std::set<homalg::Tag>& strata) {
    std::vector<int> keep;
    std::map<int, int> remap;
    for (int i = 0; i < sec.complex.dim(); ++i)
        if (strata.count(sec.complex.generators[static_cast<std::size_t>(i)].tag)) {
            remap[i] = static_cast<int>(keep.size());
            keep.push_back(i);
        }
    std::vector<Generator> gens;
    for (int i : keep) gens.push_back(sec.complex.generators[static_cast<std::size_t>(i)]);
    std::vector<std::set<int>> cols(gens.size());
    for (int i : keep)
        for (int r : sec.complex.cols[static_cast<std::size_t>(i)]) {
            auto it = remap.find(r);
            if (it != remap.end())
                cols[static_cast<std::size_t>(remap.at(i))].insert(it->second);
        }
    return homalg::make_complex(std::move(gens), std::move(cols),
                                sec.complex.preserve_alex2);
}

CfkFlag build_cfk_flag(const CfkModel& m) {
    CfkFlag out;
    for (const auto& [s, cs] : m.sectors) {
        homalg::Flag f;
        f.plus = cs.complex;
        for (const auto& gen : cs.complex.generators)
            if (gen.tag != Tag::A) f.zero_ids.push_back(gen.id);
        f.minus_ids = cs.c_ids;
        f.connecting.source = cs.complex;
        auto it = m.sectors.find(s - 1);
        if (it != m.sectors.end()) {
            const CfkSector& lo = it->second;
            if (cs.a_ids.size() != lo.c_ids.size())
                throw std::logic_error("connecting map is not a bijection");
            f.connecting.target =
                homalg::sub_quotient(lo.complex, lo.c_ids, Mode::SUB);
            f.connecting.matrix = homalg::F2Matrix{
                static_cast<int>(lo.c_ids.size()), cs.complex.dim(), {}};
            for (std::size_t j = 0; j < cs.a_ids.size(); ++j)
                f.connecting.matrix.entries.insert(
                    {static_cast<int>(j), cs.complex.index_of(cs.a_ids[j])});
        } else {
            if (!cs.a_ids.empty())
                throw std::logic_error("bottom sector has A generators");
            f.connecting.target = homalg::GradedComplex{};
            f.connecting.matrix = homalg::F2Matrix{0, cs.complex.dim(), {}};
        }
        f.connecting.alex2_shift = -2;
        f.connecting.maslov_shift = -1;
        homalg::validate_flag(f);
        out.emplace(2 * s, f);
    }
    return out;
}

CfkFlag build_cfk_flag(const model::MasterComplex& mk) {
    return build_cfk_flag(build_cfk_model(mk));
}

}  // namespace floerglue::floer
