/**
 * @file master.cpp
 * @brief Thin-knot master complex construction and slices.
 */
#include "floerglue/model/master.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace floerglue::model {

using homalg::Generator;
using homalg::GradedComplex;
using homalg::Tag;

std::vector<int> MasterComplex::slice_ids(int s) const {
    std::vector<int> ids;
    auto bx = box_x.find(s);
    if (bx != box_x.end()) ids.insert(ids.end(), bx->second.begin(), bx->second.end());
    auto by = box_y.find(s);
    if (by != box_y.end()) ids.insert(ids.end(), by->second.begin(), by->second.end());
    if (survivor_s() == s) ids.push_back(survivor);
    return ids;
}

std::vector<int> MasterComplex::sub_ids(int smax) const {
    std::vector<int> ids;
    for (int i = 0; i < complex.dim(); ++i) {
        if (level_of(i) <= smax) ids.push_back(i);
    }
    return ids;
}

std::vector<int> MasterComplex::quot_ids(int smin) const {
    std::vector<int> ids;
    for (int i = 0; i < complex.dim(); ++i) {
        if (level_of(i) >= smin) ids.push_back(i);
    }
    return ids;
}

MasterComplex master_from_profile(const BoxProfile& p, int sigma) {
    if (sigma % 2 != 0) {
        throw std::invalid_argument("sigma must be even");
    }
    if (p.survivor_level != -sigma) {
        throw std::invalid_argument("survivor level must equal -sigma");
    }
    const int c = sigma / 2;
    const int sstar = -sigma / 2;
    int g = std::abs(sstar);
    for (const auto& [lev2, b] : p.boxes) {
        if (b < 0) throw std::invalid_argument("negative box count");
        if (lev2 % 2 != 0) throw std::invalid_argument("box level must be even");
        if (b > 0) g = std::max(g, std::abs(lev2) / 2);
    }

    MasterComplex m;
    m.profile = p;
    m.sigma = sigma;
    m.genus = g;
    m.survivor = 0;

    std::vector<Generator> gens;
    std::vector<std::set<int>> cols;
    gens.push_back(Generator{"p", 0, 2 * sstar, Tag::PLAIN, "p"});
    cols.emplace_back();
    for (int s = g; s >= -g; --s) {
        const int b = p.count(2 * s);
        for (int i = 0; i < b; ++i) {
            int xi = static_cast<int>(gens.size());
            gens.push_back(Generator{"x" + std::to_string(s) + "_" +
                                         std::to_string(i),
                                     s + c, 2 * s, Tag::PLAIN,
                                     "x" + std::to_string(s)});
            cols.emplace_back();
            int yi = static_cast<int>(gens.size());
            gens.push_back(Generator{"y" + std::to_string(s - 1) + "_" +
                                         std::to_string(i),
                                     s - 1 + c, 2 * (s - 1), Tag::PLAIN,
                                     "y" + std::to_string(s - 1)});
            cols.emplace_back();
            cols[static_cast<std::size_t>(xi)].insert(yi);
            m.box_x[s].push_back(xi);
            m.box_y[s - 1].push_back(yi);
        }
    }
    m.complex = homalg::make_complex(gens, cols, false);
    for (int s = -g; s <= g; ++s) {
        int a = p.count(2 * s) + p.count(2 * (s + 1)) + (sstar == s ? 1 : 0);
        if (a != 0) m.abs_coeff[s] = a;
    }
    return m;
}

MasterComplex build_master(const knotio::KnotData& k) {
    const int sigma = static_cast<int>(k.signature);
    if (sigma % 2 != 0) {
        throw std::invalid_argument("sigma must be even");
    }
    const int c = sigma / 2;
    const int sstar = -sigma / 2;

    std::map<int, long long> a;  // undoubled level -> coefficient
    for (const auto& [e2, coeff] : k.alexander.coeffs) {
        if (e2 % 2 != 0) {
            throw std::invalid_argument("half-integer Alexander exponents");
        }
        if (coeff != 0) a[e2 / 2] = coeff;
    }
    long long at_one = 0;
    for (const auto& [s, coeff] : a) {
        (void)s;
        at_one += coeff;
    }
    if (at_one != 1 && at_one != -1) {
        throw NotThin("Delta(1) != +-1");
    }
    int g = 0;
    for (const auto& [s, coeff] : a) {
        (void)coeff;
        g = std::max(g, std::abs(s));
    }
    auto abs_at = [&](int s) {
        auto it = a.find(s);
        return it == a.end() ? 0LL : std::llabs(it->second);
    };
    for (int s = -g; s <= g; ++s) {
        if (abs_at(s) != abs_at(-s)) {
            throw NotThin("Delta not symmetric");
        }
    }
    int eps = 0;
    for (int s = g; s >= -g; --s) {
        auto it = a.find(s);
        if (it == a.end()) continue;
        const int want = ((s + c) % 2 == 0) ? 1 : -1;
        const int e = (it->second * want > 0) ? 1 : -1;
        if (eps == 0) {
            eps = e;
        } else if (e != eps) {
            throw NotThin("coefficient signs not alternating");
        }
    }
    if (std::abs(sstar) > g) {
        throw NotThin("|sigma|/2 exceeds genus");
    }
    std::map<int, long long> b;
    b[g + 1] = 0;
    for (int s = g; s >= -g; --s) {
        b[s] = abs_at(s) - b[s + 1] - (s == sstar ? 1 : 0);
        if (b[s] < 0) {
            throw NotThin("negative box count b_" + std::to_string(s));
        }
    }
    if (b[-g] != 0) {
        throw NotThin("box recursion fails to close");
    }

    BoxProfile profile;
    profile.survivor_level = -sigma;
    for (const auto& [s, count] : b) {
        if (count > 0 && s <= g) {
            profile.boxes[2 * s] = static_cast<int>(count);
        }
    }
    return master_from_profile(profile, sigma);
}

GradedComplex g_slice(const MasterComplex& m, int ell2, SliceMode mode) {
    std::vector<int> ids;
    for (int i = 0; i < m.complex.dim(); ++i) {
        const int lev2 = m.complex.generators[static_cast<std::size_t>(i)].alex2;
        if (mode == SliceMode::MINUS ? (lev2 < ell2) : (lev2 >= ell2)) {
            ids.push_back(i);
        }
    }
    return homalg::sub_quotient_idx(
        m.complex, ids,
        mode == SliceMode::MINUS ? homalg::Mode::SUB : homalg::Mode::QUOTIENT);
}

GradedComplex assoc_graded(const MasterComplex& m, int level2) {
    std::vector<Generator> gens;
    for (int i = 0; i < m.complex.dim(); ++i) {
        const auto& gen = m.complex.generators[static_cast<std::size_t>(i)];
        if (gen.alex2 == level2) gens.push_back(gen);
    }
    std::vector<std::set<int>> cols(gens.size());
    return homalg::make_complex(gens, cols, false);
}

homalg::RankTable assoc_graded_ranks(const MasterComplex& m) {
    homalg::RankTable ranks;
    for (int i = 0; i < m.complex.dim(); ++i) {
        const auto& gen = m.complex.generators[static_cast<std::size_t>(i)];
        ++ranks[{gen.maslov, gen.alex2}];
    }
    return ranks;
}

nlohmann::ordered_json master_to_json(const MasterComplex& m) {
    nlohmann::ordered_json j = homalg::complex_to_json(m.complex);
    nlohmann::ordered_json prof = nlohmann::ordered_json::object();
    for (const auto& [lev2, count] : m.profile.boxes) {
        prof[std::to_string(lev2)] = count;
    }
    j["profile"] = prof;
    j["survivor"] = m.profile.survivor_level;
    return j;
}

MasterComplex master_from_json(const nlohmann::ordered_json& j) {
    BoxProfile p;
    for (const auto& [key, val] : j.at("profile").items()) {
        p.boxes[std::stoi(key)] = val.get<int>();
    }
    p.survivor_level = j.at("survivor").get<int>();
    MasterComplex m = master_from_profile(p, -p.survivor_level);
    GradedComplex stored = homalg::complex_from_json(j);
    if (stored.dim() != m.complex.dim()) {
        throw std::invalid_argument("profile disagrees with stored generators");
    }
    return m;
}

}  // namespace floerglue::model
