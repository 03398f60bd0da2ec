/**
 * @file test_glue.cpp
 * @brief Gluing tests: span quotients, the parallel pairing against Kunneth
 *        factorization, both connected-sum models against product tables,
 *        the perpendicular gluing goldens, and connecting-map bijectivity.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "floerglue/floer/cfk.hpp"
#include "floerglue/floer/cfl.hpp"
#include "floerglue/floer/ranks.hpp"
#include "floerglue/glue/glue.hpp"
#include "floerglue/glue/quotient.hpp"
#include "floerglue/homalg/serialize.hpp"
#include "floerglue/knotio/table.hpp"
#include "floerglue/model/master.hpp"

using namespace floerglue;
using glue::GluedComplex;
using glue::SpanVector;
using homalg::MaslovTable;

namespace {

const knotio::KnotData& K(const std::string& name) {
    return knotio::lookup_knot(name);
}

model::MasterComplex master_of(const std::string& name) {
    return model::build_master(K(name));
}

/** Shift-solver output, cached per knot (the search is the expensive part). */
const floer::CfkModel& cfk_of(const std::string& name) {
    static std::map<std::string, floer::CfkModel> cache;
    auto it = cache.find(name);
    if (it == cache.end())
        it = cache.emplace(name, floer::build_cfk_model(K(name))).first;
    return it->second;
}

MaslovTable h_plus(const std::string& name, int s2) {
    return floer::hfl_ranks(floer::build_cfl_sector(K(name), s2));
}

/** Closed-form sector homology: box cuts at the two slice levels plus the
 *  survivor when it sits inside the quotient / subcomplex range. */
MaslovTable h_formula(const model::MasterComplex& mk, int spinc2) {
    const int m = (std::abs(spinc2) + 1) / 2;
    const int c = mk.c();
    const int ss = mk.survivor_s();
    MaslovTable out;
    if (mk.profile.count(2 * m) > 0)
        out[m + c - std::abs(spinc2)] += mk.profile.count(2 * m);
    if (mk.profile.count(2 * (1 - m)) > 0)
        out[-m + c] += mk.profile.count(2 * (1 - m));
    if (ss >= m) out[-std::abs(spinc2)] += 1;
    if (ss <= -m) out[0] += 1;
    return out;
}

/** Rank table shifted so its top nonzero degree is 0 (grading-free shape). */
MaslovTable norm_shift(const MaslovTable& h) {
    MaslovTable out;
    if (h.empty()) return out;
    const int top = h.rbegin()->first;
    for (const auto& [mu, r] : h) out[mu - top] = r;
    return out;
}

MaslovTable convolve(const MaslovTable& h1, const MaslovTable& h2) {
    MaslovTable out;
    for (const auto& [m1, r1] : h1)
        for (const auto& [m2, r2] : h2) out[m1 + m2] += r1 * r2;
    return out;
}

int total_rank(const MaslovTable& h) {
    int r = 0;
    for (const auto& [mu, n] : h) r += n;
    return r;
}

void check_books(const GluedComplex& g) {
    CHECK(g.out.dim() == g.ambient.dim() - g.killed - g.identified);
    CHECK(g.identified == g.relations);
}

/** Homology of every graded layer of the connected sum, as (s, maslov) ->
 *  rank; each layer must live in a single maslov degree. */
std::map<std::pair<int, int>, int> sum_cfk_table(const std::string& n1,
                                                 const std::string& n2) {
    const auto m1 = master_of(n1);
    const auto m2 = master_of(n2);
    const int gg = m1.genus + m2.genus;
    std::map<std::pair<int, int>, int> out;
    for (int s = -gg - 1; s <= gg + 1; ++s) {
        const auto cx = glue::conn_sum_cfk(m1, m2, s);
        const auto h = homalg::homology_by_maslov(cx);
        REQUIRE(h.size() <= 1);
        for (const auto& [mu, r] : h) out[{s, mu}] = r;
    }
    return out;
}

/** The stored rank table re-keyed as (s, maslov) -> rank. */
std::map<std::pair<int, int>, int> hfk_smu(const model::MasterComplex& mk) {
    std::map<std::pair<int, int>, int> out;
    for (const auto& [key, r] : floer::hfk_ranks(mk))
        out[{key.second / 2, key.first}] = r;
    return out;
}

}  // namespace

TEST_CASE("quotient: reduction, rank, and identification") {
    const std::vector<SpanVector> vs = {{0, 1}, {1, 2}, {0, 2}};
    const auto basis = glue::rref(vs);
    CHECK(basis.size() == 2);
    CHECK(glue::reduce_vec({0, 2}, basis).empty());
    CHECK(!glue::reduce_vec({0}, basis).empty());

    // x1, x2 -> y; identifying x1 ~ x2 leaves a contractible complex
    std::vector<homalg::Generator> gens(3);
    gens[0] = {"x1", 1, 0, homalg::Tag::PLAIN, ""};
    gens[1] = {"x2", 1, 0, homalg::Tag::PLAIN, ""};
    gens[2] = {"y", 0, 0, homalg::Tag::PLAIN, ""};
    const std::vector<std::set<int>> cols = {{2}, {2}, {}};
    const auto cx = homalg::make_complex(gens, cols, true);

    const auto [q, rank] = glue::quotient_complex(cx, {{0, 1}}, "merge");
    CHECK(rank == 1);
    CHECK(q.dim() == 2);
    CHECK(homalg::homology(q).empty());

    // killing a generator whose boundary survives is rejected
    CHECK_THROWS_WITH_AS(glue::quotient_complex(cx, {{0}}, "cut"),
                         "cut: span not differential-closed",
                         glue::IncompatibleRelation);

    // killing the target first makes the span closed
    const auto [q2, rank2] = glue::quotient_complex(cx, {{2}, {0}}, "cut");
    CHECK(rank2 == 2);
    CHECK(q2.dim() == 1);
    CHECK(homalg::homology_by_maslov(q2) == MaslovTable{{1, 1}});
}

TEST_CASE("parallel gluing matches the worked example") {
    const GluedComplex g = glue::glue_parallel(K("3_1"), 1, K("3_1"), 1);
    CHECK(g.op == "parallel");
    CHECK(g.ambient.dim() == 16);
    CHECK(g.killed == 9);
    CHECK(g.identified == 3);
    CHECK(g.relations == 3);
    CHECK(g.out.dim() == 4);
    const auto h = homalg::homology_by_maslov(g.out);
    CHECK(h == MaslovTable{{-3, 1}, {-2, 1}});
    CHECK(total_rank(h) == 2);
    check_books(g);

    const GluedComplex u = glue::glue_parallel(K("unknot"), -1, K("unknot"), -1);
    CHECK(u.ambient.dim() == 4);
    CHECK(u.out.dim() == 2);
    CHECK(homalg::homology_by_maslov(u.out).empty());
    check_books(u);

    // one empty sector empties the whole pairing
    const GluedComplex e = glue::glue_parallel(K("3_1"), 1, K("unknot"), 1);
    CHECK(e.ambient.dim() == 0);
    CHECK(e.out.dim() == 0);
}

TEST_CASE("parallel gluing with a trivial strand preserves homology") {
    for (const std::string name : {"3_1", "4_1", "5_2", "6_2"}) {
        for (int s2 : {-1, 1}) {
            CAPTURE(name);
            CAPTURE(s2);
            const GluedComplex g =
                glue::glue_parallel(K(name), s2, K("unknot"), -1);
            check_books(g);
            CHECK(norm_shift(homalg::homology_by_maslov(g.out)) ==
                  norm_shift(h_plus(name, s2)));
        }
    }
}

TEST_CASE("parallel gluing bookkeeping and Kunneth factorization") {
    const std::vector<std::string> names = {"unknot", "3_1", "4_1", "5_2",
                                            "6_2"};
    for (const auto& n1 : names) {
        const int g1 = K(n1).genus();
        for (int s2a = -2 * g1 + 1; s2a <= 2 * g1 - 1; s2a += 2) {
            for (const auto& n2 : names) {
                const int g2 = K(n2).genus();
                for (int s2b = -2 * g2 + 1; s2b <= 2 * g2 - 1; s2b += 2) {
                    CAPTURE(n1);
                    CAPTURE(s2a);
                    CAPTURE(n2);
                    CAPTURE(s2b);
                    const GluedComplex g =
                        glue::glue_parallel(K(n1), s2a, K(n2), s2b);
                    check_books(g);
                    CHECK(homalg::homology_by_maslov(g.ambient) ==
                          convolve(h_plus(n1, s2a), h_plus(n2, s2b)));
                }
            }
        }
    }
}

TEST_CASE("connected sum of graded layers reproduces the product table") {
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"3_1", "3_1"}, {"3_1", "4_1"}, {"4_1", "4_1"}, {"3_1", "5_1"}};
    for (const auto& [n1, n2] : pairs) {
        CAPTURE(n1);
        CAPTURE(n2);
        const auto prod = knotio::product_knot(K(n1), K(n2));
        CHECK(sum_cfk_table(n1, n2) == hfk_smu(model::build_master(prod)));
    }

    // the granny knot's layer ranks, spelled out
    const std::map<std::pair<int, int>, int> granny = {{{2, 0}, 1},
                                                       {{1, -1}, 2},
                                                       {{0, -2}, 3},
                                                       {{-1, -3}, 2},
                                                       {{-2, -4}, 1}};
    CHECK(sum_cfk_table("3_1", "3_1") == granny);

    // a trivial factor reproduces the other knot's table
    for (const auto& k : knotio::knot_table()) {
        CAPTURE(k.name);
        CHECK(sum_cfk_table("unknot", k.name) ==
              hfk_smu(model::build_master(k)));
    }
}

TEST_CASE("connected-sum telescope: trivial factor reproduces the closed form") {
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"unknot", "3_1"},
        {"3_1", "unknot"},
        {"unknot", "4_1"},
        {"unknot", "5_1"},
        {"unknot", "unknot"}};
    for (const auto& [n1, n2] : pairs) {
        const auto prod_mk =
            model::build_master(knotio::product_knot(K(n1), K(n2)));
        const int gg = prod_mk.genus;
        for (int s2out = -2 * gg - 3; s2out <= 2 * gg + 3; s2out += 2) {
            CAPTURE(n1);
            CAPTURE(n2);
            CAPTURE(s2out);
            const GluedComplex g =
                glue::conn_sum_cfl(cfk_of(n1), cfk_of(n2), s2out, n1, n2);
            check_books(g);
            CHECK(norm_shift(homalg::homology_by_maslov(g.out)) ==
                  norm_shift(h_formula(prod_mk, s2out)));
        }
    }
}

TEST_CASE("connected-sum telescope: flagship rank tables") {
    const std::map<std::string, std::map<int, int>> want = {
        {"3_1#3_1", {{-3, 2}, {-1, 8}, {1, 6}, {3, 2}}},
        {"3_1#4_1", {{-3, 2}, {-1, 8}, {1, 8}, {3, 2}}},
        {"4_1#4_1", {{-3, 2}, {-1, 10}, {1, 10}, {3, 2}}},
        {"3_1#5_1", {{-5, 2}, {-3, 6}, {-1, 6}, {1, 8}, {3, 6}, {5, 2}}}};
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"3_1", "3_1"}, {"3_1", "4_1"}, {"4_1", "4_1"}, {"3_1", "5_1"}};
    for (const auto& [n1, n2] : pairs) {
        const int gg = K(n1).genus() + K(n2).genus();
        std::map<int, int> table;
        for (int s2out = -2 * gg - 3; s2out <= 2 * gg + 3; s2out += 2) {
            CAPTURE(n1);
            CAPTURE(n2);
            CAPTURE(s2out);
            const GluedComplex g =
                glue::conn_sum_cfl(cfk_of(n1), cfk_of(n2), s2out, n1, n2);
            check_books(g);
            const auto h = homalg::homology_by_maslov(g.out);
            if (std::abs(s2out) > 2 * gg + 1) CHECK(h.empty());
            if (total_rank(h) > 0) table[s2out] = total_rank(h);
        }
        CHECK(table == want.at(n1 + "#" + n2));
    }

    // total rank per output grading is symmetric in the two factors
    const std::vector<std::pair<std::string, std::string>> swaps = {
        {"3_1", "4_1"}, {"3_1", "5_1"}};
    for (const auto& [n1, n2] : swaps) {
        const int gg = K(n1).genus() + K(n2).genus();
        for (int s2out = -2 * gg - 1; s2out <= 2 * gg + 1; s2out += 2) {
            CAPTURE(n1);
            CAPTURE(n2);
            CAPTURE(s2out);
            const auto a =
                glue::conn_sum_cfl(cfk_of(n1), cfk_of(n2), s2out, n1, n2);
            const auto b =
                glue::conn_sum_cfl(cfk_of(n2), cfk_of(n1), s2out, n2, n1);
            CHECK(total_rank(homalg::homology_by_maslov(a.out)) ==
                  total_rank(homalg::homology_by_maslov(b.out)));
        }
    }

    CHECK_THROWS_AS(glue::conn_sum_cfl(cfk_of("3_1"), cfk_of("3_1"), 0),
                    std::invalid_argument);
}

TEST_CASE("connected-sum telescope: trefoil pair sector goldens") {
    struct Gold {
        int s2out, amb, killed, ident, out;
        MaslovTable h;
    };
    const std::vector<Gold> golds = {
        {-3, 42, 30, 4, 8, {{-4, 1}, {-3, 1}}},
        {-1, 67, 31, 8, 28, {{-5, 1}, {-4, 2}, {-3, 3}, {-2, 2}}},
        {1, 42, 10, 4, 28, {{-4, 2}, {-3, 2}, {-2, 1}, {-1, 1}}},
        {3, 9, 1, 0, 8, {{-3, 1}, {0, 1}}}};
    for (const auto& gd : golds) {
        CAPTURE(gd.s2out);
        const GluedComplex g =
            glue::conn_sum_cfl(cfk_of("3_1"), cfk_of("3_1"), gd.s2out, "3_1",
                               "3_1");
        CHECK(g.ambient.dim() == gd.amb);
        CHECK(g.killed == gd.killed);
        CHECK(g.identified == gd.ident);
        CHECK(g.out.dim() == gd.out);
        CHECK(homalg::homology_by_maslov(g.out) == gd.h);
    }
}

TEST_CASE("perpendicular gluing goldens") {
    {
        const auto p = glue::glue_perp(K("3_1"), 1, K("unknot"));
        CHECK(norm_shift(homalg::homology_by_maslov(p.cfl)) ==
              norm_shift(h_plus("3_1", 1)));
        check_books(p.cfk);
    }
    {
        const auto p = glue::glue_perp(K("unknot"), -1, K("unknot"));
        CHECK(homalg::homology_by_maslov(p.cfl).empty());
        CHECK(homalg::homology_by_maslov(p.cfk.out) == MaslovTable{{1, 1}});
        check_books(p.cfk);
    }
    {
        const auto p = glue::glue_perp(K("unknot"), 1, K("unknot"));
        CHECK(p.cfl.dim() == 0);
        CHECK(p.cfk.out.dim() == 0);
    }
    {
        const auto p = glue::glue_perp(K("3_1"), 1, K("3_1"));
        CHECK(p.cfk.op == "perp");
        CHECK(p.cfk.ambient.dim() == 52);
        CHECK(p.cfk.killed == 27);
        CHECK(p.cfk.identified == 4);
        CHECK(p.cfk.out.dim() == 21);
        check_books(p.cfk);
        CHECK(homalg::homology_by_maslov(p.cfk.out) ==
              MaslovTable{{-4, 1}, {-3, 4}, {-2, 3}, {-1, 1}});
        CHECK(homalg::homology_by_maslov(p.cfl) ==
              MaslovTable{{-4, 1}, {-3, 2}, {-2, 2}, {-1, 1}});
    }
}

TEST_CASE("perpendicular gluing bookkeeping and Kunneth factorization") {
    const std::vector<std::tuple<std::string, int, std::string>> cases = {
        {"3_1", -1, "3_1"}, {"4_1", 1, "3_1"},  {"3_1", 1, "4_1"},
        {"5_2", 1, "3_1"},  {"4_1", -1, "4_1"}, {"6_2", 3, "3_1"}};
    for (const auto& [n1, s2a, n2] : cases) {
        CAPTURE(n1);
        CAPTURE(s2a);
        CAPTURE(n2);
        const auto p = glue::glue_perp(K(n1), s2a, K(n2));
        check_books(p.cfk);
        // the block sum multiplies homology with the whole second family
        MaslovTable h2;
        for (const auto& [s, sec] : cfk_of(n2).sectors)
            for (const auto& [mu, r] :
                 homalg::homology_by_maslov(sec.complex))
                h2[mu] += r;
        CHECK(homalg::homology_by_maslov(p.cfl) ==
              convolve(h_plus(n1, s2a), h2));
    }
}

TEST_CASE("connecting map restricts to an isomorphism") {
    const auto mk = master_of("3_1");
    const auto flag = floer::sector_flag(floer::build_cfl_sector(mk, 1));
    const auto r = glue::connecting_iso_rho(flag);
    CHECK(r.rows == 1);
    CHECK(r.cols == 1);
    CHECK(r.get(0, 0));

    auto broken = flag;
    broken.connecting.matrix.entries.clear();
    CHECK_THROWS_AS(glue::connecting_iso_rho(broken), glue::NotIso);

    // no top stratum at all: the empty restriction is vacuously invertible
    const auto uflag = floer::build_cfk_flag(master_of("unknot")).at(0);
    const auto e = glue::connecting_iso_rho(uflag);
    CHECK(e.rows == 0);
    CHECK(e.cols == 0);
}

TEST_CASE("glue: serialization is deterministic") {
    const auto g1 = glue::glue_parallel(K("3_1"), 1, K("3_1"), 1);
    const auto g2 = glue::glue_parallel(K("3_1"), 1, K("3_1"), 1);
    CHECK(homalg::dump_canonical(glue::glued_to_json(g1)) ==
          homalg::dump_canonical(glue::glued_to_json(g2)));
    const auto j = glue::glued_to_json(g1);
    CHECK(j["op"] == "parallel");
    CHECK(j["inputs"] ==
          nlohmann::ordered_json::array({"3_1@+1", "3_1@+1"}));
    CHECK(j["ambient_dim"] == 16);
    CHECK(j["killed"] == 9);
    CHECK(j["identified"] == 3);
    CHECK(j["complex"]["generators"].size() == 4);

    const auto c1 = glue::conn_sum_cfl(K("3_1"), K("4_1"), 1);
    const auto c2 = glue::conn_sum_cfl(K("3_1"), K("4_1"), 1);
    CHECK(homalg::dump_canonical(glue::glued_to_json(c1)) ==
          homalg::dump_canonical(glue::glued_to_json(c2)));
    CHECK(glue::glued_to_json(c1)["inputs"] ==
          nlohmann::ordered_json::array({"3_1", "4_1"}));
}
