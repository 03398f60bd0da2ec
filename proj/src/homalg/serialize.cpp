/**
 * @file serialize.cpp
 * @brief Deterministic JSON encoding of complexes and flags.
 */
#include "floerglue/homalg/serialize.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace floerglue::homalg {

namespace {

std::vector<int> sorted_order(const GradedComplex& c) {
    std::vector<int> order(c.dim());
    for (int i = 0; i < c.dim(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const auto& ga = c.generators[a];
        const auto& gb = c.generators[b];
        return std::tie(ga.alex2, ga.maslov, ga.id) <
               std::tie(gb.alex2, gb.maslov, gb.id);
    });
    return order;
}

Json pairs_json(const GradedComplex& c, const F2Matrix& m,
                const GradedComplex& target) {
    // columns ordered by the serialized generator order of c; rows by the
    // serialized order of the target complex
    const auto corder = sorted_order(c);
    const auto torder = sorted_order(target);
    std::map<int, int> tpos;
    for (int i = 0; i < static_cast<int>(torder.size()); ++i)
        tpos[torder[i]] = i;
    auto colsets = m.col_sets();
    Json out = Json::array();
    for (int col : corder) {
        std::vector<int> rows(colsets[col].begin(), colsets[col].end());
        std::sort(rows.begin(), rows.end(),
                  [&](int a, int b) { return tpos.at(a) < tpos.at(b); });
        for (int r : rows)
            out.push_back(Json::array(
                {c.generators[col].id, target.generators[r].id}));
    }
    return out;
}

}  // namespace

Json complex_to_json(const GradedComplex& c) {
    Json j;
    Json gens = Json::array();
    for (int i : sorted_order(c)) {
        const auto& g = c.generators[i];
        gens.push_back(Json{{"id", g.id},
                            {"maslov", g.maslov},
                            {"alex2", g.alex2},
                            {"tag", tag_name(g.tag)},
                            {"label", g.label}});
    }
    j["generators"] = std::move(gens);
    j["differential"] = pairs_json(c, c.differential(), c);
    return j;
}

GradedComplex complex_from_json(const Json& j) {
    std::vector<Generator> gens;
    for (const auto& gj : j.at("generators")) {
        Generator g;
        g.id = gj.at("id").get<std::string>();
        g.maslov = gj.at("maslov").get<int>();
        g.alex2 = gj.at("alex2").get<int>();
        g.tag = tag_from_name(gj.at("tag").get<std::string>());
        g.label = gj.at("label").get<std::string>();
        gens.push_back(std::move(g));
    }
    std::map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(gens.size()); ++i)
        index[gens[i].id] = i;
    std::vector<std::set<int>> cols(gens.size());
    for (const auto& e : j.at("differential"))
        cols[index.at(e.at(0).get<std::string>())].insert(
            index.at(e.at(1).get<std::string>()));
    return make_complex(std::move(gens), std::move(cols));
}

Json flag_to_json(const Flag& f) {
    Json j = complex_to_json(f.plus);
    auto sorted_ids = [&](const std::vector<std::string>& ids) {
        std::vector<std::string> v = ids;
        std::sort(v.begin(), v.end());
        return v;
    };
    j["minus"] = sorted_ids(f.minus_ids);
    j["zero"] = sorted_ids(f.zero_ids);
    j["connecting"] =
        pairs_json(f.plus, f.connecting.matrix, f.connecting.target);
    j["alex2_shift"] = f.connecting.alex2_shift;
    return j;
}

Flag flag_from_json(const Json& j) {
    Flag f;
    f.plus = complex_from_json(j);
    for (const auto& id : j.at("minus"))
        f.minus_ids.push_back(id.get<std::string>());
    for (const auto& id : j.at("zero"))
        f.zero_ids.push_back(id.get<std::string>());
    const int shift = j.at("alex2_shift").get<int>();

    GradedComplex target;
    if (shift == 0) {
        target = flag_minus(f);
    } else {
        // cross-sector target: reconstruct a zero-differential stand-in from
        // the connecting rows, gradings inferred from the source columns
        std::map<std::string, Generator> seen;
        for (const auto& e : j.at("connecting")) {
            const int col = f.plus.index_of(e.at(0).get<std::string>());
            Generator g;
            g.id = e.at(1).get<std::string>();
            g.maslov = f.plus.generators[col].maslov - 1;
            g.alex2 = f.plus.generators[col].alex2 + shift;
            g.tag = Tag::C;
            seen.emplace(g.id, g);
        }
        std::vector<Generator> gens;
        for (auto& [id, g] : seen) gens.push_back(g);
        target = make_complex(std::move(gens), {});
    }

    ChainMap conn;
    conn.source = f.plus;
    conn.target = target;
    conn.alex2_shift = shift;
    conn.maslov_shift = -1;
    conn.matrix.rows = target.dim();
    conn.matrix.cols = f.plus.dim();
    for (const auto& e : j.at("connecting"))
        conn.matrix.put(target.index_of(e.at(1).get<std::string>()),
                        f.plus.index_of(e.at(0).get<std::string>()));
    f.connecting = std::move(conn);
    return f;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace floerglue::homalg
