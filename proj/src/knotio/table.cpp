/**
 * @file table.cpp
 * @brief Stored PD codes and table construction.
 */
#include "floerglue/knotio/table.hpp"

namespace floerglue::knotio {

namespace {

const std::map<std::string, std::vector<std::string>>& stored() {
    static const std::map<std::string, std::vector<std::string>> pds = {
        {"unknot", {""}},
        {"3_1",
         {"X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)",
          "X(1,4,2,5) X(2,7,3,8) X(5,8,6,1) X(6,3,7,4)"}},
        {"4_1",
         {"X(1,4,2,5) X(3,7,4,6) X(5,8,6,1) X(7,3,8,2)",
          "X(1,4,2,5) X(3,7,4,6) X(5,10,6,1) X(8,8,9,7) X(9,3,10,2)"}},
        {"5_1",
         {"X(1,6,2,7) X(3,8,4,9) X(5,10,6,1) X(7,2,8,3) X(9,4,10,5)"}},
        {"5_2",
         {"X(2,9,3,10) X(4,2,5,1) X(5,10,6,11) X(7,12,8,1) X(8,3,9,4) "
          "X(11,6,12,7)"}},
        {"6_1",
         {"X(2,10,3,9) X(3,14,4,1) X(5,12,6,13) X(7,5,8,4) X(8,2,9,1) "
          "X(11,6,12,7) X(13,11,14,10)"}},
        {"6_2",
         {"X(2,11,3,12) X(4,9,5,10) X(6,2,7,1) X(8,3,9,4) X(10,5,11,6) "
          "X(12,8,1,7)"}},
        {"6_3",
         {"X(2,8,3,7) X(4,9,5,10) X(6,2,7,1) X(8,11,9,12) X(10,5,11,6) "
          "X(12,4,1,3)"}},
        {"7_1",
         {"X(1,8,2,9) X(3,10,4,11) X(5,12,6,13) X(7,14,8,1) X(9,2,10,3) "
          "X(11,4,12,5) X(13,6,14,7)"}},
        {"7_2",
         {"X(3,14,4,15) X(5,3,6,2) X(6,15,7,16) X(8,2,9,1) X(9,16,10,17) "
          "X(11,18,12,1) X(12,7,13,8) X(13,4,14,5) X(17,10,18,11)"}},
        {"7_4",
         {"X(3,12,4,13) X(5,3,6,2) X(6,13,7,14) X(9,18,10,1) X(10,15,11,16) "
          "X(11,4,12,5) X(14,7,15,8) X(16,2,17,1) X(17,8,18,9)"}},
        {"8_1",
         {"X(2,12,3,11) X(3,20,4,1) X(6,17,7,18) X(8,6,9,5) X(10,2,11,1) "
          "X(13,5,14,4) X(14,9,15,10) X(16,7,17,8) X(18,16,19,15) "
          "X(19,13,20,12)"}},
        {"9_1",
         {"X(1,10,2,11) X(3,12,4,13) X(5,14,6,15) X(7,16,8,17) X(9,18,10,1) "
          "X(11,2,12,3) X(13,4,14,5) X(15,6,16,7) X(17,8,18,9)"}},
        {"T(2,11)",
         {"X(1,12,2,13) X(3,14,4,15) X(5,16,6,17) X(7,18,8,19) X(9,20,10,21) "
          "X(11,22,12,1) X(13,2,14,3) X(15,4,16,5) X(17,6,18,7) X(19,8,20,9) "
          "X(21,10,22,11)"}},
    };
    return pds;
}

const std::vector<std::string>& table_order() {
    static const std::vector<std::string> names = {
        "unknot", "3_1", "4_1", "5_1", "5_2", "6_1", "6_2",
        "6_3",    "7_1", "7_2", "7_4", "8_1", "9_1", "T(2,11)"};
    return names;
}

const std::map<std::string, std::string>& aliases() {
    static const std::map<std::string, std::string> al = {
        {"T(2,3)", "3_1"},
        {"T(2,5)", "5_1"},
        {"T(2,7)", "7_1"},
        {"T(2,9)", "9_1"},
    };
    return al;
}

Diagram diagram_for(const std::string& pd_text) {
    return pd_text.empty() ? Diagram{} : parse_pd(pd_text);
}

}  // namespace

const std::map<std::string, std::vector<std::string>>& stored_diagrams() {
    return stored();
}

KnotData knot_from_diagram(const std::string& name, const Diagram& d) {
    SeifertData sd = seifert_matrix(d);
    return KnotData{name, alexander_polynomial(sd), signature(sd)};
}

const std::vector<KnotData>& knot_table() {
    static const std::vector<KnotData> table = [] {
        std::vector<KnotData> t;
        for (const auto& name : table_order()) {
            t.push_back(
                knot_from_diagram(name, diagram_for(stored().at(name).front())));
        }
        return t;
    }();
    return table;
}

const KnotData& lookup_knot(const std::string& name) {
    std::string canon = name;
    auto al = aliases().find(name);
    if (al != aliases().end()) canon = al->second;
    for (const auto& k : knot_table()) {
        if (k.name == canon) return k;
    }
    throw UnknownKnot("unknown knot '" + name + "'");
}

KnotData product_knot(const KnotData& a, const KnotData& b) {
    return KnotData{a.name + "#" + b.name, a.alexander * b.alexander,
                    a.signature + b.signature};
}

nlohmann::ordered_json knot_to_json(const KnotData& k) {
    nlohmann::ordered_json alex = nlohmann::ordered_json::array();
    for (const auto& [e, c] : k.alexander.coeffs) {
        alex.push_back({e, c});
    }
    return nlohmann::ordered_json{{"name", k.name},
                                  {"alexander", alex},
                                  {"alexander_pretty", k.alexander.pretty()},
                                  {"signature", k.signature},
                                  {"genus", k.genus()}};
}

}  // namespace floerglue::knotio
