/**
 * @file pd.cpp
 * @brief PD-code parsing with byte-accurate diagnostics, plus serialization.
 */
#include "floerglue/knotio/pd.hpp"

#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace floerglue::knotio {

namespace {

/** Union-find over crossing indices, merged through shared edge labels. */
struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

void validate_labels(const Diagram& d) {
    const int n_edges = d.edge_count();
    std::map<int, int> count;
    for (const auto& x : d.crossings) {
        for (int lab : x) {
            if (lab < 1 || lab > n_edges) {
                throw EdgeCountError("edge label " + std::to_string(lab) +
                                     " outside 1.." + std::to_string(n_edges));
            }
            ++count[lab];
        }
    }
    for (int lab = 1; lab <= n_edges; ++lab) {
        int c = count.count(lab) ? count.at(lab) : 0;
        if (c != 2) {
            throw EdgeCountError("edge label " + std::to_string(lab) +
                                 " appears " + std::to_string(c) +
                                 " times (expected 2)");
        }
    }
}

void validate_connected(const Diagram& d) {
    const int n = static_cast<int>(d.crossings.size());
    if (n <= 1) return;
    DisjointSet ds(n);
    std::map<int, int> first_seen;  // edge label -> crossing index
    for (int i = 0; i < n; ++i) {
        for (int lab : d.crossings[i]) {
            auto it = first_seen.find(lab);
            if (it == first_seen.end()) {
                first_seen[lab] = i;
            } else {
                ds.unite(i, it->second);
            }
        }
    }
    int root = ds.find(0);
    for (int i = 1; i < n; ++i) {
        if (ds.find(i) != root) {
            throw Disconnected("diagram splits into disjoint pieces");
        }
    }
}

}  // namespace

Diagram parse_pd(const std::string& text) {
    Diagram d;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip_ws = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i >= n) {
        throw SyntaxError("empty PD text", 0);
    }
    while (i < n) {
        const std::size_t tok = i;
        if (text[i] != 'X') {
            throw SyntaxError("expected 'X'", tok);
        }
        ++i;
        if (i >= n || text[i] != '(') {
            throw SyntaxError("expected '(' after 'X'", i);
        }
        ++i;
        std::array<int, 4> labs{};
        for (int k = 0; k < 4; ++k) {
            const std::size_t num_at = i;
            if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i]))) {
                throw SyntaxError("expected edge label", num_at);
            }
            long v = 0;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                if (v > 1000000) {
                    throw SyntaxError("edge label too large", num_at);
                }
                ++i;
            }
            labs[static_cast<std::size_t>(k)] = static_cast<int>(v);
            const char want = (k < 3) ? ',' : ')';
            if (i >= n || text[i] != want) {
                throw SyntaxError(std::string("expected '") + want + "'", i);
            }
            ++i;
        }
        d.crossings.push_back(labs);
        if (i < n && !std::isspace(static_cast<unsigned char>(text[i]))) {
            throw SyntaxError("expected whitespace between crossings", i);
        }
        skip_ws();
    }
    validate_labels(d);
    validate_connected(d);
    return d;
}

std::string serialize_pd(const Diagram& d) {
    std::ostringstream out;
    bool first = true;
    for (const auto& x : d.crossings) {
        if (!first) out << " ";
        out << "X(" << x[0] << "," << x[1] << "," << x[2] << "," << x[3] << ")";
        first = false;
    }
    return out.str();
}

nlohmann::ordered_json diagram_to_json(const Diagram& d) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& x : d.crossings) {
        arr.push_back({x[0], x[1], x[2], x[3]});
    }
    return nlohmann::ordered_json{{"pd", arr}};
}

Diagram diagram_from_json(const nlohmann::ordered_json& j) {
    Diagram d;
    for (const auto& row : j.at("pd")) {
        d.crossings.push_back({row.at(0).get<int>(), row.at(1).get<int>(),
                               row.at(2).get<int>(), row.at(3).get<int>()});
    }
    validate_labels(d);
    validate_connected(d);
    return d;
}

}  // namespace floerglue::knotio
