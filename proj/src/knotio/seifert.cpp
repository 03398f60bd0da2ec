/**
 * @file seifert.cpp
 * @brief Braid-word recovery from PD codes and the Seifert linking matrix.
 */
#include "floerglue/knotio/seifert.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>

namespace floerglue::knotio {

namespace {

/** Braid letter: (strand index >= 1, sign in {+1,-1}). */
using BraidWord = std::vector<std::pair<int, int>>;

struct Smoothing {
    std::map<int, int> nxt;  // edge -> successor edge after Seifert smoothing
    std::vector<int> oin;    // per crossing: incoming over-strand edge
    std::vector<int> eps;    // per crossing: crossing sign
};

/** Per-crossing signs, over-strand edges, and the smoothed successor map. */
Smoothing analyze(const Diagram& d) {
    const int big_l = static_cast<int>(d.crossings.size());
    const int n = 2 * big_l;
    {
        std::map<int, int> cnt;
        for (const auto& x : d.crossings) {
            for (int lab : x) ++cnt[lab];
        }
        for (int lab = 1; lab <= n; ++lab) {
            if (!cnt.count(lab) || cnt.at(lab) != 2) {
                throw EdgeCountError("edge label " + std::to_string(lab) +
                                     " must appear exactly twice");
            }
        }
        if (static_cast<int>(cnt.size()) != n) {
            throw EdgeCountError("edge labels must be exactly 1.." +
                                 std::to_string(n));
        }
    }
    auto succ = [n](int x) { return x % n + 1; };
    Smoothing sm;
    sm.oin.resize(static_cast<std::size_t>(big_l));
    sm.eps.resize(static_cast<std::size_t>(big_l));
    for (int t = 0; t < big_l; ++t) {
        const auto& [a, b, c, dd] = d.crossings[static_cast<std::size_t>(t)];
        if (succ(a) != c) {
            throw UnsupportedDiagram(
                "under-strand must run a->c with c = a+1 (crossing " +
                std::to_string(t) + ")");
        }
        if (succ(b) == dd) {  // over-strand b -> d
            sm.eps[static_cast<std::size_t>(t)] = -1;
            sm.oin[static_cast<std::size_t>(t)] = b;
            sm.nxt[a] = dd;
            sm.nxt[b] = c;
        } else if (succ(dd) == b) {  // over-strand d -> b
            sm.eps[static_cast<std::size_t>(t)] = +1;
            sm.oin[static_cast<std::size_t>(t)] = dd;
            sm.nxt[a] = b;
            sm.nxt[dd] = c;
        } else {
            throw UnsupportedDiagram("cannot orient over-strand at crossing " +
                                     std::to_string(t));
        }
    }
    if (static_cast<int>(sm.nxt.size()) != n) {
        throw UnsupportedDiagram("inconsistent incoming/outgoing edge structure");
    }
    return sm;
}

/** Recover (braid word, strand count) from a closed-braid-position diagram. */
std::pair<BraidWord, int> to_braid(const Diagram& d) {
    const int big_l = static_cast<int>(d.crossings.size());
    if (big_l == 0) return {BraidWord{}, 1};
    const int n = 2 * big_l;
    Smoothing sm = analyze(d);

    // Seifert circles: cycles of the smoothed successor map, discovery order.
    std::map<int, int> circ_of;
    std::vector<std::vector<int>> circles;
    for (int e = 1; e <= n; ++e) {
        if (circ_of.count(e)) continue;
        std::vector<int> cycle;
        int x = e;
        while (!circ_of.count(x)) {
            circ_of[x] = static_cast<int>(circles.size());
            cycle.push_back(x);
            x = sm.nxt.at(x);
        }
        circles.push_back(std::move(cycle));
    }
    std::map<int, int> inc_at;  // edge -> crossing it enters
    for (int t = 0; t < big_l; ++t) {
        inc_at[d.crossings[static_cast<std::size_t>(t)][0]] = t;
        inc_at[sm.oin[static_cast<std::size_t>(t)]] = t;
    }
    const int nc = static_cast<int>(circles.size());
    std::vector<std::vector<int>> circ_cross;
    circ_cross.reserve(circles.size());
    for (const auto& cyc : circles) {
        std::vector<int> cs;
        cs.reserve(cyc.size());
        for (int e : cyc) cs.push_back(inc_at.at(e));
        circ_cross.push_back(std::move(cs));
    }

    // The Seifert graph (circles joined by crossings) must be a path.
    std::vector<std::set<int>> adj(static_cast<std::size_t>(nc));
    std::vector<std::pair<int, int>> cross_circ(static_cast<std::size_t>(big_l));
    for (int t = 0; t < big_l; ++t) {
        int u = circ_of.at(d.crossings[static_cast<std::size_t>(t)][0]);
        int v = circ_of.at(sm.oin[static_cast<std::size_t>(t)]);
        if (u == v) {
            throw UnsupportedDiagram(
                "crossing joins a circle to itself: not braid position");
        }
        cross_circ[static_cast<std::size_t>(t)] = {u, v};
        adj[static_cast<std::size_t>(u)].insert(v);
        adj[static_cast<std::size_t>(v)].insert(u);
    }
    {
        std::set<int> seen{0};
        std::vector<int> stack{0};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : adj[static_cast<std::size_t>(x)]) {
                if (seen.insert(y).second) stack.push_back(y);
            }
        }
        if (static_cast<int>(seen.size()) != nc) {
            throw Disconnected("diagram splits into disjoint pieces");
        }
    }
    std::vector<int> ends;
    for (int v = 0; v < nc; ++v) {
        if (adj[static_cast<std::size_t>(v)].size() == 1) ends.push_back(v);
        if (adj[static_cast<std::size_t>(v)].size() > 2) {
            throw UnsupportedDiagram("Seifert graph not a path: not braid position");
        }
    }
    if (ends.size() != 2) {
        throw UnsupportedDiagram("Seifert graph not a path: not braid position");
    }
    auto min_edge = [&](int v) {
        return *std::min_element(circles[static_cast<std::size_t>(v)].begin(),
                                 circles[static_cast<std::size_t>(v)].end());
    };
    int start = (min_edge(ends[0]) <= min_edge(ends[1])) ? ends[0] : ends[1];

    std::vector<int> order{start};
    std::set<int> in_order{start};
    while (static_cast<int>(order.size()) < nc) {
        int cur = order.back();
        int next = -1;
        for (int y : adj[static_cast<std::size_t>(cur)]) {
            if (!in_order.count(y)) {
                next = y;
                break;
            }
        }
        order.push_back(next);
        in_order.insert(next);
    }
    std::vector<int> pos_of(static_cast<std::size_t>(nc));
    for (int i = 0; i < nc; ++i) pos_of[static_cast<std::size_t>(order[i])] = i;
    std::vector<int> idx_of(static_cast<std::size_t>(big_l));
    for (int t = 0; t < big_l; ++t) {
        auto [u, v] = cross_circ[static_cast<std::size_t>(t)];
        idx_of[static_cast<std::size_t>(t)] =
            std::min(pos_of[static_cast<std::size_t>(u)],
                     pos_of[static_cast<std::size_t>(v)]) +
            1;
    }

    // Merge circle crossing sequences along the path into one braid-letter
    // sequence, splicing each circle's new crossings after the shared ones.
    std::vector<int> s_seq = circ_cross[static_cast<std::size_t>(order[0])];
    for (int irow = 1; irow < nc; ++irow) {
        const std::vector<int>& t_seq =
            circ_cross[static_cast<std::size_t>(order[irow])];
        std::set<int> commons;
        std::vector<int> news;
        for (int t : t_seq) {
            if (idx_of[static_cast<std::size_t>(t)] == irow) {
                commons.insert(t);
            } else if (idx_of[static_cast<std::size_t>(t)] == irow + 1) {
                news.push_back(t);
            } else {
                throw UnsupportedDiagram("circle " + std::to_string(irow) +
                                         " carries unexpected crossings");
            }
        }
        if (commons.empty()) {
            throw UnsupportedDiagram("circle " + std::to_string(irow) +
                                     " carries unexpected crossings");
        }
        if (news.empty()) continue;
        std::map<int, int> pos_s;
        for (int i = 0; i < static_cast<int>(s_seq.size()); ++i) {
            pos_s[s_seq[static_cast<std::size_t>(i)]] = i;
        }
        std::vector<int> c_s(commons.begin(), commons.end());
        std::sort(c_s.begin(), c_s.end(),
                  [&](int x, int y) { return pos_s.at(x) < pos_s.at(y); });
        auto it = std::find(t_seq.begin(), t_seq.end(), c_s[0]);
        std::vector<int> t_rot(it, t_seq.end());
        t_rot.insert(t_rot.end(), t_seq.begin(), it);
        std::vector<int> c_t;
        for (int t : t_rot) {
            if (commons.count(t)) c_t.push_back(t);
        }
        auto r2 = std::find(c_s.begin(), c_s.end(), c_t[0]);
        std::vector<int> c_s2(r2, c_s.end());
        c_s2.insert(c_s2.end(), c_s.begin(), r2);
        if (c_s2 != c_t) {
            throw UnsupportedDiagram(
                "incompatible cyclic orders: not braid position");
        }
        std::map<int, std::vector<int>> runs;
        int cur = -1;
        for (int t : t_rot) {
            if (commons.count(t)) {
                cur = t;
                runs[cur];
            } else {
                runs.at(cur).push_back(t);
            }
        }
        std::vector<int> new_s;
        for (int t : s_seq) {
            new_s.push_back(t);
            auto rit = runs.find(t);
            if (rit != runs.end()) {
                new_s.insert(new_s.end(), rit->second.begin(), rit->second.end());
            }
        }
        s_seq = std::move(new_s);
    }
    auto rot = std::find(s_seq.begin(), s_seq.end(), inc_at.at(1));
    std::rotate(s_seq.begin(), rot, s_seq.end());

    BraidWord word;
    word.reserve(s_seq.size());
    for (int t : s_seq) {
        word.emplace_back(idx_of[static_cast<std::size_t>(t)],
                          sm.eps[static_cast<std::size_t>(t)]);
    }
    return {word, nc};
}

/**
 * Number of components of the underlying curve: edges a,c (under-strand) and
 * b,d (over-strand) of each crossing lie on the same strand, so components
 * are the classes of the relation generated by a~c and b~d.
 */
int curve_components(const Diagram& d) {
    std::map<int, int> parent;
    std::function<int(int)> find = [&](int x) {
        if (!parent.count(x)) parent[x] = x;
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (const auto& x : d.crossings) {
        unite(x[0], x[2]);
        unite(x[1], x[3]);
    }
    std::set<int> roots;
    for (const auto& [e, p] : parent) {
        (void)p;
        roots.insert(find(e));
    }
    return static_cast<int>(roots.size());
}

/** Number of components of the braid closure (cycles of the strand permutation). */
int closure_components(const BraidWord& word, int n) {
    std::vector<int> at(static_cast<std::size_t>(n));
    std::vector<int> pos(static_cast<std::size_t>(n));
    std::iota(at.begin(), at.end(), 0);
    std::iota(pos.begin(), pos.end(), 0);
    for (const auto& [i, e] : word) {
        (void)e;
        int a = i - 1;
        int b = i;
        int sa = at[static_cast<std::size_t>(a)];
        int sb = at[static_cast<std::size_t>(b)];
        at[static_cast<std::size_t>(a)] = sb;
        at[static_cast<std::size_t>(b)] = sa;
        pos[static_cast<std::size_t>(sa)] = b;
        pos[static_cast<std::size_t>(sb)] = a;
    }
    std::set<int> seen;
    int comps = 0;
    for (int s0 = 0; s0 < n; ++s0) {
        if (seen.count(s0)) continue;
        ++comps;
        int s = s0;
        while (seen.insert(s).second) s = pos[static_cast<std::size_t>(s)];
    }
    return comps;
}

/** Band generators: consecutive same-index letter pairs (index, pos, pos). */
std::vector<std::array<int, 3>> word_cycles(const BraidWord& word) {
    std::map<int, std::vector<int>> byidx;
    for (int p = 0; p < static_cast<int>(word.size()); ++p) {
        byidx[word[static_cast<std::size_t>(p)].first].push_back(p);
    }
    std::vector<std::array<int, 3>> cyc;
    for (const auto& [i, ps] : byidx) {
        for (std::size_t k = 0; k + 1 < ps.size(); ++k) {
            cyc.push_back({i, ps[k], ps[k + 1]});
        }
    }
    return cyc;
}

/**
 * Linking matrix on band generators.  Diagonal: half the sum of the two
 * crossing signs.  Same strand index sharing the middle letter: +1 for a
 * positive shared crossing, -1 for negative.  Adjacent strand indices with
 * interleaved letter positions: +1 on the (lower index, higher index) entry.
 */
IntMatrix seifert_v(const BraidWord& word) {
    auto cyc = word_cycles(word);
    const int m = static_cast<int>(cyc.size());
    std::vector<int> eps;
    eps.reserve(word.size());
    for (const auto& [i, e] : word) {
        (void)i;
        eps.push_back(e);
    }
    IntMatrix v(static_cast<std::size_t>(m),
                std::vector<long long>(static_cast<std::size_t>(m), 0));
    for (int a = 0; a < m; ++a) {
        auto [ia, pa, qa] = cyc[static_cast<std::size_t>(a)];
        (void)ia;
        v[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] =
            (eps[static_cast<std::size_t>(pa)] + eps[static_cast<std::size_t>(qa)]) /
            2;
    }
    for (int a = 0; a < m; ++a) {
        auto [ia, pa, qa] = cyc[static_cast<std::size_t>(a)];
        for (int b = 0; b < m; ++b) {
            if (a == b) continue;
            auto [ib, pb, qb] = cyc[static_cast<std::size_t>(b)];
            if (ib == ia && qa == pb) {
                v[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] +=
                    (eps[static_cast<std::size_t>(qa)] > 0) ? 1 : -1;
            }
            if (ib == ia + 1) {
                if ((pa < pb && pb < qa && qa < qb) ||
                    (pb < pa && pa < qb && qb < qa)) {
                    v[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] += 1;
                }
            }
        }
    }
    return v;
}

}  // namespace

SeifertData seifert_matrix(const Diagram& d) {
    if (d.crossings.empty()) {
        return SeifertData{};  // zero-crossing unknot sentinel
    }
    int comps = curve_components(d);
    if (comps != 1) {
        throw NotKnot("diagram has " + std::to_string(comps) +
                      " components, not a knot");
    }
    auto [word, n] = to_braid(d);
    if (closure_components(word, n) != 1) {
        throw std::logic_error("braid closure disagrees with curve count");
    }
    IntMatrix v = seifert_v(word);
    const int m = static_cast<int>(v.size());
    if (m % 2 != 0) {
        throw std::logic_error("odd first homology rank on a knot surface");
    }
    return SeifertData{std::move(v), m / 2};
}

}  // namespace floerglue::knotio
