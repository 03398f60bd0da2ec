/**
 * @file floerglue_cli.cpp
 * @brief Batch front door: invariants, sector/gluing computation, and
 *        verification suites over the built-in knot table.
 */
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "floerglue/floer/cfk.hpp"
#include "floerglue/floer/cfl.hpp"
#include "floerglue/floer/ranks.hpp"
#include "floerglue/glue/glue.hpp"
#include "floerglue/glue/quotient.hpp"
#include "floerglue/homalg/chainmap.hpp"
#include "floerglue/homalg/complex.hpp"
#include "floerglue/homalg/serialize.hpp"
#include "floerglue/knotio/table.hpp"
#include "floerglue/model/master.hpp"

namespace fs = std::filesystem;
using namespace floerglue;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNotThin = 3;
constexpr int kExitConstraint = 4;

/** Input-class problems detected by the front end itself. */
struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw CliError("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& p, const std::string& bytes) {
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    if (!out) throw CliError("cannot write " + p.string());
    out << bytes;
}

/** Print to stdout, or write to `out_path` and echo the path. */
void emit(const std::string& out_path, const std::string& bytes) {
    if (out_path.empty()) {
        std::cout << bytes;
        return;
    }
    write_file(out_path, bytes);
    std::cout << "wrote " << out_path << "\n";
}

knotio::KnotData resolve_knot(const std::string& name,
                              const std::string& pd_file) {
    if (!pd_file.empty()) {
        const fs::path p(pd_file);
        const std::string label = name.empty() ? p.stem().string() : name;
        return knotio::knot_from_diagram(label, knotio::parse_pd(read_file(p)));
    }
    if (name.empty()) throw CliError("no knot given (name or --pd)");
    return knotio::lookup_knot(name);
}

// ---------------------------------------------------------------- rank rows

struct RankRow {
    std::string theory;
    int spinc2 = 0;
    int maslov = 0;
    int rank = 0;
};

std::vector<RankRow> hfk_rows(const model::MasterComplex& mk) {
    std::vector<RankRow> rows;
    for (const auto& [key, r] : floer::hfk_ranks(mk))
        rows.push_back({"cfk", key.second, key.first, r});
    std::sort(rows.begin(), rows.end(), [](const RankRow& a, const RankRow& b) {
        return std::tie(a.spinc2, a.maslov) < std::tie(b.spinc2, b.maslov);
    });
    return rows;
}

std::vector<RankRow> hfl_rows(const model::MasterComplex& mk) {
    std::vector<RankRow> rows;
    for (const auto& [s2, sec] : floer::build_cfl_sectors(mk))
        for (const auto& [mu, r] : floer::hfl_ranks(sec))
            rows.push_back({"cfl", s2, mu, r});
    return rows;
}

std::string csv_of(const std::string& knot, const std::vector<RankRow>& rows) {
    std::ostringstream out;
    out << "knot,theory,spinc2,maslov,rank\n";
    for (const auto& r : rows)
        out << knot << ',' << r.theory << ',' << r.spinc2 << ',' << r.maslov
            << ',' << r.rank << '\n';
    return out.str();
}

ordered_json rows_json(const std::vector<RankRow>& rows) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows)
        arr.push_back(ordered_json{
            {"spinc2", r.spinc2}, {"maslov", r.maslov}, {"rank", r.rank}});
    return arr;
}

// --------------------------------------------------------------- invariants

ordered_json invariants_json(const knotio::KnotData& k,
                             const model::MasterComplex& mk) {
    ordered_json j;
    j["knot"] = knotio::knot_to_json(k);
    j["hfk"] = rows_json(hfk_rows(mk));
    j["hfl"] = rows_json(hfl_rows(mk));
    return j;
}

std::string invariants_pretty(const knotio::KnotData& k,
                              const model::MasterComplex& mk) {
    std::ostringstream out;
    out << "knot: " << k.name << "\n"
        << "alexander: " << k.alexander.pretty() << "\n"
        << "signature: " << k.signature << "\n"
        << "genus: " << k.genus() << "\n";
    auto dump_rows = [&out](const std::vector<RankRow>& rows) {
        if (rows.empty()) out << "  (none)\n";
        for (const auto& r : rows)
            out << "  spinc2=" << r.spinc2 << " maslov=" << r.maslov
                << " rank=" << r.rank << "\n";
    };
    out << "hfk ranks:\n";
    dump_rows(hfk_rows(mk));
    out << "hfl ranks:\n";
    dump_rows(hfl_rows(mk));
    return out.str();
}

int cmd_invariants(const std::string& name, const std::string& pd_file,
                   const std::string& format, const std::string& out_path) {
    const knotio::KnotData k = resolve_knot(name, pd_file);
    const model::MasterComplex mk = model::build_master(k);
    std::string bytes;
    if (format == "json") {
        bytes = homalg::dump_canonical(invariants_json(k, mk));
    } else if (format == "csv") {
        auto rows = hfk_rows(mk);
        const auto hfl = hfl_rows(mk);
        rows.insert(rows.end(), hfl.begin(), hfl.end());
        bytes = csv_of(k.name, rows);
    } else {
        bytes = invariants_pretty(k, mk);
    }
    emit(out_path, bytes);
    return kExitOk;
}

// ------------------------------------------------------------------ compute

bool contains(const std::vector<int>& v, int x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

int compute_theory(const knotio::KnotData& k, const std::string& theory,
                   const std::vector<int>& spinc, const std::string& out_path,
                   const std::string& format) {
    const model::MasterComplex mk = model::build_master(k);
    if (format == "csv") {
        emit(out_path, csv_of(k.name, theory == "cfk" ? hfk_rows(mk)
                                                      : hfl_rows(mk)));
        return kExitOk;
    }
    // One flag JSON per sector.  Without an explicit --spinc selection,
    // sectors with vanishing plus-complex homology are elided.
    std::map<int, homalg::Flag> flags;
    if (theory == "cfl") {
        if (spinc.empty()) {
            for (const auto& [s2, sec] : floer::build_cfl_sectors(mk)) {
                if (floer::hfl_ranks(sec).empty()) continue;
                flags.emplace(s2, floer::sector_flag(sec));
            }
        } else {
            for (int s2 : spinc)
                flags.emplace(
                    s2, floer::sector_flag(floer::build_cfl_sector(mk, s2)));
        }
    } else {
        auto all = floer::build_cfk_flag(mk);
        for (int s2 : spinc)
            if (!all.count(s2))
                throw CliError("no cfk sector at spinc2 " +
                               std::to_string(s2));
        for (auto& [s2, fl] : all) {
            if (spinc.empty()) {
                if (homalg::homology_by_maslov(fl.plus).empty()) continue;
            } else if (!contains(spinc, s2)) {
                continue;
            }
            flags.emplace(s2, std::move(fl));
        }
    }
    const fs::path dir = out_path.empty() ? fs::path(".") : fs::path(out_path);
    for (const auto& [s2, fl] : flags) {
        const fs::path f =
            dir / (k.name + "_" + theory + "_s" + std::to_string(s2) + ".json");
        write_file(f, homalg::dump_canonical(homalg::flag_to_json(fl)));
        std::cout << "wrote " << f.string() << "\n";
    }
    return kExitOk;
}

int compute_glue(const std::string& op, const std::string& knots_csv,
                 const std::vector<int>& spinc, const std::string& out_path,
                 const std::string& format) {
    std::vector<std::string> names;
    std::stringstream ss(knots_csv);
    std::string item;
    while (std::getline(ss, item, ',')) names.push_back(item);
    if (names.size() != 2)
        throw CliError("--glue needs --knots with exactly two names");
    const knotio::KnotData k1 = knotio::lookup_knot(names[0]);
    const knotio::KnotData k2 = knotio::lookup_knot(names[1]);

    glue::GluedComplex g;
    ordered_json j;
    if (op == "parallel") {
        const int s2a = spinc.empty() ? 1 : spinc[0];
        const int s2b = spinc.size() > 1 ? spinc[1] : s2a;
        g = glue::glue_parallel(k1, s2a, k2, s2b);
        j = glue::glued_to_json(g);
    } else if (op == "connsum") {
        g = glue::conn_sum_cfl(k1, k2, spinc.empty() ? 1 : spinc[0]);
        j = glue::glued_to_json(g);
    } else {
        auto p = glue::glue_perp(k1, spinc.empty() ? 1 : spinc[0], k2);
        g = std::move(p.cfk);
        j = glue::glued_to_json(g);
        j["companion_cfl"] = homalg::complex_to_json(p.cfl);
    }

    if (format == "csv") {
        std::string label = g.inputs[0];
        for (std::size_t i = 1; i < g.inputs.size(); ++i)
            label += "|" + g.inputs[i];
        std::vector<RankRow> rows;
        for (const auto& [mu, r] : homalg::homology_by_maslov(g.out))
            rows.push_back({op, g.spinc2, mu, r});
        emit(out_path, csv_of(label, rows));
        return kExitOk;
    }
    emit(out_path, homalg::dump_canonical(j));
    return kExitOk;
}

int cmd_compute(const std::string& theory, const std::string& knot,
                const std::string& pd_file, const std::string& glue_op,
                const std::string& knots_csv, const std::vector<int>& spinc,
                const std::string& out_path, const std::string& format) {
    if (!glue_op.empty() && !theory.empty())
        throw CliError("--theory and --glue are mutually exclusive");
    if (!glue_op.empty())
        return compute_glue(glue_op, knots_csv, spinc, out_path, format);
    if (theory.empty()) throw CliError("compute needs --theory or --glue");
    return compute_theory(resolve_knot(knot, pd_file), theory, spinc, out_path,
                          format);
}

// ------------------------------------------------------------------- verify

struct Checker {
    int checks = 0;
    int failures = 0;
    void check(bool ok, const std::string& what) {
        ++checks;
        if (ok) {
            std::cout << "ok   " << what << "\n";
        } else {
            ++failures;
            std::cout << "FAIL " << what << "\n";
        }
    }
};

void suite_euler(Checker& c, const std::vector<knotio::KnotData>& corpus) {
    for (const auto& k : corpus) {
        const auto mk = model::build_master(k);
        c.check(homalg::euler_poly(floer::hfk_ranks(mk)) ==
                    k.alexander.coeffs,
                "euler " + k.name);
    }
}

void suite_genus(Checker& c, const std::vector<knotio::KnotData>& corpus) {
    using floer::Stratum;
    for (const auto& k : corpus) {
        const auto mk = model::build_master(k);
        const auto cfk = floer::build_cfk_model(mk);
        const int g = mk.genus;
        auto fam = [&c, &k](const std::map<int, homalg::GradedComplex>& family,
                            std::optional<std::pair<int, int>> want,
                            const std::string& what) {
            try {
                const auto got = homalg::d_extremes(family);
                c.check(want.has_value() && got == *want,
                        "genus " + k.name + " " + what);
            } catch (const homalg::EmptyFamily&) {
                c.check(!want.has_value(), "genus " + k.name + " " + what);
            }
        };
        auto cfl = [&mk](Stratum st) {
            return floer::cfl_stratum_family(mk, st);
        };
        auto cfs = [&cfk](Stratum st) {
            return floer::cfk_stratum_family(cfk, st);
        };
        const auto full = std::make_pair(2 * g - 1, -2 * g - 1);
        fam(cfl(Stratum::MINUS), full, "cfl-minus");
        fam(cfl(Stratum::ZERO), full, "cfl-zero");
        fam(cfl(Stratum::PLUS),
            g > 0 ? std::optional(std::make_pair(2 * g - 1, 1 - 2 * g))
                  : std::nullopt,
            "cfl-plus");
        fam(cfs(Stratum::MINUS),
            g > 0 ? std::optional(std::make_pair(2 * g - 2, -2 * g))
                  : std::nullopt,
            "cfk-minus");
        fam(cfs(Stratum::ZERO), std::make_pair(2 * g, -2 * g), "cfk-zero");
        fam(cfs(Stratum::PLUS), std::make_pair(2 * g, -2 * g), "cfk-plus");
    }
}

void ses_over_flags(Checker& c, const std::map<int, homalg::Flag>& flags,
                    const std::string& label) {
    for (const auto& [s2, fl] : flags) {
        const auto [f, g] = homalg::ses_maps(fl);
        const auto rep = homalg::verify_ses(f, g);
        c.check(rep.pass(), "ses " + label + "@" + std::to_string(s2));
        for (const auto& why : rep.failures)
            std::cout << "     " << label << "@" << s2 << ": " << why << "\n";
    }
}

void suite_ses(Checker& c, const std::vector<knotio::KnotData>& corpus) {
    for (const auto& k : corpus) {
        const auto mk = model::build_master(k);
        ses_over_flags(c, floer::build_cfl_flag(mk), k.name + " cfl");
        ses_over_flags(c, floer::build_cfk_flag(mk), k.name + " cfk");
    }
}

int verify_flag_file(const std::string& path) {
    const auto j = ordered_json::parse(read_file(path), nullptr, true);
    const auto fl = homalg::flag_from_json(j);
    const auto [f, g] = homalg::ses_maps(fl);
    const auto rep = homalg::verify_ses(f, g);
    if (rep.pass()) {
        std::cout << "ok   ses " << path << "\n";
        return kExitOk;
    }
    for (const auto& why : rep.failures)
        std::cout << "FAIL ses " << path << ": " << why << "\n";
    return kExitConstraint;
}

void suite_symmetry(Checker& c, const std::vector<knotio::KnotData>& corpus) {
    for (const auto& k : corpus) {
        const auto mk = model::build_master(k);
        const int g = mk.genus;
        for (int s2 = 1; s2 <= 2 * g + 1; s2 += 2) {
            const auto h_pos =
                floer::hfl_ranks(floer::build_cfl_sector(mk, s2));
            const auto h_neg =
                floer::hfl_ranks(floer::build_cfl_sector(mk, -s2));
            c.check(h_pos == h_neg, "symmetry " + k.name + " cfl@" +
                                        std::to_string(s2));
        }
        const auto cfk = floer::build_cfk_model(mk);
        auto rank_multiset = [](const homalg::MaslovTable& h) {
            std::multiset<int> out;
            for (const auto& [mu, r] : h) out.insert(r);
            return out;
        };
        for (int s = 1; s <= g; ++s) {
            const auto hp = homalg::homology_by_maslov(
                cfk.sectors.at(s).complex);
            const auto hn = homalg::homology_by_maslov(
                cfk.sectors.at(-s).complex);
            c.check(rank_multiset(hp) == rank_multiset(hn),
                    "symmetry " + k.name + " cfk@" + std::to_string(2 * s));
        }
    }
}

void suite_connsum(Checker& c) {
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"3_1", "3_1"}, {"3_1", "4_1"}, {"4_1", "4_1"}, {"3_1", "T(2,5)"}};
    for (const auto& [n1, n2] : pairs) {
        const auto& k1 = knotio::lookup_knot(n1);
        const auto& k2 = knotio::lookup_knot(n2);
        const auto m1 = model::build_master(k1);
        const auto m2 = model::build_master(k2);
        const int gg = m1.genus + m2.genus;

        std::map<std::pair<int, int>, int> got;
        bool single_degree = true;
        for (int s = -gg - 1; s <= gg + 1; ++s) {
            const auto h = homalg::homology_by_maslov(
                glue::conn_sum_cfk(m1, m2, s));
            if (h.size() > 1) single_degree = false;
            for (const auto& [mu, r] : h) got[{s, mu}] = r;
        }
        std::map<std::pair<int, int>, int> want;
        const auto prod_mk =
            model::build_master(knotio::product_knot(k1, k2));
        for (const auto& [key, r] : floer::hfk_ranks(prod_mk))
            want[{key.second / 2, key.first}] = r;
        c.check(single_degree && got == want, "connsum " + n1 + "#" + n2);
    }
}

// ------------------------------------------------------------ golden files

std::vector<std::pair<std::string, std::function<std::string()>>>
golden_artifacts() {
    auto flag_bytes = [](const homalg::Flag& fl) {
        return homalg::dump_canonical(homalg::flag_to_json(fl));
    };
    return {
        {"invariants_3_1.json",
         [] {
             const auto& k = knotio::lookup_knot("3_1");
             return homalg::dump_canonical(
                 invariants_json(k, model::build_master(k)));
         }},
        {"cfl_3_1_s1.json",
         [flag_bytes] {
             const auto mk = model::build_master(knotio::lookup_knot("3_1"));
             return flag_bytes(
                 floer::sector_flag(floer::build_cfl_sector(mk, 1)));
         }},
        {"cfk_4_1_s0.json",
         [flag_bytes] {
             const auto mk = model::build_master(knotio::lookup_knot("4_1"));
             return flag_bytes(floer::build_cfk_flag(mk).at(0));
         }},
        {"parallel_3_1_3_1.json",
         [] {
             return homalg::dump_canonical(
                 glue::glued_to_json(glue::glue_parallel(
                     knotio::lookup_knot("3_1"), 1,
                     knotio::lookup_knot("3_1"), 1)));
         }},
        {"connsum_3_1_4_1_s1.json",
         [] {
             return homalg::dump_canonical(
                 glue::glued_to_json(glue::conn_sum_cfl(
                     knotio::lookup_knot("3_1"), knotio::lookup_knot("4_1"),
                     1)));
         }},
    };
}

void suite_golden(Checker& c, const std::string& dir, bool regen) {
    for (const auto& [file, make] : golden_artifacts()) {
        const fs::path p = fs::path(dir) / file;
        const std::string bytes = make();
        if (regen) {
            write_file(p, bytes);
            std::cout << "wrote " << p.string() << "\n";
            continue;
        }
        std::ifstream in(p, std::ios::binary);
        if (!in) {
            c.check(false, "golden " + file + " (missing)");
            continue;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        c.check(ss.str() == bytes, "golden " + file);
    }
}

int cmd_verify(const std::string& suite, const std::string& knot,
               const std::string& flag_file, std::string golden_dir,
               bool regen) {
    if (!flag_file.empty()) return verify_flag_file(flag_file);

    if (golden_dir.empty()) {
        if (const char* env = std::getenv("FLOERGLUE_GOLDEN_DIR"))
            golden_dir = env;
    }
    if (suite == "golden" && golden_dir.empty())
        throw CliError(
            "no golden directory (use --golden-dir or FLOERGLUE_GOLDEN_DIR)");

    std::vector<knotio::KnotData> corpus;
    if (knot.empty())
        corpus = knotio::knot_table();
    else
        corpus.push_back(knotio::lookup_knot(knot));

    Checker c;
    const bool all = (suite == "all");
    if (all || suite == "euler") suite_euler(c, corpus);
    if (all || suite == "genus") suite_genus(c, corpus);
    if (all || suite == "ses") suite_ses(c, corpus);
    if (all || suite == "symmetry") suite_symmetry(c, corpus);
    if (all || suite == "connsum") suite_connsum(c);
    if (suite == "golden" || (all && !golden_dir.empty()))
        suite_golden(c, golden_dir, regen);

    std::cout << "verify: " << c.checks << " checks, " << c.failures
              << " failures\n";
    return c.failures == 0 ? kExitOk : kExitConstraint;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"floerglue: {-,0,+}-filtered knot Floer models for thin knots"};
    app.require_subcommand(1);

    auto* inv = app.add_subcommand(
        "invariants", "Print Delta, signature, genus, and rank tables");
    std::string inv_knot, inv_pd, inv_out;
    std::string inv_format = "pretty";
    inv->add_option("knot", inv_knot, "Knot name from the built-in table");
    inv->add_option("--pd", inv_pd, "File holding a PD code");
    inv->add_option("--format", inv_format, "pretty, json, or csv")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));
    inv->add_option("--out", inv_out, "Write the report to this file");

    auto* comp = app.add_subcommand(
        "compute", "Write sector flags, glued complexes, or rank CSVs");
    std::string c_theory, c_knot, c_pd, c_glue, c_knots, c_out;
    std::string c_format = "json";
    std::vector<int> c_spinc;
    comp->add_option("--theory", c_theory, "cfk or cfl")
        ->check(CLI::IsMember({"cfk", "cfl"}));
    comp->add_option("--knot", c_knot, "Knot name from the built-in table");
    comp->add_option("--pd", c_pd, "File holding a PD code");
    comp->add_option("--glue", c_glue, "parallel, perp, or connsum")
        ->check(CLI::IsMember({"parallel", "perp", "connsum"}));
    comp->add_option("--knots", c_knots, "Comma-separated pair for --glue");
    comp->add_option("--spinc", c_spinc, "Doubled spin-c labels")
        ->delimiter(',');
    comp->add_option("--out", c_out,
                     "Output directory (sector mode) or file (glue mode)");
    comp->add_option("--format", c_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* ver = app.add_subcommand(
        "verify", "Run invariant suites over the table corpus");
    std::string v_suite = "all", v_knot, v_flag, v_golden;
    bool v_regen = false;
    ver->add_option("--suite", v_suite,
                    "genus, ses, euler, symmetry, connsum, golden, or all")
        ->check(CLI::IsMember(
            {"genus", "ses", "euler", "symmetry", "connsum", "golden", "all"}));
    ver->add_option("--knot", v_knot, "Restrict the corpus to one knot");
    ver->add_option("--flag", v_flag, "Verify one flag JSON file instead");
    ver->add_option("--golden-dir", v_golden, "Golden file directory");
    ver->add_flag("--regen", v_regen,
                  "Rewrite golden files instead of comparing");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (inv->parsed())
            return cmd_invariants(inv_knot, inv_pd, inv_format, inv_out);
        if (comp->parsed())
            return cmd_compute(c_theory, c_knot, c_pd, c_glue, c_knots,
                               c_spinc, c_out, c_format);
        return cmd_verify(v_suite, v_knot, v_flag, v_golden, v_regen);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const knotio::UnknownKnot& e) {
        std::cerr << "error: unknown knot: " << e.what() << "\n";
        return kExitInput;
    } catch (const knotio::SyntaxError& e) {
        std::cerr << "error: PD syntax: " << e.what() << "\n";
        return kExitInput;
    } catch (const knotio::EdgeCountError& e) {
        std::cerr << "error: PD edges: " << e.what() << "\n";
        return kExitInput;
    } catch (const knotio::Disconnected& e) {
        std::cerr << "error: PD disconnected: " << e.what() << "\n";
        return kExitInput;
    } catch (const knotio::NotKnot& e) {
        std::cerr << "error: not a knot: " << e.what() << "\n";
        return kExitInput;
    } catch (const knotio::UnsupportedDiagram& e) {
        std::cerr << "error: unsupported diagram: " << e.what() << "\n";
        return kExitInput;
    } catch (const knotio::NormalizationImpossible& e) {
        std::cerr << "error: normalization: " << e.what() << "\n";
        return kExitInput;
    } catch (const model::NotThin& e) {
        std::cerr << "error: not thin: " << e.what() << "\n";
        return kExitNotThin;
    } catch (const floer::PerturbationFailure& e) {
        std::cerr << "error: perturbation failure: " << e.what() << "\n";
        return kExitConstraint;
    } catch (const floer::ConstraintUnsatisfiable& e) {
        std::cerr << "error: constraint unsatisfiable: " << e.what() << "\n";
        return kExitConstraint;
    } catch (const glue::IncompatibleRelation& e) {
        std::cerr << "error: incompatible relation: " << e.what() << "\n";
        return kExitConstraint;
    } catch (const glue::NotIso& e) {
        std::cerr << "error: not an isomorphism: " << e.what() << "\n";
        return kExitConstraint;
    } catch (const ordered_json::parse_error& e) {
        std::cerr << "error: JSON parse: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: invalid argument: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConstraint;
    }
}
