#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "gtq/drinfeld.hpp"
#include "gtq/error.hpp"
#include "gtq/json_io.hpp"
#include "gtq/quiver.hpp"
#include "gtq/tableau.hpp"

namespace {

using gtq::json;
using gtq::Rat;

struct Common {
    std::string in;
    std::string in2;
    std::string out;
    std::string format = "json";
};

void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(c.out);
    if (!f) throw gtq::InputError("cannot open output file: " + c.out);
    f << text << "\n";
}

void emit_json(const Common& c, const json& j) { emit(c, j.dump(2)); }

json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw gtq::InputError("cannot open input file: " + path);
    json j;
    try {
        f >> j;
    } catch (const json::exception& e) {
        throw gtq::InputError("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

gtq::Tableau load_tableau(const std::string& path) {
    if (path.empty()) throw gtq::InputError("missing required --in tableau file");
    return gtq::tableau_from_json(load_json(path));
}

unsigned long pick_seed(const CLI::Option* opt, unsigned long flag_value) {
    if (opt->count() > 0) return flag_value;
    if (const char* env = std::getenv("GT_SEED")) {
        try {
            return std::stoul(env);
        } catch (const std::exception&) {
            throw gtq::InputError("GT_SEED must be a nonnegative integer");
        }
    }
    return 1;
}

json parse_word_steps(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw gtq::InputError(std::string("malformed --word JSON: ") + e.what());
    }
}

// resolves {"kind","m","i"} steps into window edges starting at the root vertex
gtq::PathWord resolve_word(const gtq::QuiverWindow& w, const json& steps) {
    if (!steps.is_array()) throw gtq::InputError("--word must be a JSON array of steps");
    gtq::PathWord word;
    int cur = w.vertex_index(gtq::canonical_ideal(w.root()));
    for (const auto& s : steps) {
        std::string kind = s.at("kind").get<std::string>();
        if (kind != "b" && kind != "c") throw gtq::InputError("step kind must be \"b\" or \"c\"");
        int m = s.at("m").get<int>();
        int i = s.at("i").get<int>();
        int e = w.edge_at(cur, kind[0], m, i);
        if (e < 0)
            throw gtq::InputError("step " + kind + " at row " + std::to_string(m) + ", position " +
                                  std::to_string(i) + " leaves the window or hits a critical point");
        word.edges.push_back(e);
        cur = w.edges()[e].target;
    }
    return word;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact Gelfand-Tsetlin / Drinfeld quiver toolkit"};
    app.require_subcommand(1);
    Common common;

    auto add_common = [&common](CLI::App* sub, bool needs_in) {
        auto* in = sub->add_option("--in", common.in, "input tableau JSON file");
        if (needs_in) in->required();
        sub->add_option("--out", common.out, "write output here instead of stdout");
        return sub;
    };

    auto* cmd_classify = add_common(app.add_subcommand("classify", "classify a tableau"), true);

    auto* cmd_gamma = add_common(
        app.add_subcommand("gamma", "Gelfand-Tsetlin character values gamma_mk"), true);
    int gamma_m = 0, gamma_k = 0;
    auto* gamma_m_opt = cmd_gamma->add_option("--m", gamma_m, "row");
    auto* gamma_k_opt = cmd_gamma->add_option("--k", gamma_k, "power");
    cmd_gamma->add_option("--format", common.format, "json or csv (tables only)")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* cmd_gens = app.add_subcommand("gens", "emit generators");
    int gens_n = 0, gens_m = 0, gens_k = 0;
    std::string gens_kind;
    cmd_gens->add_option("--n", gens_n, "rank")->required()->check(CLI::Range(1, 6));
    cmd_gens->add_option("--kind", gens_kind, "a, b, c, d (Drinfeld) or gt (c_mk)")
        ->required()
        ->check(CLI::IsMember({"a", "b", "c", "d", "gt"}));
    cmd_gens->add_option("--m", gens_m, "index m")->required();
    cmd_gens->add_option("--k", gens_k, "power k (gt only)");
    cmd_gens->add_option("--out", common.out, "write output here instead of stdout");

    auto* cmd_verify = app.add_subcommand("verify", "verify the commutation relation families");
    int verify_n = 3;
    cmd_verify->add_option("--n", verify_n, "rank (2..4)")->check(CLI::Range(2, 4));
    cmd_verify->add_option("--out", common.out, "write output here instead of stdout");

    auto* cmd_window = add_common(app.add_subcommand("window", "build a quiver window"), true);
    int radius = 0;
    cmd_window->add_option("--radius", radius, "L1 radius")->required()->check(CLI::NonNegativeNumber);

    auto* cmd_solve = add_common(app.add_subcommand("solve", "solve the window module"), true);
    cmd_solve->add_option("--radius", radius, "L1 radius")->required()->check(CLI::NonNegativeNumber);
    unsigned long tree_seed = 0;
    cmd_solve->add_option("--tree-seed", tree_seed, "nonzero shuffles the spanning tree");

    auto* cmd_reduce = add_common(
        app.add_subcommand("reduce", "reduce a cycle to its scalar, or probe random cycles"), true);
    cmd_reduce->add_option("--radius", radius, "L1 radius")->required()->check(CLI::NonNegativeNumber);
    std::string word_text;
    auto* word_opt = cmd_reduce->add_option(
        "--word", word_text, "JSON array of steps {\"kind\",\"m\",\"i\"} applied from the root");
    bool probe = false;
    cmd_reduce->add_flag("--probe", probe, "sample random cycles instead");
    int samples = 100, max_len = 8, vertex = -1;
    cmd_reduce->add_option("--samples", samples, "probe: number of cycles");
    cmd_reduce->add_option("--max-len", max_len, "probe: maximum cycle length");
    cmd_reduce->add_option("--vertex", vertex, "probe: base vertex index (default root)");
    unsigned long seed = 0;
    auto* seed_opt = cmd_reduce->add_option("--seed", seed, "probe RNG seed (or GT_SEED)");

    auto* cmd_orbit = app.add_subcommand("orbit", "test module orbit equivalence of two tableaux");
    cmd_orbit->add_option("--in", common.in, "first tableau JSON file")->required();
    cmd_orbit->add_option("--in2", common.in2, "second tableau JSON file")->required();
    cmd_orbit->add_option("--out", common.out, "write output here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (cmd_classify->parsed()) {
        emit_json(common, gtq::classification_to_json(gtq::classify_tableau(load_tableau(common.in))));
        return 0;
    }

    if (cmd_gamma->parsed()) {
        gtq::Tableau t = load_tableau(common.in);
        if (gamma_m_opt->count() != gamma_k_opt->count())
            throw gtq::InputError("--m and --k must be given together");
        if (gamma_m_opt->count() > 0) {
            emit_json(common, json(gtq::rat_str(gtq::gamma_value(t, gamma_m, gamma_k))));
            return 0;
        }
        if (common.format == "csv") {
            std::ostringstream os;
            os << "m,k,value";
            for (int m = 1; m <= t.rank(); ++m)
                for (int k = 1; k <= m; ++k)
                    os << "\n" << m << "," << k << "," << gtq::rat_str(gtq::gamma_value(t, m, k));
            emit(common, os.str());
            return 0;
        }
        json values = json::array();
        for (int m = 1; m <= t.rank(); ++m)
            for (int k = 1; k <= m; ++k)
                values.push_back(json{{"m", m},
                                      {"k", k},
                                      {"value", gtq::rat_str(gtq::gamma_value(t, m, k))}});
        emit_json(common, json{{"n", t.rank()}, {"values", values}});
        return 0;
    }

    if (cmd_gens->parsed()) {
        if (gens_kind == "gt") {
            if (gens_k <= 0) throw gtq::InputError("gt generators need --k >= 1");
            emit_json(common, gtq::algebra_to_json(gtq::gt_generator(gens_n, gens_m, gens_k)));
            return 0;
        }
        gtq::DrinfeldKind kind = gens_kind == "a"   ? gtq::DrinfeldKind::A
                                 : gens_kind == "b" ? gtq::DrinfeldKind::B
                                 : gens_kind == "c" ? gtq::DrinfeldKind::C
                                                    : gtq::DrinfeldKind::D;
        emit_json(common, gtq::upoly_to_json(gtq::drinfeld_polynomial(gens_n, kind, gens_m)));
        return 0;
    }

    if (cmd_verify->parsed()) {
        gtq::RelationReport report = gtq::verify_nt_relations(verify_n);
        emit_json(common, gtq::report_to_json(report));
        return report.all_pass() ? 0 : 1;
    }

    if (cmd_window->parsed()) {
        gtq::QuiverWindow w(load_tableau(common.in), radius);
        emit_json(common, gtq::window_to_json(w));
        return 0;
    }

    if (cmd_solve->parsed()) {
        gtq::QuiverWindow w(load_tableau(common.in), radius);
        gtq::ModuleRep rep = gtq::solve_module(w, tree_seed);
        emit_json(common, gtq::module_to_json(w, rep));
        return 0;
    }

    if (cmd_reduce->parsed()) {
        gtq::QuiverWindow w(load_tableau(common.in), radius);
        if (probe) {
            int base = vertex >= 0 ? vertex : w.vertex_index(gtq::canonical_ideal(w.root()));
            gtq::ProbeReport report =
                gtq::cyclic_dimension_probe(w, base, samples, max_len, pick_seed(seed_opt, seed));
            emit_json(common, gtq::probe_to_json(report));
            return report.pass ? 0 : 1;
        }
        if (word_opt->count() == 0) throw gtq::InputError("reduce needs --word or --probe");
        gtq::PathWord word = resolve_word(w, parse_word_steps(word_text));
        emit_json(common, json{{"scalar", gtq::rat_str(gtq::reduce_cycle(w, word))}});
        return 0;
    }

    if (cmd_orbit->parsed()) {
        gtq::Tableau a = load_tableau(common.in);
        gtq::Tableau b = load_tableau(common.in2);
        emit_json(common, json{{"equivalent", gtq::module_orbit_equivalent(a, b)}});
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const gtq::NonGenericWindow& e) {
        std::cerr << "error: " << e.what() << "\n";
        for (const auto& s : e.sites)
            std::cerr << "  vertex " << s.vertex << ", row " << s.m << ", position " << s.i
                      << ", spectral point " << s.point << "\n";
        return 2;
    } catch (const gtq::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const gtq::IrreducibleWord& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const gtq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
