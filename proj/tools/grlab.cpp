#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grlab/construct.hpp"
#include "grlab/detect.hpp"
#include "grlab/facts.hpp"
#include "grlab/formulas.hpp"
#include "grlab/gallai.hpp"
#include "grlab/gcg.hpp"
#include "grlab/pin.hpp"
#include "grlab/search.hpp"

using namespace grlab;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolated = 1;
constexpr int kExitResource = 2;
constexpr int kExitUsage = 3;

// an f-alias with several accepted candidates expands to all of them
std::vector<TargetGraph> resolve_targets(const std::string& text, const PresetTable& presets) {
    CatalogId id = CatalogId::parse(text);
    if (id.kind == CatalogId::Kind::Named && id.label.size() >= 2 && id.label[0] == 'f' &&
        id.label != "f11") {
        auto cands = presets.candidates(id.label);
        if (cands.size() > 1) {
            std::vector<TargetGraph> out;
            for (const auto& name : cands) {
                TargetGraph g = catalog_graph(CatalogId::named(name));
                g.name = id.label + "=" + g.name;
                out.push_back(std::move(g));
            }
            return out;
        }
    }
    return {catalog_graph(id, presets)};
}

int cmd_construct(const std::string& target, int k, const std::string& out_path,
                  bool trace, bool search_bases) {
    FixtureStore store;
    CatalogId id = CatalogId::parse(target);
    WitnessRecipe recipe;
    std::optional<ColoredCompleteGraph> graph;
    if (id.kind == CatalogId::Kind::F2n) {
        recipe = witness_f2n_recipe(k, id.m, store, search_bases);
    } else if (id.kind == CatalogId::Kind::Star) {
        graph = witness_star(id.m);
    } else if (id.kind == CatalogId::Kind::Named &&
               (id.label == "f9" || id.label == "f10")) {
        recipe = witness_f9_f10_recipe(k, store, search_bases);
    } else if (id.kind == CatalogId::Kind::Named &&
               (id.label == "f12" || id.label == "f13")) {
        recipe = witness_f12_f13_recipe(k, store, search_bases);
    } else if (id.kind == CatalogId::Kind::Named &&
               (id.label == "f11" || id.label == "banner")) {
        recipe = witness_f2n_recipe(k, 3, store, search_bases);
    } else if ((id.kind == CatalogId::Kind::Complete && id.m == 3) ||
               (id.kind == CatalogId::Kind::Named && id.label == "k3")) {
        recipe = witness_k3_recipe(k);
    } else {
        std::cerr << "no witness construction for target '" << target << "'\n";
        return kExitUsage;
    }
    if (!graph) graph = recipe.evaluate();
    if (trace && !recipe.steps.empty()) std::cout << recipe.trace();
    std::vector<std::string> comments = {
        "grlab construct --target " + target + " --k " + std::to_string(k),
        "order " + std::to_string(graph->order()) + " colors " +
            std::to_string(graph->colors_used().size()),
    };
    if (out_path.empty()) {
        std::cout << encode_gcg(*graph);
    } else {
        write_gcg_file(out_path, *graph, comments);
        std::cout << "wrote " << out_path << " order " << graph->order() << " colors "
                  << graph->colors_used().size() << "\n";
    }
    return kExitPass;
}

int cmd_verify(const std::string& path, bool forbid_rainbow,
               const std::vector<std::string>& forbid_mono, bool decompose_flag,
               bool audit_flag) {
    FixtureStore store;
    PresetTable presets = store.presets();
    ColoredCompleteGraph g = read_gcg_file(path);
    std::cout << "graph vertices=" << g.order() << " colors-declared=" << g.color_count()
              << " colors-used=" << g.colors_used().size() << "\n";

    bool violated = false;
    if (forbid_rainbow) {
        auto t = find_rainbow_triangle(g);
        if (t) {
            violated = true;
            std::cout << "check rainbow-k3: violated triangle=(" << t->u << "," << t->v
                      << "," << t->w << ")\n";
        } else {
            std::cout << "check rainbow-k3: pass\n";
        }
    }
    std::vector<TargetGraph> targets;
    for (const auto& spec : forbid_mono)
        for (auto& t : resolve_targets(spec, presets)) targets.push_back(std::move(t));
    for (const auto& h : targets) {
        if (h.order > g.order()) {
            std::cout << "check mono " << h.name << ": pass (pattern larger than host)\n";
            continue;
        }
        auto e = find_mono_copy(g, h);
        if (e) {
            violated = true;
            std::cout << "check mono " << h.name << ": violated color=" << e->color
                      << " image=[";
            for (std::size_t i = 0; i < e->image.size(); ++i)
                std::cout << (i ? "," : "") << e->image[i];
            std::cout << "]\n";
        } else {
            std::cout << "check mono " << h.name << ": pass\n";
        }
    }

    if (decompose_flag || audit_flag) {
        try {
            GallaiPartition p = find_gallai_partition(g);
            auto rep = verify_partition(g, p);
            std::cout << "decompose parts=" << p.part_count()
                      << " between-colors=" << p.between_colors.size()
                      << " verified=" << (rep.holds ? "pass" : "fail") << "\n";
            if (audit_flag) {
                for (const auto& h : targets) {
                    for (const auto& fr : audit_facts(g, p, h, presets)) {
                        std::cout << "fact " << fr.fact_id << " target=" << h.name << ": "
                                  << (fr.holds ? "holds" : "fails")
                                  << (fr.vacuous ? " (vacuous)" : "") << " non-vacuous="
                                  << fr.non_vacuous_instances;
                        if (fr.counterexample)
                            std::cout << " counterexample " << fr.counterexample->describe();
                        std::cout << "\n";
                        if (!fr.holds) violated = true;
                    }
                }
            }
        } catch (const RainbowTriangleError& e) {
            std::cout << "decompose: not a Gallai coloring (" << e.what() << ")\n";
            violated = true;
        }
    }
    return violated ? kExitViolated : kExitPass;
}

int cmd_decompose(const std::string& path, bool minimize, const std::string& out_path) {
    ColoredCompleteGraph g = read_gcg_file(path);
    GallaiPartition p = minimize ? minimize_parts(g) : find_gallai_partition(g);
    std::string json = p.to_json(g);
    if (out_path.empty()) {
        std::cout << json;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        out << json;
        std::cout << "wrote " << out_path << " parts=" << p.part_count() << "\n";
    }
    return kExitPass;
}

int cmd_search(int n, int colors, bool forbid_rainbow,
               const std::vector<std::string>& forbid_mono, bool prove,
               std::uint64_t budget, int threads, int split, const std::string& sym,
               const std::string& out_path) {
    FixtureStore store;
    PresetTable presets = store.presets();
    Forbid f;
    f.rainbow_k3 = forbid_rainbow;
    for (const auto& spec : forbid_mono)
        for (auto& t : resolve_targets(spec, presets)) f.mono.push_back(std::move(t));
    SearchConfig cfg;
    cfg.node_budget = budget;
    cfg.threads = threads;
    cfg.split_vertices = split;
    if (sym == "on") cfg.vertex_symmetry = true;
    if (sym == "off") cfg.vertex_symmetry = false;

    SearchOutcome out = prove ? prove_unavoidable(n, colors, f, cfg)
                              : find_free_coloring(n, colors, f, cfg);
    std::cout << out.certificate(f);
    std::printf("elapsed %.3fs\n", out.elapsed_seconds);
    if (out.witness && !out_path.empty()) {
        std::string cmd = "grlab search --n " + std::to_string(n) + " --colors " +
                          std::to_string(colors);
        if (forbid_rainbow) cmd += " --forbid-rainbow-k3";
        for (const auto& spec : forbid_mono) cmd += " --forbid-mono " + spec;
        cmd += " --budget " + std::to_string(budget);
        if (sym != "default") cmd += " --vertex-symmetry " + sym;
        write_gcg_file(out_path, *out.witness,
                       {"regenerate: " + cmd + " -o <this file>",
                        "nodes " + std::to_string(out.nodes)});
        std::cout << "wrote " << out_path << "\n";
    }
    switch (out.verdict) {
        case Verdict::Found: return kExitPass;
        case Verdict::Exhausted: return kExitViolated;
        case Verdict::Budget: return kExitResource;
    }
    return kExitResource;
}

int cmd_table(const std::string& family, int k_max, bool check_constructions) {
    CatalogId id = CatalogId::parse(family);
    std::printf("%4s  %-14s %s\n", "k", "value", "note");
    FixtureStore store;
    for (int k = 1; k <= k_max; ++k) {
        GrValue v = gr_value(id, k);
        std::string val = v.exact() ? std::to_string(v.lo)
                                    : "[" + std::to_string(v.lo) + "," +
                                          (v.hi == GrValue::kOpenUpper
                                               ? std::string("open")
                                               : std::to_string(v.hi)) +
                                          "]";
        std::string note = v.note;
        if (check_constructions) {
            std::optional<ColoredCompleteGraph> w;
            if (id.kind == CatalogId::Kind::F2n)
                w = witness_f2n(k, id.m, store);
            else if (id.kind == CatalogId::Kind::Named &&
                     (id.label == "f9" || id.label == "f10"))
                w = witness_f9_f10(k, store);
            else if (id.kind == CatalogId::Kind::Named &&
                     (id.label == "f12" || id.label == "f13"))
                w = witness_f12_f13(k, store);
            else if (id.kind == CatalogId::Kind::Named &&
                     (id.label == "f11" || id.label == "banner"))
                w = witness_f2n(k, 3, store);
            else if ((id.kind == CatalogId::Kind::Complete && id.m == 3) ||
                     (id.kind == CatalogId::Kind::Named && id.label == "k3"))
                w = witness_k3(k);
            if (w) {
                bool ok = w->order() == v.lo - 1;
                note += (note.empty() ? "" : "; ");
                note += ok ? "construction order ok" : "CONSTRUCTION MISMATCH";
                if (!ok) {
                    std::printf("%4d  %-14s %s\n", k, val.c_str(), note.c_str());
                    return kExitViolated;
                }
            }
        }
        std::printf("%4d  %-14s %s\n", k, val.c_str(), note.c_str());
    }
    return kExitPass;
}

int cmd_pin(int n_min, int n_cap, std::uint64_t budget, std::uint64_t seed,
            const std::string& table_path, const std::string& evidence_path) {
    PinConfig cfg;
    cfg.n_min = n_min;
    cfg.n_cap = n_cap;
    cfg.budget_per_call = budget;
    cfg.seed = seed;
    PinResult res = pin_presets(cfg);
    std::cout << res.evidence_text();
    if (!table_path.empty()) {
        std::ofstream out(table_path, std::ios::binary);
        out << res.table.to_json();
        std::cout << "wrote " << table_path << "\n";
    }
    if (!evidence_path.empty()) {
        std::ofstream out(evidence_path, std::ios::binary);
        out << res.evidence_text();
        std::cout << "wrote " << evidence_path << "\n";
    }
    return res.consistent() ? kExitPass : kExitViolated;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge-colorings of complete graphs: witnesses, verification, "
                 "decomposition, exhaustive search"};
    app.require_subcommand(1);

    auto* construct = app.add_subcommand("construct", "build a lower-bound witness coloring");
    std::string c_target, c_out;
    int c_k = 2;
    bool c_trace = false, c_search_bases = false;
    construct->add_option("--target", c_target, "f9|f10|f11|f12|f13|f2n:n|k3|star:n")
        ->required();
    construct->add_option("--k", c_k, "color count");
    construct->add_option("-o,--out", c_out, "output .gcg path");
    construct->add_flag("--trace", c_trace, "print the recipe trace");
    construct->add_flag("--search-bases", c_search_bases,
                        "regenerate missing cached bases by search");

    auto* verify = app.add_subcommand("verify", "check a coloring against forbidden patterns");
    std::string v_path;
    bool v_rainbow = false, v_decompose = false, v_audit = false;
    std::vector<std::string> v_mono;
    verify->add_option("file", v_path, ".gcg file")->required();
    verify->add_flag("--forbid-rainbow-k3", v_rainbow, "forbid rainbow triangles");
    verify->add_option("--forbid-mono", v_mono, "forbid a monochromatic pattern");
    verify->add_flag("--decompose", v_decompose, "also decompose");
    verify->add_flag("--audit", v_audit, "also audit the structural facts");

    auto* decompose = app.add_subcommand("decompose", "emit a Gallai partition as JSON");
    std::string d_path, d_out;
    bool d_min = false;
    decompose->add_option("file", d_path, ".gcg file")->required();
    decompose->add_flag("--minimize", d_min, "fewest parts over the color-pair family");
    decompose->add_option("-o,--out", d_out, "output .json path");

    auto* search = app.add_subcommand("search", "branch-and-prune over k-colorings of K_n");
    int s_n = 0, s_colors = 0, s_threads = 1, s_split = 0;
    bool s_rainbow = false, s_prove = false;
    std::uint64_t s_budget = 200'000'000ULL;
    std::vector<std::string> s_mono;
    std::string s_sym = "default", s_out;
    search->add_option("--n", s_n, "vertex count")->required();
    search->add_option("--colors", s_colors, "color count")->required();
    search->add_flag("--forbid-rainbow-k3", s_rainbow, "forbid rainbow triangles");
    search->add_option("--forbid-mono", s_mono, "forbid a monochromatic pattern");
    search->add_flag("--prove", s_prove, "prove unavoidability (exhaustion certificate)");
    search->add_option("--budget", s_budget, "node budget");
    search->add_option("--threads", s_threads, "worker threads");
    search->add_option("--split", s_split, "subtree split vertex count");
    search->add_option("--vertex-symmetry", s_sym, "on|off|default");
    search->add_option("-o,--out", s_out, "write the found coloring here");

    auto* table = app.add_subcommand("table", "closed-form value table for a family");
    std::string t_family;
    int t_kmax = 10;
    bool t_check = false;
    table->add_option("--family", t_family, "f9|f10|f11|f12|f13|k3|f2n:n")->required();
    table->add_option("--k-max", t_kmax, "largest k");
    table->add_flag("--check-constructions", t_check, "cross-check witness orders");

    auto* pin = app.add_subcommand("pin", "compute the preset table from search evidence");
    int p_nmin = 5, p_ncap = 10;
    std::uint64_t p_budget = 50'000'000ULL, p_seed = 1;
    std::string p_table, p_evidence;
    pin->add_option("--n-min", p_nmin, "first order scanned");
    pin->add_option("--n-cap", p_ncap, "last order scanned");
    pin->add_option("--budget", p_budget, "node budget per search call");
    pin->add_option("--seed", p_seed, "echoed into the evidence");
    pin->add_option("--out-table", p_table, "write presets.json here");
    pin->add_option("--out-evidence", p_evidence, "write the evidence file here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(construct))
            return cmd_construct(c_target, c_k, c_out, c_trace, c_search_bases);
        if (app.got_subcommand(verify))
            return cmd_verify(v_path, v_rainbow, v_mono, v_decompose, v_audit);
        if (app.got_subcommand(decompose)) return cmd_decompose(d_path, d_min, d_out);
        if (app.got_subcommand(search))
            return cmd_search(s_n, s_colors, s_rainbow, s_mono, s_prove, s_budget,
                              s_threads, s_split, s_sym, s_out);
        if (app.got_subcommand(table)) return cmd_table(t_family, t_kmax, t_check);
        if (app.got_subcommand(pin))
            return cmd_pin(p_nmin, p_ncap, p_budget, p_seed, p_table, p_evidence);
    } catch (const GcgError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return kExitResource;
    } catch (const AmbiguousAliasError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CatalogParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    }
    return kExitUsage;
}
