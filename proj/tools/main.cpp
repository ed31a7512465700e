// Command line front end: builds hierarchy models, enumerates bicharacters,
// verifies pentagon/hexagon data exactly, simulates braiding, classifies
// stacked-code twist symmetries and reproduces the full result set.
//
// Exit codes: 0 all checks passed, 1 a mathematical check failed, 2 usage
// error.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "tycat/gates.hpp"
#include "tycat/json_io.hpp"
#include "tycat/reproduce.hpp"
#include "tycat/twists.hpp"
#include "tycat/version.hpp"

namespace {

using namespace tycat;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct GlobalOpts {
    int jobs = 1;
    std::string format = "json";
    std::string out_dir;
};

void emit(const GlobalOpts& g, const json& payload, const std::string& table_text) {
    if (g.format == "table") {
        std::cout << table_text;
    } else {
        std::cout << payload.dump(2) << "\n";
    }
}

AnyonModel load_model_file(const std::string& path) { return model_from_json(read_json_file(path)); }

int cmd_model_build(const GlobalOpts& g, int k, const std::string& out_file) {
    AnyonModel m = build_extended_ising(k);
    json j = model_to_json(m);
    if (!out_file.empty()) write_json_file(out_file, j);
    if (k == 0) std::cerr << "note: level 0 is the one-Abelian toy model\n";
    emit(g, j,
         "model level " + std::to_string(k) + ": " + std::to_string(m.n_charges()) + " charges\n");
    return kExitOk;
}

int cmd_model_validate(const GlobalOpts& g, const std::string& file) {
    ValidationReport rep = validate_model(load_model_file(file));
    std::string text = rep.ok() ? "valid\n" : "invalid:\n";
    for (const auto& v : rep.violations) text += "  " + v + "\n";
    emit(g, validation_to_json(rep), text);
    return rep.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_f_enumerate(const GlobalOpts& g, int k) {
    auto bichs = enumerate_bicharacters(k);
    json arr = json::array();
    std::string text = std::to_string(bichs.size()) + " bicharacters at level " +
                       std::to_string(k) + "\n";
    for (std::size_t i = 0; i < bichs.size(); ++i) {
        PhiMatrix phi = phi_from_bicharacter(bichs[i]);
        arr.push_back(json{{"index", i},
                           {"matrix", f2matrix_to_json(bichs[i].M)},
                           {"phi_trace", trace_class(phi)}});
        text += "  [" + std::to_string(i) + "] trace " + std::to_string(phi.trace()) + "\n";
    }
    emit(g, json{{"k", k}, {"bicharacters", arr}}, text);
    return kExitOk;
}

int cmd_f_pentagon(const GlobalOpts& g, const std::string& model_file, int bich_idx,
                   const std::string& sign_str) {
    AnyonModel m = load_model_file(model_file);
    auto bichs = enumerate_bicharacters(m.k());
    if (bich_idx < 0 || bich_idx >= int(bichs.size())) {
        throw std::invalid_argument("bicharacter index out of range");
    }
    int sign = sign_str == "-" ? -1 : +1;
    FSymbols f = build_f_symbols(m, bichs[std::size_t(bich_idx)], sign);
    PentagonReport rep = verify_pentagon(f, g.jobs);
    json j = pentagon_to_json(rep);
    if (!g.out_dir.empty()) {
        std::filesystem::create_directories(g.out_dir);
        write_json_file(g.out_dir + "/pentagon.json", j);
    }
    emit(g, j,
         std::string(rep.ok() ? "pentagon holds" : "pentagon FAILS") + " (" +
             std::to_string(rep.evaluated) + " instances evaluated, " +
             std::to_string(rep.violations.size()) + " violations)\n");
    return rep.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_f_census(const GlobalOpts& g, int order) {
    CensusReport rep = symmetric_column_permutation_census(order, g.jobs);
    json j = census_report_to_json(rep);
    if (!g.out_dir.empty()) {
        std::filesystem::create_directories(g.out_dir);
        write_json_file(g.out_dir + "/census_order" + std::to_string(order) + ".json", j);
    }
    std::string text = "order " + std::to_string(order) + ": " +
                       std::to_string(rep.symmetry_preserving) + " symmetry-preserving column permutations\n";
    for (const auto& [delta, n] : rep.delta_histogram) {
        text += "  trace delta " + std::to_string(delta) + ": " + std::to_string(n) + "\n";
    }
    emit(g, j, text);
    return kExitOk;
}

int cmd_r_solve(const GlobalOpts& g, const std::string& model_file, int f_index, bool mirror) {
    AnyonModel m = load_model_file(model_file);
    FSymbols f = f_symbols_by_index(m, f_index);
    auto sols = solve_r(f, g.jobs);
    json arr = json::array();
    bool mirror_all = true;
    for (std::size_t i = 0; i < sols.size(); ++i) {
        json entry = r_symbols_to_json(sols[i]);
        entry["index"] = i;
        if (mirror) {
            bool ok = verify_hexagon(sols[i], true, g.jobs).ok();
            entry["mirror_hexagon_ok"] = ok;
            mirror_all = mirror_all && ok;
        }
        arr.push_back(entry);
    }
    json j{{"f_index", f_index}, {"solutions", arr}};
    if (mirror) j["mirror_all_ok"] = mirror_all;
    if (!g.out_dir.empty()) {
        std::filesystem::create_directories(g.out_dir);
        write_json_file(g.out_dir + "/r_solutions.json", j);
    }
    std::string text = std::to_string(sols.size()) + " hexagon solutions\n";
    emit(g, j, text);
    return sols.empty() ? kExitCheckFailed : kExitOk;
}

int cmd_r_census(const GlobalOpts& g, const std::string& model_file, int f_index) {
    AnyonModel m = load_model_file(model_file);
    FSymbols f = f_symbols_by_index(m, f_index);
    RCensus want = expected_census(m.k(), trace_class(f.phi()));
    auto sols = solve_r(f, g.jobs);
    json arr = json::array();
    bool all_match = !sols.empty();
    std::string text;
    for (std::size_t i = 0; i < sols.size(); ++i) {
        RCensus c = census(sols[i]);
        bool match = c == want;
        all_match = all_match && match;
        arr.push_back(json{{"index", i},
                           {"plus_one", c.n_plus_one},
                           {"minus_one", c.n_minus_one},
                           {"plus_i", c.n_plus_i},
                           {"minus_i", c.n_minus_i},
                           {"matches_table", match}});
        text += "solution " + std::to_string(i) + ": (+1,-1,+i,-i) = (" +
                std::to_string(c.n_plus_one) + "," + std::to_string(c.n_minus_one) + "," +
                std::to_string(c.n_plus_i) + "," + std::to_string(c.n_minus_i) + ")" +
                (match ? "" : "  MISMATCH") + "\n";
    }
    json j{{"f_index", f_index},
           {"expected", json{{"plus_one", want.n_plus_one},
                             {"minus_one", want.n_minus_one},
                             {"plus_i", want.n_plus_i},
                             {"minus_i", want.n_minus_i}}},
           {"censuses", arr},
           {"all_match_table", all_match}};
    emit(g, j, text);
    return all_match ? kExitOk : kExitCheckFailed;
}

int cmd_r_sum_squares(const GlobalOpts& g, int k) {
    auto sols = sum_of_squares_check(k);
    json arr = json::array();
    std::string text = "a^2 + b^2 = 2^" + std::to_string(k) + ":\n";
    for (auto [a, b] : sols) {
        arr.push_back(json::array({a, b}));
        text += "  (" + std::to_string(a) + ", " + std::to_string(b) + ")\n";
    }
    emit(g, json{{"k", k}, {"solutions", arr}}, text);
    return kExitOk;
}

json braid_entry(const GateMatrix& gate, int k) {
    json entry;
    entry["matrix"] = gate_to_json(gate);
    entry["clifford"] = is_clifford(gate, k);
    auto match = match_named_gate(gate, k);
    if (match) {
        entry["named_form"] = named_form_string(match->form);
        entry["relabelling"] = f2matrix_to_json(match->relabel);
    } else {
        auto fb = match_named_gate_any_permutation(gate, k);
        if (fb) {
            entry["named_form_up_to_permutation"] = named_form_string(*fb);
        }
    }
    return entry;
}

int cmd_braid(const GlobalOpts& g, const std::string& model_file, int f_index, int r_index,
              const std::string& word_str, bool table_mode) {
    AnyonModel m = load_model_file(model_file);
    FSymbols f = f_symbols_by_index(m, f_index);
    auto sols = solve_r(f, g.jobs);
    if (r_index < 0 || r_index >= int(sols.size())) {
        throw std::invalid_argument("r-index out of range (solutions: " +
                                    std::to_string(sols.size()) + ")");
    }
    const RSymbols& r = sols[std::size_t(r_index)];
    int k = m.k();

    if (table_mode) {
        json gens = json::array();
        std::string text;
        for (int idx = 1; idx <= 3; ++idx) {
            GateMatrix gate = braid_generator(idx, f, r);
            json entry = braid_entry(gate, k);
            entry["generator"] = idx;
            text += "sigma_" + std::to_string(idx) + ": clifford=" +
                    (entry["clifford"].get<bool>() ? "yes" : "no");
            if (entry.contains("named_form")) {
                text += " named=" + entry["named_form"].get<std::string>();
            }
            text += "\n";
            gens.push_back(entry);
        }
        json j{{"k", k}, {"f_index", f_index}, {"r_index", r_index}, {"generators", gens}};
        emit(g, j, text);
        return kExitOk;
    }

    std::vector<int> word;
    std::stringstream ss(word_str);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) word.push_back(std::stoi(tok));
    }
    GateMatrix gate = braid_word(word, f, r);
    json j = braid_entry(gate, k);
    j["k"] = k;
    j["word"] = word;
    if (!g.out_dir.empty()) {
        std::filesystem::create_directories(g.out_dir);
        write_json_file(g.out_dir + "/braid.json", j);
    }
    std::string text = std::string("clifford: ") + (j["clifford"].get<bool>() ? "yes" : "no") + "\n";
    if (j.contains("named_form")) text += "named form: " + j["named_form"].get<std::string>() + "\n";
    emit(g, j, text);
    return j["clifford"].get<bool>() ? kExitOk : kExitCheckFailed;
}

int cmd_twists_group(const GlobalOpts& g, int layers) {
    auto group = generate_group(layers);
    json arr = json::array();
    for (const auto& s : group) arr.push_back(f2matrix_to_json(s.S));
    json j{{"layers", layers}, {"order", group.size()}, {"elements", arr}};
    if (!g.out_dir.empty()) {
        std::filesystem::create_directories(g.out_dir);
        write_json_file(g.out_dir + "/twist_group.json", j);
    }
    emit(g, j, "symmetry group order " + std::to_string(group.size()) + "\n");
    return kExitOk;
}

int cmd_twists_classify(const GlobalOpts& g, int layers, bool reps_only) {
    TwistContext ctx = TwistContext::build(layers);
    json arr = json::array();
    std::string text = std::to_string(ctx.classes.size()) + " conjugacy classes\n";
    for (int cid = 0; cid < int(ctx.classes.size()); ++cid) {
        const auto& cls = ctx.classes[std::size_t(cid)];
        std::vector<int> members =
            reps_only ? std::vector<int>{cls.front()} : cls;
        for (int gi : members) {
            TwistClassification c = classify_twist(ctx.group[std::size_t(gi)], &ctx);
            arr.push_back(classification_to_json(c));
        }
        TwistClassification rep = classify_twist(ctx.group[std::size_t(cls.front())], &ctx);
        std::string line = "class " + std::to_string(cid) + ": size " + std::to_string(cls.size());
        if (rep.self_inverse && rep.localisable_invariant) {
            line += ", anyonic level " + std::to_string(rep.level) + " (bosons " +
                    std::to_string(rep.boson_count) + ", fermions " +
                    std::to_string(rep.fermion_count) + "), localises";
            for (const auto& b : rep.localisable) {
                line += " " + (layers == 2 ? colour_code_label(b) : stacked_anyon_name(b));
            }
        } else {
            line += ", not anyonic";
        }
        text += line + "\n";
    }
    json j{{"layers", layers},
           {"order", ctx.group.size()},
           {"classes", ctx.classes.size()},
           {"classifications", arr}};
    if (!g.out_dir.empty()) {
        std::filesystem::create_directories(g.out_dir);
        write_json_file(g.out_dir + "/twist_classification.json", j);
    }
    emit(g, j, text);
    return kExitOk;
}

int cmd_twists_theorem(const GlobalOpts& g, int layers) {
    TheoremReport rep = verify_selfinverse_theorem(layers);
    json j{{"layers", layers},
           {"checked", rep.checked},
           {"ok", rep.ok()},
           {"counterexamples", rep.counterexamples}};
    emit(g, j,
         "checked " + std::to_string(rep.checked) + " symmetries: " +
             (rep.ok() ? "localisable charges are pointwise invariant exactly for self-inverse twists\n"
                       : "COUNTEREXAMPLE FOUND\n"));
    return rep.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_reproduce(const GlobalOpts& g) {
    ReproduceOptions opts;
    opts.jobs = g.jobs;
    opts.out_dir = g.out_dir;
    ReproduceResult res = run_reproduce_all(opts);
    for (const auto& c : res.criteria) {
        std::cout << (c.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << "\n";
    }
    std::cout << "digest " << res.digest << "\n";
    if (!res.all_pass) {
        for (const auto& c : res.criteria) {
            if (!c.pass) {
                std::cout << "first failing criterion: " << c.name << "\n";
                break;
            }
        }
    }
    return res.all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_export(const GlobalOpts&, int k, int f_index, int r_index, const std::string& dir) {
    export_model_bundle(k, f_index, r_index, dir);
    std::cout << "bundle written to " << dir << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact algebra of the Ising-like anyon hierarchy and stacked-code twists"};
    app.set_version_flag("--version", tycat::kVersion);
    app.require_subcommand(1);

    GlobalOpts g;
    if (const char* env = std::getenv("TYCAT_OUT_DIR")) g.out_dir = env;
    app.add_option("--jobs", g.jobs, "worker threads for the parallel verifications")
        ->check(CLI::Range(1, 64));
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--out", g.out_dir, "output directory for report files");

    // model
    auto* model = app.add_subcommand("model", "build and validate anyon models");
    model->require_subcommand(1);
    int build_k = 1;
    std::string build_out;
    auto* model_build = model->add_subcommand("build", "write a hierarchy model file");
    model_build->add_option("--k", build_k, "hierarchy level")->required()->check(CLI::Range(0, 8));
    model_build->add_option("--out", build_out, "output model file");
    std::string validate_file;
    auto* model_validate = model->add_subcommand("validate", "check the fusion axioms");
    model_validate->add_option("file", validate_file, "model file")->required();

    // f
    auto* fcmd = app.add_subcommand("f", "bicharacters, F-symbols and the pentagon");
    fcmd->require_subcommand(1);
    int enum_k = 1;
    auto* f_enum = fcmd->add_subcommand("enumerate", "list the bicharacters of a level");
    f_enum->add_option("--k", enum_k, "level")->required()->check(CLI::Range(1, 4));
    std::string pent_model;
    int pent_bich = 0;
    std::string pent_sign = "+";
    auto* f_pent = fcmd->add_subcommand("pentagon", "verify the pentagon equation exactly");
    f_pent->add_option("--model", pent_model, "model file")->required();
    f_pent->add_option("--bicharacter", pent_bich, "bicharacter index")->required();
    f_pent->add_option("--sign", pent_sign, "overall F sign")->check(CLI::IsMember({"+", "-"}));
    int census_order = 4;
    auto* f_census = fcmd->add_subcommand("census", "column permutation trace census");
    f_census->add_option("--order", census_order, "matrix order (2, 4 or 8)")->required();

    // r
    auto* rcmd = app.add_subcommand("r", "hexagon solutions and statistics");
    rcmd->require_subcommand(1);
    std::string r_model;
    int r_f_index = 0;
    bool r_mirror = false;
    auto* r_solve = rcmd->add_subcommand("solve", "solve the hexagon equation exactly");
    r_solve->add_option("--model", r_model, "model file")->required();
    r_solve->add_option("--f-index", r_f_index, "F data index (2*bicharacter + sign)")->required();
    r_solve->add_flag("--mirror", r_mirror, "also check the reverse-braiding hexagon");
    std::string rc_model;
    int rc_f_index = 0;
    auto* r_census = rcmd->add_subcommand("census", "diagonal phase census of every solution");
    r_census->add_option("--model", rc_model, "model file")->required();
    r_census->add_option("--f-index", rc_f_index, "F data index")->required();
    int ss_k = 1;
    auto* r_ss = rcmd->add_subcommand("sum-squares", "solutions of a^2 + b^2 = 2^k");
    r_ss->add_option("--k", ss_k, "exponent")->required()->check(CLI::Range(1, 20));

    // braid
    auto* braid = app.add_subcommand("braid", "braid four non-Abelian anyons");
    std::string braid_model, braid_word_str;
    int braid_f = 0, braid_r = 0;
    braid->add_option("--model", braid_model, "model file")->required();
    braid->add_option("--f", braid_f, "F data index")->required();
    braid->add_option("--r", braid_r, "R solution index");
    braid->add_option("--word", braid_word_str, "comma-separated generator word, e.g. 1,2,-1");
    auto* braid_table = braid->add_subcommand("table", "show all generator images");

    // twists
    auto* twists = app.add_subcommand("twists", "symmetries of stacked planar code layers");
    twists->require_subcommand(1);
    int layers_group = 1, layers_classify = 1, layers_theorem = 1;
    bool reps_only = false;
    auto* tw_group = twists->add_subcommand("group", "generate the full symmetry group");
    tw_group->add_option("--layers", layers_group, "layer count")->required()->check(CLI::Range(1, 3));
    auto* tw_classify = twists->add_subcommand("classify", "classify every twist");
    tw_classify->add_option("--layers", layers_classify, "layer count")
        ->required()
        ->check(CLI::Range(1, 3));
    tw_classify->add_flag("--class-reps-only", reps_only, "one representative per conjugacy class");
    auto* tw_theorem = twists->add_subcommand("theorem", "self-inverse twist theorem check");
    tw_theorem->add_option("--layers", layers_theorem, "layer count")
        ->required()
        ->check(CLI::Range(1, 3));

    // reproduce + export
    auto* reproduce = app.add_subcommand("reproduce", "run every acceptance criterion");
    int exp_k = 1, exp_f = 0, exp_r = 0;
    std::string exp_dir;
    auto* export_cmd = app.add_subcommand("export", "write a model/F/R/braid bundle");
    export_cmd->add_option("--k", exp_k, "hierarchy level")->required()->check(CLI::Range(1, 3));
    export_cmd->add_option("--f-index", exp_f, "F data index")->required();
    export_cmd->add_option("--r-index", exp_r, "R solution index")->required();
    export_cmd->add_option("--out", exp_dir, "bundle directory")->required();

    // global flags remain usable after any subcommand name
    auto enable_fallthrough = [](auto&& self, CLI::App* node) -> void {
        node->fallthrough(true);
        for (CLI::App* sub : node->get_subcommands({})) self(self, sub);
    };
    for (CLI::App* sub : app.get_subcommands({})) enable_fallthrough(enable_fallthrough, sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (model_build->parsed()) return cmd_model_build(g, build_k, build_out);
        if (model_validate->parsed()) return cmd_model_validate(g, validate_file);
        if (f_enum->parsed()) return cmd_f_enumerate(g, enum_k);
        if (f_pent->parsed()) return cmd_f_pentagon(g, pent_model, pent_bich, pent_sign);
        if (f_census->parsed()) return cmd_f_census(g, census_order);
        if (r_solve->parsed()) return cmd_r_solve(g, r_model, r_f_index, r_mirror);
        if (r_census->parsed()) return cmd_r_census(g, rc_model, rc_f_index);
        if (r_ss->parsed()) return cmd_r_sum_squares(g, ss_k);
        if (braid->parsed()) {
            bool table_mode = braid_table->parsed();
            if (!table_mode && braid_word_str.empty()) {
                std::cerr << "braid requires --word or the table subcommand\n";
                return kExitUsage;
            }
            return cmd_braid(g, braid_model, braid_f, braid_r, braid_word_str, table_mode);
        }
        if (tw_group->parsed()) return cmd_twists_group(g, layers_group);
        if (tw_classify->parsed()) return cmd_twists_classify(g, layers_classify, reps_only);
        if (tw_theorem->parsed()) return cmd_twists_theorem(g, layers_theorem);
        if (reproduce->parsed()) return cmd_reproduce(g);
        if (export_cmd->parsed()) return cmd_export(g, exp_k, exp_f, exp_r, exp_dir);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
