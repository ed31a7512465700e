#pragma once

#include <chrono>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tycat/gates.hpp"
#include "tycat/json_io.hpp"
#include "tycat/twists.hpp"
#include "tycat/version.hpp"

namespace tycat {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    json details;
    std::int64_t wall_ms = 0;
};

namespace detail {

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int t = 15; t >= 0; --t) {
        out[std::size_t(t)] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

inline GateMatrix f_gate(const FSymbols& f) {
    auto fm = f.f_beta_matrix();
    GateMatrix g(int(fm.size()));
    for (int i = 0; i < g.dim(); ++i) {
        for (int j = 0; j < g.dim(); ++j) g.at(i, j) = fm[std::size_t(i)][std::size_t(j)];
    }
    return g;
}

} // namespace detail

/// The deterministic payload a digest covers: everything except wall times.
inline json criteria_payload(const std::vector<CriterionResult>& criteria) {
    json arr = json::array();
    for (const auto& c : criteria) {
        arr.push_back(json{{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"details", c.details}});
    }
    return arr;
}

inline std::string criteria_digest(const std::vector<CriterionResult>& criteria) {
    return detail::hex64(detail::fnv1a(criteria_payload(criteria).dump()));
}

// ---- criterion 1: hierarchy construction ------------------------------------

inline CriterionResult criterion_hierarchy(int) {
    CriterionResult out{1, "hierarchy_construction", true, json::object(), 0};
    json per_k = json::array();
    int want_counts[] = {3, 5, 9, 17};
    for (int k = 1; k <= 4; ++k) {
        AnyonModel m = build_extended_ising(k);
        ValidationReport rep = validate_model(m);
        bool count_ok = m.n_charges() == want_counts[k - 1];
        bool qdim_ok = m.qdim(m.beta_index()) == CycloNumber::two_pow_half(k);
        per_k.push_back(json{{"k", k},
                             {"charges", m.n_charges()},
                             {"valid", rep.ok()},
                             {"qdim_beta_exact", qdim_ok}});
        out.pass = out.pass && rep.ok() && count_ok && qdim_ok;
    }
    out.details["models"] = per_k;
    return out;
}

// ---- criterion 2: bicharacter counts -----------------------------------------

inline CriterionResult criterion_bicharacters(int) {
    CriterionResult out{2, "bicharacter_counts", true, json::object(), 0};
    auto b1 = enumerate_bicharacters(1);
    auto b2 = enumerate_bicharacters(2);
    int trace0 = 0, trace4 = 0;
    for (const auto& b : b2) {
        int t = trace_class(phi_from_bicharacter(b));
        if (t == 0) ++trace0;
        if (t == 4) ++trace4;
    }
    out.details["k1_bicharacters"] = b1.size();
    out.details["k2_bicharacters"] = b2.size();
    out.details["k2_trace_distribution"] = json{{"0", trace0}, {"4", trace4}};
    out.pass = b1.size() == 1 && b2.size() == 4 && trace0 == 3 && trace4 == 1;
    return out;
}

// ---- criterion 3: pentagon ----------------------------------------------------

inline CriterionResult criterion_pentagon(int jobs) {
    CriterionResult out{3, "pentagon_verification", true, json::object(), 0};
    json runs = json::array();
    for (int k = 1; k <= 2; ++k) {
        AnyonModel m = build_extended_ising(k);
        auto bichs = enumerate_bicharacters(k);
        for (std::size_t bi = 0; bi < bichs.size(); ++bi) {
            for (int sign : {+1, -1}) {
                PentagonReport rep = verify_pentagon(build_f_symbols(m, bichs[bi], sign), jobs);
                runs.push_back(json{{"k", k},
                                    {"bicharacter", bi},
                                    {"sign", sign},
                                    {"ok", rep.ok()},
                                    {"evaluated", rep.evaluated}});
                out.pass = out.pass && rep.ok();
            }
        }
    }
    {
        AnyonModel m3 = build_extended_ising(3);
        for (int sign : {+1, -1}) {
            PentagonReport rep =
                verify_pentagon(build_f_symbols(m3, Bicharacter(F2Matrix::identity(3)), sign), jobs);
            runs.push_back(json{{"k", 3},
                                {"bicharacter", "sylvester"},
                                {"sign", sign},
                                {"ok", rep.ok()},
                                {"evaluated", rep.evaluated}});
            out.pass = out.pass && rep.ok();
        }
    }
    // flipping any single phi entry at k = 1 must break at least one instance
    {
        AnyonModel m = build_extended_ising(1);
        Bicharacter b(F2Matrix::identity(1));
        PhiMatrix good = phi_from_bicharacter(b);
        int broken = 0;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                std::vector<std::int8_t> v;
                for (int r = 0; r < 2; ++r) {
                    for (int c = 0; c < 2; ++c) {
                        std::int8_t s = std::int8_t(good.at(r, c));
                        v.push_back(r == i && c == j ? std::int8_t(-s) : s);
                    }
                }
                FSymbols f = FSymbols::with_custom_phi(m, b, +1, PhiMatrix(1, v));
                if (!verify_pentagon(f, jobs).ok()) ++broken;
            }
        }
        out.details["k1_mutations_rejected"] = broken;
        out.pass = out.pass && broken == 4;
    }
    out.details["runs"] = runs;
    return out;
}

// ---- criterion 4: hexagon solutions at k = 1, 2 -------------------------------

inline CriterionResult criterion_hexagon(int jobs) {
    CriterionResult out{4, "hexagon_solutions", true, json::object(), 0};
    // level 1: the standard Ising braid phase is recovered exactly
    {
        AnyonModel m = build_extended_ising(1);
        FSymbols f = build_f_symbols(m, Bicharacter(F2Matrix::identity(1)), +1);
        auto sols = solve_r(f, jobs);
        bool has_standard = false;
        bool all_s_class = true;
        RSymbols probe{f, {CycloNumber::one(), CycloNumber::i()}, {}, {}};
        RCensus want = census(probe);
        for (const auto& s : sols) {
            if (s.diag[0] == CycloNumber::zeta_pow(15) && s.diag[1] == CycloNumber::zeta_pow(3)) {
                has_standard = true;
            }
            if (!(census(s) == want)) all_s_class = false;
        }
        out.details["k1_solutions"] = sols.size();
        out.details["k1_contains_exp_minus_i_pi_8_diag_1_i"] = has_standard;
        out.pass = out.pass && !sols.empty() && has_standard && all_s_class;
    }
    // level 2: exactly the two reference diagonals up to global phase
    {
        AnyonModel m = build_extended_ising(2);
        FSymbols ref_f = build_f_symbols(m, enumerate_bicharacters(2)[0], +1);
        RSymbols ref4{ref_f,
                      {CycloNumber::one(), CycloNumber::one(), CycloNumber::one(),
                       -CycloNumber::one()},
                      {},
                      {}};
        RSymbols ref0{ref_f,
                      {CycloNumber::one(), CycloNumber::i(), CycloNumber::i(),
                       -CycloNumber::one()},
                      {},
                      {}};
        RCensus want4 = census(ref4), want0 = census(ref0);
        bool ok = true;
        std::set<std::string> seen;
        for (const auto& b : enumerate_bicharacters(2)) {
            for (int sign : {+1, -1}) {
                FSymbols f = build_f_symbols(m, b, sign);
                int tr = trace_class(f.phi());
                auto sols = solve_r(f, jobs);
                if (sols.empty()) ok = false;
                for (const auto& s : sols) {
                    RCensus got = census(s);
                    if (!(got == (tr == 4 ? want4 : want0))) ok = false;
                    seen.insert(tr == 4 ? "diag(1,1,1,-1)" : "diag(1,i,i,-1)");
                }
            }
        }
        out.details["k2_diagonal_classes"] = json(std::vector<std::string>(seen.begin(), seen.end()));
        out.pass = out.pass && ok && seen.size() == 2;
    }
    return out;
}

// ---- criterion 5: R diagonal census table ------------------------------------

inline CriterionResult criterion_census_table(int jobs) {
    CriterionResult out{5, "r_diagonal_census", true, json::object(), 0};
    json per_k = json::array();
    for (int k = 1; k <= 3; ++k) {
        AnyonModel m = build_extended_ising(k);
        std::uint64_t solutions = 0;
        bool ok = true;
        for (const auto& b : enumerate_bicharacters(k)) {
            for (int sign : {+1, -1}) {
                FSymbols f = build_f_symbols(m, b, sign);
                RCensus want = expected_census(k, trace_class(f.phi()));
                auto sols = solve_r(f, jobs);
                if (sols.empty()) ok = false;
                solutions += sols.size();
                for (const auto& s : sols) {
                    if (!(census(s) == want)) ok = false;
                }
            }
        }
        per_k.push_back(json{{"k", k}, {"solutions", solutions}, {"all_match_table", ok}});
        out.pass = out.pass && ok;
    }
    out.details["per_level"] = per_k;
    return out;
}

// ---- criterion 6: column permutation census ----------------------------------

inline CriterionResult criterion_permutation_census(int jobs) {
    CriterionResult out{6, "hadamard_permutation_census", true, json::object(), 0};
    CensusReport r4 = symmetric_column_permutation_census(4, jobs);
    bool ok4 = r4.delta_histogram.count(4) && r4.delta_histogram.count(-4);
    for (const auto& [delta, n] : r4.delta_histogram) {
        if (delta != 0 && delta != 4 && delta != -4) ok4 = false;
        (void)n;
    }
    CensusReport r8 = symmetric_column_permutation_census(8, jobs);
    bool ok8 = r8.symmetry_preserving > 0 && r8.delta_histogram.size() == 1 &&
               r8.delta_histogram.count(0) == 1;
    out.details["order4"] = census_report_to_json(r4);
    out.details["order8"] = census_report_to_json(r8);
    out.pass = ok4 && ok8;
    return out;
}

// ---- criterion 7: sum of squares ----------------------------------------------

inline CriterionResult criterion_sum_of_squares(int) {
    CriterionResult out{7, "sum_of_squares", true, json::object(), 0};
    json per_k = json::array();
    for (int k = 1; k <= 20; ++k) {
        try {
            auto sols = sum_of_squares_check(k);
            per_k.push_back(json{{"k", k}, {"solutions", sols.size()}});
        } catch (const std::exception& e) {
            per_k.push_back(json{{"k", k}, {"error", e.what()}});
            out.pass = false;
        }
    }
    out.details["per_k"] = per_k;
    return out;
}

// ---- criterion 8: braiding gates ----------------------------------------------

inline CriterionResult criterion_braiding_gates(int jobs) {
    CriterionResult out{8, "braiding_gates", true, json::object(), 0};

    // level 1: sigma_1 of the standard solution is the S gate up to phase
    {
        AnyonModel m = build_extended_ising(1);
        FSymbols f = build_f_symbols(m, Bicharacter(F2Matrix::identity(1)), +1);
        bool standard_matches = false, all_fallback = true;
        for (const auto& r : solve_r(f, jobs)) {
            GateMatrix s1 = braid_generator(1, f, r);
            if (r.diag[0] == CycloNumber::zeta_pow(15)) {
                auto match = match_named_gate(s1, 1);
                standard_matches = match && match->form == NamedForm::SAll;
            }
            auto fb = match_named_gate_any_permutation(s1, 1);
            if (!(fb && *fb == NamedForm::SAll)) all_fallback = false;
        }
        auto fmatch = match_named_gate(detail::f_gate(f), 1);
        out.details["k1_sigma1_is_S"] = standard_matches;
        out.details["k1_f_is_H"] = bool(fmatch && fmatch->form == NamedForm::HadamardAll);
        out.pass = out.pass && standard_matches && all_fallback && fmatch &&
                   fmatch->form == NamedForm::HadamardAll;
    }

    // level 2: named matches per bicharacter
    {
        AnyonModel m = build_extended_ising(2);
        json per_b = json::array();
        for (const auto& b : enumerate_bicharacters(2)) {
            for (int sign : {+1, -1}) {
                FSymbols f = build_f_symbols(m, b, sign);
                int tr = trace_class(f.phi());
                NamedForm want_r = tr == 4 ? NamedForm::CZPairs : NamedForm::SAll;
                NamedForm want_f = tr == 4 ? NamedForm::SwapHH : NamedForm::HadamardAll;
                auto fmatch = match_named_gate(detail::f_gate(f), 2);
                bool f_ok = fmatch && fmatch->form == want_f;
                int gl_hits = 0;
                bool perm_all = true;
                auto sols = solve_r(f, jobs);
                for (const auto& r : sols) {
                    GateMatrix s1 = braid_generator(1, f, r);
                    auto match = match_named_gate(s1, 2);
                    if (match && match->form == want_r) ++gl_hits;
                    auto fb = match_named_gate_any_permutation(s1, 2);
                    if (!(fb && *fb == want_r)) perm_all = false;
                }
                per_b.push_back(json{{"trace", tr},
                                     {"sign", sign},
                                     {"f_matches", f_ok},
                                     {"named_r_form", named_form_string(want_r)},
                                     {"solutions", sols.size()},
                                     {"gl_encoded_matches", gl_hits},
                                     {"all_match_up_to_relabelling", perm_all}});
                out.pass = out.pass && f_ok && gl_hits > 0 && perm_all;
            }
        }
        out.details["k2"] = per_b;
    }

    // braid relations for every solved pair, k <= 3
    {
        json rel = json::array();
        for (int k = 1; k <= 3; ++k) {
            AnyonModel m = build_extended_ising(k);
            std::uint64_t pairs = 0;
            bool ok = true;
            for (const auto& b : enumerate_bicharacters(k)) {
                for (int sign : {+1, -1}) {
                    FSymbols f = build_f_symbols(m, b, sign);
                    for (const auto& r : solve_r(f, jobs)) {
                        GateMatrix s1 = braid_generator(1, f, r);
                        GateMatrix s2 = braid_generator(2, f, r);
                        GateMatrix s3 = braid_generator(3, f, r);
                        if (!(s1 * s2 * s1 == s2 * s1 * s2)) ok = false;
                        if (!(s1 * s3 == s3 * s1)) ok = false;
                        ++pairs;
                    }
                }
            }
            rel.push_back(json{{"k", k}, {"pairs", pairs}, {"exact", ok}});
            out.pass = out.pass && ok && pairs > 0;
        }
        out.details["braid_relations"] = rel;
    }

    // 100 random braid words at k <= 2 all stay Clifford
    {
        std::mt19937 rng(20260808);
        std::uint64_t words = 0, clifford = 0;
        for (int k = 1; k <= 2; ++k) {
            AnyonModel m = build_extended_ising(k);
            std::vector<std::pair<FSymbols, RSymbols>> pairs;
            for (const auto& b : enumerate_bicharacters(k)) {
                FSymbols f = build_f_symbols(m, b, +1);
                for (auto& r : solve_r(f, jobs)) pairs.emplace_back(f, std::move(r));
            }
            std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
            std::uniform_int_distribution<int> gen(1, 3), coin(0, 1), len(1, 10);
            for (int t = 0; t < 50; ++t) {
                const auto& [f, r] = pairs[pick(rng)];
                std::vector<int> word;
                int n = len(rng);
                for (int u = 0; u < n; ++u) word.push_back(gen(rng) * (coin(rng) ? 1 : -1));
                ++words;
                if (is_clifford(braid_word(word, f, r), k)) ++clifford;
            }
        }
        out.details["random_words"] = words;
        out.details["random_words_clifford"] = clifford;
        out.pass = out.pass && words == 100 && clifford == words;
    }
    return out;
}

// ---- criterion 9: twist symmetry groups ---------------------------------------

inline CriterionResult criterion_twists(int) {
    CriterionResult out{9, "twist_symmetry_groups", true, json::object(), 0};

    auto g1 = generate_group(1);
    out.details["k1_symmetry_group_order"] = g1.size();
    out.pass = out.pass && g1.size() == 2;

    TwistContext ctx = TwistContext::build(2);
    out.details["k2_symmetry_group_order"] = ctx.group.size();
    out.details["k2_conjugacy_classes"] = ctx.classes.size();
    out.pass = out.pass && ctx.group.size() == 72 && ctx.classes.size() == 9;

    // classify one representative per class; members agree by conjugacy
    int b_like = 0, c_like = 0, g_like = 0, identity_like = 0;
    for (const auto& cls : ctx.classes) {
        TwistClassification c = classify_twist(ctx.group[std::size_t(cls[0])], &ctx);
        bool anyonic = c.self_inverse && c.localisable_invariant;
        if (!anyonic) continue;
        if (c.level == 0) ++identity_like;
        if (c.level == 2 && c.boson_count == 4 && c.fermion_count == 0) ++b_like;
        if (c.level == 2 && c.boson_count == 2 && c.fermion_count == 2) ++c_like;
        if (c.level == 1) ++g_like;
    }
    out.details["k2_anyonic_classes"] =
        json{{"identity", identity_like}, {"B", b_like}, {"C", c_like}, {"G", g_like}};
    out.pass = out.pass && identity_like == 1 && b_like == 1 && c_like == 1 && g_like == 1;

    // swap generators are redundant
    {
        bool redundant = true;
        for (int k = 2; k <= 3; ++k) {
            std::vector<SymmetryMap> no_swap;
            auto gens = generators(k);
            // families are emitted in order: k H-walls, k(k-1)/2 swaps, CNOTs
            for (std::size_t t = 0; t < gens.size(); ++t) {
                bool is_swap = t >= std::size_t(k) && t < std::size_t(k + k * (k - 1) / 2);
                if (!is_swap) no_swap.push_back(gens[t]);
            }
            auto full = generate_group(k);
            auto reduced = generate_group_from(no_swap, k);
            if (full.size() != reduced.size()) redundant = false;
            for (std::size_t t = 0; t < full.size() && redundant; ++t) {
                if (!(full[t] == reduced[t])) redundant = false;
            }
        }
        out.details["swap_generators_redundant"] = redundant;
        out.pass = out.pass && redundant;
    }

    // theorem holds exhaustively for k <= 3; the three-layer group is the
    // complete set of form-preserving maps
    json theorem = json::array();
    for (int k = 1; k <= 3; ++k) {
        TheoremReport rep = verify_selfinverse_theorem(k);
        theorem.push_back(json{{"k", k}, {"checked", rep.checked}, {"ok", rep.ok()}});
        out.pass = out.pass && rep.ok();
    }
    out.details["selfinverse_theorem"] = theorem;

    auto g3 = generate_group(3);
    auto oracle3 = enumerate_form_preserving_maps(3);
    bool complete = g3.size() == oracle3.size();
    {
        std::set<std::uint64_t> keys;
        for (const auto& g : g3) keys.insert(g.key());
        for (const auto& m : oracle3) {
            if (!keys.count(m.key())) complete = false;
        }
    }
    out.details["k3_symmetry_group_order"] = g3.size();
    out.details["k3_equals_all_form_preserving_maps"] = complete;
    out.pass = out.pass && g3.size() == 40320 && complete;
    return out;
}

// ---- criterion 10: determinism -------------------------------------------------

inline std::vector<CriterionResult> run_core_criteria(int jobs) {
    using Clock = std::chrono::steady_clock;
    std::vector<CriterionResult (*)(int)> fns = {
        criterion_hierarchy,      criterion_bicharacters,      criterion_pentagon,
        criterion_hexagon,        criterion_census_table,      criterion_permutation_census,
        criterion_sum_of_squares, criterion_braiding_gates,    criterion_twists};
    std::vector<CriterionResult> out;
    for (auto fn : fns) {
        auto t0 = Clock::now();
        CriterionResult c = fn(jobs);
        c.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
        out.push_back(std::move(c));
    }
    return out;
}

inline CriterionResult criterion_determinism(int jobs) {
    CriterionResult out{10, "determinism", true, json::object(), 0};
    auto run_a = run_core_criteria(1);
    auto run_b = run_core_criteria(1);
    auto run_c = run_core_criteria(jobs >= 2 ? jobs : 8);
    std::string da = criteria_digest(run_a);
    std::string db = criteria_digest(run_b);
    std::string dc = criteria_digest(run_c);
    out.details["digest_first"] = da;
    out.details["digest_second"] = db;
    out.details["digest_parallel"] = dc;
    out.details["reports_identical"] =
        criteria_payload(run_a).dump() == criteria_payload(run_b).dump() &&
        criteria_payload(run_a).dump() == criteria_payload(run_c).dump();
    out.pass = da == db && da == dc && out.details["reports_identical"].get<bool>();
    return out;
}

// ---- full run -------------------------------------------------------------------

struct ReproduceOptions {
    int jobs = 1;
    std::string out_dir; // empty: no files written
    bool skip_determinism = false;
};

struct ReproduceResult {
    std::vector<CriterionResult> criteria;
    bool all_pass = false;
    std::string digest;
    json summary;
};

/// Runs every acceptance criterion, optionally writing one report per
/// criterion plus summary and manifest files.  Wall-clock times appear only
/// in the manifest, never in the digested payload, so repeated runs emit
/// byte-identical reports.
inline ReproduceResult run_reproduce_all(const ReproduceOptions& opts = {}) {
    using Clock = std::chrono::steady_clock;
    auto t0 = Clock::now();
    ReproduceResult res;
    res.criteria = run_core_criteria(opts.jobs);
    if (!opts.skip_determinism) {
        auto td = Clock::now();
        CriterionResult det = criterion_determinism(opts.jobs);
        det.wall_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - td).count();
        res.criteria.push_back(std::move(det));
    }
    res.all_pass = true;
    for (const auto& c : res.criteria) res.all_pass = res.all_pass && c.pass;
    res.digest = criteria_digest(res.criteria);

    json crit_summary = json::array();
    for (const auto& c : res.criteria) {
        crit_summary.push_back(json{{"id", c.id}, {"name", c.name}, {"pass", c.pass}});
    }
    res.summary =
        json{{"version", kVersion}, {"all_pass", res.all_pass}, {"criteria", crit_summary}};

    if (!opts.out_dir.empty()) {
        std::filesystem::create_directories(opts.out_dir + "/reports");
        for (const auto& c : res.criteria) {
            std::string id = std::to_string(c.id);
            if (id.size() < 2) id = "0" + id;
            json rep{{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"details", c.details}};
            write_json_file(opts.out_dir + "/reports/criterion_" + id + "_" + c.name + ".json",
                            rep);
        }
        write_json_file(opts.out_dir + "/summary.json", res.summary);
        auto wall =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
        json manifest{{"command", "reproduce"},
                      {"parameters", json{{"jobs", opts.jobs}}},
                      {"version", kVersion},
                      {"wall_ms", wall},
                      {"digest", res.digest}};
        write_json_file(opts.out_dir + "/manifest.json", manifest);
    }
    return res;
}

} // namespace tycat
