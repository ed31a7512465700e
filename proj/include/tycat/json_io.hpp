#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "tycat/cyclo.hpp"
#include "tycat/fsymbols.hpp"
#include "tycat/gates.hpp"
#include "tycat/gf2.hpp"
#include "tycat/model.hpp"
#include "tycat/rsymbols.hpp"
#include "tycat/twists.hpp"

namespace tycat {

using nlohmann::json;

// ---- exact scalar encoding -------------------------------------------------

/// {"c":[c0..c7],"e":e} -- the exact coefficients, never decimal floats.
inline json cyclo_to_json(const CycloNumber& x) {
    json j;
    j["c"] = x.coeffs();
    j["e"] = x.half_log_denominator();
    return j;
}

inline CycloNumber cyclo_from_json(const json& j) {
    std::array<std::int64_t, 8> c{};
    const auto& arr = j.at("c");
    if (!arr.is_array() || arr.size() != 8) throw std::invalid_argument("cyclo JSON needs 8 coefficients");
    for (int m = 0; m < 8; ++m) c[std::size_t(m)] = arr[std::size_t(m)].get<std::int64_t>();
    return CycloNumber(c, j.at("e").get<int>());
}

inline json gate_to_json(const GateMatrix& g) {
    json rows = json::array();
    for (int i = 0; i < g.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < g.dim(); ++j) row.push_back(cyclo_to_json(g.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline json f2matrix_to_json(const F2Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j) ? 1 : 0);
        rows.push_back(row);
    }
    return rows;
}

inline F2Matrix f2matrix_from_json(const json& j) {
    int rows = int(j.size());
    int cols = rows > 0 ? int(j[0].size()) : 0;
    F2Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int c = 0; c < cols; ++c) m.set(i, c, j[std::size_t(i)][std::size_t(c)].get<int>() != 0);
    }
    return m;
}

inline json phi_to_json(const PhiMatrix& phi) {
    json rows = json::array();
    for (int i = 0; i < phi.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < phi.dim(); ++j) row.push_back(phi.at(i, j));
        rows.push_back(row);
    }
    return rows;
}

// ---- model files -----------------------------------------------------------

/// {"k":int, "charges":[names], "fusion":[[a,b,c],...]} listing only the
/// N = 1 triples.  A model with 2^k + 1 charges carries the non-Abelian
/// charge as its last entry; 2^k charges means purely Abelian.
inline json model_to_json(const AnyonModel& m) {
    json j;
    j["k"] = m.k();
    j["charges"] = m.names();
    json triples = json::array();
    for (int a = 0; a < m.n_charges(); ++a) {
        for (int b = 0; b < m.n_charges(); ++b) {
            for (int c = 0; c < m.n_charges(); ++c) {
                if (m.fusion(a, b, c)) triples.push_back(json::array({a, b, c}));
            }
        }
    }
    j["fusion"] = triples;
    return j;
}

inline AnyonModel model_from_json(const json& j) {
    int k = j.at("k").get<int>();
    std::vector<std::string> names = j.at("charges").get<std::vector<std::string>>();
    int n = int(names.size());
    if (k < 0 || k > 20) throw std::invalid_argument("model level out of range");
    bool has_beta;
    if (n == (1 << k) + 1) {
        has_beta = true;
    } else if (n == (1 << k)) {
        has_beta = false;
    } else {
        throw std::invalid_argument("charge count must be 2^k or 2^k + 1");
    }
    AnyonModel m(n, std::move(names), k, has_beta);
    for (const auto& t : j.at("fusion")) {
        if (!t.is_array() || t.size() != 3) throw std::invalid_argument("fusion triple malformed");
        m.set_fusion(t[0].get<int>(), t[1].get<int>(), t[2].get<int>(), 1);
    }
    if (has_beta) {
        int nb = m.beta_index();
        int outcomes = 0;
        for (int c = 0; c < n; ++c) outcomes += m.fusion(nb, nb, c);
        // qdim(beta)^2 = number of charges in beta x beta
        int half_log = 0;
        for (int t = outcomes; t > 1; t >>= 1) ++half_log;
        m.set_qdim(nb, CycloNumber::two_pow_half(half_log));
    }
    return m;
}

// ---- reports ---------------------------------------------------------------

inline json validation_to_json(const ValidationReport& r) {
    json j;
    j["ok"] = r.ok();
    j["violations"] = r.violations;
    return j;
}

inline json pentagon_to_json(const PentagonReport& r) {
    json j;
    j["ok"] = r.ok();
    j["total_instances"] = r.total_instances;
    j["evaluated"] = r.evaluated;
    j["trivially_zero"] = r.trivially_zero;
    json v = json::array();
    for (const auto& x : r.violations) {
        json e;
        e["external"] = x.external;
        e["internal"] = x.internal;
        e["lhs"] = cyclo_to_json(x.lhs);
        e["rhs"] = cyclo_to_json(x.rhs);
        v.push_back(e);
    }
    j["violations"] = v;
    return j;
}

inline json hexagon_to_json(const HexagonReport& r) {
    json j;
    j["ok"] = r.ok();
    j["mirror"] = r.mirror;
    j["total_instances"] = r.total_instances;
    j["evaluated"] = r.evaluated;
    j["trivially_zero"] = r.trivially_zero;
    json v = json::array();
    for (const auto& x : r.violations) {
        json e;
        e["external"] = x.external;
        e["internal"] = x.internal;
        e["lhs"] = cyclo_to_json(x.lhs);
        e["rhs"] = cyclo_to_json(x.rhs);
        v.push_back(e);
    }
    j["violations"] = v;
    return j;
}

inline json census_report_to_json(const CensusReport& r) {
    json j;
    j["order"] = r.order;
    j["matrices"] = r.matrices;
    j["permutations_per_matrix"] = r.permutations_per_matrix;
    j["symmetry_preserving"] = r.symmetry_preserving;
    json hist = json::object();
    for (const auto& [delta, count] : r.delta_histogram) hist[std::to_string(delta)] = count;
    j["delta_histogram"] = hist;
    return j;
}

inline json f_symbols_to_json(const FSymbols& f) {
    json j;
    j["k"] = f.k();
    j["bicharacter"] = f2matrix_to_json(f.bicharacter().M);
    j["sign"] = f.overall_sign();
    j["phi"] = phi_to_json(f.phi());
    json fm = json::array();
    for (const auto& row : f.f_beta_matrix()) {
        json r = json::array();
        for (const auto& x : row) r.push_back(cyclo_to_json(x));
        fm.push_back(r);
    }
    j["f_beta_matrix"] = fm;
    return j;
}

inline FSymbols f_symbols_from_json(const AnyonModel& model, const json& j) {
    Bicharacter b(f2matrix_from_json(j.at("bicharacter")));
    FSymbols f = build_f_symbols(model, b, j.at("sign").get<int>());
    // cross-check the stored phi against the derived one
    const json& phi = j.at("phi");
    for (int i = 0; i < f.phi().dim(); ++i) {
        for (int c = 0; c < f.phi().dim(); ++c) {
            if (phi[std::size_t(i)][std::size_t(c)].get<int>() != f.phi().at(i, c)) {
                throw std::invalid_argument("stored phi disagrees with the bicharacter");
            }
        }
    }
    return f;
}

inline json r_symbols_to_json(const RSymbols& r) {
    json j;
    j["k"] = r.k();
    auto vec = [](const std::vector<CycloNumber>& v) {
        json a = json::array();
        for (const auto& x : v) a.push_back(cyclo_to_json(x));
        return a;
    };
    j["beta_beta_diag"] = vec(r.diag);
    j["beta_alpha"] = vec(r.beta_alpha);
    j["alpha_beta"] = vec(r.alpha_beta);
    int na = 1 << r.k();
    json aa = json::array();
    for (int i = 0; i < na; ++i) {
        json row = json::array();
        for (int c = 0; c < na; ++c) row.push_back(cyclo_to_json(r.r_alpha_alpha(i, c)));
        aa.push_back(row);
    }
    j["alpha_alpha"] = aa;
    RCensus cen = census(r);
    j["census"] = json{{"plus_one", cen.n_plus_one},
                       {"minus_one", cen.n_minus_one},
                       {"plus_i", cen.n_plus_i},
                       {"minus_i", cen.n_minus_i},
                       {"rotation_quarter_turns", cen.rotation_quarter_turns}};
    return j;
}

inline RSymbols r_symbols_from_json(const FSymbols& f, const json& j) {
    auto vec = [](const json& a) {
        std::vector<CycloNumber> v;
        for (const auto& x : a) v.push_back(cyclo_from_json(x));
        return v;
    };
    RSymbols r{f, vec(j.at("beta_beta_diag")), vec(j.at("beta_alpha")), vec(j.at("alpha_beta"))};
    if (int(r.diag.size()) != 1 << f.k()) throw std::invalid_argument("R diagonal size mismatch");
    return r;
}

inline json classification_to_json(const TwistClassification& c) {
    json j;
    j["matrix"] = f2matrix_to_json(c.symmetry.S);
    j["self_inverse"] = c.self_inverse;
    j["localisable_invariant"] = c.localisable_invariant;
    j["level"] = c.level;
    j["boson_count"] = c.boson_count;
    j["fermion_count"] = c.fermion_count;
    j["conjugacy_class"] = c.conjugacy_class_id;
    json loc = json::array();
    for (const auto& b : c.localisable) {
        json e;
        e["bits"] = b.bits;
        e["name"] = stacked_anyon_name(b);
        if (b.width == 4) e["colour_code_label"] = colour_code_label(b);
        loc.push_back(e);
    }
    j["localisable"] = loc;
    return j;
}

// ---- files -----------------------------------------------------------------

inline void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << j.dump(2) << "\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return json::parse(in);
}

// ---- solution bundles --------------------------------------------------------

struct ModelBundle {
    AnyonModel model;
    FSymbols f;
    RSymbols r;
};

/// F-data addressing used by the command line: index 2*b + s where b is the
/// bicharacter position in enumeration order and s is 0 for sign +1, 1 for
/// sign -1.
inline FSymbols f_symbols_by_index(const AnyonModel& model, int f_index) {
    auto bichs = enumerate_bicharacters(model.k());
    if (f_index < 0 || f_index >= int(2 * bichs.size())) {
        throw std::invalid_argument("f-index out of range");
    }
    int sign = (f_index % 2 == 0) ? +1 : -1;
    return build_f_symbols(model, bichs[std::size_t(f_index / 2)], sign);
}

/// Writes model, F-data, R-data and the three braid generator matrices to
/// a directory; everything reloads bit-exactly through the loaders.
inline void export_model_bundle(int k, int f_index, int r_index, const std::string& dir);

inline ModelBundle load_model_bundle(const std::string& dir);

// ---- structural schema checks ----------------------------------------------

/// Minimal structural validator for the schema subset used by the shipped
/// schema files: type, properties, required, items, enum.
inline bool schema_check(const json& value, const json& schema, std::string* error = nullptr,
                         const std::string& where = "$") {
    auto fail = [&](const std::string& msg) {
        if (error) *error = where + ": " + msg;
        return false;
    };
    if (schema.contains("enum")) {
        for (const auto& opt : schema.at("enum")) {
            if (value == opt) return true;
        }
        return fail("value not in enum");
    }
    if (!schema.contains("type")) return true;
    std::string type = schema.at("type").get<std::string>();
    if (type == "object") {
        if (!value.is_object()) return fail("expected object");
        if (schema.contains("required")) {
            for (const auto& req : schema.at("required")) {
                if (!value.contains(req.get<std::string>())) {
                    return fail("missing required key " + req.get<std::string>());
                }
            }
        }
        if (schema.contains("properties")) {
            for (auto it = schema.at("properties").begin(); it != schema.at("properties").end(); ++it) {
                if (value.contains(it.key())) {
                    if (!schema_check(value.at(it.key()), it.value(), error, where + "." + it.key())) {
                        return false;
                    }
                }
            }
        }
        return true;
    }
    if (type == "array") {
        if (!value.is_array()) return fail("expected array");
        if (schema.contains("items")) {
            for (std::size_t i = 0; i < value.size(); ++i) {
                if (!schema_check(value[i], schema.at("items"), error,
                                  where + "[" + std::to_string(i) + "]")) {
                    return false;
                }
            }
        }
        return true;
    }
    if (type == "integer") return value.is_number_integer() ? true : fail("expected integer");
    if (type == "number") return value.is_number() ? true : fail("expected number");
    if (type == "string") return value.is_string() ? true : fail("expected string");
    if (type == "boolean") return value.is_boolean() ? true : fail("expected boolean");
    return fail("unknown schema type " + type);
}

inline void export_model_bundle(int k, int f_index, int r_index, const std::string& dir) {
    AnyonModel model = build_extended_ising(k);
    FSymbols f = f_symbols_by_index(model, f_index);
    auto sols = solve_r(f);
    if (r_index < 0 || r_index >= int(sols.size())) {
        throw std::invalid_argument("r-index out of range (solutions: " +
                                    std::to_string(sols.size()) + ")");
    }
    const RSymbols& r = sols[std::size_t(r_index)];

    std::filesystem::create_directories(dir);
    write_json_file(dir + "/model.json", model_to_json(model));
    write_json_file(dir + "/f_symbols.json", f_symbols_to_json(f));
    write_json_file(dir + "/r_symbols.json", r_symbols_to_json(r));
    json gens;
    for (int idx = 1; idx <= 3; ++idx) {
        gens["sigma" + std::to_string(idx)] = gate_to_json(braid_generator(idx, f, r));
    }
    write_json_file(dir + "/braid_generators.json", gens);
}

inline ModelBundle load_model_bundle(const std::string& dir) {
    AnyonModel model = model_from_json(read_json_file(dir + "/model.json"));
    FSymbols f = f_symbols_from_json(model, read_json_file(dir + "/f_symbols.json"));
    RSymbols r = r_symbols_from_json(f, read_json_file(dir + "/r_symbols.json"));
    return ModelBundle{std::move(model), std::move(f), std::move(r)};
}

} // namespace tycat
