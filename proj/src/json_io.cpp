#include "heyde/json_io.hpp"

#include <cctype>
#include <fstream>

namespace heyde::io {

namespace {

const json& require_field(const json& j, const char* name) {
    const auto it = j.find(name);
    if (it == j.end()) {
        throw ConfigError(std::string("missing required field \"") + name + "\"");
    }
    return *it;
}

std::vector<std::int64_t> int_list(const json& j, const char* what) {
    if (!j.is_array()) throw ConfigError(std::string(what) + " must be an array");
    std::vector<std::int64_t> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_integer()) {
            throw ConfigError(std::string(what) + " must contain integers");
        }
        out.push_back(v.get<std::int64_t>());
    }
    return out;
}

}  // namespace

mpq_class rational_from_string(const std::string& s) {
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0) {
        throw ConfigError("not a rational: \"" + s + "\"");
    }
    if (q.get_den() == 0) throw ConfigError("zero denominator in \"" + s + "\"");
    q.canonicalize();
    return q;
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

double number_from_json(const json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        try {
            return rational_from_string(s).get_d();
        } catch (const ConfigError&) {
            try {
                std::size_t pos = 0;
                const double v = std::stod(s, &pos);
                if (pos == s.size()) return v;
            } catch (...) {
            }
        }
        throw ConfigError("not a number: \"" + s + "\"");
    }
    throw ConfigError("expected a number or a numeric string");
}

GroupElement element_from_string(const FiniteAbelianGroup& g, const std::string& s) {
    std::vector<std::int64_t> coords;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip_ws();
    if (i >= s.size() || s[i] != '[') throw ConfigError("element must look like \"[1,3]\"");
    ++i;
    skip_ws();
    if (i < s.size() && s[i] == ']') {
        ++i;
    } else {
        while (true) {
            skip_ws();
            std::size_t consumed = 0;
            std::int64_t v = 0;
            try {
                v = std::stoll(s.substr(i), &consumed);
            } catch (...) {
                throw ConfigError("bad coordinate in element \"" + s + "\"");
            }
            coords.push_back(v);
            i += consumed;
            skip_ws();
            if (i < s.size() && s[i] == ',') {
                ++i;
                continue;
            }
            if (i < s.size() && s[i] == ']') {
                ++i;
                break;
            }
            throw ConfigError("bad element syntax \"" + s + "\"");
        }
    }
    skip_ws();
    if (i != s.size()) throw ConfigError("trailing junk in element \"" + s + "\"");
    if (coords.size() != g.rank()) {
        throw ConfigError("element \"" + s + "\" has wrong coordinate count");
    }
    return g.element(coords);
}

FiniteAbelianGroup group_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("group must be an object");
    return FiniteAbelianGroup(int_list(require_field(j, "factors"), "factors"));
}

json group_to_json(const FiniteAbelianGroup& g) { return json{{"factors", g.factors()}}; }

Endomorphism endo_from_json(const FiniteAbelianGroup& g, const json& j) {
    if (!j.is_object()) throw ConfigError("endomorphism must be an object");
    const json& m = require_field(j, "matrix");
    if (!m.is_array()) throw ConfigError("matrix must be an array of rows");
    std::vector<std::vector<std::int64_t>> rows;
    rows.reserve(m.size());
    for (const auto& row : m) rows.push_back(int_list(row, "matrix row"));
    return Endomorphism(g, std::move(rows));
}

json endo_to_json(const Endomorphism& e) { return json{{"matrix", e.matrix()}}; }

GroupDistribution distribution_from_json(const FiniteAbelianGroup& g, const json& j) {
    if (!j.is_object()) throw ConfigError("distribution must be an object");
    const json& w = require_field(j, "weights");
    if (!w.is_object()) throw ConfigError("weights must be an object");
    std::map<GroupElement, mpq_class> weights;
    for (const auto& [key, value] : w.items()) {
        if (!value.is_string()) {
            throw ConfigError("weight values must be rational strings");
        }
        weights[element_from_string(g, key)] += rational_from_string(value.get<std::string>());
    }
    return GroupDistribution::from_weight_map(g, weights);
}

json distribution_to_json(const GroupDistribution& d) {
    json w = json::object();
    for (std::uint64_t i : d.support()) {
        w[to_coord_string(d.group().element_at(i))] = rational_to_string(d.weight_at(i));
    }
    return json{{"weights", w}};
}

HeydeInstance instance_from_json(const json& j) {
    const FiniteAbelianGroup g = group_from_json(require_field(j, "group"));
    Endomorphism alpha = endo_from_json(g, require_field(j, "alpha"));
    GroupDistribution mu1 = distribution_from_json(g, require_field(j, "mu1"));
    GroupDistribution mu2 = distribution_from_json(g, require_field(j, "mu2"));
    return HeydeInstance(std::move(alpha), std::move(mu1), std::move(mu2));
}

json instance_to_json(const HeydeInstance& inst) {
    return json{{"group", group_to_json(inst.group)},
                {"alpha", endo_to_json(inst.alpha)},
                {"mu1", distribution_to_json(inst.mu1)},
                {"mu2", distribution_to_json(inst.mu2)}};
}

json subgroup_to_json(const Subgroup& s) {
    json arr = json::array();
    for (const auto& e : s.elements()) arr.push_back(to_coord_string(e));
    return arr;
}

json decomposition_to_json(const Decomposition& d) {
    return json{{"omega", distribution_to_json(d.omega)},
                {"x1", to_coord_string(d.x1)},
                {"x2", to_coord_string(d.x2)},
                {"kernel", subgroup_to_json(d.kernel)},
                {"verdict", "ok"}};
}

json fuzz_report_to_json(const FuzzReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures) {
        json mu1 = json::object(), mu2 = json::object();
        for (const auto& [k, v] : f.mu1_weights) mu1[k] = v;
        for (const auto& [k, v] : f.mu2_weights) mu2[k] = v;
        failures.push_back(json{{"trial", f.trial},
                                {"kind", f.kind},
                                {"message", f.message},
                                {"group", {{"factors", f.factors}}},
                                {"alpha", {{"matrix", f.alpha_matrix}}},
                                {"mu1", {{"weights", mu1}}},
                                {"mu2", {{"weights", mu2}}}});
    }
    return json{{"seed", r.seed},
                {"trials", r.trials},
                {"max_order", r.max_order},
                {"round_trip_passes", r.round_trip_passes},
                {"negative_passes", r.negative_passes},
                {"failures", failures}};
}

json reduction_report_to_json(const ReductionReport& r, const FiniteAbelianGroup& g) {
    json h = json::array();
    for (std::uint64_t idx : r.h_indices) h.push_back(to_coord_string(g.element_at(idx)));
    return json{{"residuals",
                 {{"factorization", r.factorization_residual},
                  {"first_difference", r.first_difference_residual},
                  {"second_difference", r.second_difference_residual},
                  {"third_difference", r.third_difference_residual}}},
                {"a_max_on_h", r.a_max_on_h},
                {"b_max_on_h", r.b_max_on_h},
                {"identities_hold", r.identities_hold},
                {"a_b_vanish_on_h", r.a_b_vanish_on_h},
                {"h", h},
                {"tolerance", r.tolerance}};
}

ThetaParams theta_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("theta parameters must be an object");
    return ThetaParams{number_from_json(require_field(j, "sigma")),
                       number_from_json(require_field(j, "sigma_p")),
                       number_from_json(require_field(j, "beta")),
                       number_from_json(require_field(j, "beta_p")),
                       number_from_json(require_field(j, "kappa"))};
}

json theta_to_json(const ThetaParams& p) {
    return json{{"sigma", p.sigma},
                {"sigma_p", p.sigma_p},
                {"beta", p.beta},
                {"beta_p", p.beta_p},
                {"kappa", p.kappa}};
}

GaussianParams gaussian_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("gaussian parameters must be an object");
    const json& a = require_field(j, "a");
    if (!a.is_array()) throw ConfigError("gaussian \"a\" must be a matrix");
    RealMatrix m;
    for (const auto& row : a) {
        if (!row.is_array()) throw ConfigError("gaussian \"a\" must be a matrix");
        RealVector r;
        for (const auto& v : row) r.push_back(number_from_json(v));
        m.push_back(std::move(r));
    }
    RealVector b;
    for (const auto& v : require_field(j, "b")) b.push_back(number_from_json(v));
    try {
        return GaussianParams(std::move(m), std::move(b));
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
}

StructuredDistribution structured_from_json(const FiniteAbelianGroup& g, const json& j) {
    if (!j.is_object()) throw ConfigError("structured distribution must be an object");
    GaussianParams gauss = gaussian_from_json(require_field(j, "gaussian"));
    GroupDistribution finite = distribution_from_json(g, require_field(j, "finite"));
    RealVector t(gauss.dim(), 0.0);
    GroupElement shift_g = g.zero();
    if (j.contains("shift")) {
        const json& s = j["shift"];
        if (s.contains("t")) {
            t.clear();
            for (const auto& v : s["t"]) t.push_back(number_from_json(v));
        }
        if (s.contains("g")) {
            if (!s["g"].is_string()) throw ConfigError("shift \"g\" must be an element string");
            shift_g = element_from_string(g, s["g"].get<std::string>());
        }
    }
    try {
        return StructuredDistribution(std::move(gauss), std::move(finite), std::move(t),
                                      std::move(shift_g));
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
}

void check_schema(const json& j) {
    if (j.is_object() && j.contains("schema")) {
        if (!j["schema"].is_string() || j["schema"].get<std::string>() != kSchemaVersion) {
            throw ConfigError("unsupported schema version");
        }
    }
}

json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    check_schema(j);
    return j;
}

}  // namespace heyde::io
