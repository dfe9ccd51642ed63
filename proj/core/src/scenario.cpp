#include "fisherwit/scenario.hpp"

#include "fisherwit/bounds.hpp"
#include "fisherwit/error.hpp"
#include "fisherwit/operators.hpp"
#include "fisherwit/states.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace fisherwit {

using nlohmann::json;

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
    throw ValidationError("scenario field '" + field + "': " + what);
}

// Parameter names per family, required ones first.
struct FamilyParams {
    std::vector<std::string> required;
    std::vector<std::string> optional;
    std::set<std::string> integral;
};

const FamilyParams& params_of(const std::string& family, const std::string& field) {
    static const std::map<std::string, FamilyParams> table = {
        {"dephased_cat", {{"alpha", "s"}, {"alpha_im", "cutoff"}, {"cutoff"}}},
        {"ghz_weighted", {{"N", "q"}, {"phi"}, {"N"}}},
        {"hybrid_phi", {{"n"}, {"cutoff"}, {"n", "cutoff"}}},
        {"fock", {{"n", "cutoff"}, {}, {"n", "cutoff"}}},
        {"coherent", {{"alpha", "cutoff"}, {"alpha_im"}, {"cutoff"}}},
        {"maximally_mixed", {{}, {}, {}}},
        {"random_separable", {{"terms"}, {"seed"}, {"terms", "seed"}}},
    };
    const auto it = table.find(family);
    if (it == table.end()) field_error(field, "unknown state family '" + family + "'");
    return it->second;
}

bool has_param(const FamilyParams& f, const std::string& name) {
    return std::find(f.required.begin(), f.required.end(), name) != f.required.end() ||
           std::find(f.optional.begin(), f.optional.end(), name) != f.optional.end();
}

std::string family_name(StateFamily f) {
    switch (f) {
        case StateFamily::DephasedCat: return "dephased_cat";
        case StateFamily::GhzWeighted: return "ghz_weighted";
        case StateFamily::HybridPhi: return "hybrid_phi";
        case StateFamily::CustomMixture: return "custom-mixture";
    }
    return "";
}

double number_at(const json& j, const std::string& field) {
    if (!j.is_number()) field_error(field, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) field_error(field, "must be finite");
    return v;
}

std::map<std::string, double> parse_params(const json& j, const std::string& field, const FamilyParams& family) {
    std::map<std::string, double> out;
    if (j.is_null()) return out;
    if (!j.is_object()) field_error(field, "expected an object");
    for (const auto& [key, value] : j.items()) {
        const std::string where = field + "." + key;
        if (!has_param(family, key)) field_error(where, "unknown parameter");
        const double v = number_at(value, where);
        if (family.integral.count(key) && v != std::floor(v)) field_error(where, "must be an integer");
        out[key] = v;
    }
    return out;
}

void check_complete(const std::map<std::string, double>& params, const FamilyParams& family,
                    const std::string& field, const std::string& swept) {
    for (const auto& name : family.required) {
        if (!params.count(name) && name != swept) field_error(field + "." + name, "missing required parameter");
    }
}

std::vector<std::vector<double>> parse_coefficients(const json& j, const std::string& field) {
    if (!j.is_array() || j.empty()) field_error(field, "expected a non-empty array of per-party arrays");
    std::vector<std::vector<double>> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string where = field + "[" + std::to_string(i) + "]";
        if (!j[i].is_array() || j[i].empty()) field_error(where, "expected a non-empty array of numbers");
        std::vector<double> block;
        for (std::size_t m = 0; m < j[i].size(); ++m) {
            block.push_back(number_at(j[i][m], where + "[" + std::to_string(m) + "]"));
        }
        out.push_back(std::move(block));
    }
    return out;
}

const std::set<std::string>& named_outputs() {
    static const std::set<std::string> names = {
        "lambda_max",  "entangled",   "constrained_fisher_max", "shot_noise_bound", "undetected_lower",
        "undetected_upper", "witness_x", "witness_p", "fisher_x", "fisher_p",
        "combined_bound", "mean_number", "purity"};
    return names;
}

OutputSpec parse_output(const json& j, const std::string& field) {
    OutputSpec out;
    if (j.is_string()) {
        out.name = j.get<std::string>();
        if (!named_outputs().count(out.name)) field_error(field, "unknown output '" + out.name + "'");
        return out;
    }
    if (!j.is_object()) field_error(field, "expected a string or an object");
    if (!j.contains("name") || !j["name"].is_string()) field_error(field + ".name", "expected a string");
    out.name = j["name"].get<std::string>();
    int kinds = 0;
    if (j.contains("witness")) {
        out.kind = OutputSpec::Kind::Witness;
        out.coefficients = parse_coefficients(j["witness"], field + ".witness");
        ++kinds;
    }
    if (j.contains("fisher")) {
        out.kind = OutputSpec::Kind::Fisher;
        out.coefficients = parse_coefficients(j["fisher"], field + ".fisher");
        ++kinds;
    }
    if (j.contains("covariance")) {
        out.kind = OutputSpec::Kind::Covariance;
        const json& c = j["covariance"];
        const std::string where = field + ".covariance";
        if (!c.is_array() || c.size() != 2 || !c[0].is_array() || !c[1].is_array() || c[0].size() != 2 ||
            c[1].size() != 2) {
            field_error(where, "expected [[party, operator], [party, operator]]");
        }
        auto index = [&](const json& v, const std::string& w) {
            if (!v.is_number_integer() || v.get<int>() < 0) field_error(w, "expected a non-negative integer");
            return v.get<int>();
        };
        out.party_a = index(c[0][0], where + "[0][0]");
        out.op_a = index(c[0][1], where + "[0][1]");
        out.party_b = index(c[1][0], where + "[1][0]");
        out.op_b = index(c[1][1], where + "[1][1]");
        ++kinds;
    }
    if (kinds != 1) field_error(field, "needs exactly one of 'witness', 'fisher' or 'covariance'");
    return out;
}

ComponentSpec parse_component(const json& j, const std::string& field) {
    if (!j.is_object()) field_error(field, "expected an object");
    ComponentSpec c;
    if (!j.contains("family") || !j["family"].is_string()) field_error(field + ".family", "expected a string");
    c.family = j["family"].get<std::string>();
    const FamilyParams& fp = params_of(c.family, field + ".family");
    c.params = parse_params(j.value("params", json()), field + ".params", fp);
    if (c.family == "maximally_mixed" || c.family == "random_separable") {
        if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].empty()) {
            field_error(field + ".dims", "expected a non-empty array of local dimensions");
        }
        for (const auto& d : j["dims"]) {
            if (!d.is_number_integer() || d.get<int>() < 2) field_error(field + ".dims", "dimensions must be integers >= 2");
            c.dims.push_back(d.get<int>());
        }
    }
    if (j.contains("weight")) {
        c.weight = number_at(j["weight"], field + ".weight");
        if (!(c.weight > 0.0)) field_error(field + ".weight", "must be > 0");
    }
    return c;
}

std::vector<std::vector<std::string>> parse_custom_operators(const json& j, const std::string& field) {
    static const std::set<std::string> known = {"sigma_x", "sigma_y", "sigma_z", "spin_x", "spin_y",
                                                "spin_z",  "x",       "p",       "n"};
    if (!j.is_array() || j.empty()) field_error(field, "expected a non-empty array of per-party operator lists");
    std::vector<std::vector<std::string>> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string where = field + "[" + std::to_string(i) + "]";
        if (!j[i].is_array() || j[i].empty()) field_error(where, "every party needs at least one operator");
        std::vector<std::string> names;
        for (const auto& n : j[i]) {
            if (!n.is_string() || !known.count(n.get<std::string>())) {
                field_error(where, "operators must be one of sigma_x|y|z, spin_x|y|z, x, p, n");
            }
            names.push_back(n.get<std::string>());
        }
        out.push_back(std::move(names));
    }
    return out;
}

std::size_t line_col_offset(const std::string& text, std::size_t byte, std::size_t& col) {
    std::size_t line = 1;
    col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return line;
}

// ---------------------------------------------------------------- evaluation

int as_int(const std::map<std::string, double>& p, const std::string& key) {
    return static_cast<int>(std::lround(p.at(key)));
}

double get_or(const std::map<std::string, double>& p, const std::string& key, double fallback) {
    const auto it = p.find(key);
    return it == p.end() ? fallback : it->second;
}

DensityMatrix build_family(const std::string& family, const std::map<std::string, double>& p,
                           const std::vector<int>& dims) {
    if (family == "dephased_cat") {
        const Complex alpha(p.at("alpha"), get_or(p, "alpha_im", 0.0));
        const int cutoff = p.count("cutoff") ? as_int(p, "cutoff") : default_cutoff(std::abs(alpha));
        return dephased_cat(alpha, p.at("s"), cutoff).rho;
    }
    if (family == "ghz_weighted") return ghz_weighted(as_int(p, "N"), p.at("q"), get_or(p, "phi", 0.0)).density();
    if (family == "hybrid_phi") {
        const int n = as_int(p, "n");
        return hybrid_phi(n, p.count("cutoff") ? as_int(p, "cutoff") : n + 8).density();
    }
    if (family == "fock") return fock(as_int(p, "n"), as_int(p, "cutoff")).density();
    if (family == "coherent") {
        return coherent(Complex(p.at("alpha"), get_or(p, "alpha_im", 0.0)), as_int(p, "cutoff")).state.density();
    }
    if (family == "maximally_mixed") return DensityMatrix::maximally_mixed(HilbertStructure(dims));
    if (family == "random_separable") {
        return random_separable(HilbertStructure(dims), as_int(p, "terms"),
                                static_cast<std::uint64_t>(get_or(p, "seed", 0.0)));
    }
    throw ValidationError("unknown state family '" + family + "'");
}

DensityMatrix build_state(const Scenario& sc, double value) {
    if (sc.family != StateFamily::CustomMixture) {
        auto params = sc.family_params;
        params[sc.sweep.param] = value;
        return build_family(family_name(sc.family), params, {});
    }
    std::vector<DensityMatrix> states;
    std::vector<double> weights;
    for (std::size_t i = 0; i < sc.components.size(); ++i) {
        const ComponentSpec& c = sc.components[i];
        auto params = c.params;
        if (sc.sweep.param != "p" && has_param(params_of(c.family, "components"), sc.sweep.param)) {
            params[sc.sweep.param] = value;
        }
        states.push_back(build_family(c.family, params, c.dims));
        weights.push_back(c.weight);
    }
    if (sc.sweep.param == "p") {
        if (!(value >= 0.0 && value <= 1.0)) throw ValidationError("custom-mixture: p must lie in [0, 1]");
        weights = {value, 1.0 - value};
    }
    // Zero-weight components drop out; mix() needs strictly positive weights.
    std::vector<DensityMatrix> kept;
    std::vector<double> kept_weights;
    double total = 0.0;
    for (double w : weights) total += w;
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (weights[i] > 0.0) {
            kept.push_back(states[i]);
            kept_weights.push_back(weights[i] / total);
        }
    }
    const HilbertStructure& first = states.front().structure();
    for (const auto& s : states) {
        if (!(s.structure() == first)) throw ValidationError("custom-mixture: components have different structures");
    }
    return mix(kept, kept_weights);
}

LocalOperatorSet build_operators(const Scenario& sc, const HilbertStructure& structure) {
    switch (sc.operator_set) {
        case OperatorSetKind::Spin:
            for (int d : structure.dims()) {
                if (d != 2) throw ValidationError("operatorSet 'spin' needs every party to be a qubit");
            }
            return spin_set(static_cast<int>(structure.parties()));
        case OperatorSetKind::Quadrature:
            return quadrature_set(structure.dims());
        case OperatorSetKind::Custom:
            break;
    }
    if (sc.custom_operators.size() != structure.parties()) {
        throw ValidationError("customOperators lists " + std::to_string(sc.custom_operators.size()) +
                              " parties, state has " + std::to_string(structure.parties()));
    }
    std::vector<std::vector<ComplexMatrix>> ops;
    for (std::size_t i = 0; i < structure.parties(); ++i) {
        const int d = structure.dim(i);
        std::vector<ComplexMatrix> party;
        for (const auto& name : sc.custom_operators[i]) {
            const bool spin = name.rfind("spin_", 0) == 0;
            if (name.rfind("sigma_", 0) == 0 || spin) {
                if (d != 2) throw ValidationError("customOperators: '" + name + "' needs a qubit party");
                party.push_back(pauli(parse_axis(name.substr(name.size() - 1))) * (spin ? 0.5 : 1.0));
            } else if (name == "x") {
                party.push_back(position(d));
            } else if (name == "p") {
                party.push_back(momentum(d));
            } else {
                party.push_back(number(d));
            }
        }
        ops.push_back(std::move(party));
    }
    return custom_set(structure, std::move(ops), sc.custom_operators);
}

std::vector<double> evaluate_point(const Scenario& sc, double value) {
    const DensityMatrix rho = build_state(sc, value);
    const LocalOperatorSet set = build_operators(sc, rho.structure());
    const auto parties = static_cast<int>(set.parties());

    std::optional<WitnessReport> report;
    auto witness = [&]() -> const WitnessReport& {
        if (!report) report = witness_lambda_max(rho, set, sc.threshold);
        return *report;
    };
    auto form = [&](const RealMatrix& m, const std::vector<std::vector<double>>& coeffs) {
        const CoefficientVector c(coeffs);
        c.check_conformal(set);
        const RealVector v = c.flat();
        return v.dot(m * v);
    };
    auto require_quadrature = [&](const std::string& name) {
        if (sc.operator_set != OperatorSetKind::Quadrature) {
            throw ValidationError("output '" + name + "' needs operatorSet 'quadrature'");
        }
    };
    auto quadrature_coeffs = [&](bool momentum_axis) {
        std::vector<std::vector<double>> c;
        const double h = 1.0 / std::sqrt(static_cast<double>(parties));
        for (int i = 0; i < parties; ++i) {
            const double sign = (momentum_axis && i % 2 == 1) ? -1.0 : 1.0;
            c.push_back(momentum_axis ? std::vector<double>{0.0, sign * h} : std::vector<double>{h, 0.0});
        }
        return c;
    };

    std::vector<double> row{value};
    for (const auto& out : sc.outputs) {
        switch (out.kind) {
            case OutputSpec::Kind::Witness: {
                const auto& r = witness();
                row.push_back(form(r.q.matrix - 4.0 * r.gamma_local.matrix, out.coefficients));
                continue;
            }
            case OutputSpec::Kind::Fisher:
                row.push_back(form(witness().q.matrix, out.coefficients));
                continue;
            case OutputSpec::Kind::Covariance: {
                const BlockLayout& layout = set.layout();
                auto flat = [&](int party, int op) {
                    if (party >= parties || op >= layout.sizes[static_cast<std::size_t>(party)]) {
                        throw ValidationError("output '" + out.name + "': covariance index out of range");
                    }
                    return layout.offsets[static_cast<std::size_t>(party)] + op;
                };
                const CovMatrix cov = covariance_matrix(rho, set);
                row.push_back(cov.matrix(flat(out.party_a, out.op_a), flat(out.party_b, out.op_b)));
                continue;
            }
            case OutputSpec::Kind::Named:
                break;
        }
        const std::string& n = out.name;
        if (n == "lambda_max") {
            row.push_back(witness().lambda_max);
        } else if (n == "entangled") {
            row.push_back(witness().verdict == Verdict::Entangled ? 1.0 : 0.0);
        } else if (n == "constrained_fisher_max") {
            OptimizerOptions opt;
            opt.seed = sc.seed;
            opt.starts = sc.optimizer_starts;
            row.push_back(maximize_block_quadratic(witness().q.matrix, set.layout(), opt).value);
        } else if (n == "shot_noise_bound") {
            if (sc.operator_set != OperatorSetKind::Spin) {
                throw ValidationError("output 'shot_noise_bound' needs operatorSet 'spin'");
            }
            row.push_back(static_cast<double>(parties));
        } else if (n == "undetected_lower" || n == "undetected_upper") {
            const double edge = std::sqrt(static_cast<double>(parties - 1) / parties);
            row.push_back(n == "undetected_lower" ? (1.0 - edge) / 2.0 : (1.0 + edge) / 2.0);
        } else if (n == "witness_x" || n == "witness_p") {
            require_quadrature(n);
            const auto& r = witness();
            row.push_back(form(r.q.matrix - 4.0 * r.gamma_local.matrix, quadrature_coeffs(n == "witness_p")));
        } else if (n == "fisher_x" || n == "fisher_p") {
            require_quadrature(n);
            std::vector<std::vector<double>> c(static_cast<std::size_t>(parties),
                                               n == "fisher_x" ? std::vector<double>{1.0, 0.0}
                                                               : std::vector<double>{0.0, 1.0});
            row.push_back(form(witness().q.matrix, c));
        } else if (n == "combined_bound") {
            require_quadrature(n);
            row.push_back(4.0 * (2.0 * mean_particle_number(rho) + parties));
        } else if (n == "mean_number") {
            row.push_back(mean_particle_number(rho));
        } else if (n == "purity") {
            row.push_back(rho.purity());
        } else {
            throw ValidationError("unknown output '" + n + "'");
        }
    }
    return row;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t col = 0;
        const std::size_t line = line_col_offset(text, e.byte, col);
        throw ValidationError("scenario parse error at line " + std::to_string(line) + ", column " +
                              std::to_string(col) + ": " + e.what());
    }
    if (!j.is_object()) field_error("<root>", "expected a JSON object");

    static const std::set<std::string> top = {"stateFamily", "familyParams", "components", "operatorSet",
                                              "customOperators", "sweep", "outputs", "seed", "threshold",
                                              "optimizerStarts"};
    for (const auto& [key, value] : j.items()) {
        if (!top.count(key)) field_error(key, "unknown field");
    }

    Scenario sc;
    if (!j.contains("stateFamily") || !j["stateFamily"].is_string()) field_error("stateFamily", "expected a string");
    const std::string family = j["stateFamily"].get<std::string>();
    if (family == "dephased_cat") {
        sc.family = StateFamily::DephasedCat;
    } else if (family == "ghz_weighted") {
        sc.family = StateFamily::GhzWeighted;
    } else if (family == "hybrid_phi") {
        sc.family = StateFamily::HybridPhi;
    } else if (family == "custom-mixture" || family == "custom_mixture") {
        sc.family = StateFamily::CustomMixture;
    } else {
        field_error("stateFamily", "unknown state family '" + family + "'");
    }

    // sweep
    if (!j.contains("sweep") || !j["sweep"].is_object()) field_error("sweep", "expected an object");
    const json& sw = j["sweep"];
    if (!sw.contains("param") || !sw["param"].is_string()) field_error("sweep.param", "expected a string");
    sc.sweep.param = sw["param"].get<std::string>();
    for (const char* key : {"start", "stop", "step"}) {
        if (!sw.contains(key)) field_error(std::string("sweep.") + key, "missing");
    }
    sc.sweep.start = number_at(sw["start"], "sweep.start");
    sc.sweep.stop = number_at(sw["stop"], "sweep.stop");
    sc.sweep.step = number_at(sw["step"], "sweep.step");
    if (!(sc.sweep.step > 0.0)) field_error("sweep.step", "must be > 0");
    if (sc.sweep.start > sc.sweep.stop) field_error("sweep", "start must be <= stop");

    if (sc.family != StateFamily::CustomMixture) {
        if (j.contains("components")) field_error("components", "only valid for stateFamily 'custom-mixture'");
        const FamilyParams& fp = params_of(family, "stateFamily");
        sc.family_params = parse_params(j.value("familyParams", json::object()), "familyParams", fp);
        if (!has_param(fp, sc.sweep.param)) {
            field_error("sweep.param", "'" + sc.sweep.param + "' is not a parameter of " + family);
        }
        check_complete(sc.family_params, fp, "familyParams", sc.sweep.param);
        if (fp.integral.count(sc.sweep.param)) {
            for (double v : grid_points(sc.sweep.start, sc.sweep.stop, sc.sweep.step)) {
                if (v != std::floor(v)) field_error("sweep", "'" + sc.sweep.param + "' takes integer values only");
            }
        }
    } else {
        if (j.contains("familyParams") && !j["familyParams"].empty()) {
            field_error("familyParams", "custom-mixture takes its parameters from 'components'");
        }
        if (!j.contains("components") || !j["components"].is_array() || j["components"].empty()) {
            field_error("components", "expected a non-empty array");
        }
        bool swept = sc.sweep.param == "p";
        for (std::size_t i = 0; i < j["components"].size(); ++i) {
            const std::string where = "components[" + std::to_string(i) + "]";
            ComponentSpec c = parse_component(j["components"][i], where);
            const FamilyParams& fp = params_of(c.family, where + ".family");
            const bool here = has_param(fp, sc.sweep.param);
            swept = swept || here;
            check_complete(c.params, fp, where + ".params", here ? sc.sweep.param : "");
            sc.components.push_back(std::move(c));
        }
        if (sc.sweep.param == "p" && sc.components.size() != 2) {
            field_error("sweep.param", "'p' mixes exactly two components");
        }
        if (!swept) field_error("sweep.param", "'" + sc.sweep.param + "' is not a parameter of any component");
    }

    // operators
    if (!j.contains("operatorSet") || !j["operatorSet"].is_string()) field_error("operatorSet", "expected a string");
    const std::string ops = j["operatorSet"].get<std::string>();
    if (ops == "spin") {
        sc.operator_set = OperatorSetKind::Spin;
    } else if (ops == "quadrature") {
        sc.operator_set = OperatorSetKind::Quadrature;
    } else if (ops == "custom") {
        sc.operator_set = OperatorSetKind::Custom;
        if (!j.contains("customOperators")) field_error("customOperators", "required for operatorSet 'custom'");
        sc.custom_operators = parse_custom_operators(j["customOperators"], "customOperators");
    } else {
        field_error("operatorSet", "unknown operator set '" + ops + "'");
    }
    if (ops != "custom" && j.contains("customOperators")) {
        field_error("customOperators", "only valid for operatorSet 'custom'");
    }

    // outputs
    if (!j.contains("outputs") || !j["outputs"].is_array() || j["outputs"].empty()) {
        field_error("outputs", "expected a non-empty array");
    }
    std::set<std::string> names{sc.sweep.param};
    for (std::size_t i = 0; i < j["outputs"].size(); ++i) {
        const std::string where = "outputs[" + std::to_string(i) + "]";
        OutputSpec out = parse_output(j["outputs"][i], where);
        if (!names.insert(out.name).second) field_error(where, "duplicate column name '" + out.name + "'");
        if ((out.name == "undetected_lower" || out.name == "undetected_upper") &&
            sc.family != StateFamily::GhzWeighted) {
            field_error(where, "'" + out.name + "' needs stateFamily 'ghz_weighted'");
        }
        sc.outputs.push_back(std::move(out));
    }

    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned()) field_error("seed", "expected a non-negative integer");
        sc.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("threshold")) {
        sc.threshold = number_at(j["threshold"], "threshold");
        if (sc.threshold < 0.0) field_error("threshold", "must be >= 0");
    }
    if (j.contains("optimizerStarts")) {
        if (!j["optimizerStarts"].is_number_integer() || j["optimizerStarts"].get<int>() < 0) {
            field_error("optimizerStarts", "expected a non-negative integer");
        }
        sc.optimizer_starts = j["optimizerStarts"].get<int>();
    }
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open scenario file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

void apply_overrides(Scenario& scenario, const ScenarioOverrides& overrides) {
    if (overrides.seed) scenario.seed = *overrides.seed;
    if (overrides.threshold) scenario.threshold = *overrides.threshold;
    if (overrides.cutoff) {
        if (*overrides.cutoff < 2) throw ValidationError("--cutoff must be >= 2");
        const double cutoff = *overrides.cutoff;
        if (scenario.family == StateFamily::DephasedCat || scenario.family == StateFamily::HybridPhi) {
            scenario.family_params["cutoff"] = cutoff;
        }
        for (auto& c : scenario.components) {
            if (has_param(params_of(c.family, "components"), "cutoff")) c.params["cutoff"] = cutoff;
        }
    }
}

Table evaluate_scenario(const Scenario& scenario, unsigned jobs) {
    const std::vector<double> grid = grid_points(scenario.sweep.start, scenario.sweep.stop, scenario.sweep.step);
    Table t;
    t.headers.push_back(scenario.sweep.param);
    for (const auto& out : scenario.outputs) t.headers.push_back(out.name);
    t.rows = parallel_map<std::vector<double>>(grid.size(), jobs,
                                               [&](std::size_t i) { return evaluate_point(scenario, grid[i]); });
    return t;
}

std::string run_scenario(const std::string& path, const ScenarioOverrides& overrides) {
    Scenario sc = load_scenario(path);
    apply_overrides(sc, overrides);
    return to_csv(evaluate_scenario(sc, overrides.jobs));
}

}  // namespace fisherwit
