#pragma once

// JSON scenario files: a state family, an operator set, a one-parameter sweep
// and the list of quantities to tabulate. Example:
//
//   {
//     "stateFamily": "dephased_cat",
//     "familyParams": {"alpha": 1.0, "cutoff": 24},
//     "operatorSet": "quadrature",
//     "sweep": {"param": "s", "start": 0.0, "stop": 1.0, "step": 0.05},
//     "outputs": ["witness_p", "witness_x", "lambda_max"]
//   }

#include "fisherwit/sweeps.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fisherwit {

enum class StateFamily { DephasedCat, GhzWeighted, HybridPhi, CustomMixture };
enum class OperatorSetKind { Spin, Quadrature, Custom };

struct ComponentSpec {
    std::string family;  // dephased_cat, ghz_weighted, hybrid_phi, fock, coherent,
                         // maximally_mixed, random_separable
    std::map<std::string, double> params;
    std::vector<int> dims;  // maximally_mixed / random_separable only
    double weight = 1.0;
};

struct OutputSpec {
    enum class Kind { Named, Witness, Fisher, Covariance };
    std::string name;
    Kind kind = Kind::Named;
    std::vector<std::vector<double>> coefficients;  // Witness / Fisher
    int party_a = 0, op_a = 0, party_b = 0, op_b = 0;  // Covariance
};

struct SweepSpec {
    std::string param;
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;
};

struct Scenario {
    StateFamily family = StateFamily::DephasedCat;
    std::map<std::string, double> family_params;
    std::vector<ComponentSpec> components;  // custom-mixture only
    OperatorSetKind operator_set = OperatorSetKind::Spin;
    std::vector<std::vector<std::string>> custom_operators;
    SweepSpec sweep;
    std::vector<OutputSpec> outputs;
    std::uint64_t seed = 0;
    double threshold = kDetectionThreshold;
    int optimizer_starts = 32;
};

// Throws ValidationError; JSON syntax errors carry "line L, column C", schema
// errors name the offending field.
Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario(const std::string& path);

struct ScenarioOverrides {
    std::optional<int> cutoff;
    std::optional<std::uint64_t> seed;
    std::optional<double> threshold;
    unsigned jobs = 0;
};

void apply_overrides(Scenario& scenario, const ScenarioOverrides& overrides);

// One row per sweep point; columns are the sweep parameter then `outputs`.
Table evaluate_scenario(const Scenario& scenario, unsigned jobs = 0);

// load + overrides + evaluate, rendered as CSV.
std::string run_scenario(const std::string& path, const ScenarioOverrides& overrides = {});

}  // namespace fisherwit
