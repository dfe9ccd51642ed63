#include "fisherwit/sweeps.hpp"

#include "fisherwit/error.hpp"
#include "fisherwit/operators.hpp"
#include "fisherwit/states.hpp"

#include <cmath>

namespace fisherwit {

namespace {

double quadratic(const WitnessReport& r, const RealVector& c) {
    return c.dot((r.q.matrix - 4.0 * r.gamma_local.matrix) * c);
}

OptimizerOptions optimizer_options(const SweepOptions& o) {
    OptimizerOptions opt;
    opt.seed = o.seed;
    opt.starts = o.optimizer_starts;
    return opt;
}

}  // namespace

std::vector<SweepRow> run_fig1(double alpha, const std::vector<double>& s_grid, int cutoff,
                               const SweepOptions& options) {
    if (!(alpha > 0.0)) throw ValidationError("fig1: alpha must be > 0");
    if (s_grid.empty()) throw ValidationError("fig1: empty s grid");
    const LocalOperatorSet set = quadrature_set({cutoff, cutoff});
    const double h = 1.0 / std::sqrt(2.0);
    const RealVector c_p = (RealVector(4) << 0.0, h, 0.0, -h).finished();
    const RealVector c_x = (RealVector(4) << h, 0.0, h, 0.0).finished();

    return parallel_map<SweepRow>(s_grid.size(), options.jobs, [&](std::size_t i) {
        const double s = s_grid[i];
        const DephasedCat cat = dephased_cat(alpha, s, cutoff);
        const WitnessReport r = witness_lambda_max(cat.rho, set, options.threshold);
        return SweepRow{s,
                        {{"witness_p", quadratic(r, c_p)},
                         {"witness_x", quadratic(r, c_x)},
                         {"lambda_max", r.lambda_max}}};
    });
}

std::vector<SweepRow> run_fig2(int qubits, const std::vector<double>& q_grid, const SweepOptions& options) {
    if (qubits < 2) throw ValidationError("fig2: need at least two qubits");
    if (q_grid.empty()) throw ValidationError("fig2: empty q grid");
    for (double q : q_grid) {
        if (!(q >= 0.0 && q <= 1.0)) throw ValidationError("fig2: q grid must lie within [0, 1]");
    }
    const LocalOperatorSet set = spin_set(qubits);
    const double edge = std::sqrt(static_cast<double>(qubits - 1) / qubits);

    return parallel_map<SweepRow>(q_grid.size(), options.jobs, [&](std::size_t i) {
        const double q = q_grid[i];
        const DensityMatrix rho = ghz_weighted(qubits, q).density();
        const WitnessReport r = witness_lambda_max(rho, set, options.threshold);
        const ConstrainedMax best = maximize_block_quadratic(r.q.matrix, r.q.layout, optimizer_options(options));
        return SweepRow{q,
                        {{"lambda_max", r.lambda_max},
                         {"constrained_fisher_max", best.value},
                         {"shot_noise_bound", static_cast<double>(qubits)},
                         {"undetected_lower", (1.0 - edge) / 2.0},
                         {"undetected_upper", (1.0 + edge) / 2.0}}};
    });
}

SweepRow evaluate_hybrid(const DensityMatrix& rho, double sweep_value, const SweepOptions& options) {
    const auto& dims = rho.structure().dims();
    if (dims.size() != 2 || dims[0] != 2) throw ValidationError("hybrid: state must be a qubit times one mode");
    const LocalOperatorSet set = custom_set(rho.structure(), {{pauli(Axis::X)}, {position(dims[1])}},
                                            {{"sigma_x"}, {"x"}});
    const WitnessReport r = witness_lambda_max(rho, set, options.threshold);
    const CovMatrix cov = covariance_matrix(rho, set);
    const RealVector ones = RealVector::Ones(2);
    return SweepRow{sweep_value,
                    {{"witness", quadratic(r, ones)},
                     {"cross_covariance", cov.matrix(0, 1)},
                     {"lambda_max", r.lambda_max}}};
}

SweepRow run_hybrid(int n, int cutoff, const SweepOptions& options) {
    return evaluate_hybrid(hybrid_phi(n, cutoff).density(), static_cast<double>(n), options);
}

}  // namespace fisherwit
