// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include "fisherwit/bounds.hpp"
#include "fisherwit/states.hpp"
#include "fisherwit/sweeps.hpp"
#include "fisherwit/witness.hpp"
#include "generators.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace fisherwit;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail << "first failure: " << what << "; ";
        pass = pass && ok;
    }
};

LocalOperatorSet matched_set(const HilbertStructure& h) {
    bool qubits = true;
    for (int d : h.dims()) qubits = qubits && d == 2;
    if (qubits) return spin_set(static_cast<int>(h.parties()));
    std::vector<std::vector<ComplexMatrix>> ops;
    for (int d : h.dims()) {
        if (d == 2) {
            ops.push_back({pauli(Axis::X) / 2.0, pauli(Axis::Y) / 2.0, pauli(Axis::Z) / 2.0});
        } else {
            ops.push_back({position(d), momentum(d)});
        }
    }
    return custom_set(h, std::move(ops));
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void a1(Outcome& o) {
    gen::Source g(1);
    const std::vector<std::vector<int>> dims{{2, 2}, {2, 3}, {2, 2, 2}};
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const HilbertStructure h(dims[static_cast<std::size_t>(i % 3)]);
        const DensityMatrix rho = g.pure(h);
        const LocalOperatorSet set = matched_set(h);
        worst = std::max(worst,
                         (qfi_matrix(rho, set).matrix - 4.0 * covariance_matrix(rho, set).matrix).cwiseAbs().maxCoeff());
    }
    o.require(worst < 1e-8, "max |Q - 4 Gamma| = " + fmt(worst));
    o.detail << "200 pure states, max |Q - 4 Gamma| = " << fmt(worst);
}

void a2(Outcome& o) {
    gen::Source g(2);
    const std::vector<std::vector<int>> dims{{2, 2}, {3, 3}, {2, 2, 2}};
    double worst = -1e300;
    int count = 0;
    for (int i = 0; i < 500; ++i) {
        const HilbertStructure h(dims[static_cast<std::size_t>(i % 3)]);
        const DensityMatrix rho = g.separable(h, 20);
        const int kind = (i / 3) % 3;
        const LocalOperatorSet set = (kind == 0 && h.dim(0) == 2) ? spin_set(static_cast<int>(h.parties()))
                                     : kind == 1                  ? quadrature_set(h.dims())
                                                                  : g.random_set(h);
        const double lm = witness_lambda_max(rho, set).lambda_max;
        worst = std::max(worst, lm);
        o.require(lm <= 1e-8, "case " + std::to_string(i) + " lambda_max = " + fmt(lm));
        ++count;
    }
    o.detail << count << " separable states, max lambda_max = " << fmt(worst);
}

void a3(Outcome& o) {
    const DensityMatrix rho = ghz_weighted(3, 0.5).density();
    const LocalOperatorSet set = spin_set(3);
    const double fmax = constrained_qfi_max(rho, set).value;
    const double lm = witness_lambda_max(rho, set).lambda_max;

    // Oracles: explicit Kronecker operators, naive QFI pair sum, Bloch grid.
    const std::vector<int> dims{2, 2, 2};
    const ComplexMatrix paulis[3] = {oracle::pauli_x() / 2.0, oracle::pauli_y() / 2.0, oracle::pauli_z() / 2.0};
    std::vector<ComplexMatrix> full;
    for (std::size_t i = 0; i < 3; ++i)
        for (const auto& p : paulis) full.push_back(oracle::embed(p, i, dims));
    ComplexMatrix pi = ComplexMatrix::Identity(1, 1);
    for (std::size_t i = 0; i < 3; ++i) pi = oracle::kron(pi, oracle::partial_trace(rho.matrix(), dims, i));
    RealMatrix q(9, 9), gl = RealMatrix::Zero(9, 9);
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b) {
            q(a, b) = oracle::qfi(rho.matrix(), full[a], full[b]);
            if (a / 3 == b / 3) gl(a, b) = oracle::cov(pi, full[a], full[b]);
        }
    const double brute = oracle::brute_force_three_party(q, oracle::bloch_grid(12, 24));
    const double lm_oracle = oracle::lambda_max(q - 4.0 * gl);

    o.require(std::abs(fmax - 9.0) <= 1e-6, "constrained F_Q = " + fmt(fmax));
    o.require(std::abs(lm - 2.0) <= 1e-8, "lambda_max = " + fmt(lm));
    o.require(std::abs(brute - 9.0) <= 1e-6 && fmax >= brute - 1e-9, "Bloch-grid oracle = " + fmt(brute));
    o.require(std::abs(lm_oracle - lm) <= 1e-8, "oracle lambda_max = " + fmt(lm_oracle));
    o.detail << "F_Q max = " << fmt(fmax) << " (grid " << fmt(brute) << "), lambda_max = " << fmt(lm) << " (oracle "
             << fmt(lm_oracle) << ")";
}

void a4(Outcome& o) {
    const auto rows = run_fig2(3, grid_points(0.0, 1.0, 0.01));
    double min_inside = 1e300, max_gray = -1e300;
    for (const auto& r : rows) {
        const double q = r.sweep_value, lm = r.at("lambda_max"), f = r.at("constrained_fisher_max");
        if (q > 0.0 && q < 1.0) {
            min_inside = std::min(min_inside, lm);
            o.require(lm > 1e-8, "lambda_max at q=" + fmt(q) + " is " + fmt(lm));
        } else {
            o.require(lm <= 1e-8, "lambda_max at q=" + fmt(q) + " is " + fmt(lm));
        }
        if (q <= 0.0917 + 1e-12 || q >= 0.9083 - 1e-12) {
            max_gray = std::max(max_gray, f);
            o.require(f <= 3.0 + 1e-6, "constrained F_Q at q=" + fmt(q) + " is " + fmt(f));
        }
        if (std::abs(q - 0.5) < 1e-12) o.require(f > 3.0, "constrained F_Q at q=0.5 is " + fmt(f));
    }
    o.detail << rows.size() << " q points, min interior lambda_max = " << fmt(min_inside)
             << ", max F_Q in undetected region = " << fmt(max_gray);
}

void a5(Outcome& o) {
    const auto rows = run_fig1(1.0, grid_points(0.0, 1.0, 0.05), 24);
    double min_wp = 1e300, worst_gap = 1e300;
    for (const auto& r : rows) {
        const double s = r.sweep_value, wp = r.at("witness_p"), wx = r.at("witness_x"), lm = r.at("lambda_max");
        if (s <= 0.95 + 1e-12) {
            min_wp = std::min(min_wp, wp);
            o.require(wp > 0.0, "W_p at s=" + fmt(s) + " is " + fmt(wp));
        }
        if (s == 1.0) o.require(lm <= 1e-8, "lambda_max at s=1 is " + fmt(lm));
        if (std::abs(s - 0.1) < 1e-12) o.require(wx > wp, "W_x <= W_p at s=0.1");
        if (std::abs(s - 0.5) < 1e-12) o.require(wp > wx, "W_p <= W_x at s=0.5");
        worst_gap = std::min(worst_gap, lm - std::max(wx, wp));
        o.require(lm >= std::max(wx, wp) - 1e-9, "lambda_max below a fixed-direction witness at s=" + fmt(s));
    }
    o.detail << "min W_p (s<=0.95) = " << fmt(min_wp) << ", lambda_max at s=1 = " << fmt(rows.back().at("lambda_max"))
             << ", min(lambda_max - max(W_x,W_p)) = " << fmt(worst_gap);
}

void a5b(Outcome& o) {
    const double alphas[3] = {1.0, 1.5, 2.0};
    double low[3], high[3];
    for (int i = 0; i < 3; ++i) {
        const auto rows = run_fig1(alphas[i], {0.1, 0.6}, default_cutoff(alphas[i]));
        low[i] = rows[0].at("lambda_max");
        high[i] = rows[1].at("lambda_max");
    }
    o.require(low[0] < low[1] && low[1] < low[2], "lambda_max at s=0.1 not increasing in alpha");
    o.require(high[0] > high[1] && high[1] > high[2], "lambda_max at s=0.6 not decreasing in alpha");
    o.detail << "s=0.1: " << fmt(low[0]) << " < " << fmt(low[1]) << " < " << fmt(low[2]) << "; s=0.6: " << fmt(high[0])
             << " > " << fmt(high[1]) << " > " << fmt(high[2]);
}

void a6(Outcome& o) {
    const SweepRow r = run_hybrid(0, 10);
    const std::vector<DensityMatrix> parts{fock(0, 2).density(), fock(0, 10).density()};
    const SweepRow p = evaluate_hybrid(product_state(parts), 0.0);
    o.require(r.at("witness") > 0.0, "W(phi_0) = " + fmt(r.at("witness")));
    o.require(std::abs(r.at("cross_covariance") - std::sqrt(0.5)) <= 1e-9, "cross covariance " + fmt(r.at("cross_covariance")));
    o.require(p.at("witness") <= 1e-8, "W(product) = " + fmt(p.at("witness")));
    o.detail << "W(phi_0) = " << fmt(r.at("witness")) << ", Cov = " << fmt(r.at("cross_covariance"))
             << ", W(|0>|0>) = " << fmt(p.at("witness"));
}

void a7(Outcome& o) {
    for (int n = 1; n <= 3; ++n) {
        std::vector<DensityMatrix> modes(static_cast<std::size_t>(n), fock(0, 8).density());
        const DensityMatrix vac = product_state(modes);
        const LocalOperatorSet set = quadrature_set(std::vector<int>(static_cast<std::size_t>(n), 8));
        std::vector<std::vector<double>> cx(static_cast<std::size_t>(n), {1.0, 0.0}), cp(static_cast<std::size_t>(n), {0.0, 1.0});
        const double fx = quantum_fisher(vac, collective_generator(set, CoefficientVector(cx)));
        const double fp = quantum_fisher(vac, collective_generator(set, CoefficientVector(cp)));
        const CombinedXpVerdict v = combined_xp_criterion(fx, fp, mean_particle_number(vac), n);
        o.require(std::abs(fx + fp - 4.0 * n) <= 1e-9, "N=" + std::to_string(n) + ": F_X + F_P = " + fmt(fx + fp));
        o.require(std::abs(v.bound - 4.0 * n) <= 1e-9, "N=" + std::to_string(n) + ": bound = " + fmt(v.bound));
        o.detail << "N=" << n << ": " << fmt(fx + fp) << " vs " << fmt(v.bound) << "; ";
    }
}

void a8(Outcome& o) {
    const CoefficientVector z(std::vector<std::vector<double>>(4, {0.0, 0.0, 1.0}));
    const ProducibilityVerdict ghz = producibility_verdict(ghz_weighted(4, 0.5).density(), spin_set(4), z, 2);
    const std::vector<DensityMatrix> pairs{ghz_weighted(2, 0.5).density(), ghz_weighted(2, 0.5).density()};
    const ProducibilityVerdict bell = producibility_verdict(product_state(pairs), spin_set(4), z, 2);
    o.require(ghz.detected && std::abs(ghz.fisher_value - 16.0) <= 1e-9 && std::abs(ghz.bound - 8.0) <= 1e-12,
              "GHZ4 F_Q = " + fmt(ghz.fisher_value) + ", bound " + fmt(ghz.bound));
    o.require(!bell.detected && std::abs(bell.fisher_value - 8.0) <= 1e-9, "Bell pairs F_Q = " + fmt(bell.fisher_value));
    o.detail << "GHZ4: " << fmt(ghz.fisher_value) << " > " << fmt(ghz.bound) << "; Bell pairs: " << fmt(bell.fisher_value)
             << " vs " << fmt(bell.bound);
}

void a9(Outcome& o) {
    gen::Source g(9);
    const std::vector<std::vector<int>> dims{{2}, {3}, {2, 2}, {2, 3}, {3, 3}, {2, 2, 2}};
    double worst_excess = -1e300, worst_rel = 0.0;
    for (int i = 0; i < 100; ++i) {
        const HilbertStructure h(dims[static_cast<std::size_t>(i % 6)]);
        const DensityMatrix rho = i % 2 ? g.mixed(h) : g.pure(h);
        const ComplexMatrix op = g.hermitian(h.total());
        const auto povm = oracle::random_projective_povm(h.total(), g.rng());
        const double fc = classical_fisher(rho, op, povm);
        const double fq = quantum_fisher(rho, op);
        const double fd = oracle::classical_fisher_fd(rho.matrix(), op, povm);
        const double rel = std::abs(fc - fd) / std::max(1.0, std::abs(fd));
        worst_excess = std::max(worst_excess, fc - fq);
        worst_rel = std::max(worst_rel, rel);
        o.require(fc <= fq + 1e-8, "case " + std::to_string(i) + ": F_M - F_Q = " + fmt(fc - fq));
        o.require(rel <= 1e-4, "case " + std::to_string(i) + ": finite-difference mismatch " + fmt(rel));
    }
    o.detail << "100 triples, max(F_M - F_Q) = " << fmt(worst_excess) << ", max rel. FD error = " << fmt(worst_rel);
}

void a10(Outcome& o) {
    gen::Source g(10);
    const std::vector<std::vector<int>> dims{{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}};
    int n = 0;
    for (int i = 0; i < 100; ++i, ++n) {
        const HilbertStructure h(dims[static_cast<std::size_t>(i % 4)]);
        const DensityMatrix a = g.mixed(h), b = g.mixed(h);
        const ComplexMatrix op = g.hermitian(h.total());
        const double t = g.uniform(0.05, 0.95);
        const std::vector<DensityMatrix> both{a, b};
        const std::vector<double> w{t, 1.0 - t};
        const DensityMatrix m = mix(both, w);
        const std::string tag = "case " + std::to_string(i);

        o.require(quantum_fisher(m, op) <= t * quantum_fisher(a, op) + (1.0 - t) * quantum_fisher(b, op) + 1e-8,
                  tag + ": convexity");
        o.require(variance(m, op) >= t * variance(a, op) + (1.0 - t) * variance(b, op) - 1e-8, tag + ": concavity");
        o.require(quantum_fisher(a, op) <= 4.0 * variance(a, op) + 1e-8, tag + ": F_Q <= 4 Var");

        const DensityMatrix prod = g.product(h);
        ComplexMatrix total = ComplexMatrix::Zero(h.total(), h.total());
        double sum = 0.0;
        for (std::size_t k = 0; k < h.parties(); ++k) {
            const ComplexMatrix local = kron_embed(g.hermitian(h.dim(k)), k, h);
            total += local;
            sum += variance(prod, local);
        }
        o.require(std::abs(variance(prod, total) - sum) <= 1e-8, tag + ": additivity");
    }
    o.detail << n << " instances each of convexity, concavity, F_Q <= 4 Var, additivity";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"A1", a1}, {"A2", a2}, {"A3", a3}, {"A4", a4}, {"A5", a5}, {"A5b", a5b},
        {"A6", a6}, {"A7", a7}, {"A8", a8}, {"A9", a9}, {"A10", a10}};
    int failures = 0;
    for (const auto& [id, run] : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            run(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%-4s %s  %s  [%.2fs]\n", id.c_str(), o.pass ? "PASS" : "FAIL", o.detail.str().c_str(), secs);
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
