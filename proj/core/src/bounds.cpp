#include "fisherwit/bounds.hpp"

#include "fisherwit/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fisherwit {

SpectralSpan spectral_spans(const LocalOperatorSet& set, const CoefficientVector& c) {
    c.check_conformal(set);
    SpectralSpan out;
    for (std::size_t i = 0; i < set.parties(); ++i) {
        const RealVector ev = hermitian_eig(local_combination(set, c, i)).eigenvalues;
        const double span = std::max(0.0, ev[0] - ev[ev.size() - 1]);
        out.per_party.push_back(span);
        out.delta_max = std::max(out.delta_max, span);
    }
    return out;
}

double state_independent_bound(const LocalOperatorSet& set, const CoefficientVector& c) {
    double total = 0.0;
    for (double span : spectral_spans(set, c).per_party) total += span * span;
    return total;
}

double k_producibility_bound(const SpectralSpan& spans, int parties, int k) {
    if (parties < 1) throw ValidationError("k_producibility_bound: need at least one party");
    if (!spans.per_party.empty() && spans.per_party.size() != static_cast<std::size_t>(parties)) {
        throw ValidationError("k_producibility_bound: " + std::to_string(spans.per_party.size()) +
                              " spans for " + std::to_string(parties) + " parties");
    }
    if (k < 1 || k > parties) {
        throw ValidationError("k_producibility_bound: k = " + std::to_string(k) + " outside [1, " +
                              std::to_string(parties) + "]");
    }
    const int s = parties / k;
    const int r = parties - s * k;
    return spans.delta_max * spans.delta_max * (static_cast<double>(s) * k * k + static_cast<double>(r) * r);
}

ProducibilityVerdict producibility_verdict(const DensityMatrix& rho, const LocalOperatorSet& set,
                                           const CoefficientVector& c, int k, double threshold) {
    const SpectralSpan spans = spectral_spans(set, c);
    const double bound = k_producibility_bound(spans, static_cast<int>(set.parties()), k);
    const double fisher = quantum_fisher(rho, collective_generator(set, c));
    return {k, bound, fisher, fisher > bound + threshold};
}

CombinedXpVerdict combined_xp_criterion(double fisher_x, double fisher_p, double mean_number, int modes,
                                        double threshold) {
    if (!(fisher_x >= 0.0) || !(fisher_p >= 0.0)) {
        throw ValidationError("combined_xp_criterion: Fisher informations must be non-negative");
    }
    if (!(mean_number >= 0.0)) throw ValidationError("combined_xp_criterion: particle number must be non-negative");
    if (modes < 1) throw ValidationError("combined_xp_criterion: need at least one mode");
    CombinedXpVerdict out;
    out.fisher_sum = fisher_x + fisher_p;
    out.bound = 4.0 * (2.0 * mean_number + modes);
    out.verdict = out.fisher_sum > out.bound + threshold ? Verdict::Entangled : Verdict::NotDetected;
    return out;
}

double mean_particle_number(const DensityMatrix& rho) {
    double n = 0.0;
    for (std::size_t i = 0; i < rho.structure().parties(); ++i) {
        n += rho.expectation_local(number(rho.structure().dim(i)), i);
    }
    return n;
}

CommutatorVerdict commutator_criterion(const DensityMatrix& rho, const LocalOperatorSet& set,
                                       const CoefficientVector& c, const ComplexMatrix& b, double threshold) {
    c.check_conformal(set);
    if (!(rho.structure() == set.structure())) {
        throw ValidationError("commutator_criterion: state and operator set have different Hilbert structures");
    }
    if (b.rows() != rho.dim() || b.cols() != rho.dim()) {
        throw ValidationError("commutator_criterion: B must act on the full space");
    }
    if (!is_hermitian(b, tol::kHermitianInput * std::max(1.0, b.cwiseAbs().maxCoeff()))) {
        throw ValidationError("commutator_criterion: B is not Hermitian");
    }
    const double var_b = variance(rho, b);
    if (var_b <= 1e-12) throw ValidationError("commutator_criterion: Var(B) vanishes");

    const RealVector v = c.flat();
    const double var_a_local = v.dot(local_covariance_matrix(rho, set).matrix * v);
    const ComplexMatrix a = collective_generator(set, c);
    const Complex commutator = rho.expectation(a * b - b * a);

    CommutatorVerdict out;
    out.left = var_a_local * var_b;
    out.right = std::norm(commutator) / 4.0;
    out.verdict = out.left < out.right - threshold ? Verdict::Entangled : Verdict::NotDetected;
    return out;
}

}  // namespace fisherwit
