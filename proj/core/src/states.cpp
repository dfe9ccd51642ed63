#include "fisherwit/states.hpp"

#include "fisherwit/error.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace fisherwit {

namespace {

// Weight of a Poisson(mean) distribution at n >= cutoff, summed directly so
// tiny tails do not cancel against 1.
double poisson_tail(double mean, int cutoff) {
    double term = std::exp(-mean);
    for (int n = 0; n < cutoff; ++n) term *= mean / (n + 1);
    double tail = 0.0;
    for (int n = cutoff; n < cutoff + 4096; ++n) {
        tail += term;
        term *= mean / (n + 1);
        if (n > mean && term <= 1e-18 * tail) break;
    }
    return tail;
}

ComplexVector random_gaussian(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexVector v(dim);
    for (int i = 0; i < dim; ++i) {
        const double re = normal(rng);
        const double im = normal(rng);
        v[i] = Complex(re, im);
    }
    return v / v.norm();
}

}  // namespace

CoherentState coherent(Complex alpha, int cutoff, double tolerance) {
    if (cutoff < 2) throw ValidationError("coherent: cutoff must be >= 2");
    const double mean = std::norm(alpha);
    const double lost = poisson_tail(mean, cutoff);
    if (lost > tolerance) {
        throw NumericalError("coherent: cutoff " + std::to_string(cutoff) + " loses weight " +
                             std::to_string(lost) + " > tolerance " + std::to_string(tolerance));
    }
    ComplexVector amp(cutoff);
    Complex c = std::exp(-mean / 2.0);
    for (int n = 0; n < cutoff; ++n) {
        amp[n] = c;
        c *= alpha / std::sqrt(static_cast<double>(n + 1));
    }
    return {PureState(HilbertStructure({cutoff}), std::move(amp)), {cutoff, lost}};
}

int default_cutoff(double max_abs_alpha) {
    const double mean = max_abs_alpha * max_abs_alpha;
    int cutoff = 1;
    while (poisson_tail(mean, cutoff) >= 1e-12) ++cutoff;
    return std::max(cutoff + 4, 24);
}

DephasedCat dephased_cat(Complex alpha, double s, int cutoff, double tolerance) {
    if (!(s >= 0.0 && s <= 1.0)) throw ValidationError("dephased_cat: s must lie in [0, 1]");
    const CoherentState plus = coherent(alpha, cutoff, tolerance);
    const CoherentState minus = coherent(-alpha, cutoff, tolerance);
    const ComplexVector a = kron(plus.state.amplitudes(), plus.state.amplitudes());
    const ComplexVector b = kron(minus.state.amplitudes(), minus.state.amplitudes());

    // rho = V K V^dagger with V = [a b], K = [[1, 1-s], [1-s, 1]] (PSD for s in [0,1]);
    // `root` is the symmetric square root of K.
    ComplexMatrix v(a.size(), 2);
    v.col(0) = a;
    v.col(1) = b;
    const Eigen::Matrix2cd root = 0.5 * ((Eigen::Matrix2cd() << 1.0, 1.0, 1.0, 1.0).finished() * std::sqrt(2.0 - s) +
                                         (Eigen::Matrix2cd() << 1.0, -1.0, -1.0, 1.0).finished() * std::sqrt(s));
    ComplexMatrix f = v * root;
    const double trace = f.squaredNorm();
    f /= std::sqrt(trace);

    DephasedCat out{DensityMatrix::from_factor(HilbertStructure({cutoff, cutoff}), f), 1.0 / trace,
                    {cutoff, std::max(plus.truncation.lost_weight, minus.truncation.lost_weight)}};
    return out;
}

PureState ghz_weighted(int qubits, double q, double phi) {
    if (qubits < 1) throw ValidationError("ghz_weighted: need at least one qubit");
    if (!(q >= 0.0 && q <= 1.0)) throw ValidationError("ghz_weighted: q must lie in [0, 1]");
    HilbertStructure structure(std::vector<int>(static_cast<std::size_t>(qubits), 2));
    ComplexVector amp = ComplexVector::Zero(structure.total());
    amp[0] = std::sqrt(q);
    amp[structure.total() - 1] += std::sqrt(1.0 - q) * std::polar(1.0, phi);
    return PureState(std::move(structure), std::move(amp));
}

PureState hybrid_phi(int n, int cutoff) {
    if (n < 0) throw ValidationError("hybrid_phi: n must be >= 0");
    if (cutoff < n + 2) {
        throw ValidationError("hybrid_phi: cutoff " + std::to_string(cutoff) + " must be >= n + 2 = " +
                              std::to_string(n + 2));
    }
    ComplexVector amp = ComplexVector::Zero(2 * cutoff);
    amp[n] = 1.0 / std::sqrt(2.0);               // |0, n>
    amp[cutoff + n + 1] = 1.0 / std::sqrt(2.0);  // |1, n+1>
    return PureState(HilbertStructure({2, cutoff}), std::move(amp));
}

PureState fock(int n, int cutoff) {
    if (n < 0 || n >= cutoff) {
        throw ValidationError("fock: n = " + std::to_string(n) + " outside [0, " + std::to_string(cutoff) + ")");
    }
    ComplexVector amp = ComplexVector::Zero(cutoff);
    amp[n] = 1.0;
    return PureState(HilbertStructure({cutoff}), std::move(amp));
}

PureState random_pure(const HilbertStructure& structure, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return PureState(structure, random_gaussian(structure.total(), rng));
}

DensityMatrix random_separable(const HilbertStructure& structure, int terms, std::uint64_t seed) {
    if (terms < 1) throw ValidationError("random_separable: terms must be >= 1");
    std::mt19937_64 rng(seed);
    std::exponential_distribution<double> exponential(1.0);

    std::vector<ComplexVector> products;
    std::vector<double> weights;
    for (int t = 0; t < terms; ++t) {
        ComplexVector v = random_gaussian(structure.dim(0), rng);
        for (std::size_t i = 1; i < structure.parties(); ++i) v = kron(v, random_gaussian(structure.dim(i), rng));
        products.push_back(std::move(v));
        weights.push_back(exponential(rng));
    }
    double total = 0.0;
    for (double w : weights) total += w;

    ComplexMatrix f(structure.total(), terms);
    for (int t = 0; t < terms; ++t) f.col(t) = std::sqrt(weights[t] / total) * products[t];
    return DensityMatrix::from_factor(structure, f);
}

}  // namespace fisherwit
