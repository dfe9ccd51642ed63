#pragma once

// Factories for the state families used by the witnesses: coherent and Fock
// states, the partially dephased two-mode cat, weighted GHZ states, the
// qubit-oscillator state |phi_n>, and seeded random separable mixtures.

#include "fisherwit/tensor_core.hpp"

#include <cstdint>

namespace fisherwit {

inline constexpr double kDefaultTruncationTolerance = 1e-10;

struct TruncationReport {
    int cutoff = 0;
    double lost_weight = 0.0;  // Poisson mass at n >= cutoff
};

struct CoherentState {
    PureState state;
    TruncationReport truncation;
};

// Normalized truncation of |alpha>. Throws NumericalError when more than
// `tolerance` of the probability lies beyond the cutoff.
CoherentState coherent(Complex alpha, int cutoff, double tolerance = kDefaultTruncationTolerance);

// Smallest cutoff losing < 1e-12 of |alpha|'s weight, plus four guard levels,
// never below 24.
int default_cutoff(double max_abs_alpha);

struct DephasedCat {
    DensityMatrix rho;
    double normalization = 0.0;  // N(alpha, s), from the truncated trace
    TruncationReport truncation;
};

// N(alpha,s) [ |a,a><a,a| + |-a,-a><-a,-a| + (1-s)(|-a,-a><a,a| + h.c.) ]
// on two modes truncated at `cutoff`. Requires 0 <= s <= 1.
DephasedCat dephased_cat(Complex alpha, double s, int cutoff, double tolerance = kDefaultTruncationTolerance);

// sqrt(q)|0...0> + sqrt(1-q) e^{i phi} |1...1> on n qubits.
PureState ghz_weighted(int qubits, double q, double phi = 0.0);

// (|0,n> + |1,n+1>)/sqrt(2) on a qubit times a mode of dimension `cutoff`.
PureState hybrid_phi(int n, int cutoff);

PureState fock(int n, int cutoff);

// Haar-random pure state (normalized complex Gaussian vector).
PureState random_pure(const HilbertStructure& structure, std::uint64_t seed);

// Mixture of `terms` Haar-random pure product states with random simplex
// weights. Identical seeds give bit-identical states.
DensityMatrix random_separable(const HilbertStructure& structure, int terms, std::uint64_t seed);

}  // namespace fisherwit
