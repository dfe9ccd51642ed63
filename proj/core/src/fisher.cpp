#include "fisherwit/error.hpp"
#include "fisherwit/witness.hpp"

#include <cmath>
#include <string>

namespace fisherwit {

double classical_fisher(const DensityMatrix& rho, const ComplexMatrix& generator,
                        std::span<const ComplexMatrix> effects) {
    const int d = rho.dim();
    if (generator.rows() != d || generator.cols() != d || !is_hermitian(generator, tol::kHermitianInput)) {
        throw ValidationError("classical_fisher: generator must be a Hermitian " + std::to_string(d) + "x" +
                              std::to_string(d) + " matrix");
    }
    if (effects.empty()) throw ValidationError("classical_fisher: empty POVM");

    ComplexMatrix completeness = -ComplexMatrix::Identity(d, d);
    for (std::size_t m = 0; m < effects.size(); ++m) {
        const ComplexMatrix& e = effects[m];
        if (e.rows() != d || e.cols() != d) {
            throw ValidationError("classical_fisher: effect " + std::to_string(m) + " has the wrong size");
        }
        if (hermitian_eig(e).eigenvalues.minCoeff() < -tol::kNegativeEigenvalue) {
            throw ValidationError("classical_fisher: effect " + std::to_string(m) + " is not positive semidefinite");
        }
        completeness += e;
    }
    if (completeness.cwiseAbs().maxCoeff() > 1e-10) {
        throw ValidationError("classical_fisher: effects do not sum to the identity");
    }

    // d rho / d theta at 0 is -i [G, rho], so dp_m = 2 Im Tr[M_m G rho].
    const ComplexMatrix g_rho = generator * rho.matrix();
    double fisher = 0.0;
    for (const auto& e : effects) {
        const double p = rho.expectation(e).real();
        if (p < kProbabilityCutoff) continue;
        const double dp = 2.0 * e.cwiseProduct(g_rho.transpose()).sum().imag();
        fisher += dp * dp / p;
    }
    return fisher;
}

}  // namespace fisherwit
