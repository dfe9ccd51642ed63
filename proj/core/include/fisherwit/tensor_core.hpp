#pragma once

// Dense complex linear algebra over tensor-product Hilbert spaces.
//
// Party ordering follows the index in HilbertStructure::dims(); party 0 is the
// leftmost Kronecker factor, i.e. its index varies slowest in the full basis.

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <span>
#include <vector>

namespace fisherwit {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

namespace tol {
inline constexpr double kHermitian = 1e-12;      // stored density matrices
inline constexpr double kHermitianInput = 1e-10;  // accepted input asymmetry
inline constexpr double kTrace = 1e-10;
inline constexpr double kNegativeEigenvalue = 1e-10;
inline constexpr double kWeightSum = 1e-10;
}  // namespace tol

// Largest total dimension handled by the dense representation.
inline constexpr std::size_t kMaxTotalDimension = 4096;

class HilbertStructure {
public:
    HilbertStructure() = default;
    explicit HilbertStructure(std::vector<int> dims);
    HilbertStructure(std::initializer_list<int> dims) : HilbertStructure(std::vector<int>(dims)) {}

    const std::vector<int>& dims() const { return dims_; }
    int dim(std::size_t site) const;
    std::size_t parties() const { return dims_.size(); }
    int total() const { return total_; }

    // Product of dimensions strictly before / after `site`.
    int left(std::size_t site) const;
    int right(std::size_t site) const;

    friend bool operator==(const HilbertStructure&, const HilbertStructure&) = default;

private:
    std::vector<int> dims_;
    int total_ = 0;
};

HilbertStructure concat(std::span<const HilbertStructure> parts);

struct SpectralDecomposition {
    RealVector eigenvalues;      // descending
    ComplexMatrix eigenvectors;  // orthonormal columns, same order

    ComplexMatrix reconstruct() const;
};

// Full spectrum of a Hermitian matrix, eigenvalues descending.
SpectralDecomposition hermitian_eig(const ComplexMatrix& m);

double hermitian_residual(const ComplexMatrix& m);  // max |M - M^dagger|
bool is_hermitian(const ComplexMatrix& m, double tolerance);

// I x ... x op x ... x I with `op` at `site`.
ComplexMatrix kron_embed(const ComplexMatrix& op, std::size_t site, const HilbertStructure& structure);

// Computes (I x ... x op x ... x I) * x without forming the embedded operator.
ComplexMatrix apply_local(const ComplexMatrix& op, std::size_t site, const HilbertStructure& structure,
                          const ComplexMatrix& x);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

class PureState;

class DensityMatrix {
public:
    // Validates and symmetrizes a dense matrix. Eigenvalues in [-1e-10, 0) are
    // clamped to zero and the state renormalized; larger negativity throws
    // NumericalError.
    static DensityMatrix from_matrix(HilbertStructure structure, const ComplexMatrix& m);

    // rho = B B^dagger. Cheap for tall, thin B; the trace must already be one.
    static DensityMatrix from_factor(HilbertStructure structure, const ComplexMatrix& factor);

    static DensityMatrix from_pure(const PureState& psi);

    static DensityMatrix maximally_mixed(HilbertStructure structure);

    const HilbertStructure& structure() const { return structure_; }
    const ComplexMatrix& matrix() const { return *matrix_; }
    const SpectralDecomposition& spectrum() const { return *spectrum_; }
    int dim() const { return structure_.total(); }

    // max |M - M^dagger| of the input before symmetrization.
    double input_hermitian_residual() const { return input_residual_; }

    double purity() const;
    Complex expectation(const ComplexMatrix& op) const;  // Tr[op rho]
    double expectation_local(const ComplexMatrix& op, std::size_t site) const;

    // sqrt(p_k)-weighted eigenvectors, so that rho = F F^dagger.
    ComplexMatrix factor() const;

private:
    friend DensityMatrix product_state(std::span<const DensityMatrix> locals);

    DensityMatrix(HilbertStructure structure, std::shared_ptr<const ComplexMatrix> matrix,
                  std::shared_ptr<const SpectralDecomposition> spectrum, double residual);

    HilbertStructure structure_;
    std::shared_ptr<const ComplexMatrix> matrix_;
    std::shared_ptr<const SpectralDecomposition> spectrum_;
    double input_residual_ = 0.0;
};

class PureState {
public:
    // Normalizes `amplitudes`; throws ValidationError on a zero vector or a
    // size mismatch.
    PureState(HilbertStructure structure, ComplexVector amplitudes);

    const HilbertStructure& structure() const { return structure_; }
    const ComplexVector& amplitudes() const { return amplitudes_; }

    DensityMatrix density() const { return DensityMatrix::from_pure(*this); }
    Complex expectation(const ComplexMatrix& op) const;

private:
    HilbertStructure structure_;
    ComplexVector amplitudes_;
};

// Reduced state of party `keep`.
DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t keep);

// rho_1 x ... x rho_N built from the single-party marginals.
DensityMatrix pi_projection(const DensityMatrix& rho);

DensityMatrix product_state(std::span<const DensityMatrix> locals);

// Convex combination; weights positive and summing to one within 1e-10.
DensityMatrix mix(std::span<const DensityMatrix> states, std::span<const double> weights);

}  // namespace fisherwit
