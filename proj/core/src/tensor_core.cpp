#include "fisherwit/tensor_core.hpp"

#include "fisherwit/error.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace fisherwit {

HilbertStructure::HilbertStructure(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw ValidationError("HilbertStructure: at least one party is required");
    std::size_t total = 1;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        if (dims_[i] < 2) {
            throw ValidationError("HilbertStructure: dimension of party " + std::to_string(i) +
                                  " is " + std::to_string(dims_[i]) + ", must be >= 2");
        }
        total *= static_cast<std::size_t>(dims_[i]);
        if (total > kMaxTotalDimension) {
            throw ValidationError("HilbertStructure: total dimension exceeds the dense limit of " +
                                  std::to_string(kMaxTotalDimension));
        }
    }
    total_ = static_cast<int>(total);
}

int HilbertStructure::dim(std::size_t site) const {
    if (site >= dims_.size()) {
        throw ValidationError("party index " + std::to_string(site) + " out of range for " +
                              std::to_string(dims_.size()) + " parties");
    }
    return dims_[site];
}

int HilbertStructure::left(std::size_t site) const {
    int acc = 1;
    for (std::size_t i = 0; i < site && i < dims_.size(); ++i) acc *= dims_[i];
    return acc;
}

int HilbertStructure::right(std::size_t site) const {
    int acc = 1;
    for (std::size_t i = site + 1; i < dims_.size(); ++i) acc *= dims_[i];
    return acc;
}

HilbertStructure concat(std::span<const HilbertStructure> parts) {
    std::vector<int> dims;
    for (const auto& p : parts) dims.insert(dims.end(), p.dims().begin(), p.dims().end());
    return HilbertStructure(std::move(dims));
}

ComplexMatrix SpectralDecomposition::reconstruct() const {
    return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
}

double hermitian_residual(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
    if (m.size() == 0) return 0.0;
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tolerance) {
    return m.rows() == m.cols() && hermitian_residual(m) <= tolerance;
}

SpectralDecomposition hermitian_eig(const ComplexMatrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw ValidationError("hermitian_eig: matrix must be square and non-empty");
    }
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if (hermitian_residual(m) > tol::kHermitianInput * scale) {
        throw ValidationError("hermitian_eig: matrix is not Hermitian");
    }
    const ComplexMatrix sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success) throw NumericalError("hermitian_eig: eigensolver failed");

    // Eigen returns ascending order.
    SpectralDecomposition out;
    out.eigenvalues = solver.eigenvalues().reverse();
    out.eigenvectors = solver.eigenvectors().rowwise().reverse();
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

namespace {

void check_local(const ComplexMatrix& op, std::size_t site, const HilbertStructure& structure,
                 const char* who) {
    const int d = structure.dim(site);
    if (op.rows() != d || op.cols() != d) {
        throw ValidationError(std::string(who) + ": operator is " + std::to_string(op.rows()) + "x" +
                              std::to_string(op.cols()) + " but party " + std::to_string(site) +
                              " has dimension " + std::to_string(d));
    }
}

}  // namespace

ComplexMatrix kron_embed(const ComplexMatrix& op, std::size_t site, const HilbertStructure& structure) {
    check_local(op, site, structure, "kron_embed");
    const ComplexMatrix left = ComplexMatrix::Identity(structure.left(site), structure.left(site));
    const ComplexMatrix right = ComplexMatrix::Identity(structure.right(site), structure.right(site));
    return kron(kron(left, op), right);
}

ComplexMatrix apply_local(const ComplexMatrix& op, std::size_t site, const HilbertStructure& structure,
                          const ComplexMatrix& x) {
    check_local(op, site, structure, "apply_local");
    if (x.rows() != structure.total()) {
        throw ValidationError("apply_local: operand has " + std::to_string(x.rows()) +
                              " rows, expected " + std::to_string(structure.total()));
    }
    using RowMajor = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    const int d = structure.dim(site);
    const int left = structure.left(site);
    const int right = structure.right(site);

    ComplexMatrix out(x.rows(), x.cols());
    for (Eigen::Index col = 0; col < x.cols(); ++col) {
        const Complex* src = x.col(col).data();
        Complex* dst = out.col(col).data();
        for (int l = 0; l < left; ++l) {
            // Rows (l*d + a)*right + r, viewed as a d x right row-major block.
            Eigen::Map<const RowMajor> in(src + static_cast<std::ptrdiff_t>(l) * d * right, d, right);
            Eigen::Map<RowMajor> res(dst + static_cast<std::ptrdiff_t>(l) * d * right, d, right);
            res.noalias() = op * in;
        }
    }
    return out;
}

}  // namespace fisherwit
