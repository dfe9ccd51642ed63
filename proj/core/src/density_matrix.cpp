#include "fisherwit/error.hpp"
#include "fisherwit/tensor_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace fisherwit {

namespace {

void check_square(const HilbertStructure& structure, const ComplexMatrix& m, const char* who) {
    if (m.rows() != structure.total() || m.cols() != structure.total()) {
        throw ValidationError(std::string(who) + ": matrix is " + std::to_string(m.rows()) + "x" +
                              std::to_string(m.cols()) + ", structure has total dimension " +
                              std::to_string(structure.total()));
    }
}

// Sorts eigenpairs by descending eigenvalue.
SpectralDecomposition sorted(RealVector values, const ComplexMatrix& vectors) {
    std::vector<Eigen::Index> order(static_cast<std::size_t>(values.size()));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index a, Eigen::Index b) { return values[a] > values[b]; });
    SpectralDecomposition out;
    out.eigenvalues.resize(values.size());
    out.eigenvectors.resize(vectors.rows(), vectors.cols());
    for (std::size_t i = 0; i < order.size(); ++i) {
        const auto k = static_cast<Eigen::Index>(i);
        out.eigenvalues[k] = values[order[i]];
        out.eigenvectors.col(k) = vectors.col(order[i]);
    }
    return out;
}

}  // namespace

DensityMatrix::DensityMatrix(HilbertStructure structure, std::shared_ptr<const ComplexMatrix> matrix,
                             std::shared_ptr<const SpectralDecomposition> spectrum, double residual)
    : structure_(std::move(structure)),
      matrix_(std::move(matrix)),
      spectrum_(std::move(spectrum)),
      input_residual_(residual) {}

DensityMatrix DensityMatrix::from_matrix(HilbertStructure structure, const ComplexMatrix& m) {
    check_square(structure, m, "DensityMatrix");
    const double residual = hermitian_residual(m);
    if (residual > tol::kHermitianInput) {
        throw ValidationError("DensityMatrix: input is not Hermitian (residual " + std::to_string(residual) +
                              ")");
    }
    ComplexMatrix sym = 0.5 * (m + m.adjoint());
    const double trace = sym.trace().real();
    if (std::abs(trace - 1.0) > tol::kTrace) {
        throw ValidationError("DensityMatrix: trace is " + std::to_string(trace) + ", expected 1");
    }

    SpectralDecomposition spec = hermitian_eig(sym);
    const double smallest = spec.eigenvalues.minCoeff();
    if (smallest < -tol::kNegativeEigenvalue) {
        throw NumericalError("DensityMatrix: eigenvalue " + std::to_string(smallest) +
                             " is below the roundoff allowance");
    }
    if (smallest < 0.0) {
        spec.eigenvalues = spec.eigenvalues.cwiseMax(0.0);
        spec.eigenvalues /= spec.eigenvalues.sum();
        sym = spec.reconstruct();
        sym = 0.5 * (sym + sym.adjoint()).eval();
    }
    return DensityMatrix(std::move(structure), std::make_shared<const ComplexMatrix>(std::move(sym)),
                         std::make_shared<const SpectralDecomposition>(std::move(spec)), residual);
}

DensityMatrix DensityMatrix::from_factor(HilbertStructure structure, const ComplexMatrix& factor) {
    if (factor.rows() != structure.total() || factor.cols() == 0) {
        throw ValidationError("DensityMatrix: factor must have " + std::to_string(structure.total()) +
                              " rows and at least one column");
    }
    const double trace = factor.squaredNorm();
    if (std::abs(trace - 1.0) > tol::kTrace) {
        throw ValidationError("DensityMatrix: trace is " + std::to_string(trace) + ", expected 1");
    }
    const ComplexMatrix f = factor / std::sqrt(trace);
    if (f.cols() >= f.rows()) return from_matrix(std::move(structure), f * f.adjoint());

    const Eigen::Index dim = f.rows();
    const Eigen::Index rank = f.cols();
    Eigen::HouseholderQR<ComplexMatrix> qr(f);
    const ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, rank);
    const ComplexMatrix r = qr.matrixQR().topRows(rank).triangularView<Eigen::Upper>();

    // rho = Q (R R^dagger) Q^dagger, and Q has orthonormal columns.
    const SpectralDecomposition small = hermitian_eig(r * r.adjoint());
    RealVector values = small.eigenvalues.cwiseMax(0.0);
    values /= values.sum();
    auto spec = std::make_shared<const SpectralDecomposition>(sorted(values, q * small.eigenvectors));

    ComplexMatrix m = f * f.adjoint();
    m = 0.5 * (m + m.adjoint()).eval();
    return DensityMatrix(std::move(structure), std::make_shared<const ComplexMatrix>(std::move(m)),
                         std::move(spec), 0.0);
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
    return from_factor(psi.structure(), psi.amplitudes());
}

DensityMatrix DensityMatrix::maximally_mixed(HilbertStructure structure) {
    const int d = structure.total();
    auto spec = std::make_shared<SpectralDecomposition>();
    spec->eigenvalues = RealVector::Constant(d, 1.0 / d);
    spec->eigenvectors = ComplexMatrix::Identity(d, d);
    auto m = std::make_shared<const ComplexMatrix>(ComplexMatrix::Identity(d, d) / static_cast<double>(d));
    return DensityMatrix(std::move(structure), std::move(m), std::move(spec), 0.0);
}

double DensityMatrix::purity() const {
    return spectrum_->eigenvalues.squaredNorm();
}

Complex DensityMatrix::expectation(const ComplexMatrix& op) const {
    check_square(structure_, op, "expectation");
    return op.cwiseProduct(matrix_->transpose()).sum();
}

double DensityMatrix::expectation_local(const ComplexMatrix& op, std::size_t site) const {
    const ComplexMatrix f = factor();
    const ComplexMatrix af = apply_local(op, site, structure_, f);
    return f.conjugate().cwiseProduct(af).sum().real();
}

ComplexMatrix DensityMatrix::factor() const {
    const auto& spec = *spectrum_;
    Eigen::Index kept = 0;
    while (kept < spec.eigenvalues.size() && spec.eigenvalues[kept] > 0.0) ++kept;
    return spec.eigenvectors.leftCols(kept) * spec.eigenvalues.head(kept).cwiseSqrt().cast<Complex>().asDiagonal();
}

PureState::PureState(HilbertStructure structure, ComplexVector amplitudes)
    : structure_(std::move(structure)), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != structure_.total()) {
        throw ValidationError("PureState: " + std::to_string(amplitudes_.size()) +
                              " amplitudes for total dimension " + std::to_string(structure_.total()));
    }
    const double norm = amplitudes_.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) throw ValidationError("PureState: zero or non-finite vector");
    amplitudes_ /= norm;
}

Complex PureState::expectation(const ComplexMatrix& op) const {
    check_square(structure_, op, "expectation");
    return amplitudes_.dot(op * amplitudes_);
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t keep) {
    const auto& s = rho.structure();
    const int d = s.dim(keep);
    const int left = s.left(keep);
    const int right = s.right(keep);
    const ComplexMatrix& m = rho.matrix();

    ComplexMatrix out = ComplexMatrix::Zero(d, d);
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            Complex acc = 0.0;
            for (int l = 0; l < left; ++l) {
                const Eigen::Index row0 = (static_cast<Eigen::Index>(l) * d + a) * right;
                const Eigen::Index col0 = (static_cast<Eigen::Index>(l) * d + b) * right;
                for (int r = 0; r < right; ++r) acc += m(row0 + r, col0 + r);
            }
            out(a, b) = acc;
        }
    }
    // Renormalize away the roundoff of the summation.
    out /= out.trace().real();
    return DensityMatrix::from_matrix(HilbertStructure({d}), out);
}

DensityMatrix pi_projection(const DensityMatrix& rho) {
    std::vector<DensityMatrix> locals;
    locals.reserve(rho.structure().parties());
    for (std::size_t i = 0; i < rho.structure().parties(); ++i) locals.push_back(partial_trace(rho, i));
    return product_state(locals);
}

DensityMatrix product_state(std::span<const DensityMatrix> locals) {
    if (locals.empty()) throw ValidationError("product_state: at least one factor is required");
    std::vector<HilbertStructure> parts;
    parts.reserve(locals.size());
    for (const auto& l : locals) parts.push_back(l.structure());
    HilbertStructure structure = concat(parts);

    ComplexMatrix m = locals.front().matrix();
    RealVector values = locals.front().spectrum().eigenvalues;
    ComplexMatrix vectors = locals.front().spectrum().eigenvectors;
    for (std::size_t i = 1; i < locals.size(); ++i) {
        const auto& spec = locals[i].spectrum();
        m = kron(m, locals[i].matrix());
        RealVector next(values.size() * spec.eigenvalues.size());
        for (Eigen::Index a = 0; a < values.size(); ++a) {
            next.segment(a * spec.eigenvalues.size(), spec.eigenvalues.size()) = values[a] * spec.eigenvalues;
        }
        values = std::move(next);
        vectors = kron(vectors, spec.eigenvectors);
    }
    m = 0.5 * (m + m.adjoint()).eval();
    return DensityMatrix(std::move(structure), std::make_shared<const ComplexMatrix>(std::move(m)),
                         std::make_shared<const SpectralDecomposition>(sorted(values, vectors)), 0.0);
}

DensityMatrix mix(std::span<const DensityMatrix> states, std::span<const double> weights) {
    if (states.empty()) throw ValidationError("mix: at least one state is required");
    if (states.size() != weights.size()) {
        throw ValidationError("mix: " + std::to_string(states.size()) + " states but " +
                              std::to_string(weights.size()) + " weights");
    }
    double total = 0.0;
    for (double w : weights) {
        if (!(w > 0.0)) throw ValidationError("mix: weights must be positive");
        total += w;
    }
    if (std::abs(total - 1.0) > tol::kWeightSum) throw ValidationError("mix: weights must sum to one");

    const HilbertStructure& structure = states.front().structure();
    std::vector<ComplexMatrix> factors;
    Eigen::Index columns = 0;
    for (const auto& s : states) {
        if (!(s.structure() == structure)) throw ValidationError("mix: states have different structures");
        factors.push_back(s.factor());
        columns += factors.back().cols();
    }

    if (columns < structure.total()) {
        ComplexMatrix f(structure.total(), columns);
        Eigen::Index at = 0;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            f.middleCols(at, factors[i].cols()) = std::sqrt(weights[i] / total) * factors[i];
            at += factors[i].cols();
        }
        return DensityMatrix::from_factor(structure, f);
    }
    ComplexMatrix m = ComplexMatrix::Zero(structure.total(), structure.total());
    for (std::size_t i = 0; i < states.size(); ++i) m += (weights[i] / total) * states[i].matrix();
    return DensityMatrix::from_matrix(structure, m);
}

}  // namespace fisherwit
