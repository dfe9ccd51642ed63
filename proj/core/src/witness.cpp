#include "fisherwit/witness.hpp"

#include "fisherwit/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fisherwit {

namespace {

// Eigenpairs of rho above the relative spectral cutoff.
struct Support {
    RealVector p;
    ComplexMatrix v;
};

Support support_of(const DensityMatrix& rho) {
    const auto& spec = rho.spectrum();
    const double pmax = spec.eigenvalues.maxCoeff();
    Eigen::Index r = 0;
    while (r < spec.eigenvalues.size() && spec.eigenvalues[r] > kSpectralCutoff * pmax) ++r;
    return {spec.eigenvalues.head(r), spec.eigenvectors.leftCols(r)};
}

RealMatrix pair_weights(const RealVector& p) {
    const Eigen::Index r = p.size();
    RealMatrix w(r, r);
    for (Eigen::Index k = 0; k < r; ++k) {
        for (Eigen::Index l = 0; l < r; ++l) {
            const double d = p[k] - p[l];
            w(k, l) = d * d / (p[k] + p[l]);
        }
    }
    return w;
}

// Operator images on the support: U = A V, X = V^dagger A V.
struct Images {
    std::vector<ComplexMatrix> u;
    std::vector<ComplexMatrix> x;
};

Images local_images(const LocalOperatorSet& set, const ComplexMatrix& v) {
    Images out;
    for (std::size_t i = 0; i < set.parties(); ++i) {
        for (const auto& op : set.party(i)) {
            out.u.push_back(apply_local(op, i, set.structure(), v));
            out.x.push_back(v.adjoint() * out.u.back());
        }
    }
    return out;
}

// QFI matrix element for operators with images (ua, xa), (ub, xb). Pairs with
// one eigenvalue in the kernel are summed through I - V V^dagger.
Complex qfi_element(const RealVector& p, const RealMatrix& w, const ComplexMatrix& ua, const ComplexMatrix& xa,
                    const ComplexMatrix& ub, const ComplexMatrix& xb) {
    const Complex inner = 2.0 * (w.cast<Complex>().cwiseProduct(xa).cwiseProduct(xb.transpose())).sum();
    double kernel = 0.0;
    for (Eigen::Index k = 0; k < p.size(); ++k) {
        const Complex z = ua.col(k).dot(ub.col(k)) - xa.row(k).transpose().cwiseProduct(xb.col(k)).sum();
        kernel += 4.0 * p[k] * z.real();
    }
    return inner + kernel;
}

void check_structures(const DensityMatrix& rho, const LocalOperatorSet& set, const char* who) {
    if (!(rho.structure() == set.structure())) {
        throw ValidationError(std::string(who) + ": state and operator set have different Hilbert structures");
    }
}

void check_generator(const DensityMatrix& rho, const ComplexMatrix& g, const char* who) {
    if (g.rows() != rho.dim() || g.cols() != rho.dim()) {
        throw ValidationError(std::string(who) + ": generator must be " + std::to_string(rho.dim()) + "x" +
                              std::to_string(rho.dim()));
    }
    const double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
    if (!is_hermitian(g, tol::kHermitianInput * scale)) {
        throw ValidationError(std::string(who) + ": generator is not Hermitian");
    }
}

RealMatrix symmetrized(const RealMatrix& m) { return 0.5 * (m + m.transpose()); }

}  // namespace

std::string to_string(Verdict v) { return v == Verdict::Entangled ? "ENTANGLED" : "NOT_DETECTED"; }

QfiMatrix qfi_matrix(const DensityMatrix& rho, const LocalOperatorSet& set) {
    check_structures(rho, set, "qfi_matrix");
    const Support s = support_of(rho);
    const RealMatrix w = pair_weights(s.p);
    const Images img = local_images(set, s.v);

    const auto n = static_cast<Eigen::Index>(img.u.size());
    RealMatrix q(n, n);
    double imag_residue = 0.0;
    double scale = 1.0;
    for (Eigen::Index a = 0; a < n; ++a) {
        for (Eigen::Index b = a; b < n; ++b) {
            const Complex e = qfi_element(s.p, w, img.u[a], img.x[a], img.u[b], img.x[b]);
            q(a, b) = e.real();
            q(b, a) = e.real();
            imag_residue = std::max(imag_residue, std::abs(e.imag()));
            scale = std::max(scale, std::abs(e.real()));
        }
    }
    if (imag_residue > 1e-9 * scale) {
        throw NumericalError("qfi_matrix: imaginary residue " + std::to_string(imag_residue));
    }
    return {symmetrized(q), set.layout()};
}

CovMatrix covariance_matrix(const DensityMatrix& rho, const LocalOperatorSet& set) {
    check_structures(rho, set, "covariance_matrix");
    const ComplexMatrix f = rho.factor();
    std::vector<ComplexMatrix> images;
    for (std::size_t i = 0; i < set.parties(); ++i) {
        for (const auto& op : set.party(i)) images.push_back(apply_local(op, i, set.structure(), f));
    }
    const auto n = static_cast<Eigen::Index>(images.size());
    RealVector mean(n);
    for (Eigen::Index a = 0; a < n; ++a) mean[a] = f.conjugate().cwiseProduct(images[a]).sum().real();

    RealMatrix cov(n, n);
    for (Eigen::Index a = 0; a < n; ++a) {
        for (Eigen::Index b = a; b < n; ++b) {
            // Re Tr[rho A B] = <AB + BA>/2 for Hermitian A, B.
            const double second = images[a].conjugate().cwiseProduct(images[b]).sum().real();
            cov(a, b) = second - mean[a] * mean[b];
            cov(b, a) = cov(a, b);
        }
    }
    return {cov, set.layout()};
}

CovMatrix local_covariance_matrix(const DensityMatrix& rho, const LocalOperatorSet& set) {
    check_structures(rho, set, "local_covariance_matrix");
    const BlockLayout& layout = set.layout();
    RealMatrix cov = RealMatrix::Zero(layout.total(), layout.total());
    for (std::size_t i = 0; i < set.parties(); ++i) {
        const DensityMatrix marginal = partial_trace(rho, i);
        const ComplexMatrix& m = marginal.matrix();
        const auto& ops = set.party(i);
        const int off = layout.offsets[i];
        for (std::size_t a = 0; a < ops.size(); ++a) {
            const double ma = marginal.expectation(ops[a]).real();
            for (std::size_t b = a; b < ops.size(); ++b) {
                const double mb = marginal.expectation(ops[b]).real();
                const double second = (m * ops[a] * ops[b]).trace().real();
                const auto ia = off + static_cast<Eigen::Index>(a);
                const auto ib = off + static_cast<Eigen::Index>(b);
                cov(ia, ib) = second - ma * mb;
                cov(ib, ia) = cov(ia, ib);
            }
        }
    }
    return {cov, layout};
}

double quantum_fisher(const DensityMatrix& rho, const ComplexMatrix& generator) {
    check_generator(rho, generator, "quantum_fisher");
    const ComplexMatrix g = 0.5 * (generator + generator.adjoint());
    const Support s = support_of(rho);
    const RealMatrix w = pair_weights(s.p);
    const ComplexMatrix u = g * s.v;
    const ComplexMatrix x = s.v.adjoint() * u;
    const double f = qfi_element(s.p, w, u, x, u, x).real();
    return std::max(f, 0.0);
}

double covariance(const DensityMatrix& rho, const ComplexMatrix& a, const ComplexMatrix& b) {
    const Complex ab = rho.expectation(a * b);
    return ab.real() - rho.expectation(a).real() * rho.expectation(b).real();
}

double variance(const DensityMatrix& rho, const ComplexMatrix& op) { return covariance(rho, op, op); }

double witness_value(const DensityMatrix& rho, const LocalOperatorSet& set, const CoefficientVector& c) {
    c.check_conformal(set);
    const RealVector v = c.flat();
    const QfiMatrix q = qfi_matrix(rho, set);
    const CovMatrix g = local_covariance_matrix(rho, set);
    return v.dot((q.matrix - 4.0 * g.matrix) * v);
}

double witness_value_direct(const DensityMatrix& rho, const LocalOperatorSet& set, const CoefficientVector& c) {
    c.check_conformal(set);
    double local = 0.0;
    for (std::size_t i = 0; i < set.parties(); ++i) {
        const ComplexMatrix a = local_combination(set, c, i);
        const double mean = rho.expectation_local(a, i);
        const double second = rho.expectation_local(a * a, i);
        local += second - mean * mean;
    }
    return quantum_fisher(rho, collective_generator(set, c)) - 4.0 * local;
}

WitnessReport witness_lambda_max(const DensityMatrix& rho, const LocalOperatorSet& set, double threshold) {
    QfiMatrix q = qfi_matrix(rho, set);
    CovMatrix gamma = local_covariance_matrix(rho, set);
    const RealMatrix m = symmetrized(q.matrix - 4.0 * gamma.matrix);

    Eigen::SelfAdjointEigenSolver<RealMatrix> solver(m);
    if (solver.info() != Eigen::Success) throw NumericalError("witness_lambda_max: eigensolver failed");
    const RealVector& values = solver.eigenvalues();
    const Eigen::Index n = values.size();
    const double top = values[n - 1];

    // Among (numerically) degenerate top eigenvectors pick the one whose
    // sign-fixed entries are lexicographically largest in absolute value.
    const double gap = 1e-10 * std::max(1.0, std::abs(top));
    auto canonical = [](RealVector v) {
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            if (std::abs(v[i]) > 1e-12) {
                if (v[i] < 0) v = -v;
                break;
            }
        }
        return v;
    };
    auto abs_greater = [](const RealVector& a, const RealVector& b) {
        for (Eigen::Index i = 0; i < a.size(); ++i) {
            const double da = std::abs(a[i]);
            const double db = std::abs(b[i]);
            if (std::abs(da - db) > 1e-12) return da > db;
        }
        return false;
    };
    RealVector best = canonical(solver.eigenvectors().col(n - 1));
    for (Eigen::Index k = n - 2; k >= 0 && values[k] >= top - gap; --k) {
        RealVector cand = canonical(solver.eigenvectors().col(k));
        if (abs_greater(cand, best)) best = cand;
    }
    best.normalize();

    CoefficientVector c = CoefficientVector::from_flat(q.layout, best);
    const double w = best.dot(m * best);
    return WitnessReport{std::move(q), std::move(gamma), top, std::move(c), w,
                         top > threshold ? Verdict::Entangled : Verdict::NotDetected, threshold, kSpectralCutoff};
}

ConstrainedMax constrained_qfi_max(const DensityMatrix& rho, const LocalOperatorSet& set,
                                   const OptimizerOptions& options) {
    const QfiMatrix q = qfi_matrix(rho, set);
    return maximize_block_quadratic(q.matrix, q.layout, options);
}

}  // namespace fisherwit
