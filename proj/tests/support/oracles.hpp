#pragma once

// Slow, direct reference implementations used to check the library. Nothing
// here calls into fisherwit beyond the value types.

#include "fisherwit/tensor_core.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using fisherwit::Complex;
using fisherwit::ComplexMatrix;
using fisherwit::ComplexVector;
using fisherwit::RealMatrix;
using fisherwit::RealVector;

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            for (Eigen::Index k = 0; k < b.rows(); ++k)
                for (Eigen::Index l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

inline ComplexMatrix embed(const ComplexMatrix& op, std::size_t site, const std::vector<int>& dims) {
    ComplexMatrix out = ComplexMatrix::Identity(1, 1);
    for (std::size_t i = 0; i < dims.size(); ++i) {
        out = kron(out, i == site ? op : ComplexMatrix::Identity(dims[i], dims[i]));
    }
    return out;
}

// Explicit index sum over every party except `keep`.
inline ComplexMatrix partial_trace(const ComplexMatrix& rho, const std::vector<int>& dims, std::size_t keep) {
    const int total = static_cast<int>(rho.rows());
    const int d = dims[keep];
    auto digits = [&](int index) {
        std::vector<int> out(dims.size());
        for (std::size_t i = dims.size(); i-- > 0;) {
            out[i] = index % dims[i];
            index /= dims[i];
        }
        return out;
    };
    ComplexMatrix out = ComplexMatrix::Zero(d, d);
    for (int r = 0; r < total; ++r) {
        const auto dr = digits(r);
        for (int c = 0; c < total; ++c) {
            const auto dc = digits(c);
            bool same = true;
            for (std::size_t i = 0; i < dims.size(); ++i) {
                if (i != keep && dr[i] != dc[i]) same = false;
            }
            if (same) out(dr[keep], dc[keep]) += rho(r, c);
        }
    }
    return out;
}

inline double expect(const ComplexMatrix& rho, const ComplexMatrix& op) { return (op * rho).trace().real(); }

inline double cov(const ComplexMatrix& rho, const ComplexMatrix& a, const ComplexMatrix& b) {
    return 0.5 * expect(rho, a * b + b * a) - expect(rho, a) * expect(rho, b);
}

// Double sum over eigenpairs, skipping pairs with p_k + p_l == 0 up to 1e-14.
inline double qfi(const ComplexMatrix& rho, const ComplexMatrix& a, const ComplexMatrix& b) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho);
    const RealVector p = es.eigenvalues();
    const ComplexMatrix& v = es.eigenvectors();
    const ComplexMatrix av = v.adjoint() * a * v;
    const ComplexMatrix bv = v.adjoint() * b * v;
    double sum = 0.0;
    for (Eigen::Index k = 0; k < p.size(); ++k) {
        for (Eigen::Index l = 0; l < p.size(); ++l) {
            const double s = p(k) + p(l);
            if (s <= 1e-14) continue;
            const double d = p(k) - p(l);
            sum += 2.0 * d * d / s * (av(k, l) * bv(l, k)).real();
        }
    }
    return sum;
}

inline ComplexMatrix evolve(const ComplexMatrix& rho, const ComplexMatrix& g, double theta) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(g);
    const ComplexVector phases =
        es.eigenvalues().unaryExpr([theta](double e) { return std::exp(Complex(0.0, -e * theta)); }).eval();
    const ComplexMatrix u = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
    return u * rho * u.adjoint();
}

// Central finite difference of p_m(theta) at theta = 0.
inline double classical_fisher_fd(const ComplexMatrix& rho, const ComplexMatrix& g,
                                  const std::vector<ComplexMatrix>& povm, double h = 1e-5) {
    const ComplexMatrix plus = evolve(rho, g, h);
    const ComplexMatrix minus = evolve(rho, g, -h);
    double f = 0.0;
    for (const auto& m : povm) {
        const double p = expect(rho, m);
        if (p < 1e-12) continue;
        const double dp = (expect(plus, m) - expect(minus, m)) / (2.0 * h);
        f += dp * dp / p;
    }
    return f;
}

inline double lambda_max(const RealMatrix& m) {
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(0.5 * (m + m.transpose()));
    return es.eigenvalues().maxCoeff();
}

inline ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}
inline ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return m;
}
inline ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

// Ladder matrices written out entry by entry.
inline ComplexMatrix ladder(int dim) {
    ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}
inline ComplexMatrix quad_x(int dim) { return (ladder(dim) + ladder(dim).adjoint()) / std::sqrt(2.0); }
inline ComplexMatrix quad_p(int dim) {
    return (ladder(dim) - ladder(dim).adjoint()) / (Complex(0.0, 1.0) * std::sqrt(2.0));
}

// Unit Bloch directions on a (theta, phi) grid that contains both poles.
inline std::vector<RealVector> bloch_grid(int n_theta, int n_phi) {
    std::vector<RealVector> out;
    const double pi = std::acos(-1.0);
    for (int i = 0; i <= n_theta; ++i) {
        const double t = pi * i / n_theta;
        const int nphi = (i == 0 || i == n_theta) ? 1 : n_phi;
        for (int j = 0; j < nphi; ++j) {
            const double f = 2.0 * pi * j / n_phi;
            RealVector v(3);
            v << std::sin(t) * std::cos(f), std::sin(t) * std::sin(f), std::cos(t);
            out.push_back(v);
        }
    }
    return out;
}

// Exhaustive max of c^T q c over three unit Bloch blocks drawn from `grid`.
inline double brute_force_three_party(const RealMatrix& q, const std::vector<RealVector>& grid) {
    const std::size_t g = grid.size();
    auto pair_table = [&](int i, int j) {
        RealMatrix t(g, g);
        const RealMatrix block = q.block(3 * i, 3 * j, 3, 3);
        for (std::size_t a = 0; a < g; ++a)
            for (std::size_t b = 0; b < g; ++b) t(a, b) = grid[a].dot(block * grid[b]);
        return t;
    };
    const RealMatrix t01 = pair_table(0, 1), t02 = pair_table(0, 2), t12 = pair_table(1, 2);
    std::vector<RealVector> diag(3, RealVector(g));
    for (int i = 0; i < 3; ++i)
        for (std::size_t a = 0; a < g; ++a) diag[i](a) = grid[a].dot(q.block(3 * i, 3 * i, 3, 3) * grid[a]);
    double best = -1e300;
    for (std::size_t a = 0; a < g; ++a)
        for (std::size_t b = 0; b < g; ++b) {
            const double ab = diag[0](a) + diag[1](b) + 2.0 * t01(a, b);
            for (std::size_t c = 0; c < g; ++c) {
                best = std::max(best, ab + diag[2](c) + 2.0 * (t02(a, c) + t12(b, c)));
            }
        }
    return best;
}

inline ComplexMatrix random_hermitian(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> n;
    ComplexMatrix m(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m(i, j) = Complex(n(rng), n(rng));
    return (m + m.adjoint()) / 2.0;
}

inline ComplexVector random_vector(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> n;
    ComplexVector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = Complex(n(rng), n(rng));
    return v / v.norm();
}

// Full-rank-ish random mixed state of `rank` Gaussian columns.
inline ComplexMatrix random_mixed(int dim, int rank, std::mt19937_64& rng) {
    std::normal_distribution<double> n;
    ComplexMatrix f(dim, rank);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < rank; ++j) f(i, j) = Complex(n(rng), n(rng));
    ComplexMatrix rho = f * f.adjoint();
    rho /= rho.trace().real();
    return (rho + rho.adjoint()) / 2.0;
}

// Projective measurement onto a random orthonormal basis.
inline std::vector<ComplexMatrix> random_projective_povm(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> n;
    ComplexMatrix m(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m(i, j) = Complex(n(rng), n(rng));
    const ComplexMatrix u = Eigen::HouseholderQR<ComplexMatrix>(m).householderQ();
    std::vector<ComplexMatrix> out;
    for (int k = 0; k < dim; ++k) out.push_back(u.col(k) * u.col(k).adjoint());
    return out;
}

}  // namespace oracle
