#include "fisherwit/error.hpp"
#include "fisherwit/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

namespace fisherwit {

namespace {

// Normalizes each block of `c`; a vanishing block keeps `fallback`'s block.
RealVector project(const RealVector& c, const RealVector& fallback, const BlockLayout& layout) {
    RealVector out = c;
    for (std::size_t i = 0; i < layout.parties(); ++i) {
        auto block = out.segment(layout.offsets[i], layout.sizes[i]);
        const double n = block.norm();
        if (n > 1e-300 && std::isfinite(n)) {
            block /= n;
        } else {
            block = fallback.segment(layout.offsets[i], layout.sizes[i]);
        }
    }
    return out;
}

RealVector first_basis_blocks(const BlockLayout& layout) {
    RealVector out = RealVector::Zero(layout.total());
    for (std::size_t i = 0; i < layout.parties(); ++i) out[layout.offsets[i]] = 1.0;
    return out;
}

struct Candidate {
    double value;
    RealVector c;
};

Candidate ascend(const RealMatrix& q, const BlockLayout& layout, RealVector start, const OptimizerOptions& opt) {
    const RealVector basis = first_basis_blocks(layout);
    RealVector c = project(start, basis, layout);
    double f = c.dot(q * c);
    double step = 1.0;
    int quiet = 0;

    for (int it = 0; it < opt.max_iterations && quiet < opt.patience; ++it) {
        const RealVector grad = 2.0 * (q * c);
        bool accepted = false;
        RealVector next;
        double fn = f;
        for (int halving = 0; halving < 60; ++halving) {
            next = project(c + step * grad, c, layout);
            fn = next.dot(q * next);
            if (fn >= f) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) break;

        const double change = std::abs(fn - f) / std::max(std::abs(fn), 1e-300);
        quiet = change < opt.relative_tolerance ? quiet + 1 : 0;
        c = std::move(next);
        f = fn;
        step = std::min(step * 2.0, 1e12);
    }
    return {f, std::move(c)};
}

// Global sign so that the first entry above 1e-12 in magnitude is positive.
RealVector sign_fixed(RealVector v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) > 1e-12) {
            if (v[i] < 0) v = -v;
            break;
        }
    }
    return v;
}

bool lexicographically_larger(const RealVector& a, const RealVector& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        const double da = std::abs(a[i]);
        const double db = std::abs(b[i]);
        if (std::abs(da - db) > 1e-12) return da > db;
    }
    return false;
}

}  // namespace

ConstrainedMax maximize_block_quadratic(const RealMatrix& q, const BlockLayout& layout,
                                        const OptimizerOptions& options) {
    if (q.rows() != q.cols() || q.rows() != layout.total() || layout.parties() == 0) {
        throw ValidationError("maximize_block_quadratic: matrix and block layout disagree");
    }
    if (options.starts < 0) throw ValidationError("maximize_block_quadratic: negative start count");
    const RealMatrix sym = 0.5 * (q + q.transpose());

    std::vector<RealVector> starts;
    Eigen::SelfAdjointEigenSolver<RealMatrix> solver(sym);
    starts.push_back(solver.eigenvectors().col(sym.rows() - 1));
    std::mt19937_64 rng(options.seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (int s = 0; s < options.starts; ++s) {
        RealVector v(sym.rows());
        for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = normal(rng);
        starts.push_back(std::move(v));
    }

    // Selection depends only on the candidate set, not on evaluation order.
    std::vector<Candidate> results;
    results.reserve(starts.size());
    for (auto& s : starts) results.push_back(ascend(sym, layout, std::move(s), options));

    // Best value first, then the lexicographic rule among everything within the
    // tie tolerance of it; both passes are independent of candidate order.
    double top = -std::numeric_limits<double>::infinity();
    for (auto& r : results) {
        r.c = sign_fixed(r.c);
        top = std::max(top, r.value);
    }
    const double tie = 1e-12 * std::max(1.0, std::abs(top));
    const Candidate* best = nullptr;
    for (const auto& r : results) {
        if (r.value < top - tie) continue;
        if (!best || lexicographically_larger(r.c, best->c) ||
            (!lexicographically_larger(best->c, r.c) && r.value > best->value)) {
            best = &r;
        }
    }
    return {best->value, CoefficientVector::from_flat(layout, best->c)};
}

}  // namespace fisherwit
